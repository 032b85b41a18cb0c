#ifndef TORCOX_DOCUMENT_HPP
#define TORCOX_DOCUMENT_HPP

#include <torcox/fan.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace torcox {

/** Structural error in a fan document, with 1-based location. */
struct ParseError : std::runtime_error {
    std::size_t line = 0;
    std::size_t column = 0;

    ParseError(std::string message, std::size_t line_, std::size_t column_)
        : std::runtime_error(std::move(message)), line(line_), column(column_) {}
};

/**
 * Plain-text fan description.  Layout (integers and p/q rationals only):
 *
 *   torcox 1
 *   rank 2
 *   rays 3
 *   1 0
 *   0 1
 *   -1 -1
 *   cones 3
 *   0 1
 *   1 2
 *   2 0
 *   boundary 0 1/2 0
 *   divisor W 1 0 0
 *   subgroup N W
 *
 * The boundary line and the divisor/subgroup records are optional; labels
 * are [A-Za-z0-9_]+ and unique per kind; subgroup members reference divisor
 * labels.  Emission is canonical: records sorted by label, cone indices
 * ascending, no extra whitespace.
 */
struct FanDocument {
    std::size_t rank = 0;
    std::vector<VecZ> rays;
    std::vector<std::vector<std::size_t>> cones;
    std::optional<VecQ> boundary;
    std::vector<std::pair<std::string, VecZ>> divisors;
    std::vector<std::pair<std::string, std::vector<std::string>>> subgroups;

    Fan to_fan() const { return Fan(rank, rays, cones); }
    const VecZ* find_divisor(const std::string& label) const;
    const std::vector<std::string>* find_subgroup(const std::string& label) const;
};

FanDocument parse_fan_document(const std::string& text);

std::string emit_fan_document(const FanDocument& doc);

FanDocument document_from_fan(const Fan& f);

}  // namespace torcox

#endif
