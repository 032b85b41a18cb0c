#include <torcox/document.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace torcox {

namespace {

struct Token {
    std::string text;
    std::size_t line = 0;
    std::size_t column = 0;
};

// Lines of whitespace-separated tokens; blank lines are skipped.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::vector<Token> line;
        std::size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            line.push_back(Token{raw.substr(start, i - start), line_no, start + 1});
        }
        if (!line.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void fail(const std::string& message, const Token& at) {
    throw ParseError(message, at.line, at.column);
}

bool is_label(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

Int parse_int(const Token& t) {
    const std::string& s = t.text;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) fail("expected an integer, got '" + s + "'", t);
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected an integer, got '" + s + "'", t);
    return Int(s);
}

std::size_t parse_count(const Token& t) {
    Int v = parse_int(t);
    if (v < 0 || v > 1000000)
        fail("expected a count in [0, 10^6], got '" + t.text + "'", t);
    return static_cast<std::size_t>(v);
}

Rat parse_rational(const Token& t) {
    std::size_t slash = t.text.find('/');
    if (slash == std::string::npos) return Rat(parse_int(t));
    Token num{t.text.substr(0, slash), t.line, t.column};
    Token den{t.text.substr(slash + 1), t.line, t.column + slash + 1};
    Int d = parse_int(den);
    if (d <= 0) fail("denominator must be positive in '" + t.text + "'", t);
    return Rat(parse_int(num), d);
}

std::string rational_string(const Rat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

}  // namespace

const VecZ* FanDocument::find_divisor(const std::string& label) const {
    for (const auto& [name, coeffs] : divisors)
        if (name == label) return &coeffs;
    return nullptr;
}

const std::vector<std::string>* FanDocument::find_subgroup(const std::string& label) const {
    for (const auto& [name, members] : subgroups)
        if (name == label) return &members;
    return nullptr;
}

FanDocument parse_fan_document(const std::string& text) {
    auto lines = tokenize(text);
    std::size_t at = 0;
    auto need_line = [&](const char* what) -> const std::vector<Token>& {
        if (at >= lines.size())
            throw ParseError(std::string("unexpected end of document, expected ") + what,
                             lines.empty() ? 1 : lines.back().front().line + 1, 1);
        return lines[at++];
    };

    const auto& header = need_line("'torcox 1' header");
    if (header.size() != 2 || header[0].text != "torcox" || header[1].text != "1")
        fail("expected 'torcox 1' header", header[0]);

    FanDocument doc;
    const auto& rank_line = need_line("'rank N'");
    if (rank_line.size() != 2 || rank_line[0].text != "rank")
        fail("expected 'rank N'", rank_line[0]);
    doc.rank = parse_count(rank_line[1]);

    const auto& rays_line = need_line("'rays N'");
    if (rays_line.size() != 2 || rays_line[0].text != "rays")
        fail("expected 'rays N'", rays_line[0]);
    std::size_t n_rays = parse_count(rays_line[1]);
    for (std::size_t r = 0; r < n_rays; ++r) {
        const auto& line = need_line("a ray line");
        if (line.size() != doc.rank)
            fail("ray has " + std::to_string(line.size()) + " coordinates, expected " +
                     std::to_string(doc.rank),
                 line[0]);
        VecZ v;
        for (const Token& t : line) v.push_back(parse_int(t));
        doc.rays.push_back(std::move(v));
    }

    const auto& cones_line = need_line("'cones N'");
    if (cones_line.size() != 2 || cones_line[0].text != "cones")
        fail("expected 'cones N'", cones_line[0]);
    std::size_t n_cones = parse_count(cones_line[1]);
    for (std::size_t c = 0; c < n_cones; ++c) {
        const auto& line = need_line("a cone line");
        std::vector<std::size_t> cone;
        for (const Token& t : line) {
            std::size_t idx = parse_count(t);
            if (idx >= n_rays) fail("ray index " + t.text + " out of range", t);
            cone.push_back(idx);
        }
        doc.cones.push_back(std::move(cone));
    }

    std::set<std::string> divisor_labels, subgroup_labels;
    while (at < lines.size()) {
        const auto& line = lines[at++];
        const std::string& kind = line[0].text;
        if (kind == "boundary") {
            if (doc.boundary) fail("duplicate boundary line", line[0]);
            if (line.size() != n_rays + 1)
                fail("boundary has " + std::to_string(line.size() - 1) +
                         " coefficients, expected " + std::to_string(n_rays),
                     line[0]);
            VecQ b;
            for (std::size_t i = 1; i < line.size(); ++i) {
                Rat q = parse_rational(line[i]);
                if (q < 0 || q > 1)
                    fail("boundary coefficient '" + line[i].text + "' outside [0,1]", line[i]);
                b.push_back(std::move(q));
            }
            doc.boundary = std::move(b);
        } else if (kind == "divisor") {
            if (line.size() != n_rays + 2)
                fail("divisor record needs a label and " + std::to_string(n_rays) +
                         " coefficients",
                     line[0]);
            if (!is_label(line[1].text)) fail("bad label '" + line[1].text + "'", line[1]);
            if (!divisor_labels.insert(line[1].text).second)
                fail("duplicate divisor label '" + line[1].text + "'", line[1]);
            VecZ coeffs;
            for (std::size_t i = 2; i < line.size(); ++i) coeffs.push_back(parse_int(line[i]));
            doc.divisors.emplace_back(line[1].text, std::move(coeffs));
        } else if (kind == "subgroup") {
            if (line.size() < 2) fail("subgroup record needs a label", line[0]);
            if (!is_label(line[1].text)) fail("bad label '" + line[1].text + "'", line[1]);
            if (!subgroup_labels.insert(line[1].text).second)
                fail("duplicate subgroup label '" + line[1].text + "'", line[1]);
            std::vector<std::string> members;
            for (std::size_t i = 2; i < line.size(); ++i) {
                if (!divisor_labels.count(line[i].text))
                    fail("subgroup references unknown divisor '" + line[i].text + "'", line[i]);
                members.push_back(line[i].text);
            }
            doc.subgroups.emplace_back(line[1].text, std::move(members));
        } else {
            fail("unknown record '" + kind + "'", line[0]);
        }
    }
    return doc;
}

std::string emit_fan_document(const FanDocument& doc) {
    std::ostringstream out;
    out << "torcox 1\n";
    out << "rank " << doc.rank << "\n";
    out << "rays " << doc.rays.size() << "\n";
    for (const VecZ& v : doc.rays) {
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
        out << "\n";
    }
    out << "cones " << doc.cones.size() << "\n";
    for (const auto& cone : doc.cones) {
        auto sorted = cone;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) out << (i ? " " : "") << sorted[i];
        out << "\n";
    }
    if (doc.boundary) {
        out << "boundary";
        for (const Rat& q : *doc.boundary) out << " " << rational_string(q);
        out << "\n";
    }
    auto divisors = doc.divisors;
    std::sort(divisors.begin(), divisors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [label, coeffs] : divisors) {
        out << "divisor " << label;
        for (const Int& c : coeffs) out << " " << c;
        out << "\n";
    }
    auto subgroups = doc.subgroups;
    std::sort(subgroups.begin(), subgroups.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [label, members] : subgroups) {
        out << "subgroup " << label;
        for (const std::string& m : members) out << " " << m;
        out << "\n";
    }
    return out.str();
}

FanDocument document_from_fan(const Fan& f) {
    FanDocument doc;
    doc.rank = f.rank;
    doc.rays = f.rays;
    doc.cones = f.max_cones;
    return doc;
}

}  // namespace torcox
