#include <torcox/cli.hpp>

#include <torcox/cox.hpp>
#include <torcox/divisors.hpp>
#include <torcox/document.hpp>
#include <torcox/singularities.hpp>
#include <torcox/tower.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace torcox {

namespace {

std::string rational_string(const Rat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

std::string to_string(const VecQ& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rational_string(v[i]);
    }
    return s + ")";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string piece;
    std::istringstream in(s);
    while (std::getline(in, piece, ',')) parts.push_back(piece);
    return parts;
}

std::size_t parse_size(const std::string& s) {
    if (s.empty() || s.size() > 6 ||
        s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("expected a small nonnegative integer, got '" + s + "'");
    return std::stoul(s);
}

struct LabelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Loaded {
    FanDocument doc;
    Fan fan;
};

// Reads and validates the document; failures carry the right exit code.
Loaded load(const std::string& path, std::ostream& err, int& code) {
    std::ifstream in(path);
    if (!in) {
        err << "cannot open '" << path << "'\n";
        code = 2;
        return {};
    }
    std::ostringstream text;
    text << in.rdbuf();
    Loaded l;
    l.doc = parse_fan_document(text.str());
    l.fan = l.doc.to_fan();
    FanValidation v = validate_fan(l.fan);
    if (!v.ok()) {
        err << "invalid fan:\n" << v.to_string() << "\n";
        code = 3;
    }
    return l;
}

DivisorSubgroup subgroup_by_label(const Loaded& l, const std::string& label) {
    const auto* members = l.doc.find_subgroup(label);
    if (!members) throw LabelError("unknown subgroup label '" + label + "'");
    std::vector<VecZ> gens;
    for (const std::string& m : *members) gens.push_back(*l.doc.find_divisor(m));
    return divisor_subgroup(l.fan, gens);
}

std::vector<std::string> subgroup_member_labels(const Loaded& l, const std::string& label) {
    return *l.doc.find_subgroup(label);
}

void run_analyze(const Loaded& l, std::ostream& out) {
    const Fan& f = l.fan;
    out << "fan: rank " << f.rank << ", rays " << f.ray_count() << ", maximal cones "
        << f.cone_count() << "\n";
    out << "validation: ok\n";
    WeilModCartier w = weil_mod_cartier(f);
    for (std::size_t i = 0; i < f.cone_count(); ++i) {
        Cone c = f.cone(i);
        out << "cone " << i << ": rays (";
        for (std::size_t j = 0; j < f.max_cones[i].size(); ++j)
            out << (j ? " " : "") << f.max_cones[i][j];
        out << "), dim " << f.cone_ray_matrix(i).rank();
        if (is_simplicial(c))
            out << ", multiplicity " << multiplicity(c);
        else
            out << ", multiplicity -";
        out << ", smooth " << yes_no(is_smooth(c)) << ", local class group "
            << w.locals[i].group.to_string() << "\n";
    }
    out << "class group: " << class_group(f).group.to_string() << "\n";
    out << "weil mod cartier: " << w.group.to_string() << "\n";
    if (w.restriction.rows() == 0) {
        out << "restriction: trivial\n";
    } else {
        out << "restriction:\n";
        for (std::size_t j = 0; j < f.ray_count(); ++j)
            out << "  ray " << j << " -> " << torcox::to_string(w.restriction.col(j)) << "\n";
    }
    if (l.doc.boundary) {
        out << "pair: boundary " << to_string(*l.doc.boundary) << "\n";
        KltStatus st = klt_status(make_toric_pair(f, *l.doc.boundary));
        out << "pair status: klt " << yes_no(st.klt) << ", lc " << yes_no(st.lc)
            << ", Q-Cartier " << yes_no(st.q_cartier);
        if (!st.note.empty()) out << ", note: " << st.note;
        out << "\n";
    }
}

void run_divisor(const Loaded& l, const std::string& label, const std::string& check,
                 std::ostream& out) {
    const VecZ* coeffs = l.doc.find_divisor(label);
    if (!coeffs) throw LabelError("unknown divisor label '" + label + "'");
    const Fan& f = l.fan;
    auto cartier_line = [&] {
        if (is_cartier(f, *coeffs)) {
            out << "cartier: yes\n";
        } else if (auto idx = cartier_index(f, *coeffs)) {
            out << "cartier: no; index " << *idx << "\n";
        } else {
            out << "cartier: no; not Q-Cartier\n";
        }
    };
    auto qcartier_line = [&] {
        if (auto idx = cartier_index(f, *coeffs))
            out << "qcartier: yes; index " << *idx << "\n";
        else
            out << "qcartier: no\n";
    };
    auto principal_line = [&] {
        if (auto m = linearly_equivalent(f, *coeffs, VecZ(f.ray_count(), Int(0))))
            out << "principal: yes; m = " << torcox::to_string(*m) << "\n";
        else
            out << "principal: no\n";
    };
    auto class_line = [&] {
        Cokernel cl = class_group(f);
        out << "class: " << torcox::to_string(cl.class_of(*coeffs)) << " in "
            << cl.group.to_string() << "\n";
    };
    if (check.empty() || check == "cartier") cartier_line();
    if (check.empty() || check == "qcartier") qcartier_line();
    if (check.empty() || check == "principal") principal_line();
    if (check.empty() || check == "class") class_line();
}

void run_cox(const Loaded& l, const std::string& label, bool full, const std::string& emit,
             std::ostream& out) {
    const Fan& f = l.fan;
    RelativeCoxSpace space = full ? smooth_full_cover(f)
                                  : relative_cox_fan(f, subgroup_by_label(l, label));
    if (emit == "fan") {
        out << emit_fan_document(document_from_fan(space.total));
        return;
    }
    std::vector<std::string> names;
    if (full) {
        for (std::size_t i = 0; i < f.ray_count(); ++i)
            names.push_back("ray " + std::to_string(i));
    } else {
        names = subgroup_member_labels(l, label);
    }
    out << "cox cover: grading rank " << space.grading_rank << ", total rank "
        << space.total.rank << "\n";
    out << "generators:";
    for (const std::string& n : names) out << " " << n;
    out << "\n";
    TorsorVerdict verdict = is_torsor(f, space.subgroup);
    out << "torsor: " << yes_no(verdict.torsor) << "\n";
    for (const TorsorWitness& w : verdict.witnesses)
        out << "  witness: cone " << w.cone << ", generator " << names[w.generator]
            << ", class " << torcox::to_string(w.local_class) << "\n";
    out << "factorial: " << yes_no(is_factorial_cover(f, space.subgroup)) << "\n";
}

// Lift each step along its canonical grading basis and certify the charts.
void run_klt_shadow(const Fan& f, const std::vector<DivisorSubgroup>& chain,
                    std::ostream& out) {
    out << "klt shadow:\n";
    for (std::size_t s = 0; s < chain.size(); ++s) {
        RelativeCoxSpace space =
            relative_cox_fan(f, divisor_subgroup(f, chain[s].basis.columns()));
        std::size_t klt = 0, skipped = 0;
        for (std::size_t i = 0; i < space.total.cone_count(); ++i) {
            std::vector<VecZ> rays;
            std::vector<std::size_t> local;
            for (std::size_t r : space.total.max_cones[i]) {
                local.push_back(rays.size());
                rays.push_back(space.total.rays[r]);
            }
            Fan chart(space.total.rank, rays, {local});
            KltStatus st = klt_status(make_toric_pair(chart));
            if (!st.q_cartier)
                ++skipped;
            else if (st.klt)
                ++klt;
        }
        out << "step " << (s + 1) << ": lifted charts " << space.total.cone_count()
            << ", klt " << klt << ", skipped " << skipped << "\n";
    }
}

void run_tower_command(const Loaded& l, const std::string& chain_arg, bool klt_shadow,
                       std::ostream& out) {
    const Fan& f = l.fan;
    std::vector<DivisorSubgroup> chain;
    std::vector<std::vector<std::string>> member_names;
    if (!chain_arg.empty()) {
        for (const std::string& label : split_commas(chain_arg)) {
            chain.push_back(subgroup_by_label(l, label));
            member_names.push_back(subgroup_member_labels(l, label));
        }
    }
    TowerState state = run_tower(f, chain);
    out << "ambient weil mod cartier: " << state.ambient.group.to_string() << "\n";
    for (std::size_t s = 0; s < state.steps.size(); ++s) {
        const TowerStep& step = state.steps[s];
        out << "step " << (s + 1) << ": image type " << step.image_type.to_string()
            << ", relative torsor " << yes_no(step.relative_torsor) << "\n";
        for (const TorsorWitness& w : step.witnesses)
            out << "  witness: cone " << w.cone << ", generator "
                << member_names[s][w.generator] << ", class "
                << torcox::to_string(w.local_class) << "\n";
    }
    out << "stabilization index: " << state.stabilization_index << "\n";
    if (klt_shadow) run_klt_shadow(f, chain, out);
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"exact toric geometry: divisor classes, relative Cox covers, towers"};
    app.name("torcox");
    app.require_subcommand(1);

    std::string analyze_file;
    CLI::App* analyze = app.add_subcommand("analyze", "fan, chart, and class-group report");
    analyze->add_option("file", analyze_file, "fan document")->required();

    std::string div_file, div_label, div_check;
    CLI::App* divisor = app.add_subcommand("divisor", "check one labeled divisor");
    divisor->add_option("file", div_file, "fan document")->required();
    divisor->add_option("label", div_label, "divisor label")->required();
    divisor->add_option("--check", div_check, "one of cartier|qcartier|principal|class")
        ->check(CLI::IsMember({"cartier", "qcartier", "principal", "class"}));

    std::string cox_file, cox_label, cox_emit = "verdicts";
    bool cox_full = false;
    CLI::App* cox = app.add_subcommand("cox", "relative Cox cover of a divisor subgroup");
    cox->add_option("file", cox_file, "fan document")->required();
    CLI::Option* cox_label_opt = cox->add_option("label", cox_label, "subgroup label");
    cox->add_flag("--full", cox_full, "use one generator per ray")->excludes(cox_label_opt);
    cox->add_option("--emit", cox_emit, "fan|verdicts")
        ->check(CLI::IsMember({"fan", "verdicts"}));

    std::string tower_file, tower_chain;
    bool tower_shadow = false, demo_full_labels = false;
    std::vector<std::string> demo_args;
    CLI::App* tower = app.add_subcommand("tower", "iterated cover transcripts");
    CLI::Option* tower_file_opt = tower->add_option("file", tower_file, "fan document");
    CLI::Option* chain_opt =
        tower->add_option("--chain", tower_chain, "comma-separated subgroup labels");
    tower->add_flag("--klt-shadow", tower_shadow, "certify lifted charts klt");
    CLI::Option* demo_opt =
        tower->add_option("--demo-iteration2", demo_args, "ambient dimension, comma-separated degrees")
            ->expected(2)
            ->excludes(tower_file_opt)
            ->excludes(chain_opt);
    tower->add_flag("--full-labels", demo_full_labels, "demo recipe with full unit-label joins")
        ->needs(demo_opt);

    std::ostringstream out, err;
    CliResult result;
    try {
        std::vector<const char*> argv{"torcox"};
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return {code == 0 ? 0 : 2, out.str(), err.str()};
    }

    try {
        if (tower->parsed() && !demo_args.empty()) {
            std::size_t n = parse_size(demo_args[0]);
            std::vector<std::size_t> degrees;
            for (const std::string& d : split_commas(demo_args[1]))
                degrees.push_back(parse_size(d));
            out << demo_iteration2(n, degrees, demo_full_labels).transcript;
            return {0, out.str(), err.str()};
        }

        std::string path = analyze->parsed() ? analyze_file
                         : divisor->parsed() ? div_file
                         : cox->parsed()     ? cox_file
                                             : tower_file;
        if (tower->parsed() && path.empty()) {
            err << "tower needs a fan document or --demo-iteration2\n";
            return {2, out.str(), err.str()};
        }
        if (cox->parsed() && !cox_full && cox_label.empty()) {
            err << "cox needs a subgroup label or --full\n";
            return {2, out.str(), err.str()};
        }

        int code = 0;
        Loaded l = load(path, err, code);
        if (code != 0) return {code, out.str(), err.str()};

        if (analyze->parsed()) run_analyze(l, out);
        if (divisor->parsed()) run_divisor(l, div_label, div_check, out);
        if (cox->parsed()) run_cox(l, cox_label, cox_full, cox_emit, out);
        if (tower->parsed()) run_tower_command(l, tower_chain, tower_shadow, out);
    } catch (const ParseError& e) {
        err << "parse error at line " << e.line << ", column " << e.column << ": "
            << e.what() << "\n";
        result.exit_code = 2;
    } catch (const std::invalid_argument& e) {
        // Demo parameter validation and malformed numbers in --demo-iteration2.
        bool rank_deficient = dynamic_cast<const RankDeficientSubgroupError*>(&e) != nullptr;
        bool chain = dynamic_cast<const ChainNotIncreasingError*>(&e) != nullptr;
        err << "error: " << e.what() << "\n";
        result.exit_code = rank_deficient ? 5 : chain ? 6 : 2;
    } catch (const LabelError& e) {
        err << "error: " << e.what() << "\n";
        result.exit_code = 4;
    }
    result.out = out.str();
    result.err = err.str();
    return result;
}

}  // namespace torcox
