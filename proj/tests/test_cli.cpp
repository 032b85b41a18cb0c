#include <doctest.h>

#include <torcox/cli.hpp>
#include <torcox/cox.hpp>
#include <torcox/document.hpp>
#include <torcox/tower.hpp>

#include <filesystem>
#include <fstream>

using namespace torcox;
namespace fs = std::filesystem;

namespace {

const char* A1_DOC =
    "torcox 1\n"
    "rank 2\n"
    "rays 2\n"
    "0 1\n"
    "2 1\n"
    "cones 1\n"
    "0 1\n"
    "divisor W 1 0\n"
    "divisor W2 2 0\n"
    "divisor E 0 1\n"
    "divisor V 1 0\n"
    "subgroup N W\n"
    "subgroup N2 W2\n"
    "subgroup Nfull W E\n"
    "subgroup Ndep W V\n";

const char* P2_DOC =
    "torcox 1\n"
    "rank 2\n"
    "rays 3\n"
    "1 0\n"
    "0 1\n"
    "-1 -1\n"
    "cones 3\n"
    "0 1\n"
    "1 2\n"
    "0 2\n"
    "boundary 0 1/2 0\n"
    "divisor H 1 0 0\n";

// One scratch directory per test-binary run.
fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "torcox_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_doc(const std::string& name, const std::string& text) {
    fs::path p = scratch_dir() / name;
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST_CASE("help and argument errors") {
    CliResult help = run_cli({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("Subcommands:") != std::string::npos);

    CHECK(run_cli({}).exit_code == 2);
    CHECK(run_cli({"frobnicate"}).exit_code == 2);
    CHECK(run_cli({"analyze"}).exit_code == 2);  // missing file argument
    CHECK(run_cli({"divisor", "x.torcox", "W", "--check", "bogus"}).exit_code == 2);

    CliResult missing = run_cli({"analyze", (scratch_dir() / "nosuch.torcox").string()});
    CHECK(missing.exit_code == 2);
    CHECK(missing.err.find("cannot open") != std::string::npos);
}

TEST_CASE("document parse errors surface with positions") {
    std::string path = write_doc("bad.torcox", "torcox 1\nrank 2\nrays 1\n1 x\ncones 0\n");
    CliResult r = run_cli({"analyze", path});
    CHECK(r.exit_code == 2);
    CHECK(r.err == "parse error at line 4, column 3: expected an integer, got 'x'\n");
}

TEST_CASE("invalid fans are reported and refused") {
    std::string path =
        write_doc("nonprim.torcox", "torcox 1\nrank 2\nrays 2\n1 0\n2 0\ncones 1\n0 1\n");
    CliResult r = run_cli({"analyze", path});
    CHECK(r.exit_code == 3);
    CHECK(r.err ==
          "invalid fan:\n"
          "ray 1 = (2, 0) is not primitive\n");
    CHECK(r.out.empty());
}

TEST_CASE("analyze reports are frozen and deterministic") {
    std::string a1 = write_doc("a1.torcox", A1_DOC);
    CliResult r = run_cli({"analyze", a1});
    CHECK(r.exit_code == 0);
    CHECK(r.err.empty());
    CHECK(r.out ==
          "fan: rank 2, rays 2, maximal cones 1\n"
          "validation: ok\n"
          "cone 0: rays (0 1), dim 2, multiplicity 2, smooth no, local class group Z/2\n"
          "class group: Z/2\n"
          "weil mod cartier: Z/2\n"
          "restriction:\n"
          "  ray 0 -> (1)\n"
          "  ray 1 -> (1)\n");
    CHECK(run_cli({"analyze", a1}).out == r.out);

    std::string p2 = write_doc("p2.torcox", P2_DOC);
    CliResult rp = run_cli({"analyze", p2});
    CHECK(rp.exit_code == 0);
    CHECK(rp.out ==
          "fan: rank 2, rays 3, maximal cones 3\n"
          "validation: ok\n"
          "cone 0: rays (0 1), dim 2, multiplicity 1, smooth yes, local class group 0\n"
          "cone 1: rays (1 2), dim 2, multiplicity 1, smooth yes, local class group 0\n"
          "cone 2: rays (0 2), dim 2, multiplicity 1, smooth yes, local class group 0\n"
          "class group: Z\n"
          "weil mod cartier: 0\n"
          "restriction: trivial\n"
          "pair: boundary (0, 1/2, 0)\n"
          "pair status: klt yes, lc yes, Q-Cartier yes\n");
}

TEST_CASE("analyze flags a pair whose canonical class is not Q-Cartier") {
    std::string path = write_doc("nqg.torcox",
                                 "torcox 1\n"
                                 "rank 3\n"
                                 "rays 4\n"
                                 "1 0 0\n"
                                 "0 1 0\n"
                                 "0 0 1\n"
                                 "1 2 -1\n"
                                 "cones 1\n"
                                 "0 1 2 3\n"
                                 "boundary 0 0 0 0\n");
    CliResult r = run_cli({"analyze", path});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("cone 0: rays (0 1 2 3), dim 3, multiplicity -, smooth no, "
                     "local class group Z\n") != std::string::npos);
    CHECK(r.out.find("pair status: klt no, lc no, Q-Cartier no, "
                     "note: klt type via toric standard boundary\n") != std::string::npos);
}

TEST_CASE("divisor checks") {
    std::string a1 = write_doc("a1.torcox", A1_DOC);
    CliResult full = run_cli({"divisor", a1, "W"});
    CHECK(full.exit_code == 0);
    CHECK(full.out ==
          "cartier: no; index 2\n"
          "qcartier: yes; index 2\n"
          "principal: no\n"
          "class: (1) in Z/2\n");

    CHECK(run_cli({"divisor", a1, "W2", "--check", "cartier"}).out == "cartier: yes\n");
    CHECK(run_cli({"divisor", a1, "W2", "--check", "class"}).out == "class: (0) in Z/2\n");

    // div(m) for m = (-1, 1) has coefficients <m, (0,1)> = 1, <m, (2,1)> = -1.
    std::string p2 = write_doc("p2.torcox", P2_DOC);
    CliResult pr = run_cli({"divisor", p2, "H", "--check", "principal"});
    CHECK(pr.out == "principal: no\n");

    CliResult unknown = run_cli({"divisor", a1, "X"});
    CHECK(unknown.exit_code == 4);
    CHECK(unknown.err == "error: unknown divisor label 'X'\n");
}

TEST_CASE("cox verdict report is frozen") {
    std::string a1 = write_doc("a1.torcox", A1_DOC);
    CliResult r = run_cli({"cox", a1, "N"});
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "cox cover: grading rank 1, total rank 3\n"
          "generators: W\n"
          "torsor: no\n"
          "  witness: cone 0, generator W, class (1)\n"
          "factorial: yes\n");

    CHECK(run_cli({"cox", a1, "N2"}).out ==
          "cox cover: grading rank 1, total rank 3\n"
          "generators: W2\n"
          "torsor: yes\n"
          "factorial: no\n");

    CliResult full = run_cli({"cox", a1, "--full"});
    CHECK(full.exit_code == 0);
    CHECK(full.out.find("generators: ray 0 ray 1\n") != std::string::npos);
    CHECK(full.out.find("factorial: yes\n") != std::string::npos);
}

TEST_CASE("cox --emit fan round-trips through the document format") {
    std::string a1 = write_doc("a1.torcox", A1_DOC);
    CliResult r = run_cli({"cox", a1, "--full", "--emit", "fan"});
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "torcox 1\n"
          "rank 4\n"
          "rays 2\n"
          "0 1 1 0\n"
          "2 1 0 1\n"
          "cones 1\n"
          "0 1\n");
    Fan lifted = parse_fan_document(r.out).to_fan();
    CHECK(validate_fan(lifted).ok());
    CHECK(lifted == smooth_full_cover(parse_fan_document(A1_DOC).to_fan()).total);
}

TEST_CASE("cox label errors") {
    std::string a1 = write_doc("a1.torcox", A1_DOC);
    CHECK(run_cli({"cox", a1}).exit_code == 2);

    CliResult unknown = run_cli({"cox", a1, "M"});
    CHECK(unknown.exit_code == 4);
    CHECK(unknown.err == "error: unknown subgroup label 'M'\n");

    CliResult dep = run_cli({"cox", a1, "Ndep"});
    CHECK(dep.exit_code == 5);
    CHECK(dep.err == "error: subgroup generators are linearly dependent\n");
}

TEST_CASE("tower chain report is frozen") {
    std::string a1 = write_doc("a1.torcox", A1_DOC);
    CliResult r = run_cli({"tower", a1, "--chain", "N2,N,Nfull", "--klt-shadow"});
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "ambient weil mod cartier: Z/2\n"
          "step 1: image type 0, relative torsor yes\n"
          "step 2: image type Z/2, relative torsor no\n"
          "  witness: cone 0, generator W, class (1)\n"
          "step 3: image type Z/2, relative torsor yes\n"
          "stabilization index: 2\n"
          "klt shadow:\n"
          "step 1: lifted charts 1, klt 1, skipped 0\n"
          "step 2: lifted charts 1, klt 1, skipped 0\n"
          "step 3: lifted charts 1, klt 1, skipped 0\n");

    CliResult trivial = run_cli({"tower", a1});
    CHECK(trivial.exit_code == 0);
    CHECK(trivial.out ==
          "ambient weil mod cartier: Z/2\n"
          "stabilization index: 0\n");

    CliResult decreasing = run_cli({"tower", a1, "--chain", "Nfull,N2"});
    CHECK(decreasing.exit_code == 6);
    CHECK(decreasing.err == "error: chain is not increasing at position 1\n");

    CliResult unknown = run_cli({"tower", a1, "--chain", "N,Q"});
    CHECK(unknown.exit_code == 4);
}

TEST_CASE("tower demo transcripts match the library") {
    CliResult r = run_cli({"tower", "--demo-iteration2", "2", "2,2"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == demo_iteration2(2, {2, 2}).transcript);

    CliResult full = run_cli({"tower", "--demo-iteration2", "2", "2,2,2", "--full-labels"});
    CHECK(full.exit_code == 0);
    CHECK(full.out == demo_iteration2(2, {2, 2, 2}, true).transcript);

    CHECK(run_cli({"tower", "--demo-iteration2", "1", "2"}).exit_code == 2);
    CHECK(run_cli({"tower", "--demo-iteration2", "2", "2,x"}).exit_code == 2);
    CHECK(run_cli({"tower", "--demo-iteration2", "2", "2", "--chain", "N"}).exit_code == 2);
    std::string a1 = write_doc("a1.torcox", A1_DOC);
    CHECK(run_cli({"tower", a1, "--demo-iteration2", "2", "2"}).exit_code == 2);
}
