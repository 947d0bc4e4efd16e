#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "tropadic/cli.hpp"
#include "tropadic/io.hpp"

using namespace tropadic;
using io::Json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

std::string data(const std::string& name) { return std::string(TROPADIC_DATA_DIR) + "/" + name; }

Outcome run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string error_kind(const Outcome& o) { return Json::parse(o.err).at("error"); }

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "tropadic_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path write(const std::string& name, const std::string& text) {
    const fs::path p = scratch(name);
    std::ofstream(p) << text;
    return p;
}

}  // namespace

TEST_CASE("check reports the non-locally-finite family") {
    const Outcome o = run({"check", "--input", data("not_locally_finite.json")});
    REQUIRE(o.code == 0);
    const Json j = Json::parse(o.out);
    CHECK(j.at("locally_finite") == false);
    CHECK(j.at("accumulation") == "0");
    CHECK(j.at("components") == 2);
    CHECK(j.at("support") == Json::parse(R"(["[0,1]"])"));
    CHECK(j.at("validation").at("ok") == true);
}

TEST_CASE("check on a valid and an invalid complex") {
    const Outcome ok = run({"check", "-i", data("segments.json")});
    REQUIRE(ok.code == 0);
    const Json j = Json::parse(ok.out);
    CHECK(j.at("complete") == false);
    CHECK(j.at("uncovered").at("point").size() == 1);
    CHECK(j.at("components") == 1);
    CHECK(j.at("locally_finite") == true);

    const Outcome bad = run({"check", "-i", data("overlapping_segments.json")});
    CHECK(bad.code == 2);
    CHECK(error_kind(bad) == "InvalidComplex");
    const Json r = Json::parse(bad.out);
    CHECK(r.at("validation").at("ok") == false);
    bool bad_intersection = false;
    for (const auto& v : r.at("validation").at("violations")) bad_intersection |= v.at("kind") == "BadIntersection";
    CHECK(bad_intersection);
}

TEST_CASE("trop on the tropical line") {
    const Outcome o = run({"trop", "--poly", "x + y + 1", "--box", "-3,3,-3,3"});
    REQUIRE(o.code == 0);
    const Json j = Json::parse(o.out);
    int vertices = 0, edges = 0;
    std::set<std::string> forms;
    for (const auto& c : j.at("cells")) {
        (c.at("dim") == 0 ? vertices : edges) += 1;
        forms.insert(c.at("initial"));
    }
    CHECK(vertices == 1);
    CHECK(edges == 3);
    CHECK(forms == std::set<std::string>{"x + y + 1", "x + 1", "y + 1", "x + y"});
}

TEST_CASE("initial forms at a point") {
    const Outcome o = run({"initial", "--poly", "x + y + t", "--point", "1/2,1/2"});
    REQUIRE(o.code == 0);
    const Json j = Json::parse(o.out);
    CHECK(j.at("initial_forms") == Json::parse(R"(["x + y"])"));
    CHECK(j.at("trop_values") == Json::parse(R"(["1/2"])"));
    CHECK(j.at("provenance") == "principal");

    const Outcome basis = run({"initial", "--poly", "x + 1", "--poly", "y + 1", "--point", "0,0", "--tropical-basis"});
    REQUIRE(basis.code == 0);
    CHECK(Json::parse(basis.out).at("warnings") == Json::parse(R"(["UnverifiedBasis"])"));
}

TEST_CASE("tilted algebra of the unit interval") {
    const Outcome o = run({"tilted", "-i", data("interval.json"), "--denominator", "1"});
    REQUIRE(o.code == 0);
    const Json j = Json::parse(o.out);
    std::vector<std::string> names;
    for (const auto& g : j.at("generators")) names.push_back(g.at("name"));
    CHECK(names == std::vector<std::string>{"x", "t*x^-1", "t"});
    bool vanishing = false;
    for (const auto& r : j.at("relations")) vanishing |= r == "g1*g2 = 0";
    CHECK(vanishing);
}

TEST_CASE("refine on identical complexes is the identity") {
    const Outcome o = run({"refine", "-i", data("star_x.json"), "-i", data("star_x.json")});
    REQUIRE(o.code == 0);
    const Json j = Json::parse(o.out);
    const ExtendedComplex input = io::complex_from(io::read_json_file(data("star_x.json")));
    CHECK(io::complex_from(j.at("complex")) == input);
    for (const auto& m : j.at("maps")) {
        const auto a = io::refinement_map_from(m).assignment;
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == i);
    }
    CHECK(j.at("complex") == io::to_json(input));
}

TEST_CASE("skeleton, adapt and morphism commands") {
    const Outcome s = run({"skeleton", "-e", data("line_embedding.json"), "-i", data("p2_fan_complex.json")});
    REQUIRE(s.code == 0);
    const Json sj = Json::parse(s.out);
    CHECK(sj.at("strata").size() == 4);
    CHECK(io::dump(io::to_json(io::skeleton_from(sj))) == s.out);

    const Outcome a = run({"adapt", "-e", data("line_embedding.json"), "-i", data("star_x.json"), "--domain",
                           data("edge_domain.json")});
    REQUIRE(a.code == 0);
    const Json aj = Json::parse(a.out);
    CHECK(aj.at("adapted") == true);
    CHECK(aj.at("faces").size() == 3);

    const Outcome m = run({"morphism", "-e", data("line_embedding.json"), "--fine", data("star_x.json"), "--coarse",
                           data("p2_fan_complex.json")});
    REQUIRE(m.code == 0);
    const Json mj = Json::parse(m.out);
    CHECK(io::dump(io::to_json(io::morphism_from(mj), {"x", "y"})) == m.out);

    const Outcome back = run({"morphism", "-e", data("line_embedding.json"), "--fine", data("p2_fan_complex.json"),
                              "--coarse", data("star_x.json")});
    CHECK(back.code == 2);
    CHECK(error_kind(back) == "NotARefinement");
}

TEST_CASE("exit codes and error JSON") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    const Outcome help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("skeleton") != std::string::npos);

    const Outcome missing = run({"check", "-i", "/nonexistent.json"});
    CHECK(missing.code == 1);
    CHECK(error_kind(missing) == "ParseError");

    const Outcome malformed = run({"check", "-i", write("broken.json", "{\"faces\": [").string()});
    CHECK(malformed.code == 1);
    CHECK(error_kind(malformed) == "ParseError");

    const Outcome floats = run({"tilted", "-i", write("float.json", R"({"dim": 1, "vertices": [[0.5]]})").string()});
    CHECK(floats.code == 1);
    CHECK(error_kind(floats) == "NonRationalPoint");

    const Outcome point = run({"initial", "--poly", "x + 1", "--point", "0.25"});
    CHECK(point.code == 1);
    CHECK(error_kind(point) == "NonRationalPoint");

    const Outcome zero = run({"trop", "--poly", "0"});
    CHECK(zero.code == 1);
    CHECK(error_kind(zero) == "ZeroPolynomial");

    const Outcome denominators =
        run({"tilted", "-i", write("half.json", R"({"dim": 1, "vertices": [["0"], ["1/2"]]})").string()});
    CHECK(denominators.code == 2);
    CHECK(error_kind(denominators) == "DenominatorMismatch");

    const fs::path half = write("half_plane.json", R"({
        "fan": {"dim": 2, "maximal_cones": [[[1,0],[0,1]], [[0,1],[-1,-1]], [[-1,-1],[1,0]]]},
        "faces": [{"dim": 2, "vertices": [["0","0"]], "rays": [[1,0],[0,1]]}]})");
    const Outcome cover = run({"skeleton", "-e", data("line_embedding.json"), "-i", half.string()});
    CHECK(cover.code == 2);
    CHECK(error_kind(cover) == "NotACover");
    CHECK(Json::parse(cover.err).at("message").get<std::string>().find("misses") != std::string::npos);

    const Outcome fans = run({"skeleton", "-e", data("line_embedding.json"), "-i", data("segments.json")});
    CHECK(fans.code == 2);
    CHECK(error_kind(fans) == "EmbeddingMismatch");

    const Outcome bad_d = run({"tilted", "-i", data("interval.json"), "--denominator", "0"});
    CHECK(bad_d.code == 1);
}

TEST_CASE("outputs go to files and repeat byte for byte") {
    const fs::path json = scratch("skeleton.json"), dot = scratch("skeleton.dot");
    const std::vector<std::string> args{"skeleton", "-e",  data("line_embedding.json"), "-i", data("star_x.json"),
                                        "--output", json.string(), "--dot",          dot.string()};
    const Outcome first = run(args);
    REQUIRE(first.code == 0);
    CHECK(first.out.empty());
    const std::string j1 = slurp(json), d1 = slurp(dot);
    CHECK(d1.rfind("digraph charts {", 0) == 0);
    REQUIRE(run(args).code == 0);
    CHECK(slurp(json) == j1);
    CHECK(slurp(dot) == d1);

    const Outcome as_dot = run({"check", "-i", data("not_locally_finite.json"), "--format", "dot"});
    REQUIRE(as_dot.code == 0);
    CHECK(as_dot.out.rfind("graph adjacency {", 0) == 0);
    CHECK(run({"check", "-i", data("segments.json"), "--format", "yaml"}).code == 1);
}
