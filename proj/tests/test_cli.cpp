#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kronlift/cli.hpp"
#include "kronlift/gentest.hpp"
#include "kronlift/serialize.hpp"

#include <sstream>

using namespace kronlift;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Result call(std::vector<std::string> args, const std::string &input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run(args, in, out, err);
    return {code, out.str(), err.str()};
}

const char *kSqrt2 = R"("field":{"minpoly":[-2,0,1],"root_interval":["1","3/2"]})";

std::string doc(const std::string &shape, const std::string &body) {
    return std::string("{") + kSqrt2 + ",\"shape\":" + shape + "," + body + "}";
}

} // namespace

TEST_CASE("generates on stdin") {
    auto r = call({"generates", "-"}, doc(R"({"n":0,"m":1})", R"("elements":[{"coords":[["0","1"]]}])"));
    CHECK(r.code == 0);
    CHECK(r.json() == Json::parse(R"({"generates": true})"));
}

TEST_CASE("a failed decision still exits 0 and its witness re-validates") {
    const std::string input =
        doc(R"({"n":0,"m":2})", R"("elements":[{"coords":[["0","1"],["0","2"]]}])");
    auto r = call({"generates", "-"}, input);
    CHECK(r.code == 0);
    Json j = r.json();
    CHECK(j["generates"] == false);
    auto field = parse_field(Json::parse(std::string("{") + kSqrt2 + "}")["field"]);
    GroupShape s{0, 2};
    std::vector<FieldElement> chi;
    for (const auto &c : j["character"])
        chi.push_back(parse_field_element(c, field));
    auto xs = parse_elements(Json::parse(input)["elements"], s, field);
    CHECK(character_annihilates(chi, xs, s));
}

TEST_CASE("lift output round-trips through generates") {
    const std::string input = doc(R"({"n":1,"m":0})",
                                  R"("gs":[{"coords":[["0","1"]]},{"coords":[["0","0"]]}],
                                     "delta_gens":[{"coords":[["1","0"]]}])");
    auto r = call({"lift", "-"}, input);
    REQUIRE(r.code == 0);
    Json j = r.json();
    CHECK(j["delta_coeffs"] == Json::parse("[[0],[1]]"));
    CHECK(j["lifted_generates"] == true);
    Json again = Json::parse(input);
    again.erase("gs");
    again.erase("delta_gens");
    again["elements"] = j["lifted"];
    auto g = call({"generates", "-"}, again.dump());
    CHECK(g.code == 0);
    CHECK(g.json()["generates"] == true);
}

TEST_CASE("closure and irredundant") {
    auto c = call({"closure", "-"},
                  doc(R"({"n":0,"m":1})", R"("elements":[{"coords":[["1/2","0"]]}])"));
    REQUIRE(c.code == 0);
    CHECK(c.json()["dim"] == 0);
    CHECK(c.json()["component_count"] == 2);
    auto i = call({"irredundant", "-"},
                  doc(R"({"n":1,"m":0})",
                      R"("elements":[{"coords":[["0","1"]]},{"coords":[["0","2"]]},{"coords":[["1","0"]]}])"));
    REQUIRE(i.code == 0);
    CHECK(i.json()["indices"].size() == 2);
    auto w = call({"irredundant", "--witness", "-"}, doc(R"({"n":1,"m":1})", R"("elements":[])"));
    REQUIRE(w.code == 0);
    CHECK(w.json()["elements"].size() == 3);
    CHECK(call({"irredundant", "--witness", "-"},
               R"({"field":{"minpoly":[-1,1],"root_interval":["0","2"]},"shape":{"n":1,"m":0},"elements":[]})")
              .code == 3);
    auto w2 = call({"irredundant", "--witness", "-"}, doc(R"({"n":1,"m":0})", R"("elements":[])"));
    REQUIRE(w2.code == 0);
    CHECK(w2.json()["elements"].size() == 2);
}

TEST_CASE("ranks") {
    auto r = call({"ranks", "-"}, R"({"shape":{"n":2,"m":0}})");
    REQUIRE(r.code == 0);
    CHECK(r.json() == Json::parse(R"({"d": 3, "redundancy_rank": 4, "gaschutz_rank": {"exact": 4}})"));
    auto a = call({"ranks", "-"},
                  R"({"isotypic":[{"multiplicity":5,"schur_dim":1,"sigma_dim_over_k":2},
                                  {"multiplicity":2,"schur_dim":2,"sigma_dim_over_k":1}],"d_L":2})");
    REQUIRE(a.code == 0);
    CHECK(a.json()["d_module"] == 3);
    CHECK(a.json()["d_abels_noskov"] == 4);
    auto e = call({"ranks", "-"}, R"({"isotypic":[]})");
    CHECK(e.code == 3);
    auto bad = call({"ranks", "-"},
                    R"({"structure":{"d_G":2,"dim_ab":1,"dim_T":2,"ab_noncompact":false,"G_compact":false}})");
    CHECK(bad.code == 3);
}

TEST_CASE("counterexample families") {
    auto lb = call({"counterexample", "--family", "lowerbound", "--n", "1", "--m", "0",
                    "--verify-bound", "2"});
    REQUIRE(lb.code == 0);
    CHECK(lb.json()["no_lift_found"] == true);
    CHECK(lb.json()["h_tuple"].size() == 3);
    auto t = call({"counterexample", "--family", "torus", "--n", "2", "--verify-bound", "3"});
    REQUIRE(t.code == 0);
    CHECK(t.json()["no_lift_found"] == true);
    CHECK(t.json()["lifts_checked"] == 49);
    CHECK(call({"counterexample", "--family", "other"}).code == 2);
}

TEST_CASE("exit codes") {
    CHECK(call({"generates", "-"}, "not json").code == 2);
    CHECK(call({"generates", "-"}, R"({"shape":{"n":0,"m":1}})").code == 2);
    CHECK(call({"generates", "-"}, doc(R"({"n":0,"m":1})", R"("elements":[{"coords":[["1"]]}])")).code ==
          2);
    CHECK(call({"generates", "-"},
               R"({"field":{"minpoly":[-2,0,1],"root_interval":["2","3"]},"shape":{"n":0,"m":1},"elements":[]})")
              .code == 2);
    auto small = call({"lift", "-"}, doc(R"({"n":1,"m":0})", R"("gs":[{"coords":[["0","1"]]}],"delta_gens":[])"));
    CHECK(small.code == 3);
    CHECK(small.err.find("2 n_free + m_torus = 2") != std::string::npos);
    auto sparse = call({"lift", "-"}, doc(R"({"n":1,"m":0})",
                                          R"("gs":[{"coords":[["1","0"]]},{"coords":[["2","0"]]}],"delta_gens":[])"));
    CHECK(sparse.code == 3);
    CHECK(call({}).code == 2);
    CHECK(call({"nonsense"}).code == 2);
}

TEST_CASE("output is byte-identical across runs") {
    const std::string input = doc(R"({"n":1,"m":1})",
                                  R"("elements":[{"coords":[["1","0"],["0","0"]]},{"coords":[["0","1"],["1/3","0"]]}])");
    for (const char *cmd : {"generates", "closure"}) {
        auto a = call({cmd, "-"}, input), b = call({cmd, "-"}, input);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    auto d1 = call({"generates", "--seed", "9", "-"},
                   doc(R"({"n":0,"m":1})", R"("elements":[{"coords":[["0","1"]]}])"));
    auto d2 = call({"generates", "--seed", "9", "-"},
                   doc(R"({"n":0,"m":1})", R"("elements":[{"coords":[["0","1"]]}])"));
    CHECK(d1.out == d2.out);
}
