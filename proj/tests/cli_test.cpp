#include "gqt/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gqt/io.hpp"

namespace gqt {
namespace {

struct Result {
  int code;
  std::string out, err;
  Json json() const { return parse_json(out); }
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const Field f9 = Field::quad_ext(3, 1);

std::string write_temp(const std::string& name, const Json& j) {
  const auto dir = std::filesystem::temp_directory_path() / "gqt_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << j.dump();
  return path.string();
}

TEST(Cli, MeasureFromFiles) {
  const auto obs = write_temp("obs.json", matrix_to_json(Matrix::parse(f9, 2, 2, {"0", "t", "2t", "0"})));
  const auto psi = write_temp("psi.json", vector_to_json(StateVector::basis(f9, 2, 0)));
  const auto r = run({"measure", "--obs", obs, "--state", psi});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const auto j = r.json();
  ASSERT_EQ(j["outcomes"].size(), 2u);
  EXPECT_EQ(j["outcomes"][0]["born_weight"], "2");
  EXPECT_EQ(j["outcomes"][1]["born_weight"], "2");
  EXPECT_EQ(j["total_form_value"], "1");
}

TEST(Cli, OutputsAreConsumable) {
  // evolve -> measure
  const Json u = matrix_to_json(Matrix::diagonal(f9, {f9.parse("t"), f9.parse("2t")}));
  const auto ev = run({"evolve", "--unitary", u.dump(), "--state", vector_to_json(StateVector::parse(f9, {"1", "1"})).dump()});
  ASSERT_EQ(ev.code, 0) << ev.out;
  EXPECT_EQ(ev.json()["state"]["entries"], Json::array({"t", "2t"}));
  EXPECT_EQ(ev.json()["form_before"], ev.json()["form_after"]);
  const auto m = run({"measure", "--obs", matrix_to_json(Matrix::identity(f9, 2)).dump(), "--state", ev.json()["state"].dump()});
  EXPECT_EQ(m.code, 0) << m.out;

  // tensor -> schmidt
  const auto t = run({"tensor", "--a", vector_to_json(StateVector::parse(f9, {"1", "t"})).dump(), "--b",
                      vector_to_json(StateVector::parse(f9, {"2", "1"})).dump()});
  ASSERT_EQ(t.code, 0) << t.out;
  const auto s = run({"schmidt", "--state", t.json().dump()});
  ASSERT_EQ(s.code, 0) << s.out;
  EXPECT_TRUE(s.json()["is_product"].get<bool>());
  EXPECT_EQ(s.json()["rank"], 1);
  // factors are vector documents
  const auto again = run({"tensor", "--a", s.json()["factors"][0].dump(), "--b", s.json()["factors"][1].dump()});
  EXPECT_EQ(again.json()["entries"], t.json()["entries"]);

  // tensor of operators
  const auto op = run({"tensor", "--a", matrix_to_json(Matrix::identity(f9, 2)).dump(), "--b",
                       matrix_to_json(Matrix::identity(f9, 2)).dump()});
  EXPECT_EQ(matrix_from_json(op.json()), Matrix::identity(f9, 4));

  // eigen bases feed measure and form
  const auto e = run({"eigen", "--matrix", matrix_to_json(Matrix::parse(f9, 2, 2, {"0", "t", "2t", "0"})).dump()});
  ASSERT_EQ(e.code, 0);
  const Json v = e.json()["spaces"][0]["basis"][0];
  const auto fv = run({"form", "--x", v.dump(), "--y", v.dump()});
  EXPECT_EQ(fv.json()["value"], "2");
}

TEST(Cli, Checks) {
  const auto u = run({"unitary-check", "--matrix", matrix_to_json(Matrix::parse(f9, 2, 2, {"0", "1", "1", "0"})).dump()});
  EXPECT_TRUE(u.json()["unitary"].get<bool>());
  const auto h = run({"hermitian-check", "--matrix", matrix_to_json(Matrix::parse(f9, 2, 2, {"1", "t", "2t", "2"})).dump()});
  EXPECT_TRUE(h.json()["hermitian"].get<bool>());
  EXPECT_TRUE(h.json()["char_poly_fixed"].get<bool>());
  const auto n = run({"hermitian-check", "--matrix", matrix_to_json(Matrix::parse(f9, 2, 2, {"1", "t", "t", "2"})).dump()});
  EXPECT_FALSE(n.json()["hermitian"].get<bool>());
}

TEST(Cli, NoCloneExample) {
  const auto r = run({"noclone", "--field", "quadext:3:1", "--dim", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["clone_rank"], 1);
  EXPECT_EQ(r.json()["linear_image_rank"], 2);
  const auto full = run({"noclone", "--field", R"({"kind":"quadext","p":3,"e":1})", "--dim", "2"});
  EXPECT_EQ(full.out, r.out);
}

TEST(Cli, LefschetzSampleExample) {
  const auto r = run({"lefschetz", "sample", "--sentence", "E x . x*x + 1 = 0", "--primes", "2..50"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = r.json();
  EXPECT_EQ(j["primes"].size(), 15u);
  for (const auto& row : j["primes"]) {
    EXPECT_EQ(row["verdict"], "true");
    EXPECT_TRUE(row["certified"].get<bool>());
  }
  EXPECT_EQ(j["conjecture"], true);
}

TEST(Cli, LefschetzEval) {
  const auto r = run({"lefschetz", "eval", "--sentence", "E x . x*x + 1 = 0", "--p", "7", "--levels", "4", "--expand", "2"});
  ASSERT_EQ(r.code, 0);
  const auto j = r.json();
  EXPECT_EQ(j["verdict"], "true");
  EXPECT_TRUE(j["certified"].get<bool>());
  EXPECT_EQ(j["witness"][0]["level"], 2);
  const auto bad = run({"lefschetz", "eval", "--sentence", "E x . x = ", "--p", "7"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.json()["error"]["code"], "SyntaxError");
  EXPECT_EQ(bad.json()["error"]["column"], 10);
}

TEST(Cli, CurvesMeet) {
  const auto r = run({"curves-meet", "--f", "X^2 - Y*Z", "--g", "Y^2 - X*Z", "--p", "5"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.json()["levels"], 4);
  EXPECT_EQ(r.json()["level"], 1);
  bool has_111 = false;
  const Json j = r.json();
  for (const auto& pt : j["points"]) has_111 = has_111 || pt == Json::array({"1", "1", "1"});
  EXPECT_TRUE(has_111);
  const auto bad = run({"curves-meet", "--f", "X^2 + Y", "--g", "X", "--p", "5"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.json()["error"]["code"], "NotHomogeneous");
}

TEST(Cli, EmbedAndFixpoints) {
  const auto e = run({"embed", "--from", "quadext:3:1", "--m", "3"});
  ASSERT_EQ(e.code, 0);
  EXPECT_TRUE(e.json()["verification"]["involution_compatible"].get<bool>());
  EXPECT_EQ(e.json()["target"]["e"], 3);
  const auto even = run({"embed", "--from", "quadext:3:1", "--m", "2"});
  EXPECT_EQ(even.code, 1);
  EXPECT_EQ(even.json()["error"]["code"], "EvenExtensionDegree");

  Json map = matrix_to_json(Matrix::parse(f9, 2, 2, {"0", "t", "1", "1"}));
  map["aut_exponent"] = 0;
  const auto path = write_temp("map.json", map);
  const auto f = run({"fixpoints", "--map", path, "--max-ext", "3"});
  ASSERT_EQ(f.code, 0) << f.out;
  EXPECT_EQ(f.json()["status"], "bound_too_small");
  EXPECT_EQ(f.json()["levels_skipped"], Json::array({2}));
  const auto g = run({"fixpoints", "--map", path, "--max-ext", "2", "--allow-form-incompatible"});
  EXPECT_EQ(g.json()["points"].size(), 2u);
  EXPECT_FALSE(g.json()["points"][0]["form_compatible"].get<bool>());
}

TEST(Cli, FieldInfo) {
  const auto r = run({"field", "info", "--field", "quadext:5:1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["order"], 25);
  EXPECT_EQ(r.json()["fixed_order"], 5);
  EXPECT_EQ(r.json()["field"]["modulus"], Json::array({2, 0, 1}));
}

TEST(Cli, UsageErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"noclone", "--field", "quadext:3:1", "--dim", "2", "--bogus", "1"},
           {"noclone", "--field", "quadext:3", "--dim", "2"},
           {"noclone", "--field", "quadext:3:1"},
           {"noclone", "--field", "quadext:3:1", "--dim", "two"},
           {"measure", "--obs", "/nonexistent/obs.json", "--state", "/nonexistent/psi.json"},
           {"selftest", "--seed", "1"},
           {"--seed", "1", "field", "info", "--field", "gaussian"},
           {"lefschetz"},
       }) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "" : args[0]) << r.out;
    EXPECT_FALSE(r.err.empty());
    EXPECT_TRUE(r.out.empty());
  }
  const auto r = run({"noclone", "--field", "quadext:3", "--dim", "2"});
  EXPECT_NE(r.err.find("--field"), std::string::npos);
  EXPECT_NE(r.err.find("quadext:p:e"), std::string::npos);
  const auto s = run({"selftest", "--seed", "1"});
  EXPECT_NE(s.err.find("--seed"), std::string::npos);
}

TEST(Cli, DomainErrors) {
  const auto notherm = run({"measure", "--obs", matrix_to_json(Matrix::parse(f9, 2, 2, {"0", "1", "0", "0"})).dump(), "--state",
                            vector_to_json(StateVector::basis(f9, 2, 0)).dump()});
  EXPECT_EQ(notherm.code, 1);
  EXPECT_EQ(notherm.json()["error"]["code"], "NotHermitian");
  const auto badjson = run({"form", "--x", "{oops", "--y", "{}"});
  EXPECT_EQ(badjson.code, 1);
  EXPECT_EQ(badjson.json()["error"]["code"], "ParseError");
  const auto reducible = run({"field", "info", "--field", R"({"kind":"quadext","p":3,"e":1,"modulus":[1,1,1]})"});
  EXPECT_EQ(reducible.code, 1);
  EXPECT_EQ(reducible.json()["error"]["code"], "ReducibleModulus");
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("fixpoints"), std::string::npos);
}

TEST(Cli, SelftestDeterministic) {
  const auto a = run({"selftest"});
  const auto b = run({"selftest"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(a.json()["ok"].get<bool>());
}

}  // namespace
}  // namespace gqt
