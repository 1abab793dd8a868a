#include "doctest.h"

#include <sstream>

#include "schurnorm/cli.hpp"
#include "schurnorm/json_io.hpp"
#include "schurnorm/symmetry.hpp"

using namespace schurnorm;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SCHURNORM_TEST_DATA) + "/" + name; }

json_io::Json parse(const Outcome& o) { return json_io::parse_document(o.out); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help and usage") {
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"norm", "--help"}).code == 0);
  CHECK(call({}).code == cli::kExitInvalidInput);
  CHECK(call({"bogus"}).code == cli::kExitInvalidInput);
  CHECK(call({"norm"}).code == cli::kExitInvalidInput);
}

TEST_CASE("norm") {
  const Outcome o = call({"norm", "--matrix", data("fourthree.json")});
  REQUIRE(o.code == 0);
  const auto j = parse(o);
  CHECK(j["value"].get<double>() == doctest::Approx(4.0).epsilon(1e-8));
  const auto report = json_io::norm_report_from_json(j);
  CHECK(report.upper.x.size() == 2);
  CHECK(call({"norm", "--matrix", data("fourthree.json"), "--tol", "1e-10"}).code == cli::kExitInvalidInput);
  CHECK(call({"norm", "--matrix", data("missing.json")}).code == cli::kExitInvalidInput);
  CHECK(call({"norm", "--matrix", data("fourthree.json")}).out == o.out);
}

TEST_CASE("malformed input reports position") {
  const Outcome o = call({"norm", "--matrix", data("malformed.json")});
  CHECK(o.code == cli::kExitInvalidInput);
  CHECK(o.err.find("malformed.json:2:") != std::string::npos);
}

TEST_CASE("decompose") {
  const Outcome opt = call({"decompose", "--pattern", data("full2x2.json"), "--optimal"});
  REQUIRE(opt.code == 0);
  CHECK(parse(opt)["m"] == 1);
  CHECK(parse(opt)["decomposition"]["kind"] == "decomposition");

  const Outcome cut = call({"decompose", "--pattern", data("full2x2.json"), "--row-bound", "0", "--col-bound", "0"});
  REQUIRE(cut.code == 0);
  const auto c = json_io::cut_from_json(parse(cut));
  CHECK(c.rows.size() == 1);
  CHECK(c.cols.size() == 1);

  CHECK(call({"decompose", "--pattern", data("full2x2.json")}).code == cli::kExitInvalidInput);
}

TEST_CASE("bound-interval") {
  const Outcome o = call({"bound-interval", "--matrix", data("ones4.json")});
  REQUIRE(o.code == 0);
  CHECK(o.out.find("1.41421356237") != std::string::npos);
}

TEST_CASE("symmetric") {
  const Outcome o = call({"symmetric", "--action", data("cycle5.json"), "--coeffs", data("cycle5_coeffs.json")});
  REQUIRE(o.code == 0);
  CHECK(parse(o)["norm"].get<double>() == doctest::Approx(symmetry::cyclic_example_norm(5)).epsilon(1e-10));
  CHECK(parse(o)["orbits"].get<int>() == 5);
}

TEST_CASE("kneser") {
  const Outcome o = call({"kneser", "--n", "2", "--exact"});
  REQUIRE(o.code == 0);
  const auto j = parse(o);
  CHECK(j["norm"]["num"] == "8");
  CHECK(j["norm"]["den"] == "5");
  CHECK(j["vertices"] == 10);
  const Outcome f = call({"kneser", "--n", "3"});
  CHECK(parse(f)["norm"].get<double>() == doctest::Approx(64.0 / 35.0));
  CHECK(call({"kneser", "--n", "0"}).code == cli::kExitInvalidInput);
}

TEST_CASE("johnson, hankel, toeplitz, flat-signs, verify-scheme") {
  const Outcome j = call({"johnson", "--v", "5", "--n", "2", "--i", "0"});
  REQUIRE(j.code == 0);
  CHECK(parse(j)["degree"] == 3);

  const Outcome h = call({"hankel", "--set", "8..16", "--grid", "32"});
  REQUIRE(h.code == 0);
  CHECK(parse(h)["m"] == 4);
  CHECK(call({"hankel", "--set", "8..16", "--grid", "8"}).code == cli::kExitInvalidInput);

  const Outcome t = call({"toeplitz", "--set", "1,-1", "--l2", "0:3"});
  REQUIRE(t.code == 0);
  CHECK(parse(t)["l2_interval"][1].get<double>() == doctest::Approx(3.0));

  const Outcome f = call({"flat-signs", "--set", "0..7", "--trials", "20000", "--seed", "1"});
  REQUIRE(f.code == 0);
  CHECK(parse(f)["sup_norm"].get<double>() == doctest::Approx(3.64503125981));
  CHECK(call({"flat-signs", "--set", "0..7", "--trials", "0"}).code == cli::kExitInvalidInput);

  const Outcome v = call({"verify-scheme", "--v", "5", "--n", "2"});
  REQUIRE(v.code == 0);
  CHECK(parse(v)["violations"].empty());
}

}  // TEST_SUITE
