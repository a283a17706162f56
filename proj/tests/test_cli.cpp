#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "lielat/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = lielat::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("classify sl2") {
  const Result r = run({"classify", "--prime", "5", "--matrix", "1,0,0;0,0,2;0,2,0"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["family"] == 4);
  CHECK(j["s"] == json::array({0, 0, 0}));
  CHECK(j["eta"] == 0);
  CHECK(j["qp_type"] == "sl2");
  CHECK(j["eps"] == json::array({nullptr, nullptr}));
}

TEST_CASE("global flags may precede the subcommand") {
  const Result r = run({"--prime", "5", "classify", "--matrix", "1,0,0;0,0,2;0,2,0"});
  CHECK(r.code == 0);
}

TEST_CASE("selfsim of diag(1,-rho,p^2) at p = 5 pins sigma to p^2") {
  const Result r = run({"selfsim", "--prime", "5", "--matrix", "1,0,0;0,-2,0;0,0,25"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["sigma_lower"] == 2);
  CHECK(j["sigma_upper"] == 2);
  CHECK(j["certificate"]["checks"]["is_morphism"] == true);
}

TEST_CASE("named sl1_delta at p = 7") {
  const Result r = run({"named", "sl1_delta", "--prime", "7"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["rho"] == 3);
  CHECK(j["canonical"]["canonical_matrix"] ==
        json::array({json::array({"1", "0", "0"}), json::array({"0", "-3", "0"}), json::array({"0", "0", "7"})}));
  CHECK(j["eta"]["eta"] == 1);
  CHECK(j["self_similarity"]["statement"].get<std::string>().find("not self-similar of index p") != std::string::npos);
  CHECK(j["self_similarity"]["conjecture_flag"] == true);
  CHECK(j["self_similarity"]["sigma_upper"] == "CONJECTURED_INFINITE");
}

TEST_CASE("emitted canonical matrices re-classify to the same form") {
  for (const char* m : {"1,0,0;0,0,2;0,2,0", "2,1,0;1,3,0;0,0,5", "5,0,0;0,-10,0;0,0,125", "0,1,0;1,0,0;0,0,25"}) {
    const json a = json::parse(run({"classify", "--prime", "5", "--matrix", m}).out);
    std::string literal;
    for (const auto& row : a["canonical_matrix"]) {
      if (!literal.empty()) literal += ";";
      for (std::size_t c = 0; c < row.size(); ++c) literal += (c ? "," : "") + row[c].get<std::string>();
    }
    const json b = json::parse(run({"classify", "--prime", "5", "--matrix", literal}).out);
    CHECK(a["label"] == b["label"]);
  }
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"report", "--prime", "3", "--matrix", "1,0,0;0,3,0;0,0,-3"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("exit codes") {
  CHECK(run({"classify", "--prime", "2", "--matrix", "1,0,0;0,1,0;0,0,1"}).code == 4);
  CHECK(run({"classify", "--prime", "3", "--matrix", "0,1,0;0,0,0;0,0,1"}).code == 5);
  CHECK(run({"classify", "--prime", "3", "--matrix", "1,0;0,1"}).code == 2);
  CHECK(run({"classify", "--prime", "3", "--matrix", "x"}).code == 2);
  CHECK(run({"classify", "--prime", "3", "--precision", "4", "--matrix", "1,0,0;0,1,0;0,0,1"}).code == 2);
  CHECK(run({"classify", "--prime", "3", "--precision", "8", "--matrix", "1,0,0;0,1,0;0,0,6561"}).code == 3);
  CHECK(run({"classify", "--prime", "3", "--matrix", "1,0,0;0,1,0;0,0,0"}).code == 5);
  CHECK(run({"selfsim", "--prime", "3", "--search-bound", "0", "--matrix", "1,0,0;0,1,0;0,0,1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("errors are reported as JSON on stderr") {
  const Result r = run({"classify", "--prime", "2", "--matrix", "1,0,0;0,1,0;0,0,1"});
  CHECK(r.out.empty());
  const json e = json::parse(r.err);
  CHECK(e["error"] == "UnsupportedPrime");
  CHECK(e["exit_code"] == 4);
}

TEST_CASE("eta subcommand") {
  const json j = json::parse(run({"eta", "--prime", "5", "--matrix", "1,0,0;0,-2,0;0,0,5"}).out);
  CHECK(j["eta"] == 1);
  CHECK(j["qp_type"] == "sl1d");
}

TEST_CASE("subalgebras subcommand") {
  const json j = json::parse(run({"subalgebras", "--prime", "3", "--matrix", "3,0,0;0,3,0;0,0,3"}).out);
  CHECK(j["count"] == 13);
  for (const auto& rec : j["records"]) CHECK(rec["is_subalgebra"] == true);
}

TEST_CASE("lcs subcommand") {
  const json j = json::parse(run({"lcs", "--s", "0,1,1", "--n", "2"}).out);
  CHECK(j["exponents"] == json::array({1, 1, 1}));
  CHECK(run({"lcs", "--s", "0,1", "--n", "2"}).code == 2);
}

TEST_CASE("endo subcommand") {
  const std::vector<std::string> base{"--prime", "3", "--matrix", "3,0,0;0,3,0;0,0,3",
                                      "--domain", "1,0,0;0,1,0;0,0,1", "--phi", "1,0,0;0,1,0;0,0,1"};
  std::vector<std::string> check{"endo", "check"};
  check.insert(check.end(), base.begin(), base.end());
  CHECK(json::parse(run(check).out)["is_morphism"] == true);
  std::vector<std::string> search{"endo", "search", "--search-bound", "2"};
  search.insert(search.end(), base.begin(), base.end());
  CHECK_FALSE(json::parse(run(search).out)["invariant_ideal"].is_null());
  std::vector<std::string> chain{"endo", "chain", "--depth", "3"};
  chain.insert(chain.end(), base.begin(), base.end());
  CHECK(json::parse(run(chain).out)["chain"].size() == 4);
}

TEST_CASE("named low-dimensional lattices") {
  const json j = json::parse(run({"named", "dim2", "--prime", "3", "--k", "1"}).out);
  CHECK(j["dim"] == 2);
  CHECK(j["checks"]["invariant_ideal"].is_null());
  CHECK(run({"named", "gamma_sl2_sylow", "--prime", "3"}).code == 2);
}

TEST_CASE("selftest subcommand") {
  const Result r = run({"selftest", "--seed", "3", "--trials", "5"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["passed"] == true);
}
