#include "lielat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "lielat/catalog.hpp"
#include "lielat/classify.hpp"
#include "lielat/selfsim.hpp"
#include "lielat/selftest.hpp"
#include "lielat/subalgebras.hpp"

namespace lielat::cli {
namespace {

using nlohmann::json;

struct Options {
  long prime = 0;
  int precision = kDefaultPrecision;
  int search_bound = 6;
  int depth = 8;
  bool pretty = false;
  std::string matrix;
  std::string domain;
  std::string phi;
  std::string name;
  std::string params;
  std::string s_list;
  std::string endo_mode;
  long n = 0;
  std::optional<long> k;
  std::uint64_t seed = 1;
  int trials = 20;
};

json valuation_json(Valuation v) {
  if (v == kInfinity) return "inf";
  return v;
}

json mat_json(const Mat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

json eps_json(const std::optional<int>& e) { return e ? json(*e) : json(nullptr); }

json form_json(const CanonicalForm& cf, const PrimeContext& ctx) {
  const Mat C = canonical_matrix(cf, ctx);
  const int e = eta(C).eta;
  return json{{"family", cf.family},
              {"s", {cf.s[0], cf.s[1], cf.s[2]}},
              {"eps", {eps_json(cf.eps1), eps_json(cf.eps2)}},
              {"eta", e},
              {"qp_type", e == 0 ? "sl2" : "sl1d"},
              {"canonical_matrix", mat_json(C)},
              {"label", cf.to_string()}};
}

std::vector<Valuation> parse_list(const std::string& text) {
  std::vector<Valuation> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item == "inf") {
      out.push_back(kInfinity);
      continue;
    }
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "expected an integer list, got '" + text + "'");
    }
  }
  return out;
}

Mat require_matrix(const std::string& text, const char* flag, const PrimeContext& ctx) {
  if (text.empty()) throw Error(ErrorKind::InvalidInput, std::string("missing ") + flag);
  return Mat::parse(text, ctx);
}

json ve_json(const VirtualEndomorphism& ve) {
  return json{{"domain", mat_json(ve.domain_U)}, {"phi", mat_json(ve.phi)}, {"index_exponent", ve.index_exponent()}};
}

json simplicity_json(const VirtualEndomorphism& ve, const Options& o) {
  const RegularityResult reg = regularity_check(ve, o.depth);
  const auto ideal = invariant_ideal_search(ve, o.search_bound);
  json steps = json::array();
  for (Valuation s : reg.index_steps) steps.push_back(s);
  return json{{"is_morphism", is_morphism(ve)},
              {"search_bound", o.search_bound},
              {"invariant_ideal", ideal ? mat_json(*ideal) : json(nullptr)},
              {"depth", o.depth},
              {"regular", reg.regular},
              {"escape", reg.escape},
              {"index_steps", steps},
              {"note", "bounded evidence only: the search covers ideals of index up to p^search_bound"}};
}

VirtualEndomorphism to_original(const VirtualEndomorphism& ve, const Mat& Uc, const Algebra& alg) {
  return VirtualEndomorphism{BracketTable::from_algebra(alg), Uc * ve.domain_U, Uc * ve.phi};
}

json selfsim_json(const Algebra& alg, const Options& o) {
  const PrimeContext& ctx = alg.context();
  const CanonicalForm cf = canonical_form(alg).form;
  const SelfSimReport r = sigma_bounds(cf, ctx);
  json j{{"canonical", form_json(cf, ctx)},
         {"index_p_self_similar", r.index_p_self_similar ? "yes" : "no"},
         {"sigma_lower", r.sigma_lower},
         {"sigma_upper", r.sigma_upper ? json(*r.sigma_upper) : json("CONJECTURED_INFINITE")},
         {"sigma_units", "exponents of p"},
         {"table_row", r.table_row > 0 ? json(r.table_row) : json(nullptr)},
         {"conjecture_flag", r.conjecture_flag},
         {"obstruction_note", r.obstruction_note ? json(*r.obstruction_note) : json(nullptr)}};
  if (r.index_p_self_similar) {
    j["statement"] = "self-similar of index p";
  } else if (r.conjecture_flag) {
    j["statement"] = "not self-similar of index p; conjecturally not self-similar";
  } else {
    j["statement"] = "not self-similar of index p";
  }
  if (r.witness_exponents) {
    const auto& k = *r.witness_exponents;
    j["witness_exponents"] = {k[0], k[1], k[2]};
  }
  if (r.certificate) {
    const Mat Uc = canonical_basis(alg);
    const VirtualEndomorphism ve = to_original(*r.certificate, Uc, alg);
    j["certificate"] = ve_json(ve);
    j["certificate"]["coordinates"] = "input basis";
    j["certificate"]["checks"] = simplicity_json(ve, o);
  }
  return j;
}

json group_json(const GroupReport& g) {
  return json{{"group_name", g.group_name.empty() ? json(nullptr) : json(g.group_name)},
              {"residually_nilpotent", g.residually_nilpotent},
              {"s1", g.s1},
              {"naming_applicable", g.naming_applicable},
              {"index_transfer_note", g.index_transfer_note},
              {"statements", g.statements},
              {"conjecture_flag", g.conjecture_flag}};
}

json cmd_classify(const Options& o, const PrimeContext& ctx) {
  const Algebra alg(require_matrix(o.matrix, "--matrix", ctx));
  return form_json(canonical_form(alg).form, ctx);
}

json cmd_eta(const Options& o, const PrimeContext& ctx) {
  const Mat A = require_matrix(o.matrix, "--matrix", ctx);
  const EtaBreakdown e = eta(A);
  return json{{"discriminant_valuation_parity", e.discriminant_valuation_parity},
              {"epsilon_invariant", e.epsilon_invariant},
              {"eta", e.eta},
              {"eta_formula", e.eta_formula},
              {"qp_type", e.eta == 0 ? "sl2" : "sl1d"}};
}

json cmd_subalgebras(const Options& o, const PrimeContext& ctx) {
  const Algebra alg(require_matrix(o.matrix, "--matrix", ctx));
  json records = json::array();
  for (const auto& r : enumerate_index_p(alg)) {
    json rec{{"xi", r.xi.to_string()},
             {"class", r.xi.class_index()},
             {"U", mat_json(r.U)},
             {"is_subalgebra", r.is_subalgebra},
             {"B", mat_json(r.B)},
             {"s", nullptr}};
    if (r.sub_s_invariants) {
      const auto& s = r.sub_s_invariants->s;
      rec["s"] = {valuation_json(s[0]), valuation_json(s[1]), valuation_json(s[2])};
    }
    records.push_back(rec);
  }
  return json{{"prime", ctx.p()}, {"count", records.size()}, {"records", records}};
}

json cmd_endo(const Options& o, const PrimeContext& ctx) {
  const Algebra alg(require_matrix(o.matrix, "--matrix", ctx));
  VirtualEndomorphism ve{BracketTable::from_algebra(alg), require_matrix(o.domain, "--domain", ctx),
                         require_matrix(o.phi, "--phi", ctx)};
  if (ve.domain_U.rows() != 3 || ve.domain_U.cols() != 3 || ve.phi.rows() != 3 || ve.phi.cols() != 3) {
    throw Error(ErrorKind::InvalidInput, "domain and phi must be 3x3");
  }
  if (!ve.domain_U.is_integral() || !ve.phi.is_integral()) {
    throw Error(ErrorKind::InvalidInput, "domain and phi must have integral entries");
  }
  if (det(ve.domain_U).is_zero()) throw Error(ErrorKind::Degenerate, "domain is not of full rank");
  if (o.endo_mode == "check") {
    return json{{"is_morphism", is_morphism(ve)}, {"index_exponent", ve.index_exponent()}};
  }
  if (o.endo_mode == "chain") {
    json chain = json::array();
    for (const Mat& D : domain_chain(ve, o.depth)) chain.push_back(mat_json(D));
    const RegularityResult reg = regularity_check(ve, o.depth);
    json steps = json::array();
    for (Valuation s : reg.index_steps) steps.push_back(s);
    return json{{"depth", o.depth}, {"chain", chain}, {"index_steps", steps}, {"regular", reg.regular}, {"escape", reg.escape}};
  }
  if (!is_morphism(ve)) throw Error(ErrorKind::PreconditionViolated, "phi is not an algebra morphism");
  const auto ideal = invariant_ideal_search(ve, o.search_bound);
  return json{{"search_bound", o.search_bound}, {"invariant_ideal", ideal ? mat_json(*ideal) : json(nullptr)}};
}

json cmd_lcs(const Options& o) {
  const auto s = parse_list(o.s_list);
  if (s.size() != 3) throw Error(ErrorKind::InvalidInput, "--s needs three comma-separated valuations");
  if (o.n < 0) throw Error(ErrorKind::InvalidInput, "--n must be >= 0");
  const auto e = lcs_exponents({s[0], s[1], s[2]}, o.n);
  return json{{"n", o.n}, {"exponents", {valuation_json(e[0]), valuation_json(e[1]), valuation_json(e[2])}}};
}

json full_report(const Algebra& alg, const Options& o) {
  const PrimeContext& ctx = alg.context();
  const EtaBreakdown e = eta(alg);
  json j{{"prime", ctx.p()},
         {"rho", ctx.rho()},
         {"structure_matrix", mat_json(alg.matrix())},
         {"canonical", form_json(canonical_form(alg).form, ctx)},
         {"eta", {{"discriminant_valuation_parity", e.discriminant_valuation_parity},
                  {"epsilon_invariant", e.epsilon_invariant},
                  {"eta", e.eta}}},
         {"qp_type", to_string(qp_type(alg))},
         {"self_similarity", selfsim_json(alg, o)},
         {"group_report", group_json(group_report(alg))}};
  return j;
}

json cmd_named(const Options& o, const PrimeContext& ctx) {
  std::vector<Valuation> params;
  const std::string& name = o.name;
  if (name == "sl2_congruence" || name == "gamma_sl2_sylow" || name == "sl1_congruence") {
    if (!o.k) throw Error(ErrorKind::InvalidParameters, name + " needs --k");
    params = {*o.k};
  } else if (name == "dim2") {
    params = parse_list(o.s_list.empty() ? "inf" : o.s_list);
  } else if (!o.params.empty()) {
    params = parse_list(o.params);
  }
  const NamedLattice named = make_named(name, params);
  if (!named.is_three_dimensional()) {
    const Valuation k = o.k.value_or(1);
    const int dim = named.kind == NamedKind::Dim1 ? 1 : 2;
    const Valuation s = dim == 2 ? params[0] : kInfinity;
    const VirtualEndomorphism ve = lowdim_simple_ve(dim, s, k, ctx);
    json j{{"name", named.name()}, {"dim", dim}, {"ve", ve_json(ve)}};
    j["checks"] = simplicity_json(ve, o);
    return j;
  }
  json j = full_report(named_matrix(named, ctx), o);
  j["name"] = named.name();
  return j;
}

json cmd_report(const Options& o, const PrimeContext& ctx) {
  return full_report(Algebra(require_matrix(o.matrix, "--matrix", ctx)), o);
}

json cmd_selftest(const Options& o, bool& passed) {
  json checks = json::array();
  passed = true;
  for (const auto& c : run_selftest(o.seed, o.trials)) {
    checks.push_back(json{{"name", c.name}, {"trials", c.trials}, {"failures", c.failures},
                          {"first_failure", c.first_failure.empty() ? json(nullptr) : json(c.first_failure)}});
    if (c.failures > 0) passed = false;
  }
  return json{{"seed", o.seed}, {"passed", passed}, {"checks", checks}};
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message, int code) {
  err << json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << "\n";
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PrecisionLoss: return kExitPrecisionLoss;
    case ErrorKind::UnsupportedPrime: return kExitUnsupportedPrime;
    case ErrorKind::NotLie:
    case ErrorKind::Degenerate:
    case ErrorKind::NotSubalgebra:
    case ErrorKind::PreconditionViolated:
    case ErrorKind::NotIndexPSelfSimilar:
    case ErrorKind::NotResiduallyNilpotent:
    case ErrorKind::NotAnIdeal: return kExitPrecondition;
    case ErrorKind::PathDisagreement: return kExitFailure;
    default: return kExitInvalidInput;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Classification and self-similarity of 3-dimensional p-adic Lie lattices", "lielat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--prime", o.prime, "odd prime p");
  app.add_option("--precision", o.precision, "working precision in p-adic digits (>= 8)");
  app.add_option("--search-bound", o.search_bound, "invariant-ideal search bound K (>= 1)");
  app.add_option("--depth", o.depth, "domain chain depth");
  auto* json_flag = app.add_flag("--json", "compact JSON output (default)");
  app.add_flag("--pretty", o.pretty, "indented JSON output");
  (void)json_flag;

  auto* classify = app.add_subcommand("classify", "canonical form of a Lie lattice");
  classify->add_option("--matrix", o.matrix, "structure matrix literal")->required();
  auto* eta_cmd = app.add_subcommand("eta", "eta invariant of a symmetric matrix over Q_p");
  eta_cmd->add_option("--matrix", o.matrix, "symmetric matrix literal")->required();
  auto* selfsim = app.add_subcommand("selfsim", "self-similarity report");
  selfsim->add_option("--matrix", o.matrix, "structure matrix literal")->required();
  auto* subalgebras = app.add_subcommand("subalgebras", "index-p submodules and subalgebras");
  subalgebras->add_option("--matrix", o.matrix, "structure matrix literal")->required();
  auto* endo = app.add_subcommand("endo", "check, chain or search a virtual endomorphism");
  endo->add_option("mode", o.endo_mode, "check | chain | search")->required()->check(CLI::IsMember({"check", "chain", "search"}));
  endo->add_option("--matrix", o.matrix, "structure matrix literal")->required();
  endo->add_option("--domain", o.domain, "domain basis matrix literal (columns)")->required();
  endo->add_option("--phi", o.phi, "images of the domain basis (columns)")->required();
  auto* lcs = app.add_subcommand("lcs", "lower central series exponents");
  lcs->add_option("--s", o.s_list, "well-diagonalized valuations, e.g. 0,1,1")->required();
  lcs->add_option("--n", o.n, "term index")->required();
  auto* named = app.add_subcommand("named", "named lattice report");
  named->add_option("name", o.name, "lattice name")->required();
  named->add_option("--k", o.k, "family parameter or index exponent");
  named->add_option("--params", o.params, "comma-separated parameters for L1..L4");
  named->add_option("--s", o.s_list, "s for dim2 (integer or inf)");
  auto* report = app.add_subcommand("report", "full JSON report");
  report->add_option("--matrix", o.matrix, "structure matrix literal")->required();
  auto* selftest = app.add_subcommand("selftest", "randomized property checks");
  selftest->add_option("--seed", o.seed, "random seed");
  selftest->add_option("--trials", o.trials, "trials per property");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "InvalidInput", e.what(), kExitInvalidInput);
    return kExitInvalidInput;
  }

  try {
    json result;
    int code = kExitOk;
    if (selftest->parsed()) {
      bool passed = false;
      result = cmd_selftest(o, passed);
      code = passed ? kExitOk : kExitFailure;
    } else if (lcs->parsed()) {
      result = cmd_lcs(o);
    } else {
      if (o.prime == 0) throw Error(ErrorKind::InvalidInput, "--prime is required");
      if (o.precision < 8) throw Error(ErrorKind::InvalidInput, "--precision must be >= 8");
      if (o.search_bound < 1) throw Error(ErrorKind::InvalidInput, "--search-bound must be >= 1");
      if (o.depth < 0) throw Error(ErrorKind::InvalidInput, "--depth must be >= 0");
      const PrimeContext& ctx = PrimeContext::get(o.prime, o.precision);
      if (classify->parsed()) {
        result = cmd_classify(o, ctx);
      } else if (eta_cmd->parsed()) {
        result = cmd_eta(o, ctx);
      } else if (selfsim->parsed()) {
        result = selfsim_json(Algebra(require_matrix(o.matrix, "--matrix", ctx)), o);
      } else if (subalgebras->parsed()) {
        result = cmd_subalgebras(o, ctx);
      } else if (endo->parsed()) {
        result = cmd_endo(o, ctx);
      } else if (named->parsed()) {
        result = cmd_named(o, ctx);
      } else if (report->parsed()) {
        result = cmd_report(o, ctx);
      }
    }
    out << result.dump(o.pretty ? 2 : -1) << "\n";
    return code;
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    emit_error(err, to_string(e.kind()), e.what(), code);
    return code;
  } catch (const std::exception& e) {
    emit_error(err, "InternalError", e.what(), kExitFailure);
    return kExitFailure;
  }
}

}  // namespace lielat::cli
