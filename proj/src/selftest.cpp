#include "lielat/selftest.hpp"

#include <functional>

#include "lielat/classify.hpp"
#include "lielat/random.hpp"
#include "lielat/selfsim.hpp"
#include "lielat/subalgebras.hpp"

namespace lielat {
namespace {

SelftestCheck run_check(const std::string& name, int trials, const std::function<bool(int)>& body) {
  SelftestCheck c{name, trials, 0, {}};
  for (int t = 0; t < trials; ++t) {
    bool ok = false;
    std::string why = "property violated";
    try {
      ok = body(t);
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (!ok) {
      if (c.failures == 0) c.first_failure = "trial " + std::to_string(t) + ": " + why;
      ++c.failures;
    }
  }
  return c;
}

constexpr long kPrimes[] = {3, 5, 7};

}  // namespace

std::vector<SelftestCheck> run_selftest(std::uint64_t seed, int trials) {
  Rng rng(seed);
  std::vector<SelftestCheck> out;

  out.push_back(run_check("canonical form constant on congruence orbits", trials, [&](int t) {
    const PrimeContext& ctx = PrimeContext::get(kPrimes[t % 3]);
    const Mat A = random_symmetric_nondegenerate(rng, ctx);
    const Mat V = random_unimodular(rng, ctx);
    const Mat B = (V.transpose() * A * V).scaled(random_unit(rng, ctx));
    return canonical_form(Algebra(A)).form == canonical_form(Algebra(B)).form;
  }));

  out.push_back(run_check("eta agrees across both computations", trials, [&](int t) {
    const PrimeContext& ctx = PrimeContext::get(kPrimes[t % 3]);
    const EtaBreakdown e = eta(random_symmetric_nondegenerate(rng, ctx));
    return e.eta == e.eta_formula;
  }));

  out.push_back(run_check("Jacobi identity iff symmetric (non-degenerate)", trials, [&](int t) {
    const PrimeContext& ctx = PrimeContext::get(kPrimes[t % 3]);
    Mat A = random_integral(rng, ctx, 3, 3);
    if (det(A).is_zero()) return true;
    const Algebra alg(A);
    return is_lie(alg) == A.is_symmetric();
  }));

  out.push_back(run_check("commutator index is the square of the index", trials, [&](int t) {
    const PrimeContext& ctx = PrimeContext::get(kPrimes[t % 3]);
    const Mat A = random_symmetric_nondegenerate(rng, ctx);
    const Mat U = random_subalgebra(rng, A);
    const IndexPair ip = index_and_commutator_index(Algebra(A), U);
    return ip.commutator_index == 2 * ip.index;
  }));

  out.push_back(run_check("Hermite form invariant under unimodular column change", trials, [&](int t) {
    const PrimeContext& ctx = PrimeContext::get(kPrimes[t % 3]);
    const Mat M = random_integral(rng, ctx, 3, 3);
    return hnf_columns(M).H == hnf_columns(M * random_unimodular(rng, ctx)).H;
  }));

  const auto forms = enumerate_canonical_forms(3, 2);
  out.push_back(run_check("index-p decision coherent with constructions and obstructions",
                          static_cast<int>(forms.size()), [&](int t) {
    const PrimeContext& ctx = PrimeContext::get(3);
    const CanonicalForm& cf = forms[static_cast<std::size_t>(t)];
    const Algebra L(canonical_matrix(cf, ctx));
    if (decide_index_p(cf) == Decision::Yes) {
      const SimpleVe s = construct_simple_ve(L);
      return is_morphism(s.ve) && regularity_check(s.ve, 4).regular &&
             !invariant_ideal_search(s.ve, 3, 1).has_value();
    }
    if (!nss_condition(L.matrix())) return false;
    for (const auto& r : enumerate_index_p(L)) {
      if (r.is_subalgebra && !key_identity_check(L, r.xi)) return false;
    }
    return true;
  }));
  return out;
}

}  // namespace lielat
