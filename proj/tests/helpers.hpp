#pragma once

#include "lielat/normal_forms.hpp"

namespace testing_helpers {

inline lielat::Mat M(const lielat::PrimeContext& ctx, const char* text) {
  return lielat::Mat::parse(text, ctx);
}

inline lielat::PadicScalar S(long v, const lielat::PrimeContext& ctx) {
  return lielat::PadicScalar::from_integer(v, ctx);
}

inline lielat::Mat diag(const lielat::PrimeContext& ctx, std::initializer_list<long> v) {
  std::vector<lielat::PadicScalar> d;
  for (long x : v) d.push_back(lielat::PadicScalar::from_integer(x, ctx));
  return lielat::Mat::diagonal(d);
}

}  // namespace testing_helpers
