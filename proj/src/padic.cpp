#include "lielat/padic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace lielat {
namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

long mulmod(long a, long b, long m) {
  return static_cast<long>(static_cast<__int128>(a) * b % m);
}

long powmod(long base, long e, long m) {
  long result = 1 % m;
  base %= m;
  if (base < 0) base += m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

// Tonelli-Shanks; a must be a nonzero quadratic residue mod p.
long sqrt_mod_p(long a, long p, long non_residue) {
  a %= p;
  if (a < 0) a += p;
  long q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  long m = s;
  long c = powmod(non_residue, q, p);
  long t = powmod(a, q, p);
  long r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    long i = 0;
    long t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    long b = c;
    for (long j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

const PrimeContext& common_context(const PadicScalar& a, const PadicScalar& b) {
  const PrimeContext* ca = a.context();
  const PrimeContext* cb = b.context();
  if (ca != nullptr && cb != nullptr && ca != cb) {
    throw Error(ErrorKind::InvalidInput, "scalars from different prime contexts");
  }
  return ca != nullptr ? *ca : *cb;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  s = trim(s);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw Error(ErrorKind::InvalidInput, "expected an integer, got '" + std::string(s) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw Error(ErrorKind::InvalidInput, "expected an integer, got '" + std::string(s) + "'");
    }
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return mpz_class(digits, 10);
}

}  // namespace

PrimeContext::PrimeContext(long p, int precision) : p_(p), precision_(precision) {
  rho_ = 2;
  while (legendre(rho_, p_) != -1) ++rho_;
  delta_ = static_cast<int>(((p_ - 1) / 2) % 2);
  powers_.reserve(static_cast<std::size_t>(precision_) + 1);
  mpz_class pk = 1;
  for (int k = 0; k <= precision_; ++k) {
    powers_.push_back(pk);
    pk *= p_;
  }
}

const PrimeContext& PrimeContext::get(long p, int precision) {
  if (p == 2) throw Error(ErrorKind::UnsupportedPrime, "p = 2 is not supported");
  if (p < 3 || p > (1L << 31) || !is_prime(p)) {
    throw Error(ErrorKind::InvalidInput, "p must be an odd prime, got " + std::to_string(p));
  }
  if (precision < 4 || precision > 4096) {
    throw Error(ErrorKind::InvalidInput, "precision out of range: " + std::to_string(precision));
  }
  static std::mutex mutex;
  static std::map<std::pair<long, int>, std::unique_ptr<PrimeContext>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = registry[{p, precision}];
  if (!slot) slot.reset(new PrimeContext(p, precision));
  return *slot;
}

mpz_class PrimeContext::pow_p(Valuation k) const {
  if (k < 0) throw Error(ErrorKind::InvalidInput, "negative exponent");
  if (k <= precision_) return powers_[static_cast<std::size_t>(k)];
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(k));
  return r;
}

int legendre(long a, long p) {
  mpz_class aa = a;
  mpz_class pp = p;
  return mpz_legendre(aa.get_mpz_t(), pp.get_mpz_t());
}

PadicScalar PadicScalar::zero(const PrimeContext& ctx) {
  PadicScalar r;
  r.ctx_ = &ctx;
  return r;
}

PadicScalar PadicScalar::from_parts(const mpz_class& unit, Valuation valuation,
                                    const PrimeContext& ctx, int rel) {
  if (rel < 0 || rel > ctx.precision()) rel = ctx.precision();
  if (rel == 0) throw Error(ErrorKind::PrecisionLoss, "no significant digits left");
  PadicScalar r;
  r.ctx_ = &ctx;
  r.valuation_ = valuation;
  r.rel_ = rel;
  mpz_fdiv_r(r.unit_.get_mpz_t(), unit.get_mpz_t(), ctx.modulus(rel).get_mpz_t());
  if (mpz_divisible_ui_p(r.unit_.get_mpz_t(), static_cast<unsigned long>(ctx.p()))) {
    throw Error(ErrorKind::InvalidInput, "unit part divisible by p");
  }
  return r;
}

PadicScalar PadicScalar::from_integer(const mpz_class& n, const PrimeContext& ctx) {
  if (n == 0) return zero(ctx);
  mpz_class u;
  mpz_class p = ctx.p();
  Valuation v = static_cast<Valuation>(mpz_remove(u.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
  return from_parts(u, v, ctx);
}

PadicScalar PadicScalar::from_integer(long n, const PrimeContext& ctx) {
  return from_integer(mpz_class(n), ctx);
}

PadicScalar PadicScalar::from_rational(const mpz_class& num, const mpz_class& den,
                                       const PrimeContext& ctx) {
  if (den == 0) throw Error(ErrorKind::DenominatorZero, "denominator is zero");
  if (num == 0) return zero(ctx);
  mpz_class p = ctx.p();
  mpz_class a, b;
  Valuation va = static_cast<Valuation>(mpz_remove(a.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
  Valuation vb = static_cast<Valuation>(mpz_remove(b.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
  const mpz_class& m = ctx.modulus(ctx.precision());
  mpz_class binv;
  mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t());
  return from_parts(a * binv, va - vb, ctx);
}

PadicScalar PadicScalar::power_of_p(Valuation k, const PrimeContext& ctx) {
  return from_parts(1, k, ctx);
}

PadicScalar PadicScalar::parse(std::string_view text, const PrimeContext& ctx) {
  std::string_view s = trim(text);
  if (s.empty()) throw Error(ErrorKind::InvalidInput, "empty scalar literal");
  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    return from_rational(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)), ctx);
  }
  auto star = s.find('*');
  if (star != std::string_view::npos) {
    std::string_view rest = trim(s.substr(star + 1));
    if (rest.size() < 3 || rest[0] != 'p' || rest[1] != '^') {
      throw Error(ErrorKind::InvalidInput, "expected u*p^s, got '" + std::string(s) + "'");
    }
    mpz_class e = parse_integer(rest.substr(2));
    if (e < 0 || !e.fits_slong_p()) {
      throw Error(ErrorKind::InvalidInput, "exponent must be a non-negative integer");
    }
    PadicScalar u = from_integer(parse_integer(s.substr(0, star)), ctx);
    return u.shifted(e.get_si());
  }
  return from_integer(parse_integer(s), ctx);
}

long PadicScalar::unit_residue() const {
  if (is_zero()) throw Error(ErrorKind::ZeroInput, "zero has no unit part");
  return static_cast<long>(mpz_fdiv_ui(unit_.get_mpz_t(), static_cast<unsigned long>(ctx_->p())));
}

mpz_class PadicScalar::residue(int k) const {
  if (is_zero()) return 0;
  if (valuation_ < 0) throw Error(ErrorKind::InvalidInput, "residue of a non-integral scalar");
  if (valuation_ >= k) return 0;
  if (valuation_ + rel_ < k) throw Error(ErrorKind::PrecisionLoss, "residue beyond known digits");
  mpz_class r = unit_ * ctx_->pow_p(valuation_);
  mpz_class m = ctx_->pow_p(k);
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class PadicScalar::symmetric_unit() const {
  if (is_zero()) return 0;
  const mpz_class& m = ctx_->modulus(rel_);
  mpz_class r = unit_;
  if (2 * r > m) r -= m;
  return r;
}

std::string PadicScalar::to_string() const {
  if (is_zero()) return "0";
  mpz_class u = symmetric_unit();
  if (valuation_ == 0) return u.get_str();
  if (valuation_ < 0) return u.get_str() + "/" + ctx_->pow_p(-valuation_).get_str();
  mpz_class value = u * ctx_->pow_p(valuation_);
  mpz_class bound("1000000000000000000");
  if (abs(value) < bound) return value.get_str();
  return u.get_str() + "*p^" + std::to_string(valuation_);
}

PadicScalar PadicScalar::operator-() const {
  if (is_zero()) return *this;
  PadicScalar r = *this;
  r.unit_ = ctx_->modulus(rel_) - unit_;
  return r;
}

PadicScalar PadicScalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::ZeroInverse, "inverse of zero");
  PadicScalar r = *this;
  r.valuation_ = -valuation_;
  mpz_invert(r.unit_.get_mpz_t(), unit_.get_mpz_t(), ctx_->modulus(rel_).get_mpz_t());
  return r;
}

PadicScalar PadicScalar::shifted(Valuation k) const {
  if (is_zero()) return *this;
  PadicScalar r = *this;
  r.valuation_ += k;
  return r;
}

PadicScalar operator+(const PadicScalar& a, const PadicScalar& b) {
  if (a.is_zero()) return b.context() || !a.context() ? b : PadicScalar::zero(*a.context());
  if (b.is_zero()) return a;
  const PrimeContext& ctx = common_context(a, b);
  const Valuation m = std::min(a.valuation_, b.valuation_);
  const Valuation cap = std::min(a.absolute_precision(), b.absolute_precision());
  const int width = static_cast<int>(cap - m);
  const mpz_class& mod = ctx.modulus(width);
  mpz_class sum = 0;
  if (a.valuation_ - m < width) sum += a.unit_ * ctx.modulus(static_cast<int>(a.valuation_ - m));
  if (b.valuation_ - m < width) sum += b.unit_ * ctx.modulus(static_cast<int>(b.valuation_ - m));
  mpz_fdiv_r(sum.get_mpz_t(), sum.get_mpz_t(), mod.get_mpz_t());
  if (sum == 0) return PadicScalar::zero(ctx);
  mpz_class p = ctx.p();
  PadicScalar r;
  r.ctx_ = &ctx;
  Valuation w = static_cast<Valuation>(mpz_remove(r.unit_.get_mpz_t(), sum.get_mpz_t(), p.get_mpz_t()));
  r.valuation_ = m + w;
  r.rel_ = width - static_cast<int>(w);
  return r;
}

PadicScalar operator-(const PadicScalar& a, const PadicScalar& b) { return a + (-b); }

PadicScalar operator*(const PadicScalar& a, const PadicScalar& b) {
  const PrimeContext& ctx = common_context(a, b);
  if (a.is_zero() || b.is_zero()) return PadicScalar::zero(ctx);
  PadicScalar r;
  r.ctx_ = &ctx;
  r.valuation_ = a.valuation_ + b.valuation_;
  r.rel_ = std::min(a.rel_, b.rel_);
  r.unit_ = a.unit_ * b.unit_;
  mpz_fdiv_r(r.unit_.get_mpz_t(), r.unit_.get_mpz_t(), ctx.modulus(r.rel_).get_mpz_t());
  return r;
}

PadicScalar operator/(const PadicScalar& a, const PadicScalar& b) { return a * b.inverse(); }

bool operator==(const PadicScalar& a, const PadicScalar& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.ctx_->p() != b.ctx_->p()) return false;
  if (a.valuation_ != b.valuation_) return false;
  const int rel = std::min(a.rel_, b.rel_);
  const mpz_class& m = a.ctx_->modulus(rel);
  mpz_class d = a.unit_ - b.unit_;
  return mpz_divisible_p(d.get_mpz_t(), m.get_mpz_t()) != 0;
}

SquareClass square_class(const PadicScalar& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroInput, "square class of zero");
  const long p = x.context()->p();
  return SquareClass{legendre(x.unit_residue(), p) == 1 ? 0 : 1};
}

int hilbert_additive(const PadicScalar& a, const PadicScalar& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::ZeroInput, "Hilbert symbol of zero");
  const int delta = a.context()->delta();
  const int alpha = static_cast<int>(((a.valuation() % 2) + 2) % 2);
  const int beta = static_cast<int>(((b.valuation() % 2) + 2) % 2);
  return (alpha * beta * delta + alpha * square_class(b).chi + beta * square_class(a).chi) % 2;
}

PadicScalar sqrt(const PadicScalar& x) {
  if (x.is_zero()) return x;
  if (x.valuation() % 2 != 0 || square_class(x).chi != 0) {
    throw Error(ErrorKind::PreconditionViolated, "not a square in Q_p: " + x.to_string());
  }
  const PrimeContext& ctx = *x.context();
  const long p = ctx.p();
  const int rel = x.relative_precision();
  mpz_class r = sqrt_mod_p(x.unit_residue(), p, ctx.rho());
  for (int k = 1; k < rel;) {
    k = std::min(2 * k, rel);
    const mpz_class& m = ctx.modulus(k);
    mpz_class f = r * r - x.unit();
    mpz_class d = 2 * r;
    mpz_invert(d.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    r -= f * d;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  }
  return PadicScalar::from_parts(r, x.valuation() / 2, ctx, rel);
}

}  // namespace lielat
