#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "lielat/error.hpp"

namespace lielat {

/// p-adic valuation; kInfinity stands for the valuation of exact zero.
using Valuation = std::int64_t;
inline constexpr Valuation kInfinity = std::numeric_limits<Valuation>::max();

inline constexpr int kDefaultPrecision = 32;

/// Odd prime together with the working precision and the constants every
/// quadratic-form decision depends on. Instances are interned and live for
/// the whole program, so scalars hold plain pointers to them.
class PrimeContext {
 public:
  /// Throws UnsupportedPrime for p = 2 and InvalidInput for non-primes.
  static const PrimeContext& get(long p, int precision = kDefaultPrecision);

  long p() const { return p_; }
  int precision() const { return precision_; }
  /// Smallest positive quadratic non-residue mod p.
  long rho() const { return rho_; }
  /// (p - 1) / 2 mod 2; equals the square class of -1.
  int delta() const { return delta_; }

  /// p^k for 0 <= k <= precision().
  const mpz_class& modulus(int k) const { return powers_.at(static_cast<std::size_t>(k)); }
  mpz_class pow_p(Valuation k) const;

  PrimeContext(const PrimeContext&) = delete;
  PrimeContext& operator=(const PrimeContext&) = delete;

 private:
  PrimeContext(long p, int precision);

  long p_;
  int precision_;
  long rho_;
  int delta_;
  std::vector<mpz_class> powers_;
};

/// Element of Q_p stored as p^valuation * unit, where the unit is known
/// modulo p^relative_precision. Exact zero has valuation kInfinity.
class PadicScalar {
 public:
  PadicScalar() = default;

  static PadicScalar zero(const PrimeContext& ctx);
  static PadicScalar from_integer(const mpz_class& n, const PrimeContext& ctx);
  static PadicScalar from_integer(long n, const PrimeContext& ctx);
  /// Throws DenominatorZero.
  static PadicScalar from_rational(const mpz_class& num, const mpz_class& den,
                                   const PrimeContext& ctx);
  /// unit must be coprime to p; it is reduced mod p^rel.
  static PadicScalar from_parts(const mpz_class& unit, Valuation valuation,
                                const PrimeContext& ctx, int rel = -1);
  static PadicScalar power_of_p(Valuation k, const PrimeContext& ctx);

  /// Literal grammar: integer, "num/den", or "u*p^s".
  static PadicScalar parse(std::string_view text, const PrimeContext& ctx);

  const PrimeContext* context() const { return ctx_; }
  bool is_zero() const { return valuation_ == kInfinity; }
  Valuation valuation() const { return valuation_; }
  /// Unit part in [1, p^rel); zero for exact zero.
  const mpz_class& unit() const { return unit_; }
  int relative_precision() const { return rel_; }
  Valuation absolute_precision() const {
    return is_zero() ? kInfinity : valuation_ + rel_;
  }
  bool is_integral() const { return valuation_ >= 0; }
  bool is_unit() const { return valuation_ == 0; }
  /// Unit part reduced mod p, in [1, p).
  long unit_residue() const;

  /// Integer representative of an integral scalar, in [0, p^k).
  mpz_class residue(int k) const;
  /// Unit lifted to the symmetric range (-p^rel/2, p^rel/2].
  mpz_class symmetric_unit() const;

  std::string to_string() const;

  PadicScalar operator-() const;
  PadicScalar inverse() const;

  friend PadicScalar operator+(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator-(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator*(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator/(const PadicScalar& a, const PadicScalar& b);
  PadicScalar& operator+=(const PadicScalar& b) { return *this = *this + b; }
  PadicScalar& operator-=(const PadicScalar& b) { return *this = *this - b; }
  PadicScalar& operator*=(const PadicScalar& b) { return *this = *this * b; }

  /// Agreement to the common precision of both operands.
  friend bool operator==(const PadicScalar& a, const PadicScalar& b);

  /// Multiply by p^k without touching the unit.
  PadicScalar shifted(Valuation k) const;

 private:
  const PrimeContext* ctx_ = nullptr;
  Valuation valuation_ = kInfinity;
  mpz_class unit_ = 0;
  int rel_ = 0;
};

/// 0 for the square class of 1, 1 for the class of rho.
struct SquareClass {
  int chi = 0;
  friend bool operator==(SquareClass, SquareClass) = default;
};

/// Legendre class of the unit part. Throws ZeroInput.
SquareClass square_class(const PadicScalar& x);

/// Additive Hilbert symbol for odd p, in Z/2Z. Throws ZeroInput.
int hilbert_additive(const PadicScalar& a, const PadicScalar& b);

/// Square root of a square in Q_p (even valuation, unit square mod p).
/// Throws PreconditionViolated otherwise.
PadicScalar sqrt(const PadicScalar& x);

/// Legendre symbol (a/p) in {-1, 0, 1} for machine-sized primes.
int legendre(long a, long p);

}  // namespace lielat
