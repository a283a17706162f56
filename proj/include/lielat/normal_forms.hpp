#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "lielat/padic.hpp"

namespace lielat {

/// Dense row-major matrix of p-adic scalars sharing one PrimeContext.
class Mat {
 public:
  Mat() = default;
  Mat(const PrimeContext& ctx, int rows, int cols);

  static Mat identity(const PrimeContext& ctx, int n);
  static Mat diagonal(const std::vector<PadicScalar>& entries);
  static Mat from_integers(const PrimeContext& ctx, int rows, int cols,
                           std::initializer_list<long> entries);
  /// "1,0,0;0,0,2;0,2,0": rows separated by ';', entries by ','.
  static Mat parse(std::string_view text, const PrimeContext& ctx);

  const PrimeContext& context() const { return *ctx_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  PadicScalar& operator()(int r, int c) { return data_[index(r, c)]; }
  const PadicScalar& operator()(int r, int c) const { return data_[index(r, c)]; }

  Mat transpose() const;
  Mat column(int c) const;
  Mat scaled(const PadicScalar& s) const;
  /// Columns of this followed by columns of other.
  Mat hconcat(const Mat& other) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_diagonal() const;
  /// All entries have valuation >= 0.
  bool is_integral() const;
  Valuation min_valuation() const;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  /// row dst += c * row src
  void add_row_multiple(int dst, int src, const PadicScalar& c);
  /// col dst += c * col src
  void add_col_multiple(int dst, int src, const PadicScalar& c);
  void scale_row(int r, const PadicScalar& c);
  void scale_col(int c, const PadicScalar& s);

  std::string to_string() const;

  friend bool operator==(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  const PrimeContext* ctx_ = nullptr;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<PadicScalar> data_;
};

PadicScalar det(const Mat& m);
Mat adjugate(const Mat& m);
/// Inverse over Q_p. Throws Degenerate.
Mat inverse(const Mat& m);

struct HermiteForm {
  /// Square, column-reduced: diagonal entries p^{d_i}, entries above a
  /// pivot reduced to [0, p^{d_i}), zero columns trailing.
  Mat H;
  int rank = 0;
};

/// Column Hermite form of the Z_p-span of M's columns.
HermiteForm hnf_columns(const Mat& M);

struct SmithForm {
  /// Ascending; kInfinity for zero divisors.
  std::vector<Valuation> divisors;
  Mat P;
  Mat Q;
};

/// P * M * Q = diag(p^{d_0}, ...). Accepts entries of negative valuation.
SmithForm snf(const Mat& M);

struct Diagonalization {
  Mat D;
  /// Unimodular, with V^T * A * V = D.
  Mat V;
};

/// Congruence diagonalization of a non-degenerate symmetric matrix, sorted
/// by ascending valuation.
Diagonalization congruent_diagonalize(const Mat& A);

/// Move the unit factor u from diagonal entry i to entry j:
/// D'_ii = D_ii / u, D'_jj = D_jj * u, with V^T * D * V = D'.
Diagonalization cassels_move(const Mat& D, int i, int j, const PadicScalar& u);

/// True iff every column of inner lies in the Z_p-span of outer's columns.
/// outer must be square and non-singular.
bool column_span_contains(const Mat& outer, const Mat& inner);

/// Valuation of det(U) for a non-singular U.
Valuation index_exponent(const Mat& U);

}  // namespace lielat
