#include "lielat/normal_forms.hpp"

#include <algorithm>
#include <numeric>

namespace lielat {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

PadicScalar unit_part(const PadicScalar& x) {
  return PadicScalar::from_parts(x.unit(), 0, *x.context(), x.relative_precision());
}

void require_square(const Mat& m, const char* what) {
  if (!m.is_square()) throw Error(ErrorKind::InvalidInput, std::string(what) + ": matrix must be square");
}

}  // namespace

Mat::Mat(const PrimeContext& ctx, int rows, int cols)
    : ctx_(&ctx), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows * cols), PadicScalar::zero(ctx)) {
  if (rows < 0 || cols < 0) throw Error(ErrorKind::InvalidInput, "negative matrix dimension");
}

Mat Mat::identity(const PrimeContext& ctx, int n) {
  Mat m(ctx, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = PadicScalar::from_integer(1, ctx);
  return m;
}

Mat Mat::diagonal(const std::vector<PadicScalar>& entries) {
  if (entries.empty()) throw Error(ErrorKind::InvalidInput, "empty diagonal");
  const PrimeContext* ctx = nullptr;
  for (const auto& e : entries) {
    if (e.context() != nullptr) ctx = e.context();
  }
  if (ctx == nullptr) throw Error(ErrorKind::InvalidInput, "diagonal entries carry no prime context");
  const int n = static_cast<int>(entries.size());
  Mat m(*ctx, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = entries[static_cast<std::size_t>(i)].is_zero() ? PadicScalar::zero(*ctx) : entries[static_cast<std::size_t>(i)];
  return m;
}

Mat Mat::from_integers(const PrimeContext& ctx, int rows, int cols,
                       std::initializer_list<long> entries) {
  if (static_cast<int>(entries.size()) != rows * cols) {
    throw Error(ErrorKind::InvalidInput, "entry count does not match dimensions");
  }
  Mat m(ctx, rows, cols);
  auto it = entries.begin();
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = PadicScalar::from_integer(*it++, ctx);
  }
  return m;
}

Mat Mat::parse(std::string_view text, const PrimeContext& ctx) {
  auto row_texts = split(text, ';');
  std::vector<std::vector<PadicScalar>> rows;
  for (auto rt : row_texts) {
    std::vector<PadicScalar> row;
    for (auto et : split(rt, ',')) row.push_back(PadicScalar::parse(et, ctx));
    rows.push_back(std::move(row));
  }
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows.front().size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw Error(ErrorKind::InvalidInput, "ragged matrix literal");
  }
  Mat m(ctx, r, c);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

Mat Mat::transpose() const {
  Mat t(*ctx_, cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Mat Mat::column(int c) const {
  Mat col(*ctx_, rows_, 1);
  for (int r = 0; r < rows_; ++r) col(r, 0) = (*this)(r, c);
  return col;
}

Mat Mat::scaled(const PadicScalar& s) const {
  Mat out = *this;
  for (auto& e : out.data_) e = e * s;
  return out;
}

Mat Mat::hconcat(const Mat& other) const {
  if (rows_ != other.rows_) throw Error(ErrorKind::InvalidInput, "hconcat: row counts differ");
  Mat out(*ctx_, rows_, cols_ + other.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (int c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

bool Mat::is_symmetric() const {
  if (!is_square()) return false;
  for (int r = 0; r < rows_; ++r) {
    for (int c = r + 1; c < cols_; ++c) {
      if (!((*this)(r, c) == (*this)(c, r))) return false;
    }
  }
  return true;
}

bool Mat::is_diagonal() const {
  if (!is_square()) return false;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (r != c && !(*this)(r, c).is_zero()) return false;
    }
  }
  return true;
}

bool Mat::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const PadicScalar& e) { return e.is_zero() || e.valuation() >= 0; });
}

Valuation Mat::min_valuation() const {
  Valuation v = kInfinity;
  for (const auto& e : data_) v = std::min(v, e.valuation());
  return v;
}

void Mat::swap_rows(int a, int b) {
  if (a == b) return;
  for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void Mat::swap_cols(int a, int b) {
  if (a == b) return;
  for (int r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void Mat::add_row_multiple(int dst, int src, const PadicScalar& c) {
  if (c.is_zero()) return;
  for (int k = 0; k < cols_; ++k) (*this)(dst, k) += c * (*this)(src, k);
}

void Mat::add_col_multiple(int dst, int src, const PadicScalar& c) {
  if (c.is_zero()) return;
  for (int k = 0; k < rows_; ++k) (*this)(k, dst) += c * (*this)(k, src);
}

void Mat::scale_row(int r, const PadicScalar& c) {
  for (int k = 0; k < cols_; ++k) (*this)(r, k) *= c;
}

void Mat::scale_col(int c, const PadicScalar& s) {
  for (int k = 0; k < rows_; ++k) (*this)(k, c) *= s;
}

std::string Mat::to_string() const {
  std::string out;
  for (int r = 0; r < rows_; ++r) {
    if (r > 0) out += ';';
    for (int c = 0; c < cols_; ++c) {
      if (c > 0) out += ',';
      out += (*this)(r, c).to_string();
    }
  }
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (!(a.data_[i] == b.data_[i])) return false;
  }
  return true;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::InvalidInput, "matrix product: dimension mismatch");
  Mat out(*a.ctx_, a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int c = 0; c < b.cols_; ++c) {
      PadicScalar s = PadicScalar::zero(*a.ctx_);
      for (int k = 0; k < a.cols_; ++k) {
        const auto& x = a(r, k);
        const auto& y = b(k, c);
        if (!x.is_zero() && !y.is_zero()) s += x * y;
      }
      out(r, c) = s;
    }
  }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::InvalidInput, "matrix sum: dimension mismatch");
  Mat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::InvalidInput, "matrix difference: dimension mismatch");
  Mat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

namespace {

Mat minor_matrix(const Mat& m, int skip_r, int skip_c) {
  const int n = m.rows();
  Mat out(m.context(), n - 1, n - 1);
  for (int r = 0, rr = 0; r < n; ++r) {
    if (r == skip_r) continue;
    for (int c = 0, cc = 0; c < n; ++c) {
      if (c == skip_c) continue;
      out(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  return out;
}

}  // namespace

PadicScalar det(const Mat& m) {
  require_square(m, "det");
  const PrimeContext& ctx = m.context();
  const int n = m.rows();
  if (n == 0) return PadicScalar::from_integer(1, ctx);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (n == 3) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }
  PadicScalar s = PadicScalar::zero(ctx);
  for (int c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    PadicScalar term = m(0, c) * det(minor_matrix(m, 0, c));
    s = (c % 2 == 0) ? s + term : s - term;
  }
  return s;
}

Mat adjugate(const Mat& m) {
  require_square(m, "adjugate");
  const int n = m.rows();
  Mat out(m.context(), n, n);
  if (n == 1) {
    out(0, 0) = PadicScalar::from_integer(1, m.context());
    return out;
  }
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      PadicScalar cof = det(minor_matrix(m, c, r));
      out(r, c) = ((r + c) % 2 == 0) ? cof : -cof;
    }
  }
  return out;
}

Mat inverse(const Mat& m) {
  PadicScalar d = det(m);
  if (d.is_zero()) throw Error(ErrorKind::Degenerate, "matrix is singular");
  return adjugate(m).scaled(d.inverse());
}

HermiteForm hnf_columns(const Mat& M) {
  const PrimeContext& ctx = M.context();
  const int n = M.rows();
  const int k = M.cols();
  if (k < 1) throw Error(ErrorKind::InvalidInput, "hnf_columns needs at least one column");
  if (!M.is_integral()) throw Error(ErrorKind::InvalidInput, "lattice generators must be integral");

  Mat W = M;
  std::vector<int> pivot_col(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(k), false);
  for (int r = n - 1; r >= 0; --r) {
    int best = -1;
    Valuation bv = kInfinity;
    for (int c = 0; c < k; ++c) {
      if (used[static_cast<std::size_t>(c)] || W(r, c).is_zero()) continue;
      if (W(r, c).valuation() < bv) {
        bv = W(r, c).valuation();
        best = c;
      }
    }
    if (best < 0) continue;
    if (bv >= ctx.precision()) {
      throw Error(ErrorKind::PrecisionLoss, "HNF pivot valuation outside the precision window");
    }
    used[static_cast<std::size_t>(best)] = true;
    pivot_col[static_cast<std::size_t>(r)] = best;
    W.scale_col(best, unit_part(W(r, best)).inverse());
    W(r, best) = PadicScalar::power_of_p(bv, ctx);
    for (int c = 0; c < k; ++c) {
      if (used[static_cast<std::size_t>(c)] || W(r, c).is_zero()) continue;
      PadicScalar q = W(r, c) / W(r, best);
      W.add_col_multiple(c, best, -q);
      W(r, c) = PadicScalar::zero(ctx);
    }
  }

  Mat H(ctx, n, n);
  for (int r = 0; r < n; ++r) {
    const int c = pivot_col[static_cast<std::size_t>(r)];
    if (c < 0) continue;
    for (int i = 0; i < n; ++i) H(i, r) = W(i, c);
  }
  for (int i = 0; i < n; ++i) {
    if (pivot_col[static_cast<std::size_t>(i)] < 0) continue;
    for (int j = i - 1; j >= 0; --j) {
      if (pivot_col[static_cast<std::size_t>(j)] < 0) continue;
      const Valuation dj = H(j, j).valuation();
      if (H(j, i).is_zero()) continue;
      if (dj == 0) {
        H.add_col_multiple(i, j, -H(j, i));
        H(j, i) = PadicScalar::zero(ctx);
        continue;
      }
      mpz_class res = H(j, i).residue(static_cast<int>(dj));
      PadicScalar r = PadicScalar::from_integer(res, ctx);
      PadicScalar q = (H(j, i) - r) / H(j, j);
      H.add_col_multiple(i, j, -q);
      H(j, i) = r;
    }
  }

  HermiteForm out{Mat(ctx, n, n), 0};
  for (int r = 0; r < n; ++r) {
    if (pivot_col[static_cast<std::size_t>(r)] < 0) continue;
    for (int i = 0; i < n; ++i) out.H(i, out.rank) = H(i, r);
    ++out.rank;
  }
  return out;
}

SmithForm snf(const Mat& M) {
  const PrimeContext& ctx = M.context();
  const int m = M.rows();
  const int n = M.cols();
  Valuation shift = M.min_valuation();
  if (shift == kInfinity || shift > 0) shift = 0;
  Mat W = shift < 0 ? M.scaled(PadicScalar::power_of_p(-shift, ctx)) : M;
  SmithForm out{{}, Mat::identity(ctx, m), Mat::identity(ctx, n)};

  const int steps = std::min(m, n);
  for (int t = 0; t < steps; ++t) {
    int br = -1;
    int bc = -1;
    Valuation bv = kInfinity;
    for (int r = t; r < m; ++r) {
      for (int c = t; c < n; ++c) {
        if (!W(r, c).is_zero() && W(r, c).valuation() < bv) {
          bv = W(r, c).valuation();
          br = r;
          bc = c;
        }
      }
    }
    if (br < 0) {
      for (int rest = t; rest < steps; ++rest) out.divisors.push_back(kInfinity);
      break;
    }
    if (bv >= ctx.precision()) {
      throw Error(ErrorKind::PrecisionLoss, "Smith divisor valuation outside the precision window");
    }
    W.swap_rows(t, br);
    out.P.swap_rows(t, br);
    W.swap_cols(t, bc);
    out.Q.swap_cols(t, bc);
    PadicScalar uinv = unit_part(W(t, t)).inverse();
    W.scale_row(t, uinv);
    out.P.scale_row(t, uinv);
    W(t, t) = PadicScalar::power_of_p(bv, ctx);
    for (int r = t + 1; r < m; ++r) {
      if (W(r, t).is_zero()) continue;
      PadicScalar q = W(r, t) / W(t, t);
      W.add_row_multiple(r, t, -q);
      out.P.add_row_multiple(r, t, -q);
      W(r, t) = PadicScalar::zero(ctx);
    }
    for (int c = t + 1; c < n; ++c) {
      if (W(t, c).is_zero()) continue;
      PadicScalar q = W(t, c) / W(t, t);
      W.add_col_multiple(c, t, -q);
      out.Q.add_col_multiple(c, t, -q);
      W(t, c) = PadicScalar::zero(ctx);
    }
    out.divisors.push_back(bv + shift);
  }
  return out;
}

Diagonalization congruent_diagonalize(const Mat& A) {
  require_square(A, "congruent_diagonalize");
  if (!A.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "matrix is not symmetric");
  const PrimeContext& ctx = A.context();
  const int n = A.rows();
  Mat W = A;
  Mat V = Mat::identity(ctx, n);
  const PadicScalar one = PadicScalar::from_integer(1, ctx);

  for (int t = 0; t < n; ++t) {
    Valuation bv = kInfinity;
    int bi = -1;
    int bj = -1;
    for (int i = t; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        if (!W(i, j).is_zero() && W(i, j).valuation() < bv) {
          bv = W(i, j).valuation();
          bi = i;
          bj = j;
        }
      }
    }
    if (bi < 0) throw Error(ErrorKind::Degenerate, "symmetric matrix is degenerate");
    int pivot = -1;
    for (int i = t; i < n; ++i) {
      if (!W(i, i).is_zero() && W(i, i).valuation() == bv) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      // Surface a diagonal pivot: new W_ii = W_ii + 2 W_ij + W_jj has valuation bv.
      W.add_col_multiple(bi, bj, one);
      W.add_row_multiple(bi, bj, one);
      V.add_col_multiple(bi, bj, one);
      pivot = bi;
    }
    W.swap_rows(t, pivot);
    W.swap_cols(t, pivot);
    V.swap_cols(t, pivot);
    for (int k = t + 1; k < n; ++k) {
      if (W(k, t).is_zero()) continue;
      PadicScalar c = -(W(k, t) / W(t, t));
      W.add_col_multiple(k, t, c);
      W.add_row_multiple(k, t, c);
      V.add_col_multiple(k, t, c);
      W(k, t) = PadicScalar::zero(ctx);
      W(t, k) = PadicScalar::zero(ctx);
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return W(a, a).valuation() < W(b, b).valuation(); });
  Diagonalization out{Mat(ctx, n, n), Mat(ctx, n, n)};
  for (int i = 0; i < n; ++i) {
    const int src = order[static_cast<std::size_t>(i)];
    out.D(i, i) = W(src, src);
    for (int r = 0; r < n; ++r) out.V(r, i) = V(r, src);
  }
  return out;
}

Diagonalization cassels_move(const Mat& D, int i, int j, const PadicScalar& u) {
  if (!D.is_diagonal()) throw Error(ErrorKind::NotDiagonal, "cassels_move needs a diagonal matrix");
  const int n = D.rows();
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw Error(ErrorKind::InvalidInput, "bad entry indices");
  if (u.is_zero() || u.valuation() != 0) throw Error(ErrorKind::InvalidInput, "factor must be a unit");
  const PadicScalar& a = D(i, i);
  const PadicScalar& b = D(j, j);
  if (a.is_zero() || b.is_zero() || a.valuation() != b.valuation()) {
    throw Error(ErrorKind::ValuationMismatch, "entries have different valuations");
  }
  const PrimeContext& ctx = D.context();
  // Solve a x^2 + b y^2 = a / u, i.e. x^2 = 1/u - (b/a) y^2 with y a small integer.
  const PadicScalar ratio = b / a;
  const PadicScalar uinv = u.inverse();
  PadicScalar x;
  PadicScalar y;
  bool found = false;
  const PadicScalar ratio_inv = ratio.inverse();
  for (long t = 0; t < ctx.p() && !found; ++t) {
    const PadicScalar small = PadicScalar::from_integer(t, ctx);
    // Either y is the small integer and x a square root, or the other way round.
    const PadicScalar x2 = uinv - ratio * small * small;
    if (!x2.is_zero() && x2.valuation() == 0 && square_class(x2).chi == 0) {
      x = sqrt(x2);
      y = small;
      found = true;
      break;
    }
    const PadicScalar y2 = (uinv - small * small) * ratio_inv;
    if (!y2.is_zero() && y2.valuation() == 0 && square_class(y2).chi == 0) {
      x = small;
      y = sqrt(y2);
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::PrecisionLoss, "no representation found for the unit move");

  Diagonalization out{D, Mat::identity(ctx, n)};
  out.V(i, i) = x;
  out.V(j, i) = y;
  out.V(i, j) = -(u * ratio * y);
  out.V(j, j) = u * x;
  out.D(i, i) = a * uinv;
  out.D(j, j) = b * u;
  return out;
}

bool column_span_contains(const Mat& outer, const Mat& inner) {
  return (inverse(outer) * inner).is_integral();
}

Valuation index_exponent(const Mat& U) {
  PadicScalar d = det(U);
  if (d.is_zero()) throw Error(ErrorKind::Degenerate, "sublattice is not of full rank");
  return d.valuation();
}

}  // namespace lielat
