#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "mcgl/error.hpp"
#include "mcgl/field.hpp"
#include "mcgl/poly.hpp"

namespace mcgl {

using Vec = std::vector<Scalar>;

/// Dense row-major rectangular matrix over a FieldSpec. Most of the library
/// works with square matrices; rectangular shapes appear in subspace bases.
/// Element access at(r, c) is 0-based; the generator constructors below use
/// the 1-based indices of the usual t_ij notation.
class Mat {
 public:
  Mat() = default;
  Mat(FieldSpec f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}
  Mat(FieldSpec f, std::size_t n) : Mat(f, n, n) {}

  static Mat identity(FieldSpec f, std::size_t n) {
    Mat m(f, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
  }
  static Mat scalar(const Scalar& s, std::size_t n) {
    Mat m(s.field(), n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = s;
    return m;
  }
  static Mat from_ints(FieldSpec f, std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    Mat m(f, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) fail(Errc::DimensionMismatch, "ragged matrix literal");
      std::size_t j = 0;
      for (long v : row) m.at(i, j++) = Scalar(f, v);
      ++i;
    }
    return m;
  }
  static Mat from_columns(FieldSpec f, std::size_t rows, const std::vector<Vec>& cols) {
    Mat m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    return m;
  }

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t n() const { return rows_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec column(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, c));
    return v;
  }

  Mat transpose() const {
    Mat t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool is_identity() const { return *this == identity(field_, rows_); }

  /// Scalar multiple of the identity.
  bool is_central() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i != j && !at(i, j).is_zero()) return false;
        if (i == j && !(at(i, i) == at(0, 0))) return false;
      }
    return true;
  }

  Scalar trace() const {
    Scalar t = Scalar::zero(field_);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  Mat& operator+=(const Mat& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Scalar& s) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    require_same_field(a.field_, b.field_);
    if (a.cols_ != b.rows_) fail(Errc::DimensionMismatch, "matrix product shape");
    Mat c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
      }
    return c;
  }

  friend Vec operator*(const Mat& a, const Vec& v) {
    if (a.cols_ != v.size()) fail(Errc::DimensionMismatch, "matrix-vector shape");
    Vec out(a.rows_, Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!v[k].is_zero()) out[i] += a.at(i, k) * v[k];
    return out;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? "\n[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? " " : "") + at(i, j).to_string();
      s += "]";
    }
    return s;
  }

 private:
  void check_same_shape(const Mat& o) const {
    require_same_field(field_, o.field_);
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::DimensionMismatch, "matrix shapes differ");
  }

  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

inline void require_square(const Mat& a) {
  if (!a.is_square()) fail(Errc::DimensionMismatch, "square matrix required");
}

/// Block-diagonal direct sum a ⊕ b.
inline Mat direct_sum(const Mat& a, const Mat& b) {
  require_same_field(a.field(), b.field());
  Mat c(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return c;
}

inline Mat direct_sum(const std::vector<Mat>& blocks, FieldSpec f) {
  Mat acc(f, 0);
  for (const auto& b : blocks) acc = direct_sum(acc, b);
  return acc;
}

namespace detail {

/// Fraction-free (Bareiss) elimination of an integer matrix augmented on the
/// right; returns the determinant of the leading square part and leaves the
/// augmented block solved up to the common factor.
struct BareissResult {
  mpz_class det;
  std::vector<std::vector<mpz_class>> rows;
};

inline BareissResult bareiss(std::vector<std::vector<mpz_class>> m, std::size_t n) {
  const std::size_t width = m.empty() ? 0 : m[0].size();
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return {0, std::move(m)};
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return {sign * m[n - 1][n - 1], std::move(m)};
}

/// Integer matrix L·A for ℚ-matrix A, L the lcm of denominators.
inline std::pair<std::vector<std::vector<mpz_class>>, mpz_class> scale_to_integers(const Mat& a) {
  mpz_class l = 1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).rational_value().get_den_mpz_t());
  std::vector<std::vector<mpz_class>> m(a.rows(), std::vector<mpz_class>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      mpq_class v = a.at(i, j).rational_value() * l;
      m[i][j] = v.get_num();
    }
  return {std::move(m), l};
}

}  // namespace detail

inline Scalar det(const Mat& a) {
  require_square(a);
  const FieldSpec f = a.field();
  const std::size_t n = a.n();
  if (n == 0) return Scalar::one(f);
  if (f.is_rational()) {
    auto [m, l] = detail::scale_to_integers(a);
    auto res = detail::bareiss(std::move(m), n);
    mpz_class ln;
    mpz_pow_ui(ln.get_mpz_t(), l.get_mpz_t(), n);
    return Scalar::rational(mpq_class(res.det, ln));
  }
  Mat m = a;
  Scalar d = Scalar::one(f);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m.at(piv, k).is_zero()) ++piv;
    if (piv == n) return Scalar::zero(f);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
      d = -d;
    }
    d *= m.at(k, k);
    const Scalar inv = m.at(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m.at(i, k).is_zero()) continue;
      const Scalar c = m.at(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) m.at(i, j) -= c * m.at(k, j);
    }
  }
  return d;
}

inline Mat inverse(const Mat& a) {
  require_square(a);
  const FieldSpec f = a.field();
  const std::size_t n = a.n();
  if (f.is_rational()) {
    // Bareiss on [L·A | I]; back-substitute on the fraction-free echelon form.
    auto [m, l] = detail::scale_to_integers(a);
    for (std::size_t i = 0; i < n; ++i) {
      m[i].resize(2 * n, 0);
      m[i][n + i] = 1;
    }
    auto res = detail::bareiss(std::move(m), n);
    if (res.det == 0) fail(Errc::Singular, "matrix is singular");
    auto& u = res.rows;
    Mat inv(f, n);
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<mpq_class> x(n);
      for (std::size_t i = n; i-- > 0;) {
        mpq_class s = mpq_class(u[i][n + c]);
        for (std::size_t j = i + 1; j < n; ++j) s -= mpq_class(u[i][j]) * x[j];
        x[i] = s / mpq_class(u[i][i]);
      }
      for (std::size_t i = 0; i < n; ++i) inv.at(i, c) = Scalar::rational(x[i] * mpq_class(l));
    }
    return inv;
  }
  Mat m = a, inv = Mat::identity(f, n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m.at(piv, k).is_zero()) ++piv;
    if (piv == n) fail(Errc::Singular, "matrix is singular");
    if (piv != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(k, j));
        std::swap(inv.at(piv, j), inv.at(k, j));
      }
    const Scalar s = m.at(k, k).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m.at(k, j) *= s;
      inv.at(k, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m.at(i, k).is_zero()) continue;
      const Scalar c = m.at(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m.at(i, j) -= c * m.at(k, j);
        inv.at(i, j) -= c * inv.at(k, j);
      }
    }
  }
  return inv;
}

inline Mat mat_pow(const Mat& a, long long e) {
  require_square(a);
  if (e < 0) return mat_pow(inverse(a), -e);
  Mat acc = Mat::identity(a.field(), a.n()), base = a;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

/// x^g = g⁻¹ x g.
inline Mat conj(const Mat& x, const Mat& g) { return inverse(g) * x * g; }

/// [g, h] = g h g⁻¹ h⁻¹.
inline Mat commutator(const Mat& g, const Mat& h) { return g * h * inverse(g) * inverse(h); }

// ---- elementary generators (1-based indices) ----

struct ElemGen {
  enum class Kind { Transvection, DiagOne, DiagPair, Perm, SignedPerm };
  Kind kind;
  std::size_t n;
  std::size_t i;
  std::size_t j = 0;
  std::optional<Scalar> a;
};

namespace detail {
inline void check_index(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) fail(Errc::BadIndices, "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}
inline void check_pair(std::size_t n, std::size_t i, std::size_t j) {
  check_index(n, i);
  check_index(n, j);
  if (i == j) fail(Errc::BadIndices, "indices must differ");
}
}  // namespace detail

/// t_ij(a) = e + a·e^{ij}
inline Mat transvection(std::size_t n, std::size_t i, std::size_t j, const Scalar& a) {
  detail::check_pair(n, i, j);
  Mat m = Mat::identity(a.field(), n);
  m.at(i - 1, j - 1) = a;
  return m;
}
inline Mat transvection(FieldSpec f, std::size_t n, std::size_t i, std::size_t j, long a) {
  return transvection(n, i, j, Scalar(f, a));
}

/// d_i(a) = e + (a−1)e^{ii}
inline Mat diag_one(std::size_t n, std::size_t i, const Scalar& a) {
  detail::check_index(n, i);
  if (a.is_zero()) fail(Errc::ZeroParameter, "d_i(0) is singular");
  Mat m = Mat::identity(a.field(), n);
  m.at(i - 1, i - 1) = a;
  return m;
}

/// d_ij(a) = e + (a−1)e^{ii} + (a⁻¹−1)e^{jj}
inline Mat diag_pair(std::size_t n, std::size_t i, std::size_t j, const Scalar& a) {
  detail::check_pair(n, i, j);
  if (a.is_zero()) fail(Errc::ZeroParameter, "d_ij(0) is singular");
  Mat m = Mat::identity(a.field(), n);
  m.at(i - 1, i - 1) = a;
  m.at(j - 1, j - 1) = a.inverse();
  return m;
}
inline Mat diag_pair(FieldSpec f, std::size_t n, std::size_t i, std::size_t j, long a) {
  return diag_pair(n, i, j, Scalar(f, a));
}

/// p_ij = e + e^{ij} + e^{ji} − e^{ii} − e^{jj}
inline Mat perm(FieldSpec f, std::size_t n, std::size_t i, std::size_t j) {
  detail::check_pair(n, i, j);
  Mat m = Mat::identity(f, n);
  m.at(i - 1, i - 1) = Scalar::zero(f);
  m.at(j - 1, j - 1) = Scalar::zero(f);
  m.at(i - 1, j - 1) = Scalar::one(f);
  m.at(j - 1, i - 1) = Scalar::one(f);
  return m;
}

/// p̂_ij = e + e^{ij} − e^{ji} − e^{ii} − e^{jj}
inline Mat signed_perm(FieldSpec f, std::size_t n, std::size_t i, std::size_t j) {
  Mat m = perm(f, n, i, j);
  m.at(j - 1, i - 1) = -Scalar::one(f);
  return m;
}

inline Mat realize(const ElemGen& g, FieldSpec f) {
  switch (g.kind) {
    case ElemGen::Kind::Transvection: return transvection(g.n, g.i, g.j, g.a.value());
    case ElemGen::Kind::DiagOne: return diag_one(g.n, g.i, g.a.value());
    case ElemGen::Kind::DiagPair: return diag_pair(g.n, g.i, g.j, g.a.value());
    case ElemGen::Kind::Perm: return perm(f, g.n, g.i, g.j);
    case ElemGen::Kind::SignedPerm: return signed_perm(f, g.n, g.i, g.j);
  }
  fail(Errc::PreconditionViolated, "unknown generator kind");
}

/// Companion matrix [P]: ones on the subdiagonal, last column −a_0 … −a_{d−1}.
inline Mat companion(const Poly& p) {
  if (!p.is_monic() || p.degree() < 1) fail(Errc::NotMonic, "companion matrix needs a monic nonconstant polynomial");
  const auto d = static_cast<std::size_t>(p.degree());
  Mat m(p.field(), d);
  for (std::size_t i = 1; i < d; ++i) m.at(i, i - 1) = Scalar::one(p.field());
  for (std::size_t i = 0; i < d; ++i) m.at(i, d - 1) = -p.coeffs()[i];
  return m;
}

/// If m is a nontrivial elementary transvection t_ij(c), return (i, j, c), 1-based.
struct TransvectionInfo {
  std::size_t i, j;
  Scalar c;
};

inline std::optional<TransvectionInfo> as_transvection(const Mat& m) {
  if (!m.is_square()) return std::nullopt;
  std::optional<TransvectionInfo> found;
  for (std::size_t r = 0; r < m.n(); ++r)
    for (std::size_t c = 0; c < m.n(); ++c) {
      const Scalar& x = m.at(r, c);
      if (r == c) {
        if (!x.is_one()) return std::nullopt;
      } else if (!x.is_zero()) {
        if (found) return std::nullopt;
        found = TransvectionInfo{r + 1, c + 1, x};
      }
    }
  return found;
}

/// Characteristic polynomial from sums of principal minors:
/// χ = Σ_k (−1)^k a_k X^{n−k}.
inline Poly charpoly_minors(const Mat& s) {
  require_square(s);
  const FieldSpec f = s.field();
  const std::size_t n = s.n();
  std::vector<Scalar> a(n + 1, Scalar::zero(f));
  a[0] = Scalar::one(f);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) idx.push_back(i);
    Mat sub(f, idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) sub.at(r, c) = s.at(idx[r], idx[c]);
    a[idx.size()] += det(sub);
  }
  std::vector<Scalar> coeffs(n + 1, Scalar::zero(f));
  for (std::size_t k = 0; k <= n; ++k) coeffs[n - k] = (k % 2 == 0) ? a[k] : -a[k];
  return Poly(f, std::move(coeffs));
}

// ---- linear algebra over K ----

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
    const Scalar s = m.at(row, col).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(row, j) *= s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      const Scalar c = m.at(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= c * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Mat m) { return rref(m).size(); }

/// Basis of {x : m x = 0}, one vector per free column in increasing order.
inline std::vector<Vec> nullspace(Mat m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), Scalar::zero(m.field()));
    v[free] = Scalar::one(m.field());
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some X with A X = B (free variables zero); nullopt when inconsistent.
inline std::optional<Mat> solve(const Mat& a, const Mat& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows()) fail(Errc::DimensionMismatch, "solve shape");
  Mat aug(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
  }
  const auto pivots = rref(aug);
  Mat x(a.field(), a.cols(), b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(pivots[r], j) = aug.at(r, a.cols() + j);
  }
  return x;
}

/// Conjugator ε ∈ SL_n built from p̂ generators and one d_{2m} with
/// t_ij(a)^ε = t_12(1). Requires n ≥ 3.
inline Mat transvection_normalizer(std::size_t i, std::size_t j, const Scalar& a, std::size_t n) {
  if (n < 3) fail(Errc::DimensionTooSmall, "transvection normalizer needs n >= 3");
  detail::check_pair(n, i, j);
  if (a.is_zero()) fail(Errc::ZeroParameter, "t_ij(0) is trivial");
  const FieldSpec f = a.field();
  // BFS over index pairs; edges are conjugations by p̂_st, tracking the sign.
  struct Node {
    std::size_t i, j;
    bool neg;
  };
  const auto key = [n](std::size_t i, std::size_t j, bool neg) { return ((i - 1) * n + (j - 1)) * 2 + (neg ? 1 : 0); };
  std::vector<int> seen(n * n * 2, 0);
  std::vector<std::pair<std::size_t, Mat>> parent_gen(n * n * 2);
  std::vector<std::size_t> parent(n * n * 2, SIZE_MAX);
  std::queue<Node> q;
  q.push({i, j, false});
  seen[key(i, j, false)] = 1;
  std::optional<Node> goal;
  while (!q.empty()) {
    Node cur = q.front();
    q.pop();
    if (cur.i == 1 && cur.j == 2) {
      goal = cur;
      break;
    }
    const Mat t = transvection(n, cur.i, cur.j, cur.neg ? -Scalar::one(f) : Scalar::one(f));
    for (std::size_t s = 1; s <= n; ++s)
      for (std::size_t u = 1; u <= n; ++u) {
        if (s == u) continue;
        const Mat g = signed_perm(f, n, s, u);
        const auto info = as_transvection(conj(t, g));
        const Node nx{info->i, info->j, !info->c.is_one()};
        const auto k = key(nx.i, nx.j, nx.neg);
        if (seen[k]) continue;
        seen[k] = 1;
        parent[k] = key(cur.i, cur.j, cur.neg);
        parent_gen[k] = {0, g};
        q.push(nx);
      }
  }
  // Reconstruct the p̂-word from the start node to (1,2).
  std::vector<Mat> word;
  for (auto k = key(goal->i, goal->j, goal->neg); parent[k] != SIZE_MAX; k = parent[k])
    word.push_back(parent_gen[k].second);
  Mat eps = Mat::identity(f, n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) eps = eps * *it;
  // t_12(±a) → t_12(1) via d_23((±a)⁻¹)
  const Scalar c = goal->neg ? -a : a;
  if (!c.is_one()) eps = eps * diag_pair(n, 2, 3, c.inverse());
  if (!(conj(transvection(n, i, j, a), eps) == transvection(f, n, 1, 2, 1)) || !det(eps).is_one())
    fail(Errc::VerificationFailed, "transvection normalizer");
  return eps;
}

}  // namespace mcgl
