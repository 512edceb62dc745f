#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "mcgl/error.hpp"
#include "mcgl/field.hpp"
#include "mcgl/mat.hpp"
#include "mcgl/poly.hpp"

namespace mcgl {

/// Square or rectangular matrix over K[X]; used for Xe − σ and the SNF transforms.
class PolyMat {
 public:
  PolyMat() = default;
  PolyMat(FieldSpec f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Poly(f)) {}

  static PolyMat identity(FieldSpec f, std::size_t n) {
    PolyMat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::one(f);
    return m;
  }

  /// Xe − σ
  static PolyMat characteristic(const Mat& s) {
    require_square(s);
    PolyMat m(s.field(), s.n(), s.n());
    for (std::size_t i = 0; i < s.n(); ++i)
      for (std::size_t j = 0; j < s.n(); ++j) {
        Poly p = Poly::constant(-s.at(i, j));
        if (i == j) p += Poly::x(s.field());
        m.at(i, j) = p;
      }
    return m;
  }

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Poly& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
  }
  /// row_dst += k·row_src
  void add_row(std::size_t dst, std::size_t src, const Poly& k) {
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(src, j).is_zero()) at(dst, j) += k * at(src, j);
  }
  /// col_dst += k·col_src
  void add_col(std::size_t dst, std::size_t src, const Poly& k) {
    for (std::size_t i = 0; i < rows_; ++i)
      if (!at(i, src).is_zero()) at(i, dst) += at(i, src) * k;
  }
  void scale_row(std::size_t r, const Scalar& s) {
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) = at(r, j) * s;
  }

  friend PolyMat operator*(const PolyMat& a, const PolyMat& b) {
    require_same_field(a.field_, b.field_);
    if (a.cols_ != b.rows_) fail(Errc::DimensionMismatch, "polynomial matrix product shape");
    PolyMat c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b.at(k, j).is_zero()) c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return c;
  }

  friend bool operator==(const PolyMat& a, const PolyMat& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> data_;
};

/// Determinant over K[X] by fraction-free elimination.
inline Poly poly_det(PolyMat m) {
  if (m.rows() != m.cols()) fail(Errc::DimensionMismatch, "determinant of a non-square polynomial matrix");
  const std::size_t n = m.rows();
  const FieldSpec f = m.field();
  if (n == 0) return Poly::one(f);
  Poly prev = Poly::one(f);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m.at(piv, k).is_zero()) ++piv;
    if (piv == n) return Poly(f);
    if (piv != k) {
      m.swap_rows(piv, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = exact_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
      m.at(i, k) = Poly(f);
    }
    prev = m.at(k, k);
  }
  Poly d = m.at(n - 1, n - 1);
  return negate ? -d : d;
}

struct SNFResult {
  PolyMat D, U, V;
  std::vector<Poly> diag;
  bool has_transforms = false;
};

/// Smith normal form U·A·V = D. Pivot choice: minimal degree, row-major
/// tie-break. Divisibility is restored by adding the offending row into the
/// pivot row and reducing again.
inline SNFResult smith_normal_form(const PolyMat& a, bool track = true) {
  const FieldSpec f = a.field();
  const std::size_t rows = a.rows(), cols = a.cols();
  SNFResult res;
  res.D = a;
  res.has_transforms = track;
  if (track) {
    res.U = PolyMat::identity(f, rows);
    res.V = PolyMat::identity(f, cols);
  }
  PolyMat& d = res.D;
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    bool done = false;
    while (!done) {
      // minimal-degree nonzero entry of the trailing block
      std::size_t pr = rows, pc = cols;
      int best = -1;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const Poly& e = d.at(i, j);
          if (e.is_zero()) continue;
          if (best < 0 || e.degree() < best) {
            best = e.degree();
            pr = i;
            pc = j;
          }
        }
      if (best < 0) break;
      if (pr != t) {
        d.swap_rows(pr, t);
        if (track) res.U.swap_rows(pr, t);
      }
      if (pc != t) {
        d.swap_cols(pc, t);
        if (track) res.V.swap_cols(pc, t);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d.at(i, t).is_zero()) continue;
        const auto qr = poly_divmod(d.at(i, t), d.at(t, t));
        d.add_row(i, t, -qr.quotient);
        if (track) res.U.add_row(i, t, -qr.quotient);
        if (!d.at(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d.at(t, j).is_zero()) continue;
        const auto qr = poly_divmod(d.at(t, j), d.at(t, t));
        d.add_col(j, t, -qr.quotient);
        if (track) res.V.add_col(j, t, -qr.quotient);
        if (!d.at(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;
      done = true;
      for (std::size_t i = t + 1; i < rows && done; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!divides(d.at(t, t), d.at(i, j))) {
            d.add_row(t, i, Poly::one(f));
            if (track) res.U.add_row(t, i, Poly::one(f));
            done = false;
            break;
          }
    }
    if (!d.at(t, t).is_zero() && !d.at(t, t).is_monic()) {
      const Scalar s = d.at(t, t).leading().inverse();
      d.scale_row(t, s);
      if (track) res.U.scale_row(t, s);
    }
  }
  for (std::size_t t = 0; t < steps; ++t) res.diag.push_back(d.at(t, t));
  return res;
}

/// Nonconstant monic diagonal entries of SNF(Xe − σ).
inline std::vector<Poly> invariant_factors(const Mat& s) {
  require_square(s);
  const auto snf = smith_normal_form(PolyMat::characteristic(s), false);
  std::vector<Poly> out;
  for (const auto& p : snf.diag)
    if (p.degree() > 0) out.push_back(p);
  return out;
}

struct FrobeniusData {
  std::vector<Poly> invariant_factors;  // P_1 | P_2 | … | P_r
  Mat form;
  Mat transform;  // transform⁻¹ · σ · transform = form
};

namespace detail {

/// p(S)·v by Horner's rule.
inline Vec apply_poly(const Poly& p, const Mat& s, const Vec& v) {
  Vec acc(v.size(), Scalar::zero(s.field()));
  for (int k = p.degree(); k >= 0; --k) {
    acc = s * acc;
    const Scalar& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
  }
  return acc;
}

inline Vec vec_add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

/// Krylov chain v, Sv, …, S^{d−1}v and the monic annihilator of v of degree d.
inline std::pair<Poly, std::vector<Vec>> vector_min_poly(const Mat& s, const Vec& v) {
  const FieldSpec f = s.field();
  std::vector<Vec> chain{v};
  while (true) {
    const Vec next = s * chain.back();
    const Mat k = Mat::from_columns(f, s.n(), chain);
    Mat rhs(f, s.n(), 1);
    for (std::size_t i = 0; i < s.n(); ++i) rhs.at(i, 0) = next[i];
    if (auto c = solve(k, rhs)) {
      std::vector<Scalar> coeffs;
      for (std::size_t i = 0; i < chain.size(); ++i) coeffs.push_back(-c->at(i, 0));
      coeffs.push_back(Scalar::one(f));
      return {Poly(f, std::move(coeffs)), std::move(chain)};
    }
    chain.push_back(next);
  }
}

/// A vector whose annihilator is the minimal polynomial of S, built by
/// folding over e_1, …, e_n with the coprime lcm split.
inline Vec max_order_vector(const Mat& s) {
  const FieldSpec f = s.field();
  const std::size_t n = s.n();
  auto unit = [&](std::size_t i) {
    Vec e(n, Scalar::zero(f));
    e[i] = Scalar::one(f);
    return e;
  };
  Vec v = unit(0);
  Poly mv = vector_min_poly(s, v).first;
  for (std::size_t i = 1; i < n && static_cast<std::size_t>(mv.degree()) < n; ++i) {
    const Vec w = unit(i);
    const Poly mw = vector_min_poly(s, w).first;
    if (divides(mw, mv)) continue;
    const Poly g = poly_gcd(mv, mw);
    Poly a2 = mv, b2 = exact_div(mw, g);
    for (Poly h = poly_gcd(a2, b2); h.degree() > 0; h = poly_gcd(a2, b2)) {
      a2 = exact_div(a2, h);
      b2 = b2 * h;
    }
    v = vec_add(apply_poly(exact_div(mv, a2), s, v), apply_poly(exact_div(mw, b2), s, w));
    mv = a2 * b2;
  }
  return v;
}

struct Chain {
  Poly p;
  Vec v;
};

/// Cyclic decomposition, largest annihilator first.
inline std::vector<Chain> cyclic_decompose(const Mat& s) {
  const FieldSpec f = s.field();
  const std::size_t k = s.n();
  if (k == 0) return {};
  const Vec v = max_order_vector(s);
  auto [mu, krylov] = vector_min_poly(s, v);
  const auto d = static_cast<std::size_t>(mu.degree());
  std::vector<Chain> out{{mu, v}};
  if (d == k) return out;
  // functional with f(S^i v) = δ_{i,d−1}; its S-orbit cuts out an invariant complement
  const Mat kmat = Mat::from_columns(f, k, krylov);
  Mat rhs(f, d, 1);
  rhs.at(d - 1, 0) = Scalar::one(f);
  const auto fcol = solve(kmat.transpose(), rhs);
  if (!fcol) fail(Errc::VerificationFailed, "Krylov basis lost full rank");
  Mat rows(f, d, k);
  Vec r = fcol->column(0);
  const Mat st = s.transpose();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows.at(i, j) = r[j];
    r = st * r;
  }
  const auto wbasis = nullspace(rows);
  const Mat b = Mat::from_columns(f, k, wbasis);
  const auto restricted = solve(b, s * b);
  if (!restricted) fail(Errc::VerificationFailed, "complement is not invariant");
  for (auto& c : cyclic_decompose(*restricted)) out.push_back({c.p, b * c.v});
  return out;
}

}  // namespace detail

/// Rational canonical form via cyclic vectors; the transform is checked
/// exactly (σ·P = P·F with P invertible) before returning.
inline FrobeniusData frobenius_form(const Mat& s) {
  require_square(s);
  const FieldSpec f = s.field();
  auto chains = detail::cyclic_decompose(s);
  std::reverse(chains.begin(), chains.end());
  FrobeniusData out;
  std::vector<Vec> cols;
  out.form = Mat(f, 0);
  for (const auto& c : chains) {
    out.invariant_factors.push_back(c.p);
    out.form = direct_sum(out.form, companion(c.p));
    Vec v = c.v;
    for (int i = 0; i < c.p.degree(); ++i) {
      cols.push_back(v);
      v = s * v;
    }
  }
  out.transform = Mat::from_columns(f, s.n(), cols);
  if (s.n() == 0) out.transform = Mat(f, 0);
  if (det(out.transform).is_zero() || !(s * out.transform == out.transform * out.form))
    fail(Errc::VerificationFailed, "Frobenius transform check failed");
  return out;
}

inline void require_same_shape(const Mat& a, const Mat& b) {
  require_same_field(a.field(), b.field());
  require_square(a);
  require_square(b);
  if (a.n() != b.n()) fail(Errc::DimensionMismatch, "matrices of different dimension");
}

inline bool is_similar(const Mat& a, const Mat& b) {
  require_same_shape(a, b);
  return frobenius_form(a).invariant_factors == frobenius_form(b).invariant_factors;
}

/// Some g with g⁻¹·m·g = target.
inline Mat similarity_transform(const Mat& m, const Mat& target) {
  require_same_shape(m, target);
  const auto fm = frobenius_form(m);
  const auto ft = frobenius_form(target);
  if (fm.invariant_factors != ft.invariant_factors) fail(Errc::NotSimilar, "different invariant factors");
  const Mat g = fm.transform * inverse(ft.transform);
  if (!(m * g == g * target)) fail(Errc::VerificationFailed, "similarity transform check failed");
  return g;
}

struct ElementaryDivisor {
  Poly p;  // monic irreducible
  int power;
  friend bool operator==(const ElementaryDivisor&, const ElementaryDivisor&) = default;
};

/// Sorted by the irreducible (poly_less), then power descending.
inline std::vector<ElementaryDivisor> elementary_divisors_of(const std::vector<Poly>& factors) {
  std::vector<ElementaryDivisor> out;
  for (const auto& p : factors)
    for (const auto& [g, m] : factorize(p)) out.push_back({g, m});
  std::sort(out.begin(), out.end(), [](const ElementaryDivisor& a, const ElementaryDivisor& b) {
    if (poly_less(a.p, b.p)) return true;
    if (poly_less(b.p, a.p)) return false;
    return a.power > b.power;
  });
  return out;
}

inline std::vector<ElementaryDivisor> elementary_divisors(const Mat& s) {
  return elementary_divisors_of(frobenius_form(s).invariant_factors);
}

/// J(P^q): q diagonal copies of [P] joined by sub-diagonal blocks with a
/// single 1 in their top-right corner.
inline Mat jordan_block(const Poly& p, int q) {
  if (q < 1) fail(Errc::PreconditionViolated, "Jordan block power must be positive");
  const Mat c = companion(p);
  const std::size_t d = c.n();
  Mat j(p.field(), d * static_cast<std::size_t>(q));
  for (int k = 0; k < q; ++k) {
    const std::size_t off = d * static_cast<std::size_t>(k);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s) j.at(off + r, off + s) = c.at(r, s);
    if (k > 0) j.at(off, off - 1) = Scalar::one(p.field());
  }
  return j;
}

struct JordanData {
  std::vector<ElementaryDivisor> elementary_divisors;
  Mat form;
  Mat transform;  // transform⁻¹ · σ · transform = form
};

inline JordanData jordan_form(const Mat& s) {
  require_square(s);
  JordanData out;
  out.elementary_divisors = elementary_divisors(s);
  out.form = Mat(s.field(), 0);
  for (const auto& e : out.elementary_divisors) out.form = direct_sum(out.form, jordan_block(e.p, e.power));
  out.transform = similarity_transform(s, out.form);
  return out;
}

}  // namespace mcgl
