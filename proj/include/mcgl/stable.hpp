#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "mcgl/class_analyzer.hpp"
#include "mcgl/error.hpp"
#include "mcgl/mat.hpp"
#include "mcgl/normal_forms.hpp"
#include "mcgl/poly.hpp"
#include "mcgl/witness.hpp"

namespace mcgl {

/// Element of GL_∞ stored by its minimal representative; dimension n is
/// reached by e_{n−n_min} ⊕ rep_min.
class StableElement {
 public:
  StableElement() = default;

  /// Strips the largest leading identity block of σ.
  explicit StableElement(const Mat& sigma) : field_(sigma.field()) {
    require_square(sigma);
    const std::size_t n = sigma.n();
    std::size_t k = 0;
    while (k < n && leading_identity(sigma, k + 1)) ++k;
    rep_min_ = Mat(field_, n - k);
    for (std::size_t r = k; r < n; ++r)
      for (std::size_t c = k; c < n; ++c) rep_min_.at(r - k, c - k) = sigma.at(r, c);
  }

  FieldSpec field() const { return field_; }
  std::size_t n_min() const { return rep_min_.n(); }
  const Mat& rep_min() const { return rep_min_; }

  Mat rep(std::size_t n) const {
    if (n < n_min()) fail(Errc::DimensionMismatch, "dimension below n_min");
    return direct_sum(Mat::identity(field_, n - n_min()), rep_min_);
  }

  friend bool operator==(const StableElement& a, const StableElement& b) {
    return a.field_ == b.field_ && a.rep_min_ == b.rep_min_;
  }

 private:
  /// Top-left k×k block is e and the rest of those rows/columns vanish.
  static bool leading_identity(const Mat& s, std::size_t k) {
    const std::size_t i = k - 1;
    for (std::size_t j = 0; j < s.n(); ++j) {
      const bool diag = i == j;
      if (diag ? !s.at(i, j).is_one() : !s.at(i, j).is_zero()) return false;
      if (!diag && !s.at(j, i).is_zero()) return false;
    }
    return true;
  }

  FieldSpec field_;
  Mat rep_min_;
};

/// Invariant factors of 1 ⊕ σ from those of σ: with P_0 = 1 and
/// P_{r+1} = P_r(X−1), multiply P_i by X−1 for the least i with
/// P_i(X−1) | P_{i+1}.
inline std::vector<Poly> pad_rule(const std::vector<Poly>& factors, FieldSpec f) {
  const Poly xm1 = Poly::linear(Scalar::one(f));
  for (std::size_t j = 0; j < factors.size(); ++j) {
    if (!(factors[j].field() == f)) fail(Errc::FieldMismatch, "factor over a different field");
    if (!factors[j].is_monic() || factors[j].degree() < 1) fail(Errc::BrokenChain, "factors must be monic and nonconstant");
    if (j > 0 && !divides(factors[j - 1], factors[j])) fail(Errc::BrokenChain, "factors do not form a divisibility chain");
  }
  std::vector<Poly> out = factors;
  const std::size_t r = factors.size();
  for (std::size_t i = 0; i < r; ++i) {
    const Poly pi = i == 0 ? Poly::one(f) : factors[i - 1];
    if (divides(pi * xm1, factors[i])) {
      if (i == 0)
        out.insert(out.begin(), xm1);
      else
        out[i - 1] = pi * xm1;
      return out;
    }
  }
  if (r == 0)
    out.push_back(xm1);
  else
    out[r - 1] = out[r - 1] * xm1;
  return out;
}

inline std::vector<Poly> strip_leading_xm1(std::vector<Poly> fs, FieldSpec f) {
  const Poly xm1 = Poly::linear(Scalar::one(f));
  std::size_t k = 0;
  while (k < fs.size() && fs[k] == xm1) ++k;
  fs.erase(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(k));
  return fs;
}

struct StableFrobenius {
  std::vector<Poly> invariant_factors;  // leading X−1 entries removed
  std::size_t stabilization_index = 0;  // padding steps before the form stops changing
  bool central = false;                 // only [e]_∞
};

inline StableFrobenius stable_frobenius(const StableElement& x) {
  const FieldSpec f = x.field();
  if (x.n_min() > 0 && det(x.rep_min()).is_zero()) fail(Errc::Singular, "representative is singular");
  std::vector<Poly> cur = x.n_min() ? invariant_factors(x.rep_min()) : std::vector<Poly>{};
  StableFrobenius out;
  // once padding only adds a leading X−1, every later step does the same
  auto stripped = strip_leading_xm1(cur, f);
  while (true) {
    cur = pad_rule(cur, f);
    auto next = strip_leading_xm1(cur, f);
    if (next == stripped) break;
    stripped = std::move(next);
    ++out.stabilization_index;
  }
  out.invariant_factors = std::move(stripped);
  out.central = out.invariant_factors.empty();
  return out;
}

inline bool stable_is_similar(const StableElement& a, const StableElement& b) {
  require_same_field(a.field(), b.field());
  return stable_frobenius(a).invariant_factors == stable_frobenius(b).invariant_factors;
}

struct StableMResult {
  StableFrobenius form;
  MReport report;
  Witness witness;            // finite witness in the chosen dimension
  std::size_t dimension = 0;  // of witness.sigma
};

/// m of the GL_∞ class: 1 for the transvection class, 2 otherwise, with a
/// verified finite witness.
inline StableMResult stable_m(const StableElement& x) {
  const FieldSpec f = x.field();
  StableMResult out;
  out.form = stable_frobenius(x);
  if (out.form.central) fail(Errc::CentralElement, "the identity is the only central element of GL_inf");
  const Poly xm1 = Poly::linear(Scalar::one(f));
  if (out.form.invariant_factors == std::vector<Poly>{xm1 * xm1}) {
    out.dimension = std::max<std::size_t>(x.n_min(), 3);
    out.report = detail::exact_report(1, {1}, "stable-transvection", "the stable class is T");
    out.witness = witness_m1(x.rep(out.dimension));
  } else {
    // padding with one identity block gives χ the root 1
    out.dimension = std::max<std::size_t>(x.n_min() + 1, 3);
    out.report = detail::exact_report(2, {1, -1}, "stable-root",
                                      "C != T and the padded representative has the eigenvalue 1");
    out.witness = witness_root(x.rep(out.dimension), Scalar::one(f));
  }
  out.witness.case_tag = out.report.case_tag;
  return out;
}

}  // namespace mcgl
