#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcgl/class_analyzer.hpp"
#include "mcgl/error.hpp"
#include "mcgl/field.hpp"
#include "mcgl/mat.hpp"
#include "mcgl/normal_forms.hpp"
#include "mcgl/poly.hpp"

namespace mcgl {

struct WitnessFactor {
  int sign;        // +1 or −1
  Mat conjugator;  // in SL_n(K)
};

/// t_12(1) = ∏ (σ^{sign_k})^{conjugator_k}
struct Witness {
  Mat sigma;
  std::vector<WitnessFactor> factors;
  std::string case_tag;
  std::string construction;

  SignPattern signs() const {
    SignPattern s;
    for (const auto& f : factors) s.push_back(f.sign);
    return s;
  }
};

inline Mat t12(FieldSpec f, std::size_t n) { return transvection(f, n, 1, 2, 1); }

/// Product ∏ (σ^{sign})^{conjugator} (no determinant check).
inline Mat evaluate_factors(const Mat& sigma, const std::vector<WitnessFactor>& factors) {
  const Mat inv = inverse(sigma);
  Mat acc = Mat::identity(sigma.field(), sigma.n());
  for (const auto& f : factors) acc = acc * conj(f.sign > 0 ? sigma : inv, f.conjugator);
  return acc;
}

inline bool verify_witness(const Witness& w) {
  try {
    if (!w.sigma.is_square() || w.sigma.n() < 2 || w.factors.empty()) return false;
    for (const auto& f : w.factors) {
      if (f.sign != 1 && f.sign != -1) return false;
      if (!(f.conjugator.field() == w.sigma.field()) || f.conjugator.n() != w.sigma.n()) return false;
      if (!det(f.conjugator).is_one()) return false;
    }
    return evaluate_factors(w.sigma, w.factors) == t12(w.sigma.field(), w.sigma.n());
  } catch (const Error&) {
    return false;
  }
}

inline void require_verified(const Witness& w, const std::string& what) {
  if (!verify_witness(w)) fail(Errc::VerificationFailed, what + " produced an invalid witness");
}

/// Given a verified witness for τ = σ^g, rewrite it for σ with SL
/// conjugators: g = ε·d_n(a), ε_k ↦ ε·d_n(a)·ε_k·d_n(a)⁻¹.
inline Witness to_E_conjugators(const Witness& base, const Mat& sigma, const Mat& g) {
  const std::size_t n = sigma.n();
  if (n < 3) fail(Errc::DimensionTooSmall, "pull-back needs n >= 3");
  const Scalar a = det(g);
  const Mat dn = diag_one(n, n, a), dn_inv = diag_one(n, n, a.inverse());
  const Mat eps = g * dn_inv;
  Witness out;
  out.sigma = sigma;
  out.case_tag = base.case_tag;
  out.construction = base.construction;
  for (const auto& f : base.factors) out.factors.push_back({f.sign, eps * dn * f.conjugator * dn_inv});
  require_verified(out, "to_E_conjugators");
  return out;
}

namespace detail {

inline void require_noncentral_invertible(const Mat& s) {
  require_square(s);
  if (s.n() < 3) fail(Errc::DimensionTooSmall, "witnesses need n >= 3");
  if (det(s).is_zero()) fail(Errc::Singular, "matrix is singular");
  if (s.is_central()) fail(Errc::CentralMatrix, "scalar matrices have no witness");
}

/// ζ = σ^g and the raw factors multiply (on ζ) to a nontrivial transvection
/// t_kl(c); normalize it to t_12(1) and pull everything back to σ.
inline Witness finish(const Mat& sigma, const Mat& g, const Mat& zeta, std::vector<WitnessFactor> raw,
                      const std::string& construction) {
  const auto info = as_transvection(evaluate_factors(zeta, raw));
  if (!info) fail(Errc::VerificationFailed, construction + ": product is not a nontrivial transvection");
  const Mat nrm = transvection_normalizer(info->i, info->j, info->c, zeta.n());
  Witness w;
  w.sigma = zeta;
  w.construction = construction;
  for (auto& f : raw) w.factors.push_back({f.sign, f.conjugator * nrm});
  require_verified(w, construction);
  return to_E_conjugators(w, sigma, g);
}

inline Mat blocks(const std::vector<Mat>& bs, FieldSpec f) { return direct_sum(bs, f); }

}  // namespace detail

/// Length-1 witness for σ ∈ T.
inline Witness witness_m1(const Mat& sigma) {
  detail::require_noncentral_invertible(sigma);
  const std::size_t n = sigma.n();
  const FieldSpec f = sigma.field();
  const auto fr = frobenius_form(sigma);
  if (!is_transvection_factors(fr.invariant_factors, n, f)) fail(Errc::NotInT, "matrix is not a transvection");
  // F(T)^{t_{n−1,n}(−1)} = t_{n,n−1}(1)
  const Mat rho = fr.transform * transvection(f, n, n - 1, n, -1) * transvection_normalizer(n, n - 1, Scalar::one(f), n);
  Witness base;
  base.sigma = t12(f, n);
  base.construction = "transvection";
  base.factors.push_back({1, Mat::identity(f, n)});
  require_verified(base, "witness_m1");
  return to_E_conjugators(base, sigma, rho);
}

/// Length-2 witness with pattern (+,−) from a root a of χ_σ.
inline Witness witness_root(const Mat& sigma, const Scalar& a) {
  detail::require_noncentral_invertible(sigma);
  const FieldSpec f = sigma.field();
  const std::size_t n = sigma.n();
  const auto fr = frobenius_form(sigma);
  const Poly xa = Poly::linear(a);
  Poly chi = Poly::one(f);
  for (const auto& p : fr.invariant_factors) chi = chi * p;
  if (!chi.eval(a).is_zero()) fail(Errc::NoRoot, a.to_string() + " is not a root of the characteristic polynomial");

  // σ ~ J((X−a)^q) ⊕ τ with q the multiplicity of X−a in the largest invariant factor
  const Poly& top = fr.invariant_factors.back();
  const int q = multiplicity(top, xa);
  std::vector<Mat> tau_blocks;
  for (std::size_t i = 0; i + 1 < fr.invariant_factors.size(); ++i) tau_blocks.push_back(companion(fr.invariant_factors[i]));
  const Poly rest = exact_div(top, xa.pow(static_cast<unsigned>(q)));
  if (rest.degree() > 0) tau_blocks.push_back(companion(rest));
  std::vector<Poly> r_factors;
  if (!tau_blocks.empty()) r_factors = frobenius_form(detail::blocks(tau_blocks, f)).invariant_factors;

  bool all_linear = true;
  std::size_t wide = r_factors.size();
  for (std::size_t j = 0; j < r_factors.size(); ++j)
    if (r_factors[j].degree() >= 2) {
      all_linear = false;
      if (wide == r_factors.size()) wide = j;
    }
  // the block of degree ≥ 2 goes first in τ
  std::vector<Mat> ordered;
  if (!all_linear) ordered.push_back(companion(r_factors[wide]));
  for (std::size_t j = 0; j < r_factors.size(); ++j)
    if (all_linear || j != wide) ordered.push_back(companion(r_factors[j]));
  const Mat tau = detail::blocks(ordered, f);
  const Mat rho = direct_sum(jordan_block(xa, q), tau);
  const Mat g0 = similarity_transform(sigma, rho);

  Mat h = Mat::identity(f, n), u;
  std::string name;
  if (q == 1 && all_linear) {
    u = transvection(f, n, 1, 2, 1);
    name = "root-1.1";
  } else if (q == 1) {
    h = transvection(n, 2, 3, -a);
    u = transvection(f, n, 2, 1, 1);
    name = "root-1.2";
  } else if (q == 2 && all_linear) {
    const Scalar b = -r_factors.front().coeff(0);
    h = transvection(n, 1, 2, a - b);
    u = transvection(f, n, 1, 3, 1);
    name = "root-2.1";
  } else if (q == 2) {
    h = transvection(n, 3, 4, -a);
    u = transvection(f, n, 3, 1, 1);
    name = "root-2.2";
  } else {
    u = transvection(f, n, 2, 1, 1);
    name = "root-3";
  }
  const Mat zeta = conj(rho, h);
  // [ζ,u] = ζ·(ζ⁻¹)^{u⁻¹}
  return detail::finish(sigma, g0 * h, zeta, {{1, Mat::identity(f, n)}, {-1, inverse(u)}}, name);
}

/// Length-4 witness with pattern (+,−,+,−) via [[σ',b],c].
inline Witness witness_four(const Mat& sigma) {
  detail::require_noncentral_invertible(sigma);
  const FieldSpec f = sigma.field();
  const std::size_t n = sigma.n();
  const auto fr = frobenius_form(sigma);
  for (const auto& p : fr.invariant_factors)
    if (p.degree() == 1) fail(Errc::HasDegreeOneFactor, "an invariant factor is linear; use witness_root");
  std::size_t wide = fr.invariant_factors.size();
  for (std::size_t i = 0; i < fr.invariant_factors.size(); ++i)
    if (fr.invariant_factors[i].degree() >= 3) {
      wide = i;
      break;
    }
  Mat rho, b, c;
  std::string name;
  if (wide == fr.invariant_factors.size()) {
    rho = fr.form;
    b = transvection(f, n, 1, 4, 1);
    c = transvection(f, n, 1, 2, 1);
    name = "four-1";
  } else {
    std::vector<Mat> ordered{companion(fr.invariant_factors[wide])};
    for (std::size_t i = 0; i < fr.invariant_factors.size(); ++i)
      if (i != wide) ordered.push_back(companion(fr.invariant_factors[i]));
    rho = detail::blocks(ordered, f);
    const auto t = static_cast<std::size_t>(fr.invariant_factors[wide].degree());
    b = c = transvection(f, n, t - 1, t, 1);
    name = "four-2";
  }
  const Mat g0 = similarity_transform(sigma, rho);
  const Mat bi = inverse(b), ci = inverse(c);
  // [[a,b],c] = a·(a⁻¹)^{b⁻¹}·a^{b⁻¹c⁻¹}·(a⁻¹)^{c⁻¹}
  return detail::finish(sigma, g0, rho, {{1, Mat::identity(f, n)}, {-1, bi}, {1, bi * ci}, {-1, ci}}, name);
}

// ---- n = 3 constructions ----

/// The 3×3 shape [[0,0,a],[d,0,b],[0,f,c]] with a, d, f ≠ 0.
struct LempermState {
  Scalar a, d, f, b, c;

  static std::optional<LempermState> of(const Mat& m) {
    if (!m.is_square() || m.n() != 3) return std::nullopt;
    for (auto [r, k] : {std::pair{0, 0}, {0, 1}, {1, 1}, {2, 0}})
      if (!m.at(r, k).is_zero()) return std::nullopt;
    LempermState s{m.at(0, 2), m.at(1, 0), m.at(2, 1), m.at(1, 2), m.at(2, 2)};
    if (s.a.is_zero() || s.d.is_zero() || s.f.is_zero()) return std::nullopt;
    return s;
  }

  Mat matrix() const {
    Mat m(a.field(), 3);
    m.at(0, 2) = a;
    m.at(1, 0) = d;
    m.at(2, 1) = f;
    m.at(1, 2) = b;
    m.at(2, 2) = c;
    return m;
  }
};

struct LempermMove {
  enum class Kind { Rotate, Scale };
  Kind kind;
  std::optional<Scalar> x;  // Scale only
};

/// One move of the antidiagonal lemma; returns (M^ε, ε) with ε ∈ SL_3.
inline std::pair<Mat, Mat> lemperm_move(const Mat& m, const LempermMove& mv) {
  const auto s = LempermState::of(m);
  if (!s) fail(Errc::ShapeMismatch, "matrix is not of the form [[0,0,a],[d,0,b],[0,f,c]] with a,d,f != 0");
  const FieldSpec fl = m.field();
  Mat eps;
  LempermState expect = *s;
  if (mv.kind == LempermMove::Kind::Rotate) {
    const Scalar ai = s->a.inverse();
    eps = signed_perm(fl, 3, 3, 2) * signed_perm(fl, 3, 3, 1) * transvection(3, 2, 3, -ai * s->c) *
          transvection(3, 1, 3, ai * s->b) * diag_pair(fl, 3, 1, 3, -1);
    expect = {s->d, s->f, s->a, ai * s->b * s->f, s->c};
  } else {
    const Scalar x = mv.x.value();
    if (x.is_zero()) fail(Errc::ZeroParameter, "scale move needs x != 0");
    eps = diag_pair(3, 3, 1, x);
    expect = {s->a * x * x, s->d / x, s->f / x, s->b * x, s->c};
  }
  const Mat out = conj(m, eps);
  if (!(out == expect.matrix()) || !det(eps).is_one()) fail(Errc::VerificationFailed, "lemperm move");
  return {out, eps};
}

namespace detail {

/// Compositions R^i·S(x)·R^j (depth ≤ 5) mapping one lemperm shape to another.
inline std::optional<Mat> lemperm_search(const Mat& from, const Mat& to) {
  const auto src = LempermState::of(from);
  const auto dst = LempermState::of(to);
  if (!src || !dst) return std::nullopt;
  const FieldSpec f = from.field();
  const LempermMove rot{LempermMove::Kind::Rotate, std::nullopt};
  Mat cur = from, acc = Mat::identity(f, 3);
  for (int i = 0; i < 3; ++i) {
    const auto s = *LempermState::of(cur);
    std::vector<Scalar> xs{Scalar::one(f), -Scalar::one(f)};
    for (const Scalar& u : {s.a, s.d, s.f, s.b})
      for (const Scalar& v : {dst->a, dst->d, dst->f, dst->b}) {
        if (u.is_zero() || v.is_zero()) continue;
        for (const Scalar& x : {u / v, v / u}) {
          xs.push_back(x);
          xs.push_back(-x);
        }
      }
    for (const auto& x : xs) {
      auto [m1, e1] = lemperm_move(cur, {LempermMove::Kind::Scale, x});
      Mat e = acc * e1;
      for (int j = 0; j < 3; ++j) {
        if (m1 == to) return e;
        auto [m2, e2] = lemperm_move(m1, rot);
        m1 = m2;
        e = e * e2;
      }
    }
    auto [next, er] = lemperm_move(cur, rot);
    cur = next;
    acc = acc * er;
  }
  return std::nullopt;
}

/// Cap on centralizer candidates p(M), deg p < n.
inline constexpr std::size_t kCentralizerCap = 400000;

/// c ∈ K[M] with det c = target, scanning polynomials of degree < n in a
/// fixed order (all of 𝔽_p, or small integers over ℚ).
inline std::optional<Mat> centralizer_with_det(const Mat& m, const Scalar& target) {
  const FieldSpec f = m.field();
  const std::size_t n = m.n();
  std::vector<Mat> powers{Mat::identity(f, n)};
  for (std::size_t k = 1; k < n; ++k) powers.push_back(powers.back() * m);
  std::vector<long> values;
  if (f.is_prime()) {
    for (std::uint32_t v = 0; v < f.p(); ++v) values.push_back(static_cast<long>(v));
  } else {
    values = {0, 1, -1, 2, -2, 3, -3};
  }
  std::vector<std::size_t> digit(n, 0);
  for (std::size_t count = 0; count < kCentralizerCap; ++count) {
    Mat c(f, n);
    for (std::size_t k = 0; k < n; ++k)
      if (values[digit[k]] != 0) c += powers[k] * Scalar(f, values[digit[k]]);
    if (det(c) == target) return c;
    std::size_t k = 0;
    while (k < n && ++digit[k] == values.size()) digit[k++] = 0;
    if (k == n) break;
  }
  return std::nullopt;
}

}  // namespace detail

/// g with g⁻¹·m·g = target; with require_sl the result has determinant 1.
inline Mat solve_conjugator(const Mat& m, const Mat& target, bool require_sl) {
  require_same_shape(m, target);
  if (m == target) return Mat::identity(m.field(), m.n());
  if (!is_similar(m, target)) fail(Errc::NotSimilar, "matrices are not similar");
  if (require_sl)
    if (auto e = detail::lemperm_search(m, target)) return *e;
  Mat g = similarity_transform(m, target);
  if (!require_sl) return g;
  const Scalar dg = det(g);
  if (dg.is_one()) return g;
  const auto c = detail::centralizer_with_det(m, dg.inverse());
  if (!c) fail(Errc::SynthesisFailed, "no determinant-fixing centralizer element found");
  g = *c * g;
  if (!det(g).is_one() || !(conj(m, g) == target)) fail(Errc::VerificationFailed, "solve_conjugator");
  return g;
}

namespace detail {

struct CubicFrame {
  FrobeniusData fr;
  Scalar a, b, c;  // F = [[0,0,a],[1,0,b],[0,1,c]]
};

inline CubicFrame cubic_frame(const Mat& sigma) {
  require_square(sigma);
  if (sigma.n() != 3) fail(Errc::WrongDimension, "expects a 3x3 matrix");
  if (det(sigma).is_zero()) fail(Errc::Singular, "matrix is singular");
  auto fr = frobenius_form(sigma);
  if (fr.invariant_factors.size() != 1 || !roots_in_K(fr.invariant_factors[0]).empty())
    fail(Errc::PreconditionViolated, "characteristic polynomial must be irreducible");
  const Mat& F = fr.form;
  return {fr, F.at(0, 2), F.at(1, 2), F.at(2, 2)};
}

inline Mat mat3(FieldSpec f, std::initializer_list<std::initializer_list<Scalar>> rows) {
  Mat m(f, 3);
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (const auto& x : r) m.at(i, j++) = x;
    ++i;
  }
  return m;
}

}  // namespace detail

/// Length-2 witness (+,+) for n = 3, χ irreducible, det² = 1.
inline Witness witness_square_n3(const Mat& sigma) {
  const auto fm = detail::cubic_frame(sigma);
  const FieldSpec f = sigma.field();
  const Scalar &a = fm.a, &b = fm.b, &c = fm.c;
  if (!a.pow(2).is_one()) fail(Errc::PreconditionViolated, "det^2 must be 1");
  const Scalar z = Scalar::zero(f), o = Scalar::one(f);
  const Mat F = fm.fr.form;
  const Mat sigma0 = detail::mat3(f, {{z, z, a}, {o, z, o}, {z, o, -a}});
  const Mat xi = transvection(3, 1, 3, -b - o) * transvection(3, 2, 3, a + c) * diag_pair(f, 3, 1, 2, -1);
  const Mat d13 = diag_pair(f, 3, 1, 3, -1);
  if (!(sigma0 * xi == conj(F, d13)) || !(xi * xi).is_identity())
    fail(Errc::VerificationFailed, "square case: sigma0*xi identity");
  // (σ_0²)^{p_12 t_21(a)} = F(T); F(T)^{t_23(−1)} = t_32(1)
  Mat eps = perm(f, 3, 1, 2) * transvection(3, 2, 1, a) * transvection(f, 3, 2, 3, -1) *
            transvection_normalizer(3, 2, o, 3);
  eps = eps * diag_one(3, 3, det(eps).inverse());
  if (!(conj(sigma0 * sigma0, eps) == t12(f, 3))) fail(Errc::VerificationFailed, "square case: sigma0^2 conjugator");
  Witness w;
  w.sigma = F;
  w.construction = "square";
  w.factors.push_back({1, d13 * eps});
  w.factors.push_back({1, d13 * eps * conj(xi, eps)});
  require_verified(w, "witness_square_n3");
  return to_E_conjugators(w, sigma, fm.fr.transform);
}

/// Length-3 witness (+,+,+) for n = 3, χ irreducible, det² ≠ 1, det³ = 1.
inline Witness witness_cube_n3(const Mat& sigma) {
  require_square(sigma);
  if (sigma.field().is_rational())
    fail(Errc::Unreachable, "over Q det^3 = 1 forces det = 1, so the cube case cannot occur");
  const auto fm = detail::cubic_frame(sigma);
  const FieldSpec f = sigma.field();
  const Scalar &a = fm.a, &b = fm.b, &c = fm.c;
  if (!a.pow(3).is_one() || a.pow(2).is_one())
    fail(Errc::PreconditionViolated, "needs det^3 = 1 and det^2 != 1");
  const Scalar z = Scalar::zero(f), o = Scalar::one(f), ai = a.inverse();
  const Mat F = fm.fr.form;
  const Mat d13 = diag_pair(f, 3, 1, 3, -1);
  const Mat t = t12(f, 3);

  Mat sigma0, xi, pre, target, eps1, h;
  std::string name;
  if (!b.is_zero() || !c.is_zero()) {
    sigma0 = detail::mat3(f, {{z, z, a}, {o, z, z}, {z, o, z}});
    xi = transvection(3, 1, 3, -b) * transvection(3, 2, 3, c) * diag_pair(f, 3, 1, 2, -1);
    pre = signed_perm(f, 3, 3, 2);
    target = detail::mat3(f, {{z, z, a * a}, {o, z, z}, {z, o, z}});
    if (!b.is_zero()) {
      const Scalar bi = b.inverse();
      eps1 = signed_perm(f, 3, 2, 3) * transvection(3, 3, 1, bi * c) * diag_pair(3, 3, 2, -b);
      h = transvection(3, 3, 1, bi * bi * c);
      name = "cube-1";
    } else {
      eps1 = transvection(3, 3, 1, c * ai) * diag_pair(3, 3, 2, c);
      h = t * signed_perm(f, 3, 2, 3);
      name = "cube-2";
    }
  } else {
    sigma0 = detail::mat3(f, {{z, z, a}, {o, z, o}, {z, o, z}});
    xi = transvection(f, 3, 1, 3, -1) * diag_pair(f, 3, 1, 2, -1);
    pre = signed_perm(f, 3, 3, 2) * transvection(3, 2, 3, -ai);
    target = detail::mat3(f, {{z, z, a * a}, {o, z, -o}, {z, o, o + o}});
    eps1 = diag_pair(3, 1, 3, -a) * transvection(3, 2, 3, -(o + o) * ai);
    h = transvection(3, 2, 3, (o + o) * ai) * transvection(3, 1, 3, (o + o) * ai) * signed_perm(f, 3, 2, 1);
    name = "cube-3";
  }
  if (!(sigma0 * xi == conj(F, d13)) || !(xi * xi).is_identity())
    fail(Errc::VerificationFailed, name + ": sigma0*xi identity");
  // (σ_0²)^ε = target
  const Mat eps = pre * solve_conjugator(conj(sigma0 * sigma0, pre), target, true);
  // (t·(σ⁻¹)^{ε'})^{ε''} = target
  const Mat m2 = conj(t * conj(inverse(F), eps1), h);
  const Mat eps2 = h * solve_conjugator(m2, target, true);
  if (!(conj(sigma0 * sigma0, eps) == target) || !(conj(t * conj(inverse(F), eps1), eps2) == target))
    fail(Errc::VerificationFailed, name + ": conjugator synthesis");
  const Mat eps2i = inverse(eps2);
  Witness w;
  w.sigma = F;
  w.construction = name;
  w.factors.push_back({1, d13 * eps * eps2i});
  w.factors.push_back({1, d13 * eps * conj(xi, eps) * eps2i});
  w.factors.push_back({1, eps1});
  require_verified(w, "witness_cube_n3");
  return to_E_conjugators(w, sigma, fm.fr.transform);
}

/// Runs the construction matching the class report.
inline Witness synthesize(const Mat& sigma, const MReport& report) {
  detail::require_noncentral_invertible(sigma);
  Witness w;
  if (report.exact() && report.m == 1) {
    w = witness_m1(sigma);
  } else if (const auto roots = roots_in_K(charpoly_minors(sigma)); !roots.empty()) {
    w = witness_root(sigma, roots.front());
  } else if (sigma.n() == 3 && det(sigma).pow(2).is_one()) {
    w = witness_square_n3(sigma);
  } else if (sigma.n() == 3 && det(sigma).pow(3).is_one()) {
    w = witness_cube_n3(sigma);
  } else {
    w = witness_four(sigma);
  }
  w.case_tag = report.case_tag;
  return w;
}

inline Witness synthesize(const Mat& sigma) { return synthesize(sigma, classify_m(sigma)); }

}  // namespace mcgl
