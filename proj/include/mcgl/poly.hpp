#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mcgl/error.hpp"
#include "mcgl/field.hpp"

namespace mcgl {

/// Dense univariate polynomial, constant term first, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldSpec f) : field_(f) {}
  Poly(FieldSpec f, std::vector<Scalar> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) require_same_field(field_, c.field());
    trim();
  }

  static Poly from_ints(FieldSpec f, std::initializer_list<long> lowest_first) {
    std::vector<Scalar> c;
    c.reserve(lowest_first.size());
    for (long v : lowest_first) c.emplace_back(f, v);
    return Poly(f, std::move(c));
  }
  static Poly constant(const Scalar& c) { return Poly(c.field(), {c}); }
  static Poly one(FieldSpec f) { return constant(Scalar::one(f)); }
  static Poly x(FieldSpec f) { return from_ints(f, {0, 1}); }
  /// X − a
  static Poly linear(const Scalar& a) { return Poly(a.field(), {-a, Scalar::one(a.field())}); }
  static Poly monomial(const Scalar& c, std::size_t k) {
    std::vector<Scalar> v(k + 1, Scalar::zero(c.field()));
    v[k] = c;
    return Poly(c.field(), std::move(v));
  }

  const FieldSpec& field() const { return field_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

  Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar::zero(field_); }
  const Scalar& leading() const {
    if (coeffs_.empty()) fail(Errc::ZeroPolynomial, "leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
  }

  Scalar eval(const Scalar& x) const {
    require_same_field(field_, x.field());
    Scalar acc = Scalar::zero(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly(field_);
    std::vector<Scalar> d;
    d.reserve(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Scalar(field_, static_cast<long>(k)));
    return Poly(field_, std::move(d));
  }

  Poly pow(unsigned e) const {
    Poly acc = one(field_), base = *this;
    while (e) {
      if (e & 1u) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  Poly operator-() const {
    Poly out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }
  Poly& operator+=(const Poly& o) {
    require_same_field(field_, o.field_);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar::zero(field_));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(a.field_, std::move(c));
  }
  friend Poly operator*(Poly a, const Scalar& s) {
    for (auto& c : a.coeffs_) c *= s;
    a.trim();
    return a;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Scalar& c = coeffs_[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      std::string mag = c.to_string();
      bool negative = !mag.empty() && mag[0] == '-';
      if (negative) mag.erase(0, 1);
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      const bool unit = mag == "1";
      if (k == 0) {
        out += mag;
      } else {
        if (!unit) out += mag + "*";
        out += k == 1 ? "X" : "X^" + std::to_string(k);
      }
    }
    return out;
  }

  std::vector<std::string> coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_string());
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  FieldSpec field_;
  std::vector<Scalar> coeffs_;
};

/// Deterministic order: by degree, then coefficients from the constant term up.
inline bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    if (canonical_less(a.coeffs()[k], b.coeffs()[k])) return true;
    if (canonical_less(b.coeffs()[k], a.coeffs()[k])) return false;
  }
  return false;
}

struct DivMod {
  Poly quotient;
  Poly remainder;
};

inline DivMod poly_divmod(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) fail(Errc::DivisionByZeroPoly, "division by the zero polynomial");
  const FieldSpec f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Scalar> r = a.coeffs();
  std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), Scalar::zero(f));
  const Scalar inv_lead = b.leading().inverse();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = q.size(); k-- > 0;) {
    const Scalar c = r[k + db] * inv_lead;
    q[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= c * b.coeffs()[j];
  }
  r.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

inline Poly operator%(const Poly& a, const Poly& b) { return poly_divmod(a, b).remainder; }

inline bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

/// a / b, which must be exact.
inline Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) fail(Errc::VerificationFailed, "inexact polynomial division");
  return q;
}

/// Monic greatest common divisor.
inline Poly poly_gcd(Poly a, Poly b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() && b.is_zero()) fail(Errc::BothZero, "gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return exact_div(a * b, poly_gcd(a, b)).monic();
}

/// Multiplicity of the factor f in a (a ≠ 0, deg f ≥ 1).
inline int multiplicity(Poly a, const Poly& f) {
  int m = 0;
  while (true) {
    auto [q, r] = poly_divmod(a, f);
    if (!r.is_zero()) return m;
    a = std::move(q);
    ++m;
  }
}

/// Coefficient reversal; requires a nonzero constant term.
inline Poly reciprocal(const Poly& p) {
  if (p.is_zero() || p.coeffs().front().is_zero())
    fail(Errc::ZeroConstantTerm, "reciprocal needs a nonzero constant term");
  std::vector<Scalar> c(p.coeffs().rbegin(), p.coeffs().rend());
  return Poly(p.field(), std::move(c));
}

namespace detail {

inline std::vector<mpz_class> prime_factors(mpz_class n) {
  std::vector<mpz_class> out;
  if (n < 0) n = -n;
  for (mpz_class d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out{1};
  mpz_class rest = n;
  for (mpz_class d = 2; d * d <= rest; ++d) {
    int e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    if (e == 0) continue;
    const std::size_t base = out.size();
    mpz_class pw = 1;
    for (int k = 1; k <= e; ++k) {
      pw *= d;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
    }
  }
  if (rest > 1) {
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * rest);
  }
  return out;
}

/// Integer coefficients of c·P with c the lcm of denominators (ℚ only).
inline std::vector<mpz_class> integer_coefficients(const Poly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational_value().get_den_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    mpq_class v = c.rational_value() * l;
    out.push_back(v.get_num());
  }
  return out;
}

inline Poly powmod(Poly base, const mpz_class& e, const Poly& mod) {
  Poly acc = Poly::one(mod.field()) % mod;
  base = base % mod;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = (acc * acc) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = (acc * base) % mod;
  }
  return acc;
}

/// Largest total count of monic candidates the trial-division factorizer will enumerate.
inline constexpr std::uint64_t kTrialCandidateCap = 200000;

inline bool trial_division_feasible(std::uint32_t p, int degree) {
  std::uint64_t total = 0, pk = 1;
  for (int k = 1; 2 * k <= degree; ++k) {
    pk *= p;
    total += pk;
    if (total > kTrialCandidateCap) return false;
  }
  return true;
}

/// Complete factorization over 𝔽_p by trial division with every monic
/// polynomial of increasing degree. The first divisor found at each degree,
/// after all smaller degrees are divided out, is irreducible.
inline std::vector<std::pair<Poly, int>> factor_fp_trial(Poly rem) {
  const FieldSpec f = rem.field();
  const std::uint32_t p = f.p();
  std::vector<std::pair<Poly, int>> out;
  for (int k = 1; 2 * k <= rem.degree(); ++k) {
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(k), 0);
    bool more = true;
    while (more && 2 * k <= rem.degree()) {
      std::vector<Scalar> c;
      c.reserve(static_cast<std::size_t>(k) + 1);
      for (auto d : digits) c.emplace_back(f, static_cast<long>(d));
      c.push_back(Scalar::one(f));
      Poly cand(f, std::move(c));
      int m = 0;
      while (true) {
        auto [q, r] = poly_divmod(rem, cand);
        if (!r.is_zero()) break;
        rem = std::move(q);
        ++m;
      }
      if (m > 0) out.emplace_back(std::move(cand), m);
      // odometer
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
      more = i < digits.size();
    }
  }
  if (rem.degree() > 0) {
    bool merged = false;
    for (auto& [g, m] : out)
      if (g == rem) {
        ++m;
        merged = true;
      }
    if (!merged) out.emplace_back(rem, 1);
  }
  return out;
}

/// p-th root of a polynomial whose derivative vanishes over 𝔽_p.
inline Poly pth_root(const Poly& a) {
  const std::uint32_t p = a.field().p();
  std::vector<Scalar> c;
  for (std::size_t k = 0; k < a.coeffs().size(); k += p) c.push_back(a.coeffs()[k]);
  return Poly(a.field(), std::move(c));
}

/// Square-free decomposition over 𝔽_p: pairs (square-free g, multiplicity).
inline std::vector<std::pair<Poly, int>> squarefree_fp(const Poly& a) {
  std::vector<std::pair<Poly, int>> out;
  if (a.degree() <= 0) return out;
  const Poly d = a.derivative();
  if (d.is_zero()) {
    const auto inner = squarefree_fp(pth_root(a));
    for (const auto& [g, m] : inner) out.emplace_back(g, m * static_cast<int>(a.field().p()));
    return out;
  }
  Poly c = poly_gcd(a, d);
  Poly w = exact_div(a, c);
  int i = 1;
  while (!w.is_one()) {
    Poly y = poly_gcd(w, c);
    Poly fac = exact_div(w, y);
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    w = std::move(y);
    c = exact_div(c, w);
    ++i;
  }
  if (c.degree() > 0) {
    const auto inner = squarefree_fp(pth_root(c));
    for (const auto& [g, m] : inner) out.emplace_back(g, m * static_cast<int>(a.field().p()));
  }
  return out;
}

/// Equal-degree splitting (Cantor–Zassenhaus, odd p) with a fixed seed.
inline void split_equal_degree(const Poly& g, int k, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == k) {
    out.push_back(g.monic());
    return;
  }
  const FieldSpec f = g.field();
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), f.p(), static_cast<unsigned long>(k));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint32_t> dist(0, f.p() - 1);
  while (true) {
    std::vector<Scalar> c;
    for (int i = 0; i < g.degree(); ++i) c.emplace_back(f, static_cast<long>(dist(rng)));
    Poly a(f, std::move(c));
    if (a.degree() <= 0) continue;
    Poly h = powmod(a, e, g) - Poly::one(f);
    if (h.is_zero()) continue;
    Poly d = poly_gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_equal_degree(d, k, rng, out);
      split_equal_degree(exact_div(g, d).monic(), k, rng, out);
      return;
    }
  }
}

/// Distinct-degree plus equal-degree factorization of a square-free monic polynomial.
inline std::vector<Poly> factor_squarefree_cz(Poly g) {
  const FieldSpec f = g.field();
  std::vector<Poly> out;
  std::mt19937_64 rng(0x5eed5eedULL);
  const mpz_class p(f.p());
  Poly h = Poly::x(f);
  for (int k = 1; 2 * k <= g.degree(); ++k) {
    h = powmod(h, p, g);
    Poly d = poly_gcd(g, h - Poly::x(f));
    if (d.degree() > 0) {
      split_equal_degree(d, k, rng, out);
      g = exact_div(g, d).monic();
      h = h % g;
    }
  }
  if (g.degree() > 0) out.push_back(g.monic());
  return out;
}

inline std::vector<std::pair<Poly, int>> factor_fp_cz(const Poly& a) {
  std::map<std::string, std::pair<Poly, int>> acc;
  for (const auto& [s, m] : squarefree_fp(a))
    for (auto& g : factor_squarefree_cz(s)) {
      auto key = g.to_string();
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, std::make_pair(g, m));
      else
        it->second.second += m;
    }
  std::vector<std::pair<Poly, int>> out;
  for (auto& [k, v] : acc) out.push_back(v);
  return out;
}

}  // namespace detail

/// All roots of P in K, each once, ascending.
inline std::vector<Scalar> roots_in_K(const Poly& p) {
  if (p.is_zero()) fail(Errc::ZeroPolynomial, "roots of the zero polynomial");
  const FieldSpec f = p.field();
  std::vector<Scalar> roots;
  if (p.degree() == 0) return roots;
  if (f.is_prime()) {
    if (f.p() <= (1u << 20)) {
      for (std::uint32_t r = 0; r < f.p(); ++r) {
        Scalar x(f, static_cast<long>(r));
        if (p.eval(x).is_zero()) roots.push_back(x);
      }
      return roots;
    }
    Poly sq = p.monic();
    for (const auto& [g, m] : detail::factor_fp_cz(sq))
      if (g.degree() == 1) roots.push_back(-g.coeff(0));
    std::sort(roots.begin(), roots.end(), canonical_less);
    return roots;
  }
  // rational root theorem on the integer-scaled polynomial
  auto z = detail::integer_coefficients(p);
  std::size_t shift = 0;
  while (shift < z.size() && z[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(Scalar::zero(f));
  z.erase(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(shift));
  if (z.size() > 1) {
    const auto nums = detail::positive_divisors(z.front());
    const auto dens = detail::positive_divisors(z.back());
    for (const auto& u : nums)
      for (const auto& v : dens)
        for (int sign : {1, -1}) {
          Scalar cand = Scalar::rational(mpq_class(sign * u, v));
          if (p.eval(cand).is_zero() &&
              std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end(), canonical_less);
  return roots;
}

/// Eisenstein's criterion at the prime q for a monic integer polynomial.
inline bool eisenstein_test(const Poly& p, const mpz_class& q) {
  if (!p.field().is_rational()) fail(Errc::FieldMismatch, "Eisenstein test is defined over Q");
  if (q < 2 || mpz_probab_prime_p(q.get_mpz_t(), 30) == 0) fail(Errc::NotPrime, q.get_str() + " is not prime");
  if (!p.is_monic()) fail(Errc::NotMonic, "Eisenstein test expects a monic polynomial");
  for (const auto& c : p.coeffs())
    if (!c.is_integer()) fail(Errc::NonIntegerCoefficients, p.to_string());
  if (p.degree() < 1) return false;
  const auto& cs = p.coeffs();
  for (std::size_t k = 0; k + 1 < cs.size(); ++k)
    if (cs[k].rational_value().get_num() % q != 0) return false;
  if (cs.back().rational_value().get_num() % q == 0) return false;
  return cs.front().rational_value().get_num() % (q * q) != 0;
}

namespace detail {

/// Monic integer polynomial L^d·P(X/L) with the same irreducibility as monic P over ℚ.
inline Poly integral_monic_rescale(const Poly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational_value().get_den_mpz_t());
  std::vector<Scalar> c;
  const int d = p.degree();
  for (int k = 0; k <= d; ++k) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(d - k));
    c.push_back(Scalar::rational(p.coeffs()[static_cast<std::size_t>(k)].rational_value() * mpq_class(scale)));
  }
  return Poly(p.field(), std::move(c));
}

/// Does Eisenstein certify irreducibility at some prime dividing the constant term?
inline bool eisenstein_somewhere(const Poly& monic_p) {
  const Poly z = integral_monic_rescale(monic_p);
  const mpz_class c0 = z.coeffs().front().rational_value().get_num();
  if (c0 == 0) return false;
  for (const auto& q : prime_factors(c0))
    if (eisenstein_test(z, q)) return true;
  return false;
}

/// Yun's square-free decomposition in characteristic 0.
inline std::vector<std::pair<Poly, int>> squarefree_q(const Poly& a) {
  std::vector<std::pair<Poly, int>> out;
  if (a.degree() <= 0) return out;
  const Poly da = a.derivative();
  Poly g = poly_gcd(a, da);
  Poly b = exact_div(a, g).monic();
  Poly c = exact_div(da, g);
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly ai = d.is_zero() ? b : poly_gcd(b, d);
    if (ai.degree() > 0) out.emplace_back(ai, i);
    Poly nb = exact_div(b, ai);
    c = exact_div(d, ai);
    b = nb;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace detail

/// Complete factorization of a monic polynomial into monic irreducibles,
/// sorted by poly_less. Over ℚ the provided tests (rational roots, degree ≤ 3,
/// Eisenstein) must settle every square-free piece, otherwise
/// FactorizationUnavailable is thrown.
inline std::vector<std::pair<Poly, int>> factorize(const Poly& p) {
  if (!p.is_monic()) fail(Errc::NotMonic, p.to_string());
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() <= 0) return out;
  const FieldSpec f = p.field();
  if (f.is_prime()) {
    out = detail::trial_division_feasible(f.p(), p.degree()) ? detail::factor_fp_trial(p) : detail::factor_fp_cz(p);
  } else {
    for (const auto& [s, m] : detail::squarefree_q(p)) {
      Poly rest = s;
      for (const auto& r : roots_in_K(s)) {
        out.emplace_back(Poly::linear(r), m);
        rest = exact_div(rest, Poly::linear(r));
      }
      rest = rest.monic();
      if (rest.degree() <= 0) continue;
      if (rest.degree() <= 3 || detail::eisenstein_somewhere(rest))
        out.emplace_back(rest, m);
      else
        fail(Errc::FactorizationUnavailable, "cannot factor " + rest.to_string() + " over Q");
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

struct Irreducibility {
  enum class Verdict { Irreducible, Reducible, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::optional<Poly> factor;  // set for Reducible: a proper monic divisor
};

inline Irreducibility irreducibility(const Poly& p) {
  using V = Irreducibility::Verdict;
  if (p.is_zero() || p.degree() == 0) fail(Errc::ConstantPolynomial, "irreducibility of a constant");
  if (!p.is_monic()) fail(Errc::NotMonic, p.to_string());
  if (p.degree() == 1) return {V::Irreducible, std::nullopt};
  if (p.degree() <= 3) {
    const auto r = roots_in_K(p);
    if (r.empty()) return {V::Irreducible, std::nullopt};
    return {V::Reducible, Poly::linear(r.front())};
  }
  if (p.field().is_prime()) {
    const auto fac = factorize(p);
    if (fac.size() == 1 && fac.front().second == 1) return {V::Irreducible, std::nullopt};
    return {V::Reducible, fac.front().first};
  }
  const auto r = roots_in_K(p);
  if (!r.empty()) return {V::Reducible, Poly::linear(r.front())};
  const Poly g = poly_gcd(p, p.derivative());
  if (g.degree() > 0) return {V::Reducible, g};
  if (detail::eisenstein_somewhere(p)) return {V::Irreducible, std::nullopt};
  return {V::Unknown, std::nullopt};
}

}  // namespace mcgl
