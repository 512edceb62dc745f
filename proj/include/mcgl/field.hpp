#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "mcgl/error.hpp"

namespace mcgl {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// The coefficient field: either ℚ or a prime field 𝔽_p with p < 2^31.
class FieldSpec {
 public:
  enum class Kind : std::uint8_t { Rationals, Prime };

  constexpr FieldSpec() = default;

  static constexpr FieldSpec rationals() { return FieldSpec{}; }

  static FieldSpec prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31)) fail(Errc::NotPrime, "field characteristic must be below 2^31");
    if (!is_prime_u64(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    FieldSpec f;
    f.kind_ = Kind::Prime;
    f.p_ = static_cast<std::uint32_t>(p);
    return f;
  }

  /// Accepts "Q" or "F<p>" (e.g. "F5").
  static FieldSpec parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text.size() >= 2 && text[0] == 'F') {
      std::uint64_t p = 0;
      for (char c : text.substr(1)) {
        if (c < '0' || c > '9') fail(Errc::ParseError, "bad field spec '" + std::string(text) + "'");
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
        if (p >= (std::uint64_t{1} << 31)) fail(Errc::NotPrime, "field characteristic must be below 2^31");
      }
      return prime(p);
    }
    fail(Errc::ParseError, "bad field spec '" + std::string(text) + "'");
  }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_rational() const { return kind_ == Kind::Rationals; }
  constexpr bool is_prime() const { return kind_ == Kind::Prime; }
  /// Characteristic; 0 for ℚ.
  constexpr std::uint32_t p() const { return p_; }

  std::string name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

  constexpr bool operator==(const FieldSpec&) const = default;

 private:
  Kind kind_ = Kind::Rationals;
  std::uint32_t p_ = 0;
};

inline void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) fail(Errc::FieldMismatch, a.name() + " vs " + b.name());
}

/// An exact field element. ℚ values are kept in lowest terms with positive
/// denominator; 𝔽_p values are canonical residues in [0, p).
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}

  explicit Scalar(FieldSpec f) : field_(f) {
    if (f.is_rational())
      value_ = mpq_class(0);
    else
      value_ = std::uint32_t{0};
  }

  Scalar(FieldSpec f, long v) : field_(f) {
    if (f.is_rational())
      value_ = mpq_class(v);
    else
      value_ = reduce(v, f.p());
  }

  Scalar(FieldSpec f, const mpz_class& v) : field_(f) {
    if (f.is_rational()) {
      value_ = mpq_class(v);
    } else {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), f.p());
      value_ = static_cast<std::uint32_t>(r.get_ui());
    }
  }

  /// ℚ element from a (possibly unreduced) fraction.
  static Scalar rational(mpq_class q) {
    q.canonicalize();
    Scalar s;
    s.value_ = std::move(q);
    return s;
  }

  static Scalar zero(FieldSpec f) { return Scalar(f); }
  static Scalar one(FieldSpec f) { return Scalar(f, 1L); }

  /// "3/4", "-2" for ℚ; any integer for 𝔽_p (reduced to its residue).
  static Scalar parse(std::string_view text, FieldSpec f) {
    std::string s(text);
    if (s.empty()) fail(Errc::ParseError, "empty scalar");
    auto valid_int = [](std::string_view t) {
      if (t.empty()) return false;
      std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
      return true;
    };
    auto to_mpz = [](std::string t) {
      if (!t.empty() && t[0] == '+') t.erase(0, 1);
      return mpz_class(t, 10);
    };
    const auto slash = s.find('/');
    if (f.is_rational()) {
      if (slash == std::string::npos) {
        if (!valid_int(s)) fail(Errc::ParseError, "bad rational '" + s + "'");
        return Scalar(f, to_mpz(s));
      }
      const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
      if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        fail(Errc::ParseError, "bad rational '" + s + "'");
      const mpz_class d = to_mpz(den);
      if (d == 0) fail(Errc::DivisionByZero, "zero denominator in '" + s + "'");
      return rational(mpq_class(to_mpz(num), d));
    }
    if (slash != std::string::npos || !valid_int(s)) fail(Errc::ParseError, "bad residue '" + s + "'");
    return Scalar(f, to_mpz(s));
  }

  const FieldSpec& field() const { return field_; }

  bool is_zero() const {
    if (field_.is_rational()) return sgn(q()) == 0;
    return r() == 0;
  }
  bool is_one() const {
    if (field_.is_rational()) return q() == 1;
    return r() == 1;
  }
  bool is_integer() const { return !field_.is_rational() || q().get_den() == 1; }

  std::uint32_t residue() const { return r(); }
  const mpq_class& rational_value() const { return q(); }

  Scalar operator-() const {
    Scalar out(*this);
    if (field_.is_rational())
      std::get<mpq_class>(out.value_) = -q();
    else
      std::get<std::uint32_t>(out.value_) = r() == 0 ? 0 : field_.p() - r();
    return out;
  }

  Scalar& operator+=(const Scalar& o) {
    require_same_field(field_, o.field_);
    if (field_.is_rational()) {
      std::get<mpq_class>(value_) += o.q();
    } else {
      const std::uint64_t s = std::uint64_t{r()} + o.r();
      std::get<std::uint32_t>(value_) = static_cast<std::uint32_t>(s % field_.p());
    }
    return *this;
  }
  Scalar& operator-=(const Scalar& o) { return *this += -o; }
  Scalar& operator*=(const Scalar& o) {
    require_same_field(field_, o.field_);
    if (field_.is_rational()) {
      std::get<mpq_class>(value_) *= o.q();
    } else {
      const std::uint64_t s = std::uint64_t{r()} * o.r();
      std::get<std::uint32_t>(value_) = static_cast<std::uint32_t>(s % field_.p());
    }
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  Scalar inverse() const {
    if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
    if (field_.is_rational()) return rational(1 / q());
    // Fermat: r^(p-2)
    return pow(static_cast<long long>(field_.p()) - 2);
  }

  Scalar pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base(*this), acc = one(field_);
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    if (a.field_.is_rational()) return a.q() == b.q();
    return a.r() == b.r();
  }

  /// Total order within one field: by value over ℚ, by residue over 𝔽_p.
  friend bool canonical_less(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_);
    if (a.field_.is_rational()) return a.q() < b.q();
    return a.r() < b.r();
  }

  std::string to_string() const {
    if (field_.is_rational()) return q().get_str();
    return std::to_string(r());
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  static std::uint32_t reduce(long v, std::uint32_t p) {
    long m = v % static_cast<long>(p);
    if (m < 0) m += p;
    return static_cast<std::uint32_t>(m);
  }
  const mpq_class& q() const { return std::get<mpq_class>(value_); }
  std::uint32_t r() const { return std::get<std::uint32_t>(value_); }

  FieldSpec field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

bool canonical_less(const Scalar& a, const Scalar& b);

}  // namespace mcgl
