#pragma once

#include <string>
#include <vector>

#include "mcgl/error.hpp"
#include "mcgl/field.hpp"
#include "mcgl/mat.hpp"
#include "mcgl/normal_forms.hpp"
#include "mcgl/poly.hpp"

namespace mcgl {

using SignPattern = std::vector<int>;

inline std::string pattern_string(const SignPattern& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::string(s[i] > 0 ? "+" : "-");
  return out + ")";
}

/// All ±1 vectors of the given length, lexicographic with + before −.
inline std::vector<SignPattern> all_patterns(std::size_t length) {
  std::vector<SignPattern> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << length); ++mask) {
    SignPattern p(length);
    for (std::size_t i = 0; i < length; ++i) p[i] = (mask >> (length - 1 - i)) & 1 ? -1 : 1;
    out.push_back(p);
  }
  return out;
}

/// [X−1]^{n−2} followed by (X−1)².
inline bool is_transvection_factors(const std::vector<Poly>& fs, std::size_t n, FieldSpec f) {
  if (n < 2 || fs.size() != n - 1) return false;
  const Poly xm1 = Poly::linear(Scalar::one(f));
  for (std::size_t i = 0; i + 1 < fs.size(); ++i)
    if (!(fs[i] == xm1)) return false;
  return fs.back() == xm1 * xm1;
}

struct ClassDescriptor {
  std::size_t n = 0;
  FieldSpec field;
  std::vector<Poly> invariant_factors;
  Poly charpoly;
  Scalar det;
  Scalar trace;
  bool is_transvection_class = false;
};

inline ClassDescriptor describe_class(const Mat& s) {
  require_square(s);
  if (s.n() < 3) fail(Errc::DimensionTooSmall, "class analysis needs n >= 3");
  ClassDescriptor d;
  d.n = s.n();
  d.field = s.field();
  d.det = det(s);
  if (d.det.is_zero()) fail(Errc::Singular, "matrix is singular");
  if (s.is_central()) fail(Errc::CentralMatrix, "scalar matrices have no m(C)");
  d.invariant_factors = frobenius_form(s).invariant_factors;
  d.charpoly = Poly::one(s.field());
  for (const auto& p : d.invariant_factors) d.charpoly = d.charpoly * p;
  d.trace = s.trace();
  d.is_transvection_class = is_transvection_factors(d.invariant_factors, d.n, d.field);
  return d;
}

struct ExcludedPattern {
  SignPattern signs;
  std::string reason;
};

struct MReport {
  enum class Kind { Exact, Bounds };
  Kind kind = Kind::Bounds;
  int m = 0;            // Exact only
  SignPattern pattern;  // Exact only: the pattern realized by the construction
  int lower = 1, upper = 4;
  std::vector<ExcludedPattern> excluded;
  bool irreducibility_unknown = false;
  std::string case_tag;
  std::string rationale;

  bool exact() const { return kind == Kind::Exact; }
};

namespace detail {

inline MReport exact_report(int m, SignPattern p, std::string tag, std::string why) {
  MReport r;
  r.kind = MReport::Kind::Exact;
  r.m = r.lower = r.upper = m;
  r.pattern = std::move(p);
  r.case_tag = std::move(tag);
  r.rationale = std::move(why);
  return r;
}

inline int sign_sum(const SignPattern& s) {
  int t = 0;
  for (int x : s) t += x;
  return t;
}

}  // namespace detail

/// Exact m(C) for n = 3.
inline MReport classify_m_n3(const Mat& s) {
  require_square(s);
  if (s.n() != 3) fail(Errc::WrongDimension, "classify_m_n3 expects a 3x3 matrix");
  const auto d = describe_class(s);
  if (d.is_transvection_class) return detail::exact_report(1, {1}, "n3-i", "C = T");
  if (!roots_in_K(d.charpoly).empty())
    return detail::exact_report(2, {1, -1}, "n3-ii", "chi_C has a root in K, so T lies in C C^-1");
  const Scalar d2 = d.det.pow(2), d3 = d.det.pow(3);
  if (d2.is_one())
    return detail::exact_report(2, {1, 1}, "n3-iii", "chi_C has no root in K and det(C)^2 = 1, so T lies in C C");
  if (d3.is_one())
    return detail::exact_report(3, {1, 1, 1}, "n3-iv",
                                "chi_C has no root in K, det(C)^2 != 1 and det(C)^3 = 1, so T lies in C C C");
  return detail::exact_report(4, {1, -1, 1, -1}, "n3-v",
                              "chi_C has no root in K, det(C)^2 != 1 and det(C)^3 != 1");
}

/// m(C) for n >= 3: exact where a root, the transvection class, or the
/// irreducible/det test settles it; otherwise bounds with the excluded patterns.
inline MReport classify_m_general(const Mat& s) {
  const auto d = describe_class(s);
  if (d.is_transvection_class) return detail::exact_report(1, {1}, "gen-transvection", "C = T");
  if (!roots_in_K(d.charpoly).empty())
    return detail::exact_report(2, {1, -1}, "gen-root", "chi_C has a root in K, so T lies in C C^-1");
  const auto irr = irreducibility(d.charpoly);
  const bool irreducible = irr.verdict == Irreducibility::Verdict::Irreducible;
  const Scalar d2 = d.det.pow(2), d3 = d.det.pow(3);
  if (irreducible && !d2.is_one() && !d3.is_one())
    return detail::exact_report(4, {1, -1, 1, -1}, "gen-eisenstein-4",
                                "chi_C irreducible, det(C)^2 != 1 and det(C)^3 != 1");
  MReport r;
  r.kind = MReport::Kind::Bounds;
  r.case_tag = "gen-bounds";
  r.irreducibility_unknown = irr.verdict == Irreducibility::Verdict::Unknown;
  r.upper = 4;
  r.lower = 4;
  for (std::size_t len = 1; len <= 3; ++len) {
    bool any_open = false;
    for (const auto& p : all_patterns(len)) {
      std::string reason;
      const int sum = detail::sign_sum(p);
      if (len == 1)
        reason = "C != T";
      else if (len == 2 && sum == 0 && irreducible)
        reason = "chi_C irreducible, so T is not in C C^-1 or C^-1 C";
      else if (!d.det.pow(sum).is_one())
        reason = "det(C)^" + std::to_string(sum) + " != 1";
      if (reason.empty())
        any_open = true;
      else
        r.excluded.push_back({p, reason});
    }
    if (any_open && r.lower == 4) r.lower = static_cast<int>(len);
  }
  r.rationale = "no root in K; m(C) lies in [" + std::to_string(r.lower) + ", 4]";
  if (r.irreducibility_unknown) r.rationale += "; irreducibility of chi_C undecided";
  return r;
}

/// The n = 3 classification when it applies, the general classifier otherwise.
inline MReport classify_m(const Mat& s) {
  require_square(s);
  return s.n() == 3 ? classify_m_n3(s) : classify_m_general(s);
}

}  // namespace mcgl
