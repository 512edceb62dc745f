#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "mcgl/mcgl.hpp"

namespace mcgl {
inline void PrintTo(const Mat& m, std::ostream* os) { *os << "\n" << m.to_string(); }
inline void PrintTo(const Poly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.to_string(); }
}  // namespace mcgl

namespace testing_support {

using namespace mcgl;

inline FieldSpec Q() { return FieldSpec::rationals(); }
inline FieldSpec F(std::uint64_t p) { return FieldSpec::prime(p); }

inline Scalar S(FieldSpec f, long v) { return Scalar(f, v); }

inline Poly P(FieldSpec f, std::initializer_list<long> lowest_first) { return Poly::from_ints(f, lowest_first); }

inline Scalar random_scalar(FieldSpec f, std::mt19937_64& rng, long lo = -3, long hi = 3) {
  if (f.is_prime()) return Scalar(f, static_cast<long>(rng() % f.p()));
  std::uniform_int_distribution<long> d(lo, hi);
  return Scalar(f, d(rng));
}

inline Mat random_mat(FieldSpec f, std::size_t n, std::mt19937_64& rng, long lo = -3, long hi = 3) {
  Mat m(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_scalar(f, rng, lo, hi);
  return m;
}

inline Mat random_invertible(FieldSpec f, std::size_t n, std::mt19937_64& rng, long lo = -3, long hi = 3) {
  while (true) {
    Mat m = random_mat(f, n, rng, lo, hi);
    if (!det(m).is_zero()) return m;
  }
}

inline Mat random_noncentral(FieldSpec f, std::size_t n, std::mt19937_64& rng, long lo = -3, long hi = 3) {
  while (true) {
    Mat m = random_invertible(f, n, rng, lo, hi);
    if (!m.is_central()) return m;
  }
}

/// A random product of elementary transvections with small parameters.
inline Mat random_sl(FieldSpec f, std::size_t n, std::mt19937_64& rng, int length = 12) {
  Mat g = Mat::identity(f, n);
  for (int k = 0; k < length; ++k) {
    const std::size_t i = rng() % n + 1;
    std::size_t j = rng() % n + 1;
    if (i == j) j = j % n + 1;
    Scalar a = random_scalar(f, rng, -2, 2);
    if (a.is_zero()) a = Scalar::one(f);
    g = g * transvection(n, i, j, a);
  }
  return g;
}

/// Leibniz expansion; an independent determinant for small n.
inline Scalar leibniz_det(const Mat& m) {
  const std::size_t n = m.n();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = Scalar::zero(m.field());
  do {
    Scalar term = Scalar::one(m.field());
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      term *= m.at(i, perm[i]);
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    }
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Poly product(const std::vector<Poly>& ps, FieldSpec f) {
  Poly acc = Poly::one(f);
  for (const auto& p : ps) acc = acc * p;
  return acc;
}

/// The 𝔽_2, n = 4 pair with σ = t_12(1)·τ and χ = X⁴+X²+1.
inline Mat f2_sigma() {
  return Mat::from_ints(F(2), {{0, 1, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 0}});
}
inline Mat f2_tau() {
  return Mat::from_ints(F(2), {{0, 0, 1, 1}, {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 0}});
}

/// Every invertible noncentral 3×3 matrix over 𝔽_p (p small), in code order.
template <class Fn>
void for_each_noncentral3(FieldSpec f, Fn&& fn) {
  const std::uint32_t p = f.p();
  std::uint64_t total = 1;
  for (int k = 0; k < 9; ++k) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    Mat m(f, 3);
    std::uint64_t c = code;
    for (std::size_t k = 0; k < 9; ++k, c /= p) m.at(k / 3, k % 3) = Scalar(f, static_cast<long>(c % p));
    if (det(m).is_zero() || m.is_central()) continue;
    fn(m);
  }
}

/// One Frobenius form per noncentral conjugacy class of GL_3(𝔽_p).
inline std::vector<Mat> class_reps3(FieldSpec f) {
  const auto p = static_cast<long>(f.p());
  std::vector<Mat> out;
  for (long a0 = 1; a0 < p; ++a0)
    for (long a1 = 0; a1 < p; ++a1)
      for (long a2 = 0; a2 < p; ++a2) out.push_back(companion(P(f, {a0, a1, a2, 1})));
  for (long a = 1; a < p; ++a)
    for (long b = 1; b < p; ++b) {
      const Poly la = Poly::linear(Scalar(f, a));
      out.push_back(direct_sum(companion(la), companion(la * Poly::linear(Scalar(f, b)))));
    }
  return out;
}

}  // namespace testing_support
