#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;

TEST(Scalar, ParseAndPrint) {
  EXPECT_EQ(Scalar::parse("6/8", Q()).to_string(), "3/4");
  EXPECT_EQ(Scalar::parse("-2", Q()).to_string(), "-2");
  EXPECT_EQ(Scalar::parse("-2", F(5)).to_string(), "3");
  EXPECT_EQ(Scalar::parse("12", F(5)).to_string(), "2");
  EXPECT_THROW(Scalar::parse("1/0", Q()), Error);
  EXPECT_THROW(Scalar::parse("x", Q()), Error);
  EXPECT_THROW(Scalar::parse("1/2", F(5)), Error);
}

TEST(Scalar, FieldSpecValidation) {
  EXPECT_THROW(FieldSpec::prime(4), Error);
  EXPECT_THROW(FieldSpec::parse("F1"), Error);
  EXPECT_EQ(FieldSpec::parse("F7").p(), 7u);
  EXPECT_TRUE(FieldSpec::parse("Q").is_rational());
  EXPECT_EQ(FieldSpec::prime(2147483647).p(), 2147483647u);
}

TEST(Scalar, MixedFieldsRejected) {
  try {
    (void)(S(F(5), 1) + S(F(7), 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FieldMismatch);
  }
  EXPECT_THROW((void)(S(Q(), 1) * S(F(3), 1)), Error);
}

TEST(Scalar, InverseOfZero) {
  try {
    (void)S(F(5), 0).inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZero);
  }
}

TEST(Scalar, LargePrimeNoOverflow) {
  const FieldSpec f = F(2147483647);
  const Scalar a(f, 2147483646L);
  EXPECT_EQ(a * a, Scalar(f, 1L));
  EXPECT_EQ(a * a.inverse(), Scalar::one(f));
}

TEST(Scalar, FieldAxiomsRandom) {
  std::mt19937_64 rng(11);
  for (FieldSpec f : {Q(), F(2), F(3), F(5), F(7), F(65537)}) {
    for (int it = 0; it < 300; ++it) {
      const Scalar a = random_scalar(f, rng, -20, 20), b = random_scalar(f, rng, -20, 20),
                   c = random_scalar(f, rng, -20, 20);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a + (-a), Scalar::zero(f));
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), Scalar::one(f));
        EXPECT_EQ((b / a) * a, b);
      }
    }
  }
}

TEST(PolyDivmod, Examples) {
  for (FieldSpec f : {Q(), F(5)}) {
    auto r = poly_divmod(P(f, {-1, 0, 1}), P(f, {-1, 1}));
    EXPECT_EQ(r.quotient, P(f, {1, 1}));
    EXPECT_TRUE(r.remainder.is_zero());
  }
  auto r = poly_divmod(P(Q(), {2, 0, 0, 1}), P(Q(), {0, 1}));
  EXPECT_EQ(r.quotient, P(Q(), {0, 0, 1}));
  EXPECT_EQ(r.remainder, P(Q(), {2}));

  const Poly a = P(F(2), {1, 0, 1, 0, 1}), b = P(F(2), {1, 1, 1});
  r = poly_divmod(a, b);
  EXPECT_EQ(r.quotient, b);
  EXPECT_TRUE(r.remainder.is_zero());
  EXPECT_EQ(r.quotient * b + r.remainder, a);
}

TEST(PolyDivmod, Errors) {
  try {
    (void)poly_divmod(P(Q(), {1, 1}), Poly(Q()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZeroPoly);
  }
  EXPECT_THROW((void)poly_divmod(P(Q(), {1, 1}), P(F(3), {1, 1})), Error);
}

TEST(PolyDivmod, RoundTripRandom) {
  std::mt19937_64 rng(12);
  for (FieldSpec f : {Q(), F(2), F(3), F(13)}) {
    for (int it = 0; it < 200; ++it) {
      std::vector<Scalar> ca, cb;
      for (int k = 0; k < 1 + static_cast<int>(rng() % 7); ++k) ca.push_back(random_scalar(f, rng));
      for (int k = 0; k < 1 + static_cast<int>(rng() % 4); ++k) cb.push_back(random_scalar(f, rng));
      const Poly a(f, ca), b(f, cb);
      if (b.is_zero()) continue;
      const auto r = poly_divmod(a, b);
      EXPECT_EQ(r.quotient * b + r.remainder, a);
      EXPECT_LT(r.remainder.degree(), b.degree());
    }
  }
}

// Sylvester-matrix resultant, an independent coprimality check.
static Scalar resultant(const Poly& a, const Poly& b) {
  const int m = a.degree(), n = b.degree();
  Mat s(a.field(), static_cast<std::size_t>(m + n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s.at(i, i + k) = a.coeff(static_cast<std::size_t>(m - k));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s.at(n + i, i + k) = b.coeff(static_cast<std::size_t>(n - k));
  return leibniz_det(s);
}

TEST(PolyGcd, Examples) {
  const Poly xm1 = P(Q(), {-1, 1});
  EXPECT_EQ(poly_gcd(xm1, xm1 * xm1), xm1);
  const Poly a = P(Q(), {2, 0, 0, 1}), b = P(Q(), {1, 0, 1});
  EXPECT_TRUE(poly_gcd(a, b).is_one());
  EXPECT_FALSE(resultant(a, b).is_zero());
  EXPECT_EQ(poly_gcd(Poly(Q()), P(Q(), {3, 1})), P(Q(), {3, 1}));
  try {
    (void)poly_gcd(Poly(Q()), Poly(Q()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BothZero);
  }
}

TEST(PolyGcd, DividesBothRandom) {
  std::mt19937_64 rng(13);
  for (FieldSpec f : {Q(), F(3), F(7)}) {
    for (int it = 0; it < 100; ++it) {
      std::vector<Scalar> cc, ca, cb;
      for (int k = 0; k < 3; ++k) cc.push_back(random_scalar(f, rng));
      for (int k = 0; k < 3; ++k) ca.push_back(random_scalar(f, rng));
      for (int k = 0; k < 3; ++k) cb.push_back(random_scalar(f, rng));
      const Poly c(f, cc), a = Poly(f, ca) * c, b = Poly(f, cb) * c;
      if (a.is_zero() && b.is_zero()) continue;
      const Poly g = poly_gcd(a, b);
      EXPECT_TRUE(g.is_monic());
      EXPECT_TRUE(divides(g, a));
      EXPECT_TRUE(divides(g, b));
      if (!c.is_zero() && !(a.is_zero() && b.is_zero())) EXPECT_TRUE(divides(c, a) && divides(c, b) && divides(c, g));
    }
  }
}

TEST(Reciprocal, Examples) {
  EXPECT_EQ(reciprocal(P(Q(), {2, 0, 0, 1})), P(Q(), {1, 0, 0, 2}));
  EXPECT_EQ(reciprocal(P(Q(), {-1, 1})), P(Q(), {1, -1}));
  const Poly p = P(Q(), {2, 3, 1});
  EXPECT_EQ(reciprocal(p), P(Q(), {1, 3, 2}));
  EXPECT_EQ(reciprocal(reciprocal(p)), p);
  try {
    (void)reciprocal(P(Q(), {0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroConstantTerm);
  }
}

TEST(Roots, Examples) {
  EXPECT_TRUE(roots_in_K(P(F(5), {2, -1, 0, 1})).empty());
  const Poly sq = P(Q(), {1, -2, 1});
  ASSERT_EQ(roots_in_K(sq).size(), 1u);
  EXPECT_EQ(roots_in_K(sq)[0], S(Q(), 1));
  const Poly f = P(F(2), {1, 0, 1, 0, 1});
  EXPECT_TRUE(f.eval(S(F(2), 0)).is_one());
  EXPECT_TRUE(f.eval(S(F(2), 1)).is_one());
  EXPECT_TRUE(roots_in_K(f).empty());
  try {
    (void)roots_in_K(Poly(Q()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroPolynomial);
  }
}

TEST(Roots, ExhaustiveOverFp) {
  std::mt19937_64 rng(14);
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    const FieldSpec f = F(p);
    for (int it = 0; it < 50; ++it) {
      std::vector<Scalar> c;
      for (int k = 0; k < 5; ++k) c.push_back(random_scalar(f, rng));
      const Poly q(f, c);
      if (q.is_zero()) continue;
      std::vector<Scalar> expect;
      for (std::uint32_t r = 0; r < p; ++r)
        if (q.eval(Scalar(f, static_cast<long>(r))).is_zero()) expect.push_back(Scalar(f, static_cast<long>(r)));
      EXPECT_EQ(roots_in_K(q), expect);
    }
  }
}

TEST(Roots, KnownLinearFactorsOverQ) {
  std::mt19937_64 rng(15);
  for (int it = 0; it < 60; ++it) {
    Poly q = P(Q(), {1, 0, 1});  // no rational roots
    std::vector<Scalar> expect;
    for (int k = 0; k < 3; ++k) {
      std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
      const Scalar r = Scalar::rational(mpq_class(num(rng), den(rng)));
      q = q * Poly::linear(r);
      if (std::find(expect.begin(), expect.end(), r) == expect.end()) expect.push_back(r);
    }
    q = q * S(Q(), 3);
    std::sort(expect.begin(), expect.end(), canonical_less);
    EXPECT_EQ(roots_in_K(q), expect);
  }
}

TEST(Irreducibility, Examples) {
  using V = Irreducibility::Verdict;
  EXPECT_EQ(irreducibility(P(F(5), {2, -1, 0, 1})).verdict, V::Irreducible);
  const auto r = irreducibility(P(F(2), {1, 0, 1, 0, 1}));
  EXPECT_EQ(r.verdict, V::Reducible);
  ASSERT_TRUE(r.factor);
  EXPECT_EQ(*r.factor, P(F(2), {1, 1, 1}));
  EXPECT_EQ(P(F(2), {1, 1, 1}) * P(F(2), {1, 1, 1}), P(F(2), {1, 0, 1, 0, 1}));
  EXPECT_EQ(irreducibility(P(Q(), {2, 0, 0, 1})).verdict, V::Irreducible);
  EXPECT_EQ(irreducibility(P(Q(), {2, 0, 0, 0, 1})).verdict, V::Irreducible);
  EXPECT_EQ(irreducibility(P(Q(), {1, 0, 0, 0, 1})).verdict, V::Unknown);  // X^4+1, no Eisenstein prime
  EXPECT_EQ(irreducibility(P(Q(), {-2, 0, 0, 0, 1})).verdict, V::Irreducible);
  EXPECT_THROW(irreducibility(P(Q(), {1, 2})), Error);
  EXPECT_THROW(irreducibility(P(Q(), {3})), Error);
}

TEST(Irreducibility, ReducibleWithoutRootNotCalledIrreducible) {
  using V = Irreducibility::Verdict;
  // (X^2+1)^2 has no rational root but is reducible; must not be Irreducible
  const Poly p = P(Q(), {1, 0, 1}) * P(Q(), {1, 0, 1});
  const auto r = irreducibility(p);
  EXPECT_NE(r.verdict, V::Irreducible);
  if (r.verdict == V::Reducible) EXPECT_TRUE(divides(*r.factor, p));
}

TEST(Irreducibility, SoundnessRandomFp) {
  using V = Irreducibility::Verdict;
  std::mt19937_64 rng(16);
  for (std::uint64_t p : {2, 3, 5}) {
    const FieldSpec f = F(p);
    for (int it = 0; it < 120; ++it) {
      std::vector<Scalar> c;
      const int deg = 1 + static_cast<int>(rng() % 7);
      for (int k = 0; k < deg; ++k) c.push_back(random_scalar(f, rng));
      c.push_back(Scalar::one(f));
      const Poly q(f, c);
      const auto r = irreducibility(q);
      if (!roots_in_K(q).empty() && q.degree() > 1) EXPECT_EQ(r.verdict, V::Reducible);
      if (r.verdict == V::Reducible) {
        EXPECT_TRUE(divides(*r.factor, q));
        EXPECT_GT(r.factor->degree(), 0);
        EXPECT_LT(r.factor->degree(), q.degree());
      }
      // factorization multiplies back
      const auto fac = factorize(q);
      Poly acc = Poly::one(f);
      for (const auto& [g, m] : fac) acc = acc * g.pow(static_cast<unsigned>(m));
      EXPECT_EQ(acc, q);
      EXPECT_EQ(r.verdict == V::Irreducible, fac.size() == 1 && fac[0].second == 1);
    }
  }
}

TEST(Factorize, LargePrimeUsesSplittingPath) {
  const FieldSpec f = F(1000003);
  const Poly a = P(f, {5, 1}), b = P(f, {2, 0, 1}), c = P(f, {3, 1, 0, 1});
  const Poly q = a * a * b * c;
  const auto fac = factorize(q);
  Poly acc = Poly::one(f);
  for (const auto& [g, m] : fac) {
    acc = acc * g.pow(static_cast<unsigned>(m));
    EXPECT_TRUE(g.is_monic());
  }
  EXPECT_EQ(acc, q);
  const auto roots = roots_in_K(q);
  for (const auto& r : roots) EXPECT_TRUE(q.eval(r).is_zero());
}

TEST(Eisenstein, Examples) {
  EXPECT_TRUE(eisenstein_test(P(Q(), {2, 0, 0, 1}), 2));
  EXPECT_FALSE(eisenstein_test(P(Q(), {-1, 0, 1}), 2));
  EXPECT_FALSE(eisenstein_test(P(Q(), {4, 0, 1}), 2));
  try {
    (void)eisenstein_test(P(Q(), {2, 0, 1}), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotPrime);
  }
  try {
    (void)eisenstein_test(Poly(Q(), {Scalar::rational(mpq_class(1, 2)), Scalar::one(Q())}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonIntegerCoefficients);
  }
}

TEST(Poly, Printing) {
  EXPECT_EQ(P(Q(), {2, 0, 0, 1}).to_string(), "X^3 + 2");
  EXPECT_EQ(P(F(5), {2, -1, 0, 1}).to_string(), "X^3 + 4*X + 2");
  EXPECT_EQ(P(Q(), {1, -1}).to_string(), "-X + 1");
}
