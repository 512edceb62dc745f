#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;

TEST(MatArith, Examples) {
  const FieldSpec f = Q();
  EXPECT_TRUE(det(signed_perm(f, 3, 1, 2)).is_one());
  EXPECT_EQ(transvection(f, 3, 1, 2, 1) * transvection(f, 3, 1, 2, 1), transvection(f, 3, 1, 2, 2));
  EXPECT_EQ(inverse(diag_pair(f, 3, 1, 3, -1)), diag_pair(f, 3, 1, 3, -1));
}

TEST(MatArith, Errors) {
  try {
    (void)inverse(Mat::from_ints(Q(), {{1, 2}, {2, 4}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Singular);
  }
  try {
    (void)(Mat::identity(Q(), 2) * Mat::identity(Q(), 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionMismatch);
  }
  EXPECT_THROW((void)(Mat::identity(Q(), 2) * Mat::identity(F(3), 2)), Error);
}

TEST(MatArith, DetAndInverseAgainstLeibniz) {
  std::mt19937_64 rng(21);
  for (FieldSpec f : {Q(), F(2), F(5), F(101)}) {
    for (int it = 0; it < 60; ++it) {
      const std::size_t n = 1 + rng() % 5;
      const Mat m = random_mat(f, n, rng, -4, 4);
      const Scalar d = det(m);
      EXPECT_EQ(d, leibniz_det(m));
      if (!d.is_zero()) {
        const Mat inv = inverse(m);
        EXPECT_TRUE((m * inv).is_identity());
        EXPECT_TRUE((inv * m).is_identity());
      }
    }
  }
}

TEST(MatArith, RationalEntries) {
  Mat m(Q(), 2);
  m.at(0, 0) = Scalar::parse("1/2", Q());
  m.at(0, 1) = Scalar::parse("1/3", Q());
  m.at(1, 0) = Scalar::parse("-3/4", Q());
  m.at(1, 1) = Scalar::parse("5", Q());
  EXPECT_EQ(det(m), leibniz_det(m));
  EXPECT_TRUE((m * inverse(m)).is_identity());
}

TEST(Commutator, Examples) {
  std::mt19937_64 rng(22);
  for (FieldSpec f : {Q(), F(7)}) {
    const Scalar a = S(f, 3), b = S(f, -2);
    EXPECT_EQ(commutator(transvection(3, 1, 2, a), transvection(3, 2, 3, b)), transvection(3, 1, 3, a * b));
    EXPECT_TRUE(commutator(transvection(4, 1, 2, a), transvection(4, 3, 4, b)).is_identity());
    const Mat g = random_invertible(f, 3, rng);
    EXPECT_TRUE(commutator(Mat::identity(f, 3), g).is_identity());
  }
  EXPECT_THROW(commutator(Mat::from_ints(Q(), {{1, 1}, {1, 1}}), Mat::identity(Q(), 2)), Error);
}

TEST(Relations, R1R2R3Random) {
  std::mt19937_64 rng(23);
  for (FieldSpec f : {Q(), F(3), F(5)}) {
    for (std::size_t n : {3u, 4u}) {
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
          if (i == j) continue;
          const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng);
          EXPECT_EQ(transvection(n, i, j, a) * transvection(n, i, j, b), transvection(n, i, j, a + b));
          for (std::size_t h = 1; h <= n; ++h)
            for (std::size_t k = 1; k <= n; ++k) {
              if (h == k) continue;
              const Mat c = commutator(transvection(n, i, j, a), transvection(n, h, k, b));
              if (j != h && i != k)
                EXPECT_TRUE(c.is_identity());
              else if (j == h && i != k)
                EXPECT_EQ(c, transvection(n, i, k, a * b));
            }
        }
    }
  }
}

TEST(Generators, Determinants) {
  const FieldSpec f = F(7);
  const Scalar a = S(f, 3);
  EXPECT_TRUE(det(transvection(4, 2, 4, a)).is_one());
  EXPECT_TRUE(det(diag_pair(4, 1, 3, a)).is_one());
  EXPECT_TRUE(det(signed_perm(f, 4, 2, 3)).is_one());
  EXPECT_EQ(det(diag_one(4, 2, a)), a);
  EXPECT_EQ(det(perm(f, 4, 1, 4)), -Scalar::one(f));
  EXPECT_EQ(realize({ElemGen::Kind::SignedPerm, 3, 1, 2, std::nullopt}, f), signed_perm(f, 3, 1, 2));
  try {
    (void)diag_one(3, 1, S(f, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroParameter);
  }
  try {
    (void)transvection(3, 2, 2, a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BadIndices);
  }
}

TEST(Charpoly, Examples) {
  EXPECT_EQ(charpoly_minors(companion(P(Q(), {2, 0, 0, 1}))), P(Q(), {2, 0, 0, 1}));
  const Poly xm1 = P(Q(), {-1, 1});
  EXPECT_EQ(charpoly_minors(Mat::identity(Q(), 4)), xm1.pow(4));
  EXPECT_EQ(charpoly_minors(f2_sigma()), P(F(2), {1, 0, 1, 0, 1}));
}

TEST(Companion, SignConvention) {
  const Mat c = companion(P(Q(), {5, 7, 11, 1}));
  EXPECT_EQ(c.at(0, 2), S(Q(), -5));
  EXPECT_EQ(c.at(2, 2), S(Q(), -11));
  EXPECT_EQ(c.at(1, 0), S(Q(), 1));
  // det = (−1)^n a_0
  EXPECT_EQ(det(c), S(Q(), -5));
  EXPECT_EQ(det(companion(P(Q(), {5, 0, 0, 0, 1}))), S(Q(), 5));
}

TEST(LinearAlgebra, NullspaceAndSolve) {
  std::mt19937_64 rng(24);
  for (FieldSpec f : {Q(), F(3)}) {
    for (int it = 0; it < 40; ++it) {
      const Mat a = random_mat(f, 3 + rng() % 3, rng, -2, 2);
      for (const auto& v : nullspace(a)) {
        for (const auto& x : a * v) EXPECT_TRUE(x.is_zero());
      }
      EXPECT_EQ(rank(a) + nullspace(a).size(), a.cols());
      const Mat b = random_mat(f, a.rows(), rng);
      Mat rhs(f, a.rows(), 1);
      for (std::size_t i = 0; i < a.rows(); ++i) rhs.at(i, 0) = b.at(i, 0);
      if (auto x = solve(a, rhs)) EXPECT_EQ(a * *x, rhs);
    }
  }
}

TEST(TransvectionNormalizer, Examples) {
  const FieldSpec q = Q();
  EXPECT_TRUE(transvection_normalizer(1, 2, S(q, 1), 3).is_identity());
  const Mat e = transvection_normalizer(3, 2, S(q, 1), 3);
  EXPECT_EQ(conj(transvection(q, 3, 3, 2, 1), e), transvection(q, 3, 1, 2, 1));
  EXPECT_TRUE(det(e).is_one());
  const FieldSpec f = F(7);
  const Mat e7 = transvection_normalizer(1, 2, S(f, 5), 3);
  EXPECT_EQ(e7, diag_pair(3, 2, 3, S(f, 5).inverse()));
  EXPECT_EQ(conj(transvection(f, 3, 1, 2, 5), e7), transvection(f, 3, 1, 2, 1));
  EXPECT_THROW(transvection_normalizer(1, 2, S(f, 0), 3), Error);
  EXPECT_THROW(transvection_normalizer(1, 1, S(f, 1), 3), Error);
}

TEST(TransvectionNormalizer, AllIndexPairs) {
  std::mt19937_64 rng(25);
  for (FieldSpec f : {Q(), F(2), F(5)}) {
    for (std::size_t n : {3u, 4u, 5u}) {
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
          if (i == j) continue;
          Scalar a = random_scalar(f, rng);
          if (a.is_zero()) a = Scalar::one(f);
          const Mat e = transvection_normalizer(i, j, a, n);
          EXPECT_TRUE(det(e).is_one());
          EXPECT_EQ(conj(transvection(n, i, j, a), e), transvection(f, n, 1, 2, 1));
        }
    }
  }
}

TEST(Transvection, Detection) {
  const FieldSpec f = F(5);
  auto info = as_transvection(transvection(f, 4, 3, 1, 2));
  ASSERT_TRUE(info);
  EXPECT_EQ(info->i, 3u);
  EXPECT_EQ(info->j, 1u);
  EXPECT_EQ(info->c, S(f, 2));
  EXPECT_FALSE(as_transvection(Mat::identity(f, 3)));
  EXPECT_FALSE(as_transvection(diag_pair(f, 3, 1, 2, 2)));
}
