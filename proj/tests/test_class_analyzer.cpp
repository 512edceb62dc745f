#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace testing_support;

namespace {

SignPattern reversed(SignPattern p) {
  std::reverse(p.begin(), p.end());
  return p;
}

bool excludes(const MReport& r, const SignPattern& p) {
  for (const auto& e : r.excluded)
    if (e.signs == p) return true;
  return false;
}

}  // namespace

TEST(DescribeClass, TransvectionAndCompanion) {
  EXPECT_TRUE(describe_class(transvection(Q(), 3, 1, 2, 1)).is_transvection_class);
  const auto d = describe_class(companion(P(F(5), {2, -1, 0, 1})));
  EXPECT_EQ(d.charpoly, P(F(5), {2, -1, 0, 1}));
  EXPECT_EQ(d.det, S(F(5), 3));
  EXPECT_FALSE(d.is_transvection_class);
  EXPECT_EQ(d.trace, S(F(5), 0));
}

TEST(DescribeClass, Errors) {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::UsageError;
  };
  EXPECT_EQ(code([] { describe_class(Mat::scalar(S(Q(), 2), 3)); }), Errc::CentralMatrix);
  EXPECT_EQ(code([] { describe_class(Mat::identity(Q(), 2)); }), Errc::DimensionTooSmall);
  EXPECT_EQ(code([] { describe_class(Mat::from_ints(Q(), {{1, 1, 0}, {1, 1, 0}, {0, 0, 1}})); }), Errc::Singular);
  EXPECT_EQ(code([] { classify_m_n3(Mat::identity(Q(), 4)); }), Errc::WrongDimension);
}

TEST(ClassifyN3, SharpCompanions) {
  const auto r5 = classify_m_n3(companion(P(F(5), {2, -1, 0, 1})));
  EXPECT_TRUE(r5.exact());
  EXPECT_EQ(r5.m, 4);
  EXPECT_EQ(r5.pattern, (SignPattern{1, -1, 1, -1}));
  EXPECT_EQ(r5.case_tag, "n3-v");
  const auto rq = classify_m_n3(companion(P(Q(), {-2, 0, 0, 1})));
  EXPECT_EQ(rq.m, 4);
  EXPECT_EQ(rq.case_tag, "n3-v");
}

TEST(ClassifyN3, AllCasesAppear) {
  EXPECT_EQ(classify_m_n3(transvection(F(7), 3, 2, 1, 3)).case_tag, "n3-i");
  EXPECT_EQ(classify_m_n3(Mat::from_ints(Q(), {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}})).case_tag, "n3-ii");
  // X³+X+1 over 𝔽_2: det 1
  EXPECT_EQ(classify_m_n3(companion(P(F(2), {1, 1, 0, 1}))).case_tag, "n3-iii");
  // X³−2 over 𝔽_7: det 2, 2³ = 1
  const auto r = classify_m_n3(companion(P(F(7), {-2, 0, 0, 1})));
  EXPECT_EQ(r.case_tag, "n3-iv");
  EXPECT_EQ(r.pattern, (SignPattern{1, 1, 1}));
}

TEST(ClassifyN3, SmallFieldsAtMostTwo) {
  for (std::uint64_t p : {2, 3})
    for (const Mat& m : class_reps3(F(p))) EXPECT_LE(classify_m_n3(m).m, 2) << m.to_string();
}

TEST(ClassifyGeneral, EisensteinFamily) {
  for (long n : {4, 5}) {
    std::vector<long> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 2;
    c.back() = 1;
    Poly p(Q(), {});
    for (std::size_t k = 0; k < c.size(); ++k) p += Poly::monomial(S(Q(), c[k]), k);
    const auto r = classify_m_general(companion(p));
    EXPECT_TRUE(r.exact());
    EXPECT_EQ(r.m, 4);
    EXPECT_EQ(r.case_tag, "gen-eisenstein-4");
  }
}

TEST(ClassifyGeneral, F2CounterexampleGivesBounds) {
  const auto r = classify_m_general(f2_sigma());
  EXPECT_FALSE(r.exact());
  EXPECT_EQ(r.case_tag, "gen-bounds");
  EXPECT_EQ(r.lower, 2);
  EXPECT_EQ(r.upper, 4);
  EXPECT_FALSE(excludes(r, {1, -1}));
  EXPECT_TRUE(excludes(r, {1}));
  EXPECT_TRUE(excludes(r, {-1}));
}

TEST(ClassifyGeneral, RootCase) {
  const Mat m = direct_sum(Mat::identity(Q(), 1), companion(P(Q(), {1, 0, 1})));
  const auto r = classify_m_general(m);
  EXPECT_EQ(r.m, 2);
  EXPECT_EQ(r.pattern, (SignPattern{1, -1}));
  EXPECT_EQ(r.case_tag, "gen-root");
}

TEST(ClassifyGeneral, IrreducibleWithSquareDetExcludesMixedPairs) {
  // X⁴+X+1 over 𝔽_2 is irreducible with det 1
  const auto r = classify_m_general(companion(P(F(2), {1, 1, 0, 0, 1})));
  EXPECT_FALSE(r.exact());
  EXPECT_TRUE(excludes(r, {1, -1}));
  EXPECT_TRUE(excludes(r, {-1, 1}));
  EXPECT_FALSE(excludes(r, {1, 1}));
  EXPECT_EQ(r.lower, 2);
}

TEST(ClassifyGeneral, UnknownIrreducibilityFlag) {
  const Poly p = P(Q(), {1, 1, 1, 1, 1});
  const auto r = classify_m_general(companion(p));
  EXPECT_FALSE(r.exact());
  EXPECT_EQ(r.irreducibility_unknown, irreducibility(p).verdict == Irreducibility::Verdict::Unknown);
  EXPECT_LE(r.lower, r.upper);
}

TEST(ClassifyGeneral, AgreesWithN3WhenExact) {
  std::mt19937_64 rng(11);
  for (FieldSpec f : {F(2), F(3), F(5), F(7), Q()})
    for (int k = 0; k < 60; ++k) {
      const Mat m = random_noncentral(f, 3, rng);
      const auto a = classify_m_n3(m), g = classify_m_general(m);
      if (g.exact())
        EXPECT_EQ(g.m, a.m);
      else
        EXPECT_LE(g.lower, a.m);
    }
}

TEST(ClassifyProperties, ConjugationAndInverse) {
  std::mt19937_64 rng(5);
  for (FieldSpec f : {F(2), F(3), F(5), Q()})
    for (std::size_t n : {3, 4})
      for (int k = 0; k < 25; ++k) {
        const Mat m = random_noncentral(f, n, rng);
        const auto r = classify_m(m);
        const auto rc = classify_m(conj(m, random_invertible(f, n, rng)));
        EXPECT_EQ(r.kind, rc.kind);
        EXPECT_EQ(r.m, rc.m);
        EXPECT_EQ(r.case_tag, rc.case_tag);
        EXPECT_EQ(r.lower, rc.lower);
        const auto ri = classify_m(inverse(m));
        EXPECT_EQ(r.kind, ri.kind);
        EXPECT_EQ(r.m, ri.m);
        EXPECT_EQ(r.lower, ri.lower);
        EXPECT_EQ(r.excluded.size(), ri.excluded.size());
        for (const auto& e : r.excluded)
          EXPECT_TRUE(excludes(ri, reversed(e.signs))) << pattern_string(e.signs);
      }
}
