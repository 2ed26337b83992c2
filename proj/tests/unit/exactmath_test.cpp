#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "ellfib/exactmath/enumerate.hpp"
#include "ellfib/exactmath/numfield.hpp"
#include "ellfib/exactmath/poly.hpp"
#include "ellfib/exactmath/ratfn.hpp"
#include "random.hpp"

namespace ellfib {
namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

Poly linear(const Rat& root) { return Poly{-root, Rat(1)}; }

TEST(RatTest, ParsesAndReduces) {
  EXPECT_EQ(Rat::parse("6/4"), Rat(Integer(3), Integer(2)));
  EXPECT_EQ(Rat::parse("-7"), Rat(-7));
  EXPECT_EQ(Rat::parse("0/5").str(), "0");
  EXPECT_EQ(Rat::parse("-6/4").str(), "-3/2");
  EXPECT_EQ(Rat(Integer(3), Integer(-6)).str(), "-1/2");
}

TEST(RatTest, RejectsMalformed) {
  EXPECT_THROW(Rat::parse("1/0"), Error);
  EXPECT_THROW(Rat::parse("abc"), Error);
  EXPECT_THROW(Rat::parse("1/-2"), Error);
  EXPECT_THROW(Rat::parse(""), Error);
  try {
    Rat::parse("3/0");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DivisionByZero);
  }
}

TEST(RatTest, Height) {
  EXPECT_EQ(Rat(0).height(), 1);
  EXPECT_EQ(Rat::parse("-7/16").height(), 16);
  EXPECT_EQ(Rat::parse("-13/4").height(), 13);
}

TEST(PolyGcdTest, SharedFactor) {
  const Poly a = linear(Rat(1)) * linear(Rat(-1));
  const Poly b = linear(Rat(1)) * linear(Rat(1));
  EXPECT_EQ(poly_gcd(a, b), linear(Rat(1)));
}

TEST(PolyGcdTest, ZeroSecondArgumentGivesMonic) {
  const Poly p = P({3, 0, 6});
  EXPECT_EQ(poly_gcd(p, Poly()), monic(p));
  EXPECT_EQ(poly_gcd(Poly(), p), monic(p));
}

TEST(PolyGcdTest, CyclotomicPair) {
  // t^4 - 1 = (t-1)(t+1)(t^2+1), t^6 - 1 = (t-1)(t+1)(t^2+t+1)(t^2-t+1).
  const Poly a = linear(Rat(1)) * linear(Rat(-1)) * P({1, 0, 1});
  const Poly b = linear(Rat(1)) * linear(Rat(-1)) * P({1, 1, 1}) * P({1, -1, 1});
  ASSERT_EQ(a, P({-1, 0, 0, 0, 1}));
  ASSERT_EQ(b, P({-1, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(poly_gcd(a, b), P({-1, 0, 1}));
}

TEST(PolyGcdTest, BothZeroThrows) {
  try {
    poly_gcd(Poly(), Poly());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BothZero);
  }
}

TEST(ResultantTest, Examples) {
  EXPECT_EQ(discriminant(P({-1, 0, 1})), Rat(4));
  EXPECT_EQ(resultant(P({-2, 1}), P({1, 0, 1})), Rat(5));
  // x^3 + a x + b has discriminant -4a^3 - 27b^2; a = -1, b = 0.
  EXPECT_EQ(discriminant(P({0, -1, 0, 1})), Rat(4));
  EXPECT_EQ(discriminant_resultant(P({0, -1, 0, 1})), Rat(4));
  EXPECT_EQ(discriminant_resultant(P({-2, 1}), P({1, 0, 1})), Rat(5));
  EXPECT_THROW(discriminant_resultant(Poly()), Error);
}

TEST(ResultantTest, CubicDiscriminantFormula) {
  testing::Gen gen(7);
  for (int i = 0; i < 100; ++i) {
    const Rat a = gen.rat(20);
    const Rat b = gen.rat(20);
    const Poly cubic{b, a, Rat(0), Rat(1)};
    EXPECT_EQ(discriminant(cubic), Rat(-4) * a * a * a - Rat(27) * b * b);
  }
}

TEST(ResultantTest, ProductOverRootsOracle) {
  // res(p, q) = lc(p)^deg q * prod q(r_i) when p = lc * prod (t - r_i).
  testing::Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    const int n = static_cast<int>(gen.integer(1, 5));
    const Rat lc = gen.nonzero_rat(5);
    Poly p = Poly::constant(lc);
    std::vector<Rat> roots;
    for (int k = 0; k < n; ++k) {
      roots.push_back(gen.rat(6));
      p *= linear(roots.back());
    }
    const Poly q = gen.poly(static_cast<int>(gen.integer(1, 6)), 8);
    Rat expected = pow(lc, static_cast<unsigned long>(q.degree()));
    for (const auto& r : roots) expected *= q(r);
    EXPECT_EQ(resultant(p, q), expected);
    // Swapped order picks up (-1)^(deg p deg q).
    const Rat swapped = (n * q.degree()) % 2 == 0 ? expected : -expected;
    EXPECT_EQ(resultant(q, p), swapped);
    // The Sylvester determinant agrees as well.
    std::vector<Rat> pc(p.coefficients().begin(), p.coefficients().end());
    std::vector<Rat> qc(q.coefficients().begin(), q.coefficients().end());
    EXPECT_EQ(sylvester_resultant(pc, qc), expected);
  }
}

TEST(ResultantTest, VanishesExactlyOnCommonFactors) {
  testing::Gen gen(12);
  for (int i = 0; i < 500; ++i) {
    Poly p = gen.poly(static_cast<int>(gen.integer(1, 6)), 10);
    Poly q = gen.poly(static_cast<int>(gen.integer(1, 6)), 10);
    if (i % 2 == 0) {
      const Poly g = gen.poly(static_cast<int>(gen.integer(1, 2)), 10);
      p *= g;
      q *= g;
    }
    const bool common = poly_gcd(p, q).degree() >= 1;
    EXPECT_EQ(resultant(p, q).is_zero(), common) << to_string(p) << " | " << to_string(q);
  }
}

TEST(PolyGcdTest, RandomCommonFactorIsDivisor) {
  testing::Gen gen(3);
  for (int i = 0; i < 500; ++i) {
    const Poly g = gen.poly(static_cast<int>(gen.integer(0, 3)), 10);
    const Poly p = gen.poly(static_cast<int>(gen.integer(0, 5)), 10) * g;
    const Poly q = gen.poly(static_cast<int>(gen.integer(0, 5)), 10) * g;
    const Poly d = poly_gcd(p, q);
    EXPECT_TRUE(divmod(d, monic(g)).second.is_zero());
    EXPECT_TRUE(divmod(p, d).second.is_zero());
    EXPECT_TRUE(divmod(q, d).second.is_zero());
    EXPECT_EQ(d, euclid_gcd(p, q));
  }
}

TEST(SquarefreeTest, Examples) {
  const Poly a = linear(Rat(1)) * linear(Rat(1)) * linear(Rat(-2));
  const auto fa = squarefree_decompose(a);
  ASSERT_EQ(fa.size(), 2U);
  EXPECT_EQ(fa[0], (SquarefreeFactor{linear(Rat(-2)), 1}));
  EXPECT_EQ(fa[1], (SquarefreeFactor{linear(Rat(1)), 2}));

  const Poly sf = P({2, 0, 4});
  const auto fs = squarefree_decompose(sf);
  ASSERT_EQ(fs.size(), 1U);
  EXPECT_EQ(fs[0], (SquarefreeFactor{monic(sf), 1}));

  const Poly t2m2 = P({-2, 0, 1});
  const Poly cubic = P({0, -1, 0, 1});
  const auto fc = squarefree_decompose(t2m2 * t2m2 * cubic);
  ASSERT_EQ(fc.size(), 2U);
  EXPECT_EQ(fc[0], (SquarefreeFactor{cubic, 1}));
  EXPECT_EQ(fc[1], (SquarefreeFactor{t2m2, 2}));
  EXPECT_THROW(squarefree_decompose(Poly()), Error);
}

TEST(SquarefreeTest, RecomposesRandomInputs) {
  testing::Gen gen(5);
  for (int i = 0; i < 500; ++i) {
    Poly p = gen.poly(static_cast<int>(gen.integer(1, 3)), 10);
    const Poly extra = gen.poly(static_cast<int>(gen.integer(1, 2)), 10);
    p *= pow(extra, static_cast<unsigned>(gen.integer(1, 3)));
    const auto factors = squarefree_decompose(p);
    Poly back = Poly::constant(p.leading());
    int last = 0;
    for (const auto& f : factors) {
      EXPECT_GT(f.multiplicity, last);
      last = f.multiplicity;
      EXPECT_TRUE(f.factor.leading().is_one());
      EXPECT_EQ(poly_gcd(f.factor, f.factor.derivative()).degree(), 0);
      back *= pow(f.factor, static_cast<unsigned>(f.multiplicity));
    }
    EXPECT_EQ(back, p);
    for (std::size_t a = 0; a < factors.size(); ++a) {
      for (std::size_t b = a + 1; b < factors.size(); ++b) {
        EXPECT_EQ(poly_gcd(factors[a].factor, factors[b].factor).degree(), 0);
      }
    }
  }
}

TEST(RationalRootsTest, Examples) {
  const auto r1 = rational_roots(P({-1, -1, 2}));
  ASSERT_EQ(r1.size(), 2U);
  EXPECT_EQ(r1[0], (RationalRoot{Rat::parse("-1/2"), 1}));
  EXPECT_EQ(r1[1], (RationalRoot{Rat(1), 1}));
  // Oracle: (2t + 1)(t - 1) expands to the input.
  EXPECT_EQ(P({1, 2}) * P({-1, 1}), P({-1, -1, 2}));

  EXPECT_TRUE(rational_roots(P({1, 0, 1})).empty());
  const auto r3 = rational_roots(pow(linear(Rat(3)), 3));
  ASSERT_EQ(r3.size(), 1U);
  EXPECT_EQ(r3[0], (RationalRoot{Rat(3), 3}));
  EXPECT_THROW(rational_roots(Poly()), Error);
}

TEST(RationalRootsTest, PlantedRootsAreRecovered) {
  testing::Gen gen(99);
  for (int i = 0; i < 300; ++i) {
    std::vector<Rat> planted;
    Poly p = gen.poly(static_cast<int>(gen.integer(0, 2)), 30);
    if (p.degree() == 1) p = Poly::constant(Rat(7));  // keep extra roots out
    if (p.degree() == 2 && !rational_roots(p).empty()) p = P({1, 0, 1});
    for (int k = 0; k < gen.integer(1, 4); ++k) {
      planted.push_back(gen.rat(1000));
      p *= linear(planted.back());
    }
    std::set<std::string> expected;
    for (const auto& r : planted) expected.insert(r.str());
    std::set<std::string> found;
    for (const auto& r : rational_roots(p)) found.insert(r.value.str());
    EXPECT_EQ(found, expected);
  }
}

TEST(RationalRootsTest, LargeCoefficients) {
  const Rat big = Rat::parse("123456789012345678901/98765432109876543");
  const Poly p = linear(big) * linear(Rat(-5)) * P({3, 0, 1});
  const auto roots = rational_roots(p);
  ASSERT_EQ(roots.size(), 2U);
  EXPECT_EQ(roots[0].value, Rat(-5));
  EXPECT_EQ(roots[1].value, big);
}

TEST(SplitTest, QuarticIntoQuadratics) {
  // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2).
  const auto s = quartic_quadratic_split(P({4, 0, 0, 0, 1}));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->first * s->second, P({4, 0, 0, 0, 1}));
  // (x^2 - 2)(x^2 + x + 3)
  const Poly q = P({-2, 0, 1}) * P({3, 1, 1});
  const auto s2 = quartic_quadratic_split(q);
  ASSERT_TRUE(s2.has_value());
  EXPECT_EQ(s2->first * s2->second, q);
  EXPECT_FALSE(quartic_quadratic_split(P({-2, 0, 0, 0, 1})).has_value());
  EXPECT_FALSE(quartic_quadratic_split(P({1, 0, 0, 0, 1})).has_value());
}

TEST(SplitTest, LowDegree) {
  const Poly p = linear(Rat(2)) * P({-3, 0, 1}) * P({1, 1, 1}) * linear(Rat(-1));
  const auto s = split_low_degree(p);
  EXPECT_EQ(s.roots.size(), 2U);
  EXPECT_EQ(s.quadratics.size(), 2U);
  EXPECT_EQ(s.remainder.degree(), 0);
  const auto s2 = split_low_degree(P({-2, 0, 0, 1}));
  EXPECT_TRUE(s2.roots.empty());
  EXPECT_EQ(s2.remainder.degree(), 3);
}

TEST(EnumerateTest, Examples) {
  const auto one = enumerate_rationals(1);
  ASSERT_EQ(one.size(), 3U);
  EXPECT_EQ(one[0], Rat(0));
  EXPECT_EQ(one[1], Rat(-1));
  EXPECT_EQ(one[2], Rat(1));
  const std::vector<std::string> two_expected{"0", "-1", "1", "-2", "-1/2", "1/2", "2"};
  std::vector<std::string> two;
  for (const auto& r : enumerate_rationals(2)) two.push_back(r.str());
  EXPECT_EQ(two, two_expected);
  EXPECT_TRUE(enumerate_rationals(0).empty());
}

TEST(EnumerateTest, PrefixMonotone) {
  for (unsigned long n = 1; n < 15; ++n) {
    const auto a = enumerate_rationals(n);
    const auto b = enumerate_rationals(n + 1);
    ASSERT_LE(a.size(), b.size());
    EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin()));
  }
}

TEST(EnumerateTest, FareyBallCardinality) {
  for (long n = 1; n <= 50; ++n) {
    std::size_t brute = 0;
    for (long p = -n; p <= n; ++p) {
      for (long q = 1; q <= n; ++q) {
        if (std::gcd(std::labs(p), q) == 1) ++brute;
      }
    }
    const auto e = enumerate_rationals(static_cast<unsigned long>(n));
    EXPECT_EQ(e.size(), brute);
    std::set<std::string> unique;
    for (const auto& r : e) {
      unique.insert(r.str());
      EXPECT_LE(r.height(), n);
    }
    EXPECT_EQ(unique.size(), e.size());
  }
}

TEST(RatFnTest, ReducesAndEvaluates) {
  const RatFn f(P({-1, 0, 1}), P({-2, 2}));  // (t^2-1)/(2t-2) = (t+1)/2
  EXPECT_EQ(f.den(), P({1}));
  EXPECT_EQ(f(Rat(3)), Rat(2));
  const RatFn g(P({1}), P({0, 1}));
  EXPECT_TRUE(g.has_pole_at(Rat(0)));
  EXPECT_THROW(g(Rat(0)), Error);
  EXPECT_EQ(g.valuation_at(Rat(0)), -1);
  EXPECT_EQ(RatFn(P({0, 0, 3})).valuation_at(Rat(0)), 2);
  EXPECT_EQ((f * g - g * f), RatFn());
  EXPECT_EQ((f / f), RatFn(Rat(1)));
}

TEST(RatFnTest, InvertVariable) {
  // a(t) = t^3 + 2 becomes s^4 a(1/s) = s + 2 s^4.
  const RatFn a(P({2, 0, 0, 1}));
  EXPECT_EQ(a.invert_variable(4), RatFn(P({0, 1, 0, 0, 2})));
}

class NumFieldArithmetic : public ::testing::TestWithParam<std::vector<long>> {};

TEST_P(NumFieldArithmetic, RingAxiomsAndInverses) {
  std::vector<Rat> c;
  for (long x : GetParam()) c.emplace_back(x);
  const auto field = NumField::create(Poly(c));
  testing::Gen gen(static_cast<unsigned long>(field->degree()) * 31 + 1);
  auto random_elem = [&] {
    std::vector<Rat> r;
    for (int i = 0; i < field->degree(); ++i) r.push_back(gen.rat(9));
    return NfElem(field, Poly(std::move(r)));
  };
  for (int i = 0; i < 200; ++i) {
    const NfElem x = random_elem();
    const NfElem y = random_elem();
    const NfElem z = random_elem();
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), NfElem(Rat(1)));
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, NumFieldArithmetic,
                         ::testing::Values(std::vector<long>{-2, 0, 1},        // sqrt 2
                                           std::vector<long>{1, 0, 1},         // sqrt -1
                                           std::vector<long>{-2, 0, 0, 1},     // cube root 2
                                           std::vector<long>{1, 0, 0, 0, 1})); // zeta_8

TEST(NumFieldTest, RejectsReducible) {
  EXPECT_THROW(NumField::create(P({-4, 0, 1})), Error);
  EXPECT_THROW(NumField::create(P({4, 0, 0, 0, 1})), Error);
  EXPECT_THROW(NumField::create(P({-8, 0, 0, 1})), Error);
  EXPECT_THROW(NumField::create(P({1, 2, 3, 4, 5, 6})), Error);
  EXPECT_NO_THROW(NumField::create(P({-2, 0, 0, 0, 1})));
}

TEST(NumFieldTest, MixedFieldsRejected) {
  const auto f2 = NumField::quadratic(Integer(2));
  const auto f3 = NumField::quadratic(Integer(3));
  const NfElem a = NfElem::generator(f2);
  const NfElem b = NfElem::generator(f3);
  EXPECT_THROW(a + b, Error);
  EXPECT_EQ((a * a).to_rat(), Rat(2));
  EXPECT_EQ(a + NfElem(Rat(1)) - a, NfElem(Rat(1)));
  EXPECT_EQ(a.conjugate(), -a);
}

TEST(CompositumTest, BiquadraticRoots) {
  QuadraticCompositum c;
  c.add(Rat(8));
  c.add(Rat::parse("3/4"));
  c.add(Rat(24));  // 2 * 3 * 4, already inside
  EXPECT_EQ(c.degree(), 4);
  for (const Rat v : {Rat(8), Rat::parse("3/4"), Rat(24), Rat(2), Rat(6), Rat(9)}) {
    const NfElem s = c.sqrt(v);
    EXPECT_EQ(s * s, NfElem(v)) << v.str();
  }
  EXPECT_THROW(c.add(Rat(5)), Error);
}

}  // namespace
}  // namespace ellfib
