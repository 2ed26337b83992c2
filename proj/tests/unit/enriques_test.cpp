#include <gtest/gtest.h>

#include "ellfib/density/density.hpp"
#include "ellfib/enriques/double_cover.hpp"
#include "ellfib/exactmath/enumerate.hpp"
#include "random.hpp"

namespace ellfib {
namespace {

using NfPoly = Polynomial<NfElem>;

const Poly t = Poly::variable();
Poly c(long v) { return Poly::constant(Rat(v)); }

// B = z3^4 + z0 z1 z2^2 - 2 z0^4.
ConeQuartic example_quartic() {
  return ConeQuartic({{{0, 0, 0, 4}, Rat(1)}, {{1, 1, 2, 0}, Rat(1)}, {{4, 0, 0, 0}, Rat(-2)}});
}

RamificationData example() { return restrict_quartic_to_cone(example_quartic()); }

// F = (z^2 - t^2 + (t-1)^2 (t-2)^2)(z^2 - 2t^2 + 7): the section z = t meets
// the first factor doubly at t = 1 and t = 2.
RamificationData split_example() {
  const Poly a0 = -(t * t) + pow(t - c(1), 2) * pow(t - c(2), 2);
  const Poly b0 = c(-2) * t * t + c(7);
  return restrict_quartic_to_cone(ConeQuartic::from_chart({a0 * b0, Poly(), a0 + b0, Poly(), c(1)}));
}

// F = ((z - 1)^2 - t^2)(z^2 - t^2 - 2): a node at (0, 1).
RamificationData nodal_example() {
  const std::array<Poly, 3> a{c(1) - t * t, c(-2), c(1)};
  const std::array<Poly, 3> b{-(t * t) - c(2), Poly(), c(1)};
  std::array<Poly, 5> f;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) f[i + j] = f[i + j] + a[i] * b[j];
  }
  return restrict_quartic_to_cone(ConeQuartic::from_chart(f));
}

SectionConic rational_section(const Rat& c0, const Rat& c1, const Rat& c2) {
  return {NfElem(c0), NfElem(c1), NfElem(c2)};
}

// Oracle: B(z0, z1, z2, z3) summed monomial by monomial on the cone point.
Rat direct_restriction(const ConeQuartic& b, const Rat& tv, const Rat& zv) {
  Rat acc;
  const std::array<Rat, 4> pt{Rat(1), tv * tv, tv, zv};
  for (const auto& m : ConeQuartic::monomials()) {
    Rat term = b.coeff(m);
    for (std::size_t v = 0; v < 4; ++v) {
      for (int e = 0; e < m[v]; ++e) term *= pt[v];
    }
    acc += term;
  }
  return acc;
}

// Oracle: number of distinct roots of each multiplicity via the chain
// G_{i+1} = gcd(G_i, G_i'), counting roots of multiplicity > i by degree.
std::vector<int> multiplicity_profile(const Poly& g) {
  std::vector<Poly> chain{g};
  while (chain.back().degree() > 0) chain.push_back(poly_gcd(chain.back(), chain.back().derivative()));
  std::vector<int> above;  // above[i] = #distinct roots with multiplicity > i
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) above.push_back(chain[i].degree() - chain[i + 1].degree());
  std::vector<int> exact(above.size() + 1, 0);
  for (std::size_t i = 0; i < above.size(); ++i) exact[i + 1] = above[i] - (i + 1 < above.size() ? above[i + 1] : 0);
  return exact;  // exact[m] = #distinct roots of multiplicity exactly m
}

int brute_force_branch_points(const Poly& g) {
  const auto prof = multiplicity_profile(g);
  int k = 0;
  for (std::size_t m = 1; m < prof.size(); m += 2) k += prof[m];
  return k + (8 - g.degree()) % 2;
}

// Oracle for the double-contact check: distinct roots of gcd(G, G') by a
// plain Euclid loop, plus infinity when 8 - deg G >= 2.
int oracle_double_points(const RamificationData& r, const SectionConic& s) {
  if (s.is_rational()) {
    const Poly g = section_intersection_poly(r, s);
    const auto prof = multiplicity_profile(g);
    int n = 0;
    for (std::size_t m = 2; m < prof.size(); ++m) n += prof[m];
    return n + (8 - g.degree() >= 2 ? 1 : 0);
  }
  const NfPoly g = section_intersection_poly_nf(r, s);
  NfPoly a = g;
  NfPoly b = g.derivative();
  while (!b.is_zero()) {
    auto rem = divmod(a, b).second;
    a = b;
    b = rem;
  }
  // a = gcd; count its distinct roots by the same chain.
  NfPoly d = a;
  NfPoly dd = d.derivative();
  NfPoly x = d;
  NfPoly y = dd;
  while (!y.is_zero()) {
    auto rem = divmod(x, y).second;
    x = y;
    y = rem;
  }
  const int distinct = d.degree() - (x.degree() > 0 ? x.degree() : 0);
  return distinct + (8 - g.degree() >= 2 ? 1 : 0);
}

TEST(ConeQuarticTest, MonomialOrderAndKeys) {
  const auto& all = ConeQuartic::monomials();
  ASSERT_EQ(all.size(), 35U);
  EXPECT_EQ(ConeQuartic::key(all.front()), "4000");
  EXPECT_EQ(ConeQuartic::key(all[1]), "3100");
  EXPECT_EQ(ConeQuartic::key(all[3]), "3001");
  EXPECT_EQ(ConeQuartic::key(all.back()), "0004");
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_GT(all[i - 1], all[i]);
  EXPECT_EQ(ConeQuartic::parse_key("1120"), (Monomial{1, 1, 2, 0}));
  EXPECT_THROW(ConeQuartic::parse_key("112"), Error);
  EXPECT_THROW(ConeQuartic::parse_key("1111x"), Error);
  EXPECT_THROW(ConeQuartic::parse_key("2220"), Error);
}

TEST(RestrictionTest, Examples) {
  const auto r = example();
  EXPECT_EQ(r.f[4], c(1));
  EXPECT_EQ(r.f[0], Poly({Rat(-2), 0, 0, 0, Rat(1)}));
  for (std::size_t j = 1; j < 4; ++j) EXPECT_TRUE(r.f[j].is_zero());
  EXPECT_EQ(r.c4, Rat(1));
  // Chart 1: B(t^2, 1, t, z) sends z0 z1 z2^2 to t^4 and z0^4 to t^8.
  EXPECT_EQ(r.swapped[0], Poly({Rat(0), 0, 0, 0, Rat(1), 0, 0, 0, Rat(-2)}));

  testing::Gen gen(3);
  const auto b = example_quartic();
  for (int i = 0; i < 50; ++i) {
    const Rat tv = gen.rat(9);
    const Rat zv = gen.rat(9);
    EXPECT_EQ(r.eval(tv, zv), direct_restriction(b, tv, zv));
  }
  try {
    restrict_quartic_to_cone(ConeQuartic({{{0, 0, 0, 4}, Rat(1)}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonReducedRamification);
  }
  try {
    restrict_quartic_to_cone(ConeQuartic({{{1, 1, 2, 0}, Rat(1)}, {{4, 0, 0, 0}, Rat(-2)}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::VertexOnQuartic);
  }
  // (z^2 - t^2)^2 is not reduced either.
  EXPECT_THROW(restrict_quartic_to_cone(ConeQuartic::from_chart({pow(t, 4), Poly(), c(-2) * t * t, Poly(), c(1)})),
               Error);
}

TEST(RestrictionTest, RandomQuarticsKeepDegreeAndChartsAgree) {
  testing::Gen gen(11);
  for (int i = 0; i < 30; ++i) {
    std::map<Monomial, Rat> coeffs;
    for (const auto& m : ConeQuartic::monomials()) {
      if (gen.integer(0, 2) == 0) coeffs[m] = gen.rat(5);
    }
    coeffs[{0, 0, 0, 4}] = gen.nonzero_rat(5);
    const ConeQuartic b(coeffs);
    const auto r = restrict_quartic_to_cone(b);
    EXPECT_EQ(r.f[4], Poly::constant(coeffs[{0, 0, 0, 4}]));
    for (int j = 0; j <= 4; ++j) EXPECT_LE(r.f[static_cast<std::size_t>(j)].degree(), 2 * (4 - j));
    // Chart 1 is t'^8 F(1/t', z'/t'^2).
    const Rat tp = gen.nonzero_rat(6);
    const Rat zp = gen.rat(6);
    Rat swapped;
    for (int j = 4; j >= 0; --j) swapped = swapped * zp + r.swapped[static_cast<std::size_t>(j)](tp);
    Rat tp8 = Rat(1);
    for (int k = 0; k < 8; ++k) tp8 *= tp;
    EXPECT_EQ(swapped, tp8 * r.eval(Rat(1) / tp, zp / (tp * tp)));
    EXPECT_EQ(ConeQuartic::from_chart(r.f).coefficients().size(), 35U);
    EXPECT_EQ(restrict_quartic_to_cone(ConeQuartic::from_chart(r.f)).f, r.f);
  }
}

TEST(SectionIntersectionTest, Examples) {
  const auto r = example();
  EXPECT_EQ(section_intersection_poly(r, rational_section(Rat(0), Rat(0), Rat(0))), Poly({Rat(-2), 0, 0, 0, Rat(1)}));
  EXPECT_EQ(section_intersection_poly(r, rational_section(Rat(1), Rat(0), Rat(0))), Poly({Rat(-1), 0, 0, 0, Rat(1)}));
  EXPECT_EQ(intersection_at_infinity(Poly({Rat(-1), 0, 0, 0, Rat(1)})), 4);

  testing::Gen gen(5);
  int full = 0;
  for (int i = 0; i < 100; ++i) {
    const auto s = rational_section(gen.rat(7), gen.rat(7), gen.rat(7));
    const Poly g = section_intersection_poly(r, s);
    EXPECT_LE(g.degree(), 8);
    if (i < 50 && !s.c2.is_zero()) {
      EXPECT_EQ(g.degree(), 8);
      ++full;
    }
    const Rat tv = gen.rat(5);
    EXPECT_EQ(g(tv), r.eval(tv, s.rational_poly()(tv)));
  }
  EXPECT_GT(full, 40);
}

TEST(TangentLineTest, Examples) {
  const auto r = example();
  const auto line = tangent_line(r, Rat(1), Rat(1));
  for (long l = -5; l <= 5; ++l) {
    const auto s = line.at(NfElem(Rat(l)));
    EXPECT_EQ(s, rational_section(Rat(2 + l), Rat(-1 - 2 * l), Rat(l)));
  }
  try {
    tangent_line(r, Rat(1), Rat(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotOnR);
  }
  // F = z^4 - z^2 + t^2 - 1 has F_z = 0 at (1, 0).
  const auto r2 = restrict_quartic_to_cone(ConeQuartic::from_chart({t * t - c(1), Poly(), c(-1), Poly(), c(1)}));
  try {
    tangent_line(r2, Rat(1), Rat(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotInR0);
  }
}

TEST(TangentLineTest, LineIsOneDimensional) {
  const auto r = nodal_example();
  int sampled = 0;
  for (const auto& u : enumerate_rationals(12)) {
    if (sampled == 50) break;
    if (u.is_zero()) continue;
    // z - t = u, z + t = 2/u lies on the component z^2 - t^2 = 2.
    const Rat zv = (u + Rat(2) / u) / Rat(2);
    const Rat tv = (Rat(2) / u - u) / Rat(2);
    if (r.eval_dz(tv, zv).is_zero()) continue;
    const auto line = tangent_line(r, tv, zv);
    // Rank 2: the direction is nonzero and solves the homogeneous system.
    const auto& d = line.direction;
    EXPECT_EQ(d[0] + d[1] * tv + d[2] * tv * tv, Rat(0));
    EXPECT_EQ(d[1] + Rat(2) * d[2] * tv, Rat(0));
    EXPECT_EQ(d[2], Rat(1));
    for (long l = -2; l <= 2; ++l) {
      const Poly g = section_intersection_poly(r, line.at(NfElem(Rat(l))));
      EXPECT_TRUE(g(tv).is_zero());
      EXPECT_TRUE(g.derivative()(tv).is_zero());
    }
    ++sampled;
  }
  EXPECT_EQ(sampled, 50);
}

TEST(BitangentTest, ExampleCandidatesAllVerify) {
  const auto r = example();
  const auto search = bitangent_sections(r, Rat(1), Rat(1));
  ASSERT_FALSE(search.candidates.empty());
  std::vector<Rat> rational_lambdas;
  for (const auto& cand : search.candidates) {
    EXPECT_GE(oracle_double_points(r, cand.section), 2) << cand.lambda.str();
    if (cand.lambda.is_rational()) rational_lambdas.push_back(cand.lambda.to_rat());
  }
  EXPECT_NE(std::find(rational_lambdas.begin(), rational_lambdas.end(), Rat(0)), rational_lambdas.end());
  // lambda = 0 is the line z = 2 - t: G = 2 (t-1)^2 (t^2 - 2t + 7), tangent at infinity.
  const auto line = std::find_if(search.candidates.begin(), search.candidates.end(),
                                 [](const BitangentCandidate& cand) { return cand.lambda == NfElem(0); });
  ASSERT_NE(line, search.candidates.end());
  EXPECT_TRUE(line->tangent_at_infinity);
  EXPECT_EQ(line->second_tangency.degree(), 0);
  // Every lambda root in degree <= 2 fields was either kept or rejected.
  const auto roots = low_degree_roots(search.discriminant);
  EXPECT_EQ(static_cast<int>(search.candidates.size()) + search.rejected,
            static_cast<int>(roots.rational.size() + 2 * roots.quadratic.size()));
}

TEST(BitangentTest, EngineeredSplitCaseFindsTheConic) {
  const auto r = split_example();
  const auto search = bitangent_sections(r, Rat(1), Rat(1));
  const auto wanted = rational_section(Rat(0), Rat(1), Rat(0));
  const auto it = std::find_if(search.candidates.begin(), search.candidates.end(),
                               [&](const BitangentCandidate& cand) { return cand.section == wanted; });
  ASSERT_NE(it, search.candidates.end());
  // G = (t-1)^2 (t-2)^2 (7 - t^2) has degree 6: a double point at infinity too.
  EXPECT_EQ(it->describe_second_tangency(), "t=2, t=inf");
  for (const auto& cand : search.candidates) EXPECT_GE(oracle_double_points(r, cand.section), 2);
}

TEST(BitangentTest, ThroughNodeGivesOneCandidate) {
  const auto r = nodal_example();
  const auto sing = singular_points(r);
  // The node of the line pair plus its two crossings with the conic at t = +-1/2.
  ASSERT_EQ(sing.points.size(), 3U);
  for (const auto& p : sing.points) {
    EXPECT_TRUE(r.eval(p.t, p.z).is_zero());
    EXPECT_TRUE(r.eval_dt(p.t, p.z).is_zero());
    EXPECT_TRUE(r.eval_dz(p.t, p.z).is_zero());
  }
  EXPECT_TRUE(std::any_of(sing.points.begin(), sing.points.end(),
                          [](const SingularPoint& p) { return p.t == NfElem(0) && p.z == NfElem(1); }));
  const std::pair<Rat, Rat> node{Rat(0), Rat(1)};
  // Points on z^2 - t^2 = 2 with z - t = u, z + t = 2/u.
  int tried = 0;
  for (long u : {3L, 4L, 5L, -3L, 6L}) {
    const Rat uu(u);
    const Rat zv = (uu + Rat(2) / uu) / Rat(2);
    const Rat tv = (Rat(2) / uu - uu) / Rat(2);
    if (r.eval_dz(tv, zv).is_zero() || tv.is_zero()) continue;
    const auto search = bitangent_sections(r, tv, zv, node);
    ASSERT_EQ(search.candidates.size(), 1U);
    const auto& s = search.candidates[0].section;
    EXPECT_EQ(s.rational_poly()(Rat(0)), Rat(1));
    EXPECT_GE(oracle_double_points(r, s), 2);
    ++tried;
  }
  EXPECT_GE(tried, 4);
  EXPECT_THROW(bitangent_sections(r, Rat(-7, 1) / Rat(4), Rat(9) / Rat(4), std::make_pair(Rat(1), Rat(1))), Error);
}

TEST(BitangentTest, NoCandidatesAndErrors) {
  const auto r = example();
  EXPECT_THROW(bitangent_sections(r, Rat(1), Rat(2)), Error);
}

TEST(DoubleCoverTest, GenusExamples) {
  // Build F so that G_s for s = 0 is a prescribed polynomial: f0 = G, z^4 otherwise.
  const auto with_g = [](const Poly& g) {
    return restrict_quartic_to_cone(ConeQuartic::from_chart({g, Poly(), Poly(), Poly(), c(1)}));
  };
  const auto zero = rational_section(Rat(0), Rat(0), Rat(0));
  // Squarefree degree 8: genus 3.
  const Poly g8 = (t * t + c(1)) * (t * t + c(2)) * (t * t + c(3)) * (t * t + c(5));
  const auto d8 = multisection_from_section(with_g(g8), zero);
  EXPECT_EQ(d8.branch_points, 8);
  EXPECT_EQ(d8.genus, 3);
  EXPECT_FALSE(d8.elliptic());

  // (t-1)^2 (t+1)^2 q(t): genus 1, w^2 = q.
  const Poly q = t * t * t * t + c(3) * t + c(1);
  const auto d4 = multisection_from_section(with_g(pow(t - c(1), 2) * pow(t + c(1), 2) * q), zero);
  EXPECT_EQ(d4.branch_points, 4);
  EXPECT_EQ(d4.genus, 1);
  ASSERT_TRUE(d4.elliptic());
  ASSERT_TRUE(d4.quartic.has_value());
  EXPECT_EQ(d4.remainder, q);
  EXPECT_EQ(d4.stripped, Poly({Rat(-1), 0, Rat(1)}));
  ASSERT_EQ(d4.tangencies.size(), 2U);

  // (t-1)^2 q6: genus 2.
  const Poly q6 = pow(t, 6) + t + c(3);
  const auto d6 = multisection_from_section(with_g(pow(t - c(1), 2) * q6), zero);
  EXPECT_EQ(d6.genus, 2);
  EXPECT_FALSE(d6.elliptic());

  // Degree 7: the point at infinity is a branch point.
  const Poly g7 = pow(t - c(2), 2) * (pow(t, 5) + t + c(1));
  EXPECT_EQ(multisection_from_section(with_g(g7), zero).branch_points, 6);

  EXPECT_THROW(multisection_from_section(nodal_example(), rational_section(Rat(1), Rat(1), Rat(0))), Error);
}

TEST(DoubleCoverTest, GenusMatchesBruteForce) {
  testing::Gen gen(21);
  const std::vector<RamificationData> quartics{example(), split_example(), nodal_example()};
  const std::vector<std::pair<Rat, Rat>> on_r{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}, {Rat(-7) / Rat(4), Rat(9) / Rat(4)}};
  for (int i = 0; i < 100; ++i) {
    const std::size_t which = static_cast<std::size_t>(i % 3);
    const auto& r = quartics[which];
    SectionConic s;
    if (i % 2 == 0) {
      s = rational_section(gen.rat(4), gen.rat(4), gen.rat(4));
    } else {
      s = tangent_line(r, on_r[which].first, on_r[which].second).at(NfElem(gen.rat(3)));
    }
    const Poly g = section_intersection_poly(r, s);
    if (g.is_zero()) continue;
    const auto d = multisection_from_section(r, s);
    const int k = brute_force_branch_points(g);
    EXPECT_EQ(d.branch_points, k);
    EXPECT_EQ(d.genus, k == 0 ? 0 : (k + 1) / 2 - 1);
    EXPECT_EQ(d.stripped * d.stripped * d.remainder, g);
  }
}

TEST(K3ModelTest, ExampleModel) {
  const auto r = example();
  const auto k3 = k3_weierstrass_model(r);
  EXPECT_EQ(k3.a(), RatFn(Poly{Rat(8), 0, 0, 0, Rat(-4)}));
  EXPECT_TRUE(k3.b().is_zero());
  EXPECT_FALSE(k3.provenance().empty());
  for (long tv : {0L, 2L, 3L, 5L, 7L}) {
    const auto e = k3.smooth_fiber(Rat(tv));
    EXPECT_EQ(e.j_invariant(), Rat(1728));
    // j from the fiber quartic's own invariants.
    const auto inv = QuarticInvariants<Rat>::of(r.fiber(Rat(tv)));
    const Rat i3 = Rat(4) * inv.I * inv.I * inv.I;
    EXPECT_EQ(e.j_invariant(), Rat(1728) * i3 / (i3 - inv.J * inv.J));
  }
  const Section e2 = k3_second_section(k3);
  EXPECT_FALSE(e2.is_zero());
  const std::vector<Rat> samples{Rat(0), Rat(2), Rat(3), Rat(5)};
  const auto verdict = section_difference_order(k3, Section(), e2, samples);
  ASSERT_TRUE(std::holds_alternative<TorsionEvidence>(verdict));
  EXPECT_EQ(std::get<TorsionEvidence>(verdict).order, 2);
  // Oracle: e2 at b is a 2-torsion point, y = 0.
  for (const auto& b : samples) EXPECT_TRUE(e2.at(b).y().is_zero());
}

TEST(K3ModelTest, NonSquareLeadingCoefficient) {
  const auto r = restrict_quartic_to_cone(
      ConeQuartic::from_chart({Poly({Rat(-2), 0, 0, 0, Rat(1)}), Poly(), Poly(), Poly(), c(2)}));
  try {
    k3_weierstrass_model(r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::LeadingCoefficientNotSquare);
  }
  const auto k3 = k3_weierstrass_model(r, true);
  EXPECT_FALSE(k3.provenance().empty());
  EXPECT_FALSE(k3.quartic_source().has_value());
  for (long tv : {0L, 1L, 3L, 4L, 6L}) {
    const auto inv = QuarticInvariants<Rat>::of(r.fiber(Rat(tv)));
    const Rat i3 = Rat(4) * inv.I * inv.I * inv.I;
    EXPECT_EQ(k3.smooth_fiber(Rat(tv)).j_invariant(), Rat(1728) * i3 / (i3 - inv.J * inv.J));
  }
  EXPECT_THROW(k3_second_section(k3), Error);
}

TEST(K3ModelTest, RandomFibersKeepJInvariant) {
  testing::Gen gen(17);
  const auto r = split_example();
  const auto k3 = k3_weierstrass_model(r);
  int checked = 0;
  while (checked < 5) {
    const Rat tv = gen.rat(20);
    if (!k3.is_smooth_at(tv)) continue;
    const auto inv = QuarticInvariants<Rat>::of(r.fiber(tv));
    const Rat i3 = Rat(4) * inv.I * inv.I * inv.I;
    EXPECT_EQ(k3.smooth_fiber(tv).j_invariant(), Rat(1728) * i3 / (i3 - inv.J * inv.J));
    ++checked;
  }
}

TEST(PipelineTest, BitangentSectionGivesSalientGraphMultisection) {
  const auto r = split_example();
  const auto k3 = k3_weierstrass_model(r);
  const auto s = rational_section(Rat(0), Rat(1), Rat(0));
  const auto d = multisection_from_section(r, s);
  const auto m = k3_multisection(k3, s, d);
  EXPECT_EQ(m.degree(), 2);
  const auto ram = ramification_points(k3, m);
  ASSERT_FALSE(d.tangencies.empty());
  for (const auto& tg : d.tangencies) {
    if (tg.at_infinity) continue;
    const bool smooth = k3.is_smooth_at(tg.t.to_rat());
    EXPECT_EQ(tg.salient, smooth);
    const auto it = std::find_if(ram.points.begin(), ram.points.end(),
                                 [&](const RamificationPoint& p) { return p.b == tg.t; });
    ASSERT_NE(it, ram.points.end());
    EXPECT_EQ(it->salient, smooth);
    EXPECT_EQ(it->kind, "tangency");
  }
  EXPECT_TRUE(ram.any_salient());

  // The example quartic: every bitangent candidate with rational lambda
  // yields a degree-2 multisection whose tangency at P is salient.
  const auto ex = example();
  const auto k3e = k3_weierstrass_model(ex);
  for (const auto& cand : bitangent_sections(ex, Rat(1), Rat(1)).candidates) {
    if (!cand.section.is_rational()) continue;
    const auto dc = multisection_from_section(ex, cand.section);
    const auto mc = k3_multisection(k3e, cand.section, dc);
    EXPECT_EQ(mc.degree(), 2);
    const auto rp = ramification_points(k3e, mc);
    const auto at_p = std::find_if(rp.points.begin(), rp.points.end(),
                                   [](const RamificationPoint& p) { return p.b == NfElem(1); });
    ASSERT_NE(at_p, rp.points.end());
    EXPECT_TRUE(at_p->salient);
  }
}

TEST(PipelineTest, EllipticDoubleCoverFeedsDensify) {
  // G = (t-1)^2 (t+1)^2 (t^4 - 2): genus 1 with the branch point at infinity marked.
  const Poly g = pow(t - c(1), 2) * pow(t + c(1), 2) * Poly({Rat(-2), 0, 0, 0, Rat(1)});
  const auto r = restrict_quartic_to_cone(ConeQuartic::from_chart({g, Poly(), Poly(), Poly(), c(1)}));
  const auto s = rational_section(Rat(0), Rat(0), Rat(0));
  const auto d = multisection_from_section(r, s);
  ASSERT_TRUE(d.elliptic());
  ASSERT_TRUE(d.quartic->marked_point().has_value());
  const auto k3 = k3_weierstrass_model(r);
  const auto jac = quartic_to_weierstrass(*d.quartic).curve();
  std::optional<Point<Rat>> gen;
  for (long x = -20; x <= 20 && !gen; ++x) {
    Rat y;
    if (rational_sqrt(jac.rhs(Rat(x)), y) && !y.is_zero()) gen = Point<Rat>(Rat(x), y);
  }
  ASSERT_TRUE(gen.has_value());
  const auto m = k3_multisection(k3, s, d, gen);
  const auto report = densify(k3, m, {.height_bound = 3, .k_max = 2});
  EXPECT_GT(report.base_points_attempted, 0);
  for (const auto& p : report.points) EXPECT_TRUE(k3.smooth_fiber(p.b).contains(Point<Rat>(p.x, p.y)));
}

}  // namespace
}  // namespace ellfib
