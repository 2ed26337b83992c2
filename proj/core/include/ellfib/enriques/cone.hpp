#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ellfib/elliptic/quartic.hpp"
#include "ellfib/exactmath/numfield.hpp"

namespace ellfib {

/// Exponents (e0, e1, e2, e3) of z0^e0 z1^e1 z2^e2 z3^e3, summing to 4.
using Monomial = std::array<int, 4>;

/// Homogeneous quartic B(z0, z1, z2, z3). The 35 coefficients are stored in
/// graded-lex descending order: 4000, 3100, 3010, 3001, 2200, ..., 0004.
class ConeQuartic {
 public:
  static constexpr int kTerms = 35;
  static const std::vector<Monomial>& monomials();
  /// "e0e1e2e3", e.g. "0004" for z3^4.
  static std::string key(const Monomial& m);
  /// Throws Error(ParseError) for malformed keys or degree != 4.
  static Monomial parse_key(std::string_view key);

  ConeQuartic() = default;
  /// Throws Error(InvalidArgument) for a monomial of degree != 4.
  explicit ConeQuartic(const std::map<Monomial, Rat>& coefficients);

  /// A quartic whose restriction to the cone is sum f[j](t) z^j. Needs
  /// deg f[j] <= 2 (4 - j); throws Error(InvalidArgument) otherwise.
  static ConeQuartic from_chart(const std::array<Poly, 5>& f);

  const Rat& coeff(const Monomial& m) const;
  const std::array<Rat, kTerms>& coefficients() const { return c_; }
  Rat eval(const std::array<Rat, 4>& z) const;

  friend bool operator==(const ConeQuartic&, const ConeQuartic&) = default;

 private:
  static std::size_t index(const Monomial& m);
  std::array<Rat, kTerms> c_{};
};

/// The branch curve R on the cone z0 z1 = z2^2 in two affine charts.
/// Chart 0 (z0 != 0): (1, t^2, t, z), F(t, z) = sum f[j](t) z^j.
/// Chart 1 (z1 != 0): (t'^2, 1, t', z') with t' = 1/t and z' = z/t^2.
struct RamificationData {
  std::array<Poly, 5> f;
  std::array<Poly, 5> swapped;
  Rat c4;  // B(0,0,0,1) = f[4], a nonzero constant

  template <class F>
  F eval(const F& t, const F& z) const {
    F acc{};
    for (int j = 4; j >= 0; --j) acc = acc * z + f[static_cast<std::size_t>(j)].template eval<F>(t);
    return acc;
  }
  template <class F>
  F eval_dt(const F& t, const F& z) const {
    F acc{};
    for (int j = 4; j >= 0; --j) acc = acc * z + f[static_cast<std::size_t>(j)].derivative().template eval<F>(t);
    return acc;
  }
  template <class F>
  F eval_dz(const F& t, const F& z) const {
    F acc{};
    for (int j = 4; j >= 1; --j) acc = acc * z + F(static_cast<long>(j)) * f[static_cast<std::size_t>(j)].template eval<F>(t);
    return acc;
  }
  /// Fiber quartic F(t0, z) as ascending z-coefficients.
  template <class F>
  std::array<F, 5> fiber(const F& t0) const {
    std::array<F, 5> q;
    for (std::size_t j = 0; j < 5; ++j) q[j] = f[j].template eval<F>(t0);
    return q;
  }
  /// Fiber quartic over t = infinity, read in chart 1 at t' = 0.
  std::array<Rat, 5> fiber_at_infinity() const;

  /// R is smooth over t0 in the generator direction: the fiber quartic has
  /// no repeated root (equivalently the K3 fiber over t0 is smooth).
  template <class F>
  bool fiber_is_smooth(const F& t0) const;
  bool fiber_at_infinity_is_smooth() const;
};

template <class F>
bool RamificationData::fiber_is_smooth(const F& t0) const {
  return !QuarticInvariants<F>::of(fiber(t0)).discriminant_times_27().is_zero();
}

/// Errors: VertexOnQuartic (B(0,0,0,1) = 0), NonReducedRamification (F not
/// squarefree, detected by disc_z F vanishing identically).
RamificationData restrict_quartic_to_cone(const ConeQuartic& b);

/// The section z = c0 + c1 t + c2 t^2, over Q or a quadratic field.
struct SectionConic {
  NfElem c0;
  NfElem c1;
  NfElem c2;

  bool is_rational() const { return c0.is_rational() && c1.is_rational() && c2.is_rational(); }
  /// Throws Error(FieldMismatch) for irrational coefficients.
  Poly rational_poly() const;
  Polynomial<NfElem> poly() const { return Polynomial<NfElem>{c0, c1, c2}; }
  FieldPtr field() const;

  friend bool operator==(const SectionConic&, const SectionConic&) = default;
};

/// G_s(t) = F(t, c0 + c1 t + c2 t^2); degree <= 8.
Poly section_intersection_poly(const RamificationData& r, const SectionConic& s);
Polynomial<NfElem> section_intersection_poly_nf(const RamificationData& r, const SectionConic& s);
/// Intersection multiplicity at t = infinity, read in chart 1: 8 - deg G.
int intersection_at_infinity(const Poly& g);

/// Sections tangent to R at P = (t0, z0): base + lambda * direction.
struct TangentLine {
  Rat t0;
  Rat z0;
  SectionConic base;
  std::array<Rat, 3> direction;  // (t0^2, -2 t0, 1)

  SectionConic at(const NfElem& lambda) const;
};

/// Errors: NotOnR (F(P) != 0); NotInR0 (F_z(P) = 0, which includes the
/// singular points of R).
TangentLine tangent_line(const RamificationData& r, const Rat& t0, const Rat& z0);

struct BitangentCandidate {
  NfElem lambda;
  SectionConic section;
  /// Monic squarefree polynomial over the section's field whose roots are
  /// the double points other than t0.
  Polynomial<NfElem> second_tangency;
  bool tangent_at_infinity = false;

  std::string describe_second_tangency() const;
};

struct BitangentSearch {
  Rat t0;
  Rat z0;
  /// disc_t(H_lambda) as a polynomial in lambda; empty with a through point.
  Poly discriminant;
  std::vector<BitangentCandidate> candidates;
  int rejected = 0;           // roots failing the double-root check
  int unresolved_degree = 0;  // lambda roots in fields of degree > 2
};

/// Double points of G counted independently of the search: distinct roots
/// of gcd(G, G') plus infinity when 8 - deg G >= 2.
int double_point_count(const Polynomial<NfElem>& g);

/// Sections tangent to R at P with a second double contact. With `through`
/// (a singular point of R) the line L_P is cut to the single section
/// passing through it.
/// Errors: NotOnR, NotInR0, DegenerateDiscriminant (disc identically 0),
/// NoCandidates (no lambda root in degree <= 2 fields), InvalidArgument
/// (through is not a singular point, or lies on the generator of P).
BitangentSearch bitangent_sections(const RamificationData& r, const Rat& t0, const Rat& z0,
                                   const std::optional<std::pair<Rat, Rat>>& through = std::nullopt);

struct SingularPoint {
  NfElem t;
  NfElem z;
};
struct SingularPoints {
  std::vector<SingularPoint> points;
  int unresolved_degree = 0;
};

/// Common solutions of F = F_t = F_z = 0 in the affine chart, over Q or
/// quadratic fields.
SingularPoints singular_points(const RamificationData& r);

}  // namespace ellfib
