#include "ellfib/enriques/cone.hpp"

#include <algorithm>

namespace ellfib {
namespace {

using NfPoly = Polynomial<NfElem>;

template <class F>
Polynomial<F> compose_section(const RamificationData& r, const Polynomial<F>& p) {
  Polynomial<F> acc;
  for (int j = 4; j >= 0; --j) {
    const Poly& fj = r.f[static_cast<std::size_t>(j)];
    acc = acc * p + fj.template map<F>([](const Rat& c) { return F(c); });
  }
  return acc;
}

// Coefficients padded to formal degree n.
std::vector<Rat> padded(const Poly& p, int n) {
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(i)] = p.coeff(i);
  return c;
}

// Evaluates `value(x)` at 0, 1, ..., bound and interpolates.
template <class Fn>
Poly interpolate_from(int bound, Fn&& value) {
  std::vector<Rat> xs;
  std::vector<Rat> ys;
  for (int i = 0; i <= bound; ++i) {
    xs.emplace_back(i);
    ys.push_back(value(Rat(i)));
  }
  return interpolate(xs, ys);
}

NfPoly squarefree_part_nf(const NfPoly& p) {
  if (p.degree() <= 0) return NfPoly::constant(NfElem(1));
  return monic(exact_div(p, euclid_gcd(p, p.derivative())));
}

// Monic squarefree polynomial whose roots are the finite double points of g.
NfPoly double_locus(const NfPoly& g) {
  const NfPoly d = euclid_gcd(g, g.derivative());
  return squarefree_part_nf(d);
}

}  // namespace

const std::vector<Monomial>& ConeQuartic::monomials() {
  static const std::vector<Monomial> all = [] {
    std::vector<Monomial> out;
    for (int e0 = 4; e0 >= 0; --e0) {
      for (int e1 = 4 - e0; e1 >= 0; --e1) {
        for (int e2 = 4 - e0 - e1; e2 >= 0; --e2) out.push_back({e0, e1, e2, 4 - e0 - e1 - e2});
      }
    }
    return out;
  }();
  return all;
}

std::string ConeQuartic::key(const Monomial& m) {
  std::string s;
  for (int e : m) s += static_cast<char>('0' + e);
  return s;
}

Monomial ConeQuartic::parse_key(std::string_view key) {
  if (key.size() != 4) throw Error(Errc::ParseError, "monomial key must have 4 digits: '" + std::string(key) + "'");
  Monomial m{};
  int total = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (key[i] < '0' || key[i] > '4') {
      throw Error(Errc::ParseError, "bad exponent in monomial key '" + std::string(key) + "'");
    }
    m[i] = key[i] - '0';
    total += m[i];
  }
  if (total != 4) throw Error(Errc::ParseError, "monomial key '" + std::string(key) + "' is not of degree 4");
  return m;
}

std::size_t ConeQuartic::index(const Monomial& m) {
  const auto& all = monomials();
  const auto it = std::find(all.begin(), all.end(), m);
  if (it == all.end()) throw Error(Errc::InvalidArgument, "monomial " + key(m) + " is not of degree 4");
  return static_cast<std::size_t>(it - all.begin());
}

ConeQuartic::ConeQuartic(const std::map<Monomial, Rat>& coefficients) {
  for (const auto& [m, c] : coefficients) c_[index(m)] = c;
}

ConeQuartic ConeQuartic::from_chart(const std::array<Poly, 5>& f) {
  std::map<Monomial, Rat> coeffs;
  for (int j = 0; j <= 4; ++j) {
    const Poly& fj = f[static_cast<std::size_t>(j)];
    if (fj.degree() > 2 * (4 - j)) {
      throw Error(Errc::InvalidArgument, "coefficient of z^" + std::to_string(j) + " has t-degree above " +
                                             std::to_string(2 * (4 - j)));
    }
    for (int k = 0; k <= fj.degree(); ++k) {
      if (fj.coeff(k).is_zero()) continue;
      const int e1 = k / 2;
      const int e2 = k % 2;
      coeffs[{4 - j - e1 - e2, e1, e2, j}] = fj.coeff(k);
    }
  }
  return ConeQuartic(coeffs);
}

const Rat& ConeQuartic::coeff(const Monomial& m) const { return c_[index(m)]; }

Rat ConeQuartic::eval(const std::array<Rat, 4>& z) const {
  Rat acc;
  const auto& all = monomials();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (c_[i].is_zero()) continue;
    Rat term = c_[i];
    for (std::size_t v = 0; v < 4; ++v) {
      for (int e = 0; e < all[i][v]; ++e) term *= z[v];
    }
    acc += term;
  }
  return acc;
}

std::array<Rat, 5> RamificationData::fiber_at_infinity() const {
  std::array<Rat, 5> q;
  for (std::size_t j = 0; j < 5; ++j) q[j] = swapped[j].coeff(0);
  return q;
}

bool RamificationData::fiber_at_infinity_is_smooth() const {
  return !QuarticInvariants<Rat>::of(fiber_at_infinity()).discriminant_times_27().is_zero();
}

RamificationData restrict_quartic_to_cone(const ConeQuartic& b) {
  RamificationData r;
  r.c4 = b.coeff({0, 0, 0, 4});
  if (r.c4.is_zero()) throw Error(Errc::VertexOnQuartic, "the quartic passes through the vertex of the cone");
  std::array<std::vector<Rat>, 5> f;
  std::array<std::vector<Rat>, 5> g;
  for (auto& v : f) v.resize(9);
  for (auto& v : g) v.resize(9);
  const auto& all = ConeQuartic::monomials();
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& [e0, e1, e2, e3] = all[i];
    const Rat& c = b.coefficients()[i];
    f[static_cast<std::size_t>(e3)][static_cast<std::size_t>(2 * e1 + e2)] += c;
    g[static_cast<std::size_t>(e3)][static_cast<std::size_t>(2 * e0 + e2)] += c;
  }
  for (std::size_t j = 0; j < 5; ++j) {
    r.f[j] = Poly(std::move(f[j]));
    r.swapped[j] = Poly(std::move(g[j]));
  }
  // disc_z F has t-degree <= 48; it vanishes identically iff it vanishes at
  // 49 points.
  bool reduced = false;
  for (int t = 0; t <= 48 && !reduced; ++t) reduced = r.fiber_is_smooth(Rat(t));
  if (!reduced) throw Error(Errc::NonReducedRamification, "F(t, z) is not squarefree");
  return r;
}

Poly SectionConic::rational_poly() const { return Poly{c0.to_rat(), c1.to_rat(), c2.to_rat()}; }

FieldPtr SectionConic::field() const {
  for (const auto* c : {&c0, &c1, &c2}) {
    if (c->field() && !c->is_rational()) return c->field();
  }
  return nullptr;
}

Poly section_intersection_poly(const RamificationData& r, const SectionConic& s) {
  return compose_section<Rat>(r, s.rational_poly());
}

NfPoly section_intersection_poly_nf(const RamificationData& r, const SectionConic& s) {
  return compose_section<NfElem>(r, s.poly());
}

int intersection_at_infinity(const Poly& g) {
  if (g.is_zero()) throw Error(Errc::ZeroIntersection, "section lies in R");
  return 8 - g.degree();
}

SectionConic TangentLine::at(const NfElem& lambda) const {
  return {base.c0 + lambda * NfElem(direction[0]), base.c1 + lambda * NfElem(direction[1]),
          base.c2 + lambda * NfElem(direction[2])};
}

TangentLine tangent_line(const RamificationData& r, const Rat& t0, const Rat& z0) {
  if (!r.eval(t0, z0).is_zero()) {
    throw Error(Errc::NotOnR, "(" + t0.str() + ", " + z0.str() + ") is not on R");
  }
  const Rat fz = r.eval_dz(t0, z0);
  if (fz.is_zero()) {
    throw Error(Errc::NotInR0, "F_z vanishes at (" + t0.str() + ", " + z0.str() + ")");
  }
  const Rat slope = -r.eval_dt(t0, z0) / fz;
  return {t0, z0, {NfElem(z0 - slope * t0), NfElem(slope), NfElem()}, {t0 * t0, Rat(-2) * t0, Rat(1)}};
}

int double_point_count(const NfPoly& g) {
  if (g.is_zero()) return 0;
  const int finite = double_locus(g).degree();
  return finite + (8 - g.degree() >= 2 ? 1 : 0);
}

std::string BitangentCandidate::describe_second_tangency() const {
  std::string s;
  if (second_tangency.degree() == 1) {
    s = "t=" + (-second_tangency.coeff(0)).str();
  } else if (second_tangency.degree() > 1) {
    std::string p;
    for (int i = second_tangency.degree(); i >= 0; --i) {
      if (second_tangency.coeff(i).is_zero()) continue;
      if (!p.empty()) p += " + ";
      p += "(" + second_tangency.coeff(i).str() + ")";
      if (i > 0) p += "*t^" + std::to_string(i);
    }
    s = "roots of " + p;
  }
  if (tangent_at_infinity) s += s.empty() ? "t=inf" : ", t=inf";
  return s;
}

namespace {

// Keeps lambda when G_lambda has a double point besides t0.
std::optional<BitangentCandidate> verify(const RamificationData& r, const TangentLine& line, const NfElem& lambda) {
  const SectionConic s = line.at(lambda);
  const NfPoly g = section_intersection_poly_nf(r, s);
  if (g.is_zero() || double_point_count(g) < 2) return std::nullopt;
  NfPoly locus = double_locus(g);
  const NfPoly at_p{-NfElem(line.t0), NfElem(1)};
  const auto [q, rem] = divmod(locus, at_p);
  if (!rem.is_zero()) throw Error(Errc::Internal, "tangent section has no double point at t0");
  locus = q;
  return BitangentCandidate{lambda, s, locus, 8 - g.degree() >= 2};
}

}  // namespace

BitangentSearch bitangent_sections(const RamificationData& r, const Rat& t0, const Rat& z0,
                                   const std::optional<std::pair<Rat, Rat>>& through) {
  const TangentLine line = tangent_line(r, t0, z0);
  BitangentSearch out{t0, z0, Poly(), {}, 0, 0};
  const Poly sq{t0 * t0, Rat(-2) * t0, Rat(1)};  // (t - t0)^2

  if (through) {
    const auto& [tr, zr] = *through;
    if (!r.eval(tr, zr).is_zero() || !r.eval_dt(tr, zr).is_zero() || !r.eval_dz(tr, zr).is_zero()) {
      throw Error(Errc::InvalidArgument, "(" + tr.str() + ", " + zr.str() + ") is not a singular point of R");
    }
    if (tr == t0) throw Error(Errc::InvalidArgument, "singular point lies on the generator through P");
    const Rat ell = line.base.c0.to_rat() + line.base.c1.to_rat() * tr;
    const Rat lambda = (zr - ell) / ((tr - t0) * (tr - t0));
    if (auto c = verify(r, line, NfElem(lambda))) {
      out.candidates.push_back(std::move(*c));
    } else {
      ++out.rejected;
    }
    return out;
  }

  // H_lambda = G_lambda / (t - t0)^2 has formal degree 6 and coefficients of
  // degree <= 4 in lambda, so Res(H, H') has lambda-degree <= 44.
  out.discriminant = interpolate_from(44, [&](const Rat& lambda) {
    const Poly g = section_intersection_poly(r, line.at(NfElem(lambda)));
    const auto [h, rem] = divmod(g, sq);
    if (!rem.is_zero()) throw Error(Errc::Internal, "G_lambda is not divisible by (t - t0)^2");
    const auto a = padded(h, 6);
    const auto b = padded(h.derivative(), 5);
    return sylvester_resultant(a, b);
  });
  if (out.discriminant.is_zero()) {
    throw Error(Errc::DegenerateDiscriminant, "disc_t(H_lambda) vanishes identically along L_P");
  }
  const auto roots = low_degree_roots(out.discriminant);
  out.unresolved_degree = roots.unresolved_degree();
  if (roots.rational.empty() && roots.quadratic.empty()) {
    throw Error(Errc::NoCandidates, "no lambda root over Q or a quadratic field");
  }
  const auto consider = [&](const NfElem& lambda) {
    if (auto c = verify(r, line, lambda)) {
      out.candidates.push_back(std::move(*c));
    } else {
      ++out.rejected;
    }
  };
  for (const auto& root : roots.rational) consider(NfElem(root.value));
  for (const auto& [q, mult] : roots.quadratic) {
    QuadraticCompositum k;
    k.add(q.coeff(1) * q.coeff(1) - Rat(4) * q.coeff(0));
    const auto [l1, l2] = quadratic_roots(q, k);
    consider(l1);
    consider(l2);
  }
  return out;
}

SingularPoints singular_points(const RamificationData& r) {
  SingularPoints out;
  // Res_z(F, F_z) has t-degree <= 56.
  const Poly res = interpolate_from(56, [&](const Rat& t) {
    const auto q = r.fiber(t);
    const Poly fz = Poly(std::vector<Rat>(q.begin(), q.end())).derivative();
    return sylvester_resultant(std::span<const Rat>(q.data(), q.size()), padded(fz, 3));
  });
  if (res.is_zero()) throw Error(Errc::Internal, "Res_z(F, F_z) vanishes identically for a reduced F");
  const auto roots = low_degree_roots(res);
  out.unresolved_degree = roots.unresolved_degree();

  const auto fiber_poly = [&](const NfElem& t, int which) {
    std::vector<NfElem> c(5);
    for (std::size_t j = 0; j < 5; ++j) {
      const Poly& fj = which == 1 ? r.f[j].derivative() : r.f[j];
      c[j] = fj.eval<NfElem>(t);
    }
    NfPoly p(std::move(c));
    return which == 2 ? p.derivative() : p;
  };
  const auto solve = [&](const NfElem& t) {
    NfPoly g = euclid_gcd(fiber_poly(t, 0), fiber_poly(t, 2));
    g = euclid_gcd(g, fiber_poly(t, 1));
    if (g.degree() <= 0) return;
    g = squarefree_part_nf(g);
    if (g.degree() == 1) {
      out.points.push_back({t, -g.coeff(0)});
      return;
    }
    if (t.is_rational()) {
      const Poly gr = g.map<Rat>([](const NfElem& c) { return c.to_rat(); });
      const auto zs = low_degree_roots(gr);
      for (const auto& z : zs.rational) out.points.push_back({t, NfElem(z.value)});
      for (const auto& [q, mult] : zs.quadratic) {
        QuadraticCompositum k;
        k.add(q.coeff(1) * q.coeff(1) - Rat(4) * q.coeff(0));
        const auto [z1, z2] = quadratic_roots(q, k);
        out.points.push_back({t, z1});
        out.points.push_back({t, z2});
      }
      out.unresolved_degree += zs.unresolved_degree();
      return;
    }
    out.unresolved_degree += g.degree();
  };
  for (const auto& root : roots.rational) solve(NfElem(root.value));
  for (const auto& [q, mult] : roots.quadratic) {
    QuadraticCompositum k;
    k.add(q.coeff(1) * q.coeff(1) - Rat(4) * q.coeff(0));
    const auto [t1, t2] = quadratic_roots(q, k);
    solve(t1);
    solve(t2);
  }
  return out;
}

}  // namespace ellfib
