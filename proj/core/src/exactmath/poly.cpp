#include "ellfib/exactmath/poly.hpp"

#include <algorithm>
#include <sstream>

namespace ellfib {

namespace {

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

Integer zcontent(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void zdiv_exact(ZPoly& p, const Integer& d) {
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

ZPoly zprimitive(ZPoly p) {
  const Integer c = zcontent(p);
  if (c != 0 && c != 1) zdiv_exact(p, c);
  return p;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed over Z.
ZPoly zprem(ZPoly a, const ZPoly& b) {
  const int db = zdeg(b);
  const Integer& lb = b.back();
  int e = zdeg(a) - db + 1;
  while (!a.empty() && zdeg(a) >= db) {
    const Integer la = a.back();
    const int shift = zdeg(a) - db;
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] -= la * b[static_cast<std::size_t>(j)];
    ztrim(a);
    --e;
  }
  if (e > 0) {
    const Integer f = ipow(lb, static_cast<unsigned long>(e));
    for (auto& c : a) c *= f;
  }
  return a;
}

Poly from_z(const ZPoly& p) {
  std::vector<Rat> c;
  c.reserve(p.size());
  for (const auto& x : p) c.emplace_back(x);
  return Poly(std::move(c));
}

}  // namespace

namespace {

/// Subresultant gcd over Z, multiplied back by the gcd of the contents.
ZPoly zgcd(ZPoly a, ZPoly b) {
  if (zdeg(b) > zdeg(a)) std::swap(a, b);
  if (b.empty()) return zprimitive(a);
  const Integer d = gcd(zcontent(a), zcontent(b));
  a = zprimitive(std::move(a));
  b = zprimitive(std::move(b));
  Integer g = 1;
  Integer h = 1;
  for (;;) {
    const int delta = zdeg(a) - zdeg(b);
    ZPoly r = zprem(a, b);
    if (r.empty()) {
      ZPoly out = zprimitive(b);
      for (auto& c : out) c *= d;
      return out;
    }
    if (zdeg(r) == 0) return ZPoly{d};
    a = std::move(b);
    zdiv_exact(r, g * ipow(h, static_cast<unsigned long>(delta)));
    b = std::move(r);
    g = a.back();
    if (delta > 0) {
      Integer num = ipow(g, static_cast<unsigned long>(delta));
      Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
}

/// Resultant of integer polynomials of degree >= 1 (Collins/Brown
/// subresultant recurrence).
Integer zresultant(ZPoly a, ZPoly b) {
  Integer s = 1;
  const Integer ca = zcontent(a);
  const Integer cb = zcontent(b);
  const Integer t = ipow(ca, static_cast<unsigned long>(zdeg(b))) *
                    ipow(cb, static_cast<unsigned long>(zdeg(a)));
  zdiv_exact(a, ca);
  zdiv_exact(b, cb);
  if (zdeg(a) < zdeg(b)) {
    std::swap(a, b);
    if ((zdeg(a) % 2 == 1) && (zdeg(b) % 2 == 1)) s = -1;
  }
  Integer g = 1;
  Integer h = 1;
  while (zdeg(b) > 0) {
    const int delta = zdeg(a) - zdeg(b);
    if ((zdeg(a) % 2 == 1) && (zdeg(b) % 2 == 1)) s = -s;
    ZPoly r = zprem(a, b);
    a = std::move(b);
    if (r.empty()) return 0;
    zdiv_exact(r, g * ipow(h, static_cast<unsigned long>(delta)));
    b = std::move(r);
    g = a.back();
    if (delta > 0) {
      Integer num = ipow(g, static_cast<unsigned long>(delta));
      Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  // b is a nonzero constant here.
  const int da = zdeg(a);
  Integer num = ipow(b.back(), static_cast<unsigned long>(da));
  if (da > 1) {
    Integer den = ipow(h, static_cast<unsigned long>(da - 1));
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return s * t * num;
}

// ---- arithmetic modulo a word-size prime, used by rational_roots ----

using Word = unsigned long;
using ModPoly = std::vector<Word>;

Word mulmod(Word a, Word b, Word p) {
  return static_cast<Word>((static_cast<unsigned __int128>(a) * b) % p);
}

Word powmod(Word a, Word e, Word p) {
  Word r = 1 % p;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

void mtrim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly mod_reduce(const ZPoly& f, Word p) {
  ModPoly out;
  out.reserve(f.size());
  for (const auto& c : f) out.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  mtrim(out);
  return out;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, Word p) {
  const Word inv = powmod(b.back(), p - 2, p);
  while (!a.empty() && a.size() >= b.size()) {
    const Word f = mulmod(a.back(), inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = (a[shift + j] + p - mulmod(f, b[j], p)) % p;
    }
    mtrim(a);
  }
  return a;
}

bool mod_squarefree(const ModPoly& f, Word p) {
  ModPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mulmod(f[i], i % p, p));
  mtrim(d);
  if (d.empty()) return false;
  ModPoly a = f;
  ModPoly b = d;
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

Word mod_eval(const ModPoly& f, Word x, Word p) {
  Word acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (mulmod(acc, x, p) + *it) % p;
  return acc;
}

Integer zeval_mod(const ZPoly& f, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = acc * x + *it;
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

/// Finds n/d with |n| <= bound, 0 < d <= bound and n = d*r (mod m).
std::optional<Rat> rational_reconstruct(const Integer& r, const Integer& m, const Integer& bound) {
  Integer r0 = m;
  Integer r1 = r;
  Integer s0 = 0;
  Integer s1 = 1;
  while (r1 > bound) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    Integer r2 = r0 - q * r1;
    Integer s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (s1 == 0 || ::abs(s1) > bound) return std::nullopt;
  return Rat(r1, s1);
}

/// Rational roots of a squarefree primitive integer polynomial with nonzero
/// constant term.
std::vector<Rat> squarefree_rational_roots(const ZPoly& f) {
  std::vector<Rat> roots;
  if (zdeg(f) < 1) return roots;
  if (zdeg(f) == 1) {
    roots.emplace_back(-f[0], f[1]);
    return roots;
  }
  const Integer bound = std::max(::abs(f.front()), ::abs(f.back()));
  const Integer needed = 2 * bound * bound + 1;

  Integer prime = 97;
  ModPoly fm;
  for (;;) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    const Word p = prime.get_ui();
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p) != 0) continue;
    fm = mod_reduce(f, p);
    if (mod_squarefree(fm, p)) break;
  }
  const Word p = prime.get_ui();

  ZPoly df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * static_cast<unsigned long>(i));

  for (Word x = 0; x < p; ++x) {
    if (mod_eval(fm, x, p) != 0) continue;
    Integer root = x;
    Integer modulus = prime;
    while (modulus < needed) {
      modulus *= modulus;
      Integer fx = zeval_mod(f, root, modulus);
      Integer dfx = zeval_mod(df, root, modulus);
      Integer inv;
      if (mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), modulus.get_mpz_t()) == 0) break;
      root = root - fx * inv;
      mpz_mod(root.get_mpz_t(), root.get_mpz_t(), modulus.get_mpz_t());
    }
    auto candidate = rational_reconstruct(root, modulus, bound);
    if (!candidate) continue;
    const Poly fq = from_z(f);
    if (fq(*candidate).is_zero()) roots.push_back(*candidate);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::string term_string(const Rat& c, int i, char var, bool first) {
  std::ostringstream out;
  Rat mag = c;
  if (first) {
    if (c.sign() < 0) {
      out << "-";
      mag = -c;
    }
  } else {
    out << (c.sign() < 0 ? " - " : " + ");
    if (c.sign() < 0) mag = -c;
  }
  if (i == 0 || !mag.is_one()) {
    out << mag.str();
    if (i > 0) out << "*";
  }
  if (i >= 1) out << var;
  if (i >= 2) out << "^" << i;
  return out.str();
}

}  // namespace

Poly poly_from_strings(std::span<const std::string> coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.push_back(Rat::parse(s));
  return Poly(std::move(c));
}

std::vector<std::string> poly_to_strings(const Poly& p) {
  std::vector<std::string> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

std::string to_string(const Poly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rat c = p.coeff(i);
    if (c.is_zero()) continue;
    out += term_string(c, i, var, first);
    first = false;
  }
  return out;
}

std::pair<Rat, std::vector<Integer>> primitive_part(const Poly& p) {
  if (p.is_zero()) return {Rat(0), {}};
  Integer l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
  ZPoly z;
  z.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) z.push_back(c.num() * (l / c.den()));
  Integer g = zcontent(z);
  if (z.back() < 0) g = -g;
  zdiv_exact(z, g);
  return {Rat(g, l), std::move(z)};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd(0, 0)");
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  const ZPoly za = primitive_part(a).second;
  const ZPoly zb = primitive_part(b).second;
  return monic(from_z(zgcd(za, zb)));
}

Rat resultant(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) throw Error(Errc::ZeroInput, "resultant with a zero polynomial");
  if (p.degree() == 0) return pow(p.leading(), static_cast<unsigned long>(q.degree()));
  if (q.degree() == 0) return pow(q.leading(), static_cast<unsigned long>(p.degree()));
  auto [cp, zp] = primitive_part(p);
  auto [cq, zq] = primitive_part(q);
  const Rat scale = pow(cp, static_cast<unsigned long>(q.degree())) *
                    pow(cq, static_cast<unsigned long>(p.degree()));
  return scale * Rat(zresultant(std::move(zp), std::move(zq)));
}

Rat discriminant(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroInput, "discriminant of the zero polynomial");
  const int d = p.degree();
  if (d == 0) return Rat(1);
  if (d == 1) return Rat(1);
  Rat r = resultant(p, p.derivative()) / p.leading();
  if (((d * (d - 1)) / 2) % 2 == 1) r = -r;
  return r;
}

Rat discriminant_resultant(const Poly& p, const std::optional<Poly>& q) {
  if (p.is_zero()) throw Error(Errc::ZeroInput, "zero first argument");
  return q ? resultant(p, *q) : discriminant(p);
}

Rat sylvester_resultant(std::span<const Rat> a, std::span<const Rat> b) {
  const int m = static_cast<int>(a.size()) - 1;
  const int n = static_cast<int>(b.size()) - 1;
  if (m < 0 || n < 0) throw Error(Errc::ZeroInput, "empty coefficient list");
  const int size = m + n;
  if (size == 0) return Rat(1);
  std::vector<std::vector<Rat>> mat(static_cast<std::size_t>(size), std::vector<Rat>(static_cast<std::size_t>(size)));
  // Rows hold coefficients from the highest degree down.
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j <= m; ++j) mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = a[static_cast<std::size_t>(m - j)];
  }
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j <= n; ++j) mat[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = b[static_cast<std::size_t>(n - j)];
  }
  Rat det = 1;
  for (int col = 0; col < size; ++col) {
    int pivot = -1;
    for (int r = col; r < size; ++r) {
      if (!mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      std::swap(mat[static_cast<std::size_t>(pivot)], mat[static_cast<std::size_t>(col)]);
      det = -det;
    }
    const auto& prow = mat[static_cast<std::size_t>(col)];
    const Rat pv = prow[static_cast<std::size_t>(col)];
    det *= pv;
    for (int r = col + 1; r < size; ++r) {
      auto& row = mat[static_cast<std::size_t>(r)];
      if (row[static_cast<std::size_t>(col)].is_zero()) continue;
      const Rat f = row[static_cast<std::size_t>(col)] / pv;
      for (int c = col; c < size; ++c) row[static_cast<std::size_t>(c)] -= f * prow[static_cast<std::size_t>(c)];
    }
  }
  return det;
}

std::vector<SquarefreeFactor> squarefree_decompose(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroInput, "squarefree decomposition of zero");
  std::vector<SquarefreeFactor> out;
  if (p.degree() == 0) return out;
  const Poly f = monic(p);
  const Poly a0 = poly_gcd(f, f.derivative());
  Poly b = exact_div(f, a0);
  Poly c = exact_div(f.derivative(), a0);
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    const Poly a = poly_gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

Poly squarefree_part(const Poly& p) {
  Poly out = Poly::constant(Rat(1));
  for (const auto& f : squarefree_decompose(p)) out *= f.factor;
  return out;
}

std::vector<RationalRoot> rational_roots(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroInput, "rational roots of zero");
  std::vector<RationalRoot> out;
  for (const auto& [factor, mult] : squarefree_decompose(p)) {
    Poly f = factor;
    if (f.coeff(0).is_zero()) {
      out.push_back({Rat(0), mult});
      f = exact_div(f, Poly::variable());
    }
    for (auto& r : squarefree_rational_roots(primitive_part(f).second)) out.push_back({std::move(r), mult});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.value < y.value; });
  return out;
}

std::optional<std::pair<Poly, Poly>> quartic_quadratic_split(const Poly& quartic) {
  if (quartic.degree() != 4) return std::nullopt;
  const Poly f = monic(quartic);
  const Rat shift = f.coeff(3) / Rat(4);
  // y = x + shift, so x = y - shift.
  const Poly depressed = f.compose(Poly{-shift, Rat(1)});
  const Rat P = depressed.coeff(2);
  const Rat Q = depressed.coeff(1);
  const Rat R = depressed.coeff(0);
  const Poly back{shift, Rat(1)};

  auto accept = [&](const Poly& g, const Poly& h) -> std::optional<std::pair<Poly, Poly>> {
    if (!(g * h == depressed)) return std::nullopt;
    Poly gx = g.compose(back);
    Poly hx = h.compose(back);
    if (hx.coefficients() < gx.coefficients()) std::swap(gx, hx);
    return std::make_pair(gx, hx);
  };

  if (!Q.is_zero()) {
    const Poly resolvent{-(Q * Q), P * P - Rat(4) * R, Rat(2) * P, Rat(1)};
    for (const auto& root : rational_roots(resolvent)) {
      Rat alpha;
      if (root.value.sign() <= 0 || !rational_sqrt(root.value, alpha)) continue;
      const Rat beta = (root.value + P - Q / alpha) / Rat(2);
      const Rat gamma = (root.value + P + Q / alpha) / Rat(2);
      if (auto r = accept(Poly{beta, alpha, Rat(1)}, Poly{gamma, -alpha, Rat(1)})) return r;
    }
    return std::nullopt;
  }
  Rat s;
  if (rational_sqrt(P * P - Rat(4) * R, s)) {
    const Rat r1 = (-P + s) / Rat(2);
    const Rat r2 = (-P - s) / Rat(2);
    if (auto r = accept(Poly{-r1, Rat(0), Rat(1)}, Poly{-r2, Rat(0), Rat(1)})) return r;
  }
  Rat root_r;
  if (rational_sqrt(R, root_r)) {
    for (const Rat& beta : {root_r, -root_r}) {
      Rat alpha;
      const Rat a2 = Rat(2) * beta - P;
      if (a2.sign() > 0 && rational_sqrt(a2, alpha)) {
        if (auto r = accept(Poly{beta, alpha, Rat(1)}, Poly{beta, -alpha, Rat(1)})) return r;
      }
    }
  }
  return std::nullopt;
}

LowDegreeSplit split_low_degree(const Poly& squarefree) {
  if (squarefree.is_zero()) throw Error(Errc::ZeroInput, "split of zero");
  LowDegreeSplit out;
  Poly rest = monic(squarefree);
  for (const auto& r : rational_roots(rest)) {
    out.roots.push_back(r.value);
    rest = exact_div(rest, Poly{-r.value, Rat(1)});
  }
  if (rest.degree() == 2) {
    out.quadratics.push_back(rest);
    rest = Poly::constant(Rat(1));
  } else if (rest.degree() == 4) {
    if (auto split = quartic_quadratic_split(rest)) {
      out.quadratics.push_back(monic(split->first));
      out.quadratics.push_back(monic(split->second));
      rest = Poly::constant(Rat(1));
    }
  }
  out.remainder = rest;
  return out;
}

int LowDegreeRoots::unresolved_degree() const {
  int d = 0;
  for (const auto& [f, m] : unresolved) d += f.degree() * m;
  return d;
}

LowDegreeRoots low_degree_roots(const Poly& p) {
  LowDegreeRoots out;
  for (const auto& [factor, mult] : squarefree_decompose(p)) {
    const auto split = split_low_degree(factor);
    for (const auto& r : split.roots) out.rational.push_back({r, mult});
    for (const auto& q : split.quadratics) out.quadratic.emplace_back(q, mult);
    if (split.remainder.degree() > 0) out.unresolved.emplace_back(split.remainder, mult);
  }
  std::sort(out.rational.begin(), out.rational.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  return out;
}

Poly interpolate(std::span<const Rat> xs, std::span<const Rat> ys) {
  const std::size_t n = xs.size();
  if (n != ys.size()) throw Error(Errc::InvalidArgument, "interpolation size mismatch");
  std::vector<Rat> coef(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  }
  Poly result;
  for (std::size_t k = n; k-- > 0;) {
    result = result * Poly{-xs[k], Rat(1)} + Poly::constant(coef[k]);
  }
  return result;
}

}  // namespace ellfib
