#include "ellfib/elliptic/torsion.hpp"

#include <algorithm>

namespace ellfib {
namespace {

template <class F>
TorsionVerdict bounded_order(const EllipticCurve<F>& e, const Point<F>& p, int bound) {
  detail::require_on(e, p);
  Point<F> multiple = p;
  for (int m = 1; m <= bound; ++m) {
    if (multiple.is_infinity()) return Torsion{m};
    multiple = detail::add_unchecked(e, multiple, p);
  }
  return InfiniteOrder{};
}

void check_bound(int bound, int uniform, bool override_bound) {
  if (bound < 1) throw Error(Errc::InvalidArgument, "torsion bound must be positive");
  if (bound < uniform && !override_bound) {
    throw Error(Errc::BoundTooSmall, "bound " + std::to_string(bound) + " is below the uniform constant " +
                                         std::to_string(uniform));
  }
}

int field_degree_of(const NfElem& x) { return x.field() ? x.field()->degree() : 1; }

}  // namespace

std::optional<int> uniform_torsion_bound(int field_degree) {
  if (field_degree == 1) return kTorsionBoundRational;
  if (field_degree == 2) return kTorsionBoundQuadratic;
  return std::nullopt;
}

TorsionVerdict torsion_certify(const EllipticCurve<Rat>& e, const Point<Rat>& p, int bound, bool override_bound) {
  check_bound(bound, kTorsionBoundRational, override_bound);
  return bounded_order(e, p, bound);
}

TorsionVerdict torsion_certify(const EllipticCurve<NfElem>& e, const Point<NfElem>& p, std::optional<int> bound,
                               bool override_bound) {
  int degree = std::max(field_degree_of(e.a()), field_degree_of(e.b()));
  if (!p.is_infinity()) degree = std::max({degree, field_degree_of(p.x()), field_degree_of(p.y())});
  const auto uniform = uniform_torsion_bound(degree);
  if (!uniform) {
    if (!bound || !override_bound) {
      throw Error(Errc::BoundTooSmall,
                  "no uniform torsion constant for degree " + std::to_string(degree) + "; pass a bound with override");
    }
    check_bound(*bound, 1, true);
    return bounded_order(e, p, *bound);
  }
  const int b = bound.value_or(*uniform);
  check_bound(b, *uniform, override_bound);
  return bounded_order(e, p, b);
}

Integer naive_height(const Point<Rat>& p) {
  if (p.is_infinity()) return Integer(0);
  return p.x().height();
}

std::string to_string(const TorsionVerdict& v) {
  if (const auto* t = std::get_if<Torsion>(&v)) return "Torsion(" + std::to_string(t->order) + ")";
  return "InfiniteOrder";
}

}  // namespace ellfib
