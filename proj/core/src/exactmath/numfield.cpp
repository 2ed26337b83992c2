#include "ellfib/exactmath/numfield.hpp"

namespace ellfib {

namespace {

Poly ext_inverse(const Poly& a, const Poly& m) {
  // Extended Euclid: find s with s*a = 1 mod m.
  Poly r0 = m;
  Poly r1 = a;
  Poly s0;
  Poly s1 = Poly::constant(Rat(1));
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.is_zero()) throw Error(Errc::DivisionByZero, "element not invertible in number field");
  return s1 * r1.leading().inverse();
}

/// (core, cofactor) with value = core * cofactor^2 over Q, core integral.
std::pair<Integer, Rat> square_class(const Rat& value) {
  const Integer n = value.num() * value.den();
  auto [core, cof] = strip_squares(n);
  return {core, Rat(cof, value.den())};
}

bool is_square_integer(const Integer& v) {
  return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

}  // namespace

std::shared_ptr<const NumField> NumField::create(const Poly& minimal_polynomial) {
  const int d = minimal_polynomial.degree();
  if (d < 2 || d > 4) throw Error(Errc::InvalidArgument, "number field degree must be 2..4");
  if (!minimal_polynomial.leading().is_one()) {
    throw Error(Errc::InvalidArgument, "minimal polynomial must be monic");
  }
  if (!rational_roots(minimal_polynomial).empty()) {
    throw Error(Errc::NotIrreducible, to_string(minimal_polynomial, 'x') + " has a rational root");
  }
  if (d == 4 && quartic_quadratic_split(minimal_polynomial)) {
    throw Error(Errc::NotIrreducible, to_string(minimal_polynomial, 'x') + " has a quadratic factor");
  }
  return create_trusted(minimal_polynomial);
}

std::shared_ptr<const NumField> NumField::create_trusted(const Poly& minimal_polynomial) {
  return std::shared_ptr<const NumField>(new NumField(minimal_polynomial));
}

std::shared_ptr<const NumField> NumField::quadratic(const Integer& radicand) {
  if (is_square_integer(radicand)) throw Error(Errc::NotIrreducible, "radicand is a square");
  return create_trusted(Poly{Rat(Integer(-radicand)), Rat(0), Rat(1)});
}

std::optional<Integer> NumField::quadratic_radicand() const {
  if (degree() != 2 || !minpoly_.coeff(1).is_zero() || !minpoly_.coeff(0).is_integer()) return std::nullopt;
  return (-minpoly_.coeff(0)).num();
}

NfElem::NfElem(FieldPtr field, const Poly& rep) : field_(std::move(field)) {
  rep_ = field_ ? divmod(rep, field_->minimal_polynomial()).second : rep;
  if (!field_ && rep_.degree() > 0) throw Error(Errc::FieldMismatch, "irrational element without a field");
}

NfElem NfElem::generator(const FieldPtr& field) {
  return NfElem(field, Poly::variable());
}

Rat NfElem::to_rat() const {
  if (!is_rational()) throw Error(Errc::FieldMismatch, "element is not rational: " + str());
  return rep_.coeff(0);
}

FieldPtr NfElem::common(const NfElem& a, const NfElem& b) {
  if (!a.field_) return b.field_;
  if (!b.field_ || a.field_ == b.field_ || *a.field_ == *b.field_) return a.field_;
  // Rational elements can be moved to any field.
  if (a.is_rational()) return b.field_;
  if (b.is_rational()) return a.field_;
  throw Error(Errc::FieldMismatch, "elements of different number fields");
}

NfElem& NfElem::operator+=(const NfElem& o) {
  field_ = common(*this, o);
  rep_ += o.rep_;
  return *this;
}

NfElem& NfElem::operator-=(const NfElem& o) {
  field_ = common(*this, o);
  rep_ -= o.rep_;
  return *this;
}

NfElem& NfElem::operator*=(const NfElem& o) {
  field_ = common(*this, o);
  rep_ = rep_ * o.rep_;
  if (field_ && rep_.degree() >= field_->degree()) rep_ = divmod(rep_, field_->minimal_polynomial()).second;
  return *this;
}

NfElem NfElem::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (is_rational()) return NfElem(field_, Poly::constant(rep_.coeff(0).inverse()));
  return NfElem(field_, ext_inverse(rep_, field_->minimal_polynomial()));
}

NfElem NfElem::conjugate() const {
  if (is_rational()) return *this;
  if (field_->degree() != 2) throw Error(Errc::InvalidArgument, "conjugate needs a quadratic field");
  // alpha + alpha' = -p for x^2 + p x + q.
  const Rat p = field_->minimal_polynomial().coeff(1);
  const Rat a = rep_.coeff(0);
  const Rat b = rep_.coeff(1);
  return NfElem(field_, Poly{a - b * p, -b});
}

bool operator==(const NfElem& a, const NfElem& b) {
  if (a.rep_ != b.rep_) return false;
  if (a.is_rational()) return true;
  return a.field_ == b.field_ || *a.field_ == *b.field_;
}

std::string NfElem::str() const {
  if (is_rational()) return rep_.coeff(0).str();
  return to_string(rep_, 'a');
}

void QuadraticCompositum::add(const Rat& value) {
  if (value.is_zero()) return;
  auto [core, cof] = square_class(value);
  if (is_square_integer(core)) return;
  for (const auto& r : radicands_) {
    if (is_square_integer(r * core)) return;
  }
  if (radicands_.size() == 2 && is_square_integer(radicands_[0] * radicands_[1] * core)) return;
  if (radicands_.size() == 2) {
    throw Error(Errc::TraceFieldTooLarge, "three independent square roots needed");
  }
  radicands_.push_back(core);
  built_ = false;
}

void QuadraticCompositum::build() const {
  if (built_) return;
  roots_.clear();
  if (radicands_.empty()) {
    field_.reset();
  } else if (radicands_.size() == 1) {
    field_ = NumField::quadratic(radicands_[0]);
    roots_.push_back(NfElem::generator(field_));
  } else {
    const Rat d1(radicands_[0]);
    const Rat d2(radicands_[1]);
    // alpha = sqrt(d1) + sqrt(d2).
    const Poly minpoly{(d1 - d2) * (d1 - d2), Rat(0), Rat(-2) * (d1 + d2), Rat(0), Rat(1)};
    field_ = NumField::create_trusted(minpoly);
    const NfElem alpha = NfElem::generator(field_);
    const NfElem cube = alpha * alpha * alpha;
    const NfElem s2 = (cube - NfElem(d1 + Rat(3) * d2) * alpha) / NfElem(Rat(2) * (d1 - d2));
    const NfElem s1 = alpha - s2;
    roots_.push_back(s1);
    roots_.push_back(s2);
  }
  built_ = true;
}

FieldPtr QuadraticCompositum::field() const {
  build();
  return field_;
}

NfElem QuadraticCompositum::sqrt(const Rat& value) const {
  if (value.is_zero()) return NfElem();
  build();
  auto [core, cof] = square_class(value);
  if (is_square_integer(core)) return NfElem(cof * Rat(Integer(::sqrt(core))));
  for (std::size_t i = 0; i < radicands_.size(); ++i) {
    const Integer prod = radicands_[i] * core;
    if (is_square_integer(prod)) {
      // sqrt(core) = sqrt(prod) / sqrt(r_i) = sqrt(prod) * sqrt(r_i) / r_i.
      const Rat scale = cof * Rat(Integer(::sqrt(prod)), radicands_[i]);
      NfElem out = roots_[i] * NfElem(scale);
      out = NfElem(field_, out.rep());
      return out;
    }
  }
  if (radicands_.size() == 2) {
    const Integer prod = radicands_[0] * radicands_[1] * core;
    if (is_square_integer(prod)) {
      const Rat scale = cof * Rat(Integer(::sqrt(prod)), radicands_[0] * radicands_[1]);
      return NfElem(field_, (roots_[0] * roots_[1] * NfElem(scale)).rep());
    }
  }
  throw Error(Errc::Internal, "square root of " + value.str() + " was not registered");
}

std::pair<NfElem, NfElem> quadratic_roots(const Poly& monic_quadratic, const QuadraticCompositum& field) {
  const Rat b = monic_quadratic.coeff(1);
  const Rat c = monic_quadratic.coeff(0);
  const NfElem root = field.sqrt(b * b - Rat(4) * c);
  const NfElem half(Rat(Integer(1), Integer(2)));
  return {(NfElem(-b) + root) * half, (NfElem(-b) - root) * half};
}

}  // namespace ellfib
