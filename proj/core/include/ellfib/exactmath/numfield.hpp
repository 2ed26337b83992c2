#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ellfib/exactmath/poly.hpp"

namespace ellfib {

/// Q(alpha) with alpha a root of a monic irreducible polynomial of degree
/// 2..4.
class NumField {
 public:
  /// Verifies irreducibility (no rational root; for quartics, no rational
  /// quadratic factor). Throws Error(NotIrreducible) otherwise.
  static std::shared_ptr<const NumField> create(const Poly& minimal_polynomial);

  /// Q(sqrt(d)) for a non-square rational d, generator sqrt(d) with minimal
  /// polynomial x^2 - d' where d' is the integer square class of d.
  static std::shared_ptr<const NumField> quadratic(const Integer& radicand);

  const Poly& minimal_polynomial() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }

  /// d when the minimal polynomial is x^2 - d.
  std::optional<Integer> quadratic_radicand() const;

  std::string describe() const { return to_string(minpoly_, 'a'); }

  friend bool operator==(const NumField& a, const NumField& b) { return a.minpoly_ == b.minpoly_; }

  /// Skips the irreducibility check; the caller guarantees it.
  static std::shared_ptr<const NumField> create_trusted(const Poly& minimal_polynomial);

 private:
  explicit NumField(Poly minpoly) : minpoly_(std::move(minpoly)) {}
  Poly minpoly_;
};

using FieldPtr = std::shared_ptr<const NumField>;

/// Element of a number field, stored as a residue polynomial in the
/// generator. A null field denotes Q itself, so rationals mix freely with
/// elements of any one field.
class NfElem {
 public:
  NfElem() = default;
  NfElem(const Rat& value) : rep_(Poly::constant(value)) {}  // NOLINT(google-explicit-constructor)
  NfElem(long value) : NfElem(Rat(value)) {}  // NOLINT(google-explicit-constructor)
  NfElem(FieldPtr field, const Poly& rep);

  static NfElem generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const Poly& rep() const { return rep_; }

  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.degree() <= 0; }
  /// Throws Error(FieldMismatch) if the element is irrational.
  Rat to_rat() const;

  NfElem inverse() const;
  /// Galois conjugate; only for quadratic fields (identity on Q).
  NfElem conjugate() const;

  NfElem& operator+=(const NfElem& o);
  NfElem& operator-=(const NfElem& o);
  NfElem& operator*=(const NfElem& o);
  NfElem& operator/=(const NfElem& o) { return *this *= o.inverse(); }

  friend NfElem operator+(NfElem a, const NfElem& b) { return a += b; }
  friend NfElem operator-(NfElem a, const NfElem& b) { return a -= b; }
  friend NfElem operator*(NfElem a, const NfElem& b) { return a *= b; }
  friend NfElem operator/(NfElem a, const NfElem& b) { return a /= b; }
  friend NfElem operator-(const NfElem& a) { return NfElem(a.field_, -a.rep_); }
  friend bool operator==(const NfElem& a, const NfElem& b);

  std::string str() const;

 private:
  static FieldPtr common(const NfElem& a, const NfElem& b);
  FieldPtr field_;
  Poly rep_;
};

/// Collects square roots of rationals and realizes them in one field:
/// Q, a quadratic field, or a biquadratic field Q(sqrt(d1), sqrt(d2)).
/// A third independent radicand raises Error(TraceFieldTooLarge).
class QuadraticCompositum {
 public:
  void add(const Rat& value);
  FieldPtr field() const;
  /// A square root of `value`, which must have been added.
  NfElem sqrt(const Rat& value) const;

  int degree() const { return 1 << radicands_.size(); }

 private:
  void build() const;
  std::vector<Integer> radicands_;
  mutable FieldPtr field_;
  mutable std::vector<NfElem> roots_;
  mutable bool built_ = false;
};

/// Both roots (-b +- sqrt(b^2 - 4c))/2 of x^2 + b x + c inside `field`, to
/// which the discriminant must already have been added.
std::pair<NfElem, NfElem> quadratic_roots(const Poly& monic_quadratic, const QuadraticCompositum& field);

}  // namespace ellfib
