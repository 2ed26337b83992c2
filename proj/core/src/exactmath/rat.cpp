#include "ellfib/exactmath/rat.hpp"

#include <functional>

#include "ellfib/error.hpp"

namespace ellfib {

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  if (i == text.size()) return false;
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') return false;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rat::Rat(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) {
      throw Error(Errc::ParseError, "not a rational: '" + std::string(text) + "'");
    }
  } else {
    const auto den_text = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), num) || den_text.empty() ||
        den_text[0] == '-' || den_text[0] == '+' || !parse_integer(den_text, den)) {
      throw Error(Errc::ParseError, "not a rational: '" + std::string(text) + "'");
    }
    if (den == 0) {
      throw Error(Errc::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    }
  }
  return Rat(num, den);
}

Rat Rat::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return Rat(mpq_class(1 / value_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "rational division by zero");
  value_ /= o.value_;
  return *this;
}

Integer Rat::height() const {
  Integer n = ::abs(value_.get_num());
  const Integer& d = value_.get_den();
  return n > d ? n : d;
}

Rat pow(const Rat& base, unsigned long exponent) {
  Integer n;
  Integer d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rat(n, d);
}

bool rational_sqrt(const Rat& value, Rat& root) {
  if (value.sign() < 0) return false;
  const Integer n = value.num();
  const Integer d = value.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  root = Rat(sqrt(n), sqrt(d));
  return true;
}

std::pair<Integer, Integer> strip_squares(const Integer& value, unsigned long bound) {
  Integer core = value;
  Integer cofactor = 1;
  if (core == 0) return {core, cofactor};
  for (unsigned long p = 2; p <= bound; p += (p == 2 ? 1 : 2)) {
    const Integer sq = Integer(p) * p;
    if (sq > ::abs(core)) break;
    while (mpz_divisible_p(core.get_mpz_t(), sq.get_mpz_t())) {
      core /= sq;
      cofactor *= p;
    }
  }
  // Large square cofactor left over.
  Integer a = ::abs(core);
  if (a > 1 && mpz_perfect_square_p(a.get_mpz_t())) {
    cofactor *= sqrt(a);
    core = core > 0 ? 1 : -1;
  }
  return {core, cofactor};
}

std::size_t RatHash::operator()(const Rat& r) const {
  return std::hash<std::string>{}(r.str());
}

}  // namespace ellfib
