#include "stf/rational.hpp"

#include <stdexcept>

namespace stf {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

std::string Rational::to_string() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational pow(const Rational& base, unsigned e) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), e);
  return Rational(n, d);
}

Integer square_class_integer(const Rational& r) {
  if (r.is_zero()) throw std::domain_error("square class of zero");
  return r.numerator() * r.denominator();
}

}  // namespace stf
