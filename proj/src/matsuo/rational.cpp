#include "fischer_lab/matsuo/rational.hpp"

#include <algorithm>
#include <cctype>

#include "fischer_lab/error.hpp"

namespace fischer_lab {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::domain, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const auto num = body.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) {
    throw Error(ErrorKind::parse, "cannot parse rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::parse, "rational '" + std::string(text) + "' has zero denominator");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::domain, "division by zero");
  v_ /= o.v_;
  return *this;
}

}  // namespace fischer_lab
