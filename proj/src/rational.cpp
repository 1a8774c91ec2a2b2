#include "famalg/rational.hpp"

#include <cctype>
#include <ostream>

namespace famalg {

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw std::invalid_argument("Rational::parse: bad character in '" + std::string(text) + "'");
  }
  try {
    mpq_class q(std::string(text), 10);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return Rational(std::move(q));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational::parse: malformed rational '" + std::string(text) + "'");
  }
}

std::string Rational::str() const {
  return v_.get_str();  // "p" or "p/q", lowest terms
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.v_;
}

}  // namespace famalg
