#include "eicat/field.hpp"

#include <charconv>

namespace eicat {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::int64_t characteristic) {
  if (characteristic != 0 && (!is_prime(characteristic) || characteristic > 0x7fffffff)) {
    throw std::invalid_argument("characteristic must be 0 or a prime, got " +
                                std::to_string(characteristic));
  }
  characteristic_ = static_cast<std::uint32_t>(characteristic);
}

bool FieldSpec::invertible(std::int64_t n) const {
  if (characteristic_ == 0) return n != 0;
  return n % static_cast<std::int64_t>(characteristic_) != 0;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return from_int(t);
}

namespace {

std::int64_t parse_integer(std::string_view text) {
  std::int64_t value = 0;
  auto begin = text.data();
  if (!text.empty() && text.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || begin == text.data() + text.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

PrimeField::Element PrimeField::parse(std::string_view text) const {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_int(parse_integer(text));
  Element num = from_int(parse_integer(text.substr(0, slash)));
  Element den = from_int(parse_integer(text.substr(slash + 1)));
  if (den == 0) throw std::invalid_argument("denominator vanishes in F_" + std::to_string(p_));
  return div(num, den);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw std::domain_error("RationalField: inverse of zero");
  return Element(1) / a;
}

RationalField::Element RationalField::div(const Element& a, const Element& b) const {
  if (sgn(b) == 0) throw std::domain_error("RationalField: division by zero");
  return a / b;
}

RationalField::Element RationalField::parse(std::string_view text) const {
  Element value;
  if (value.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  if (sgn(value.get_den()) == 0) throw std::invalid_argument("zero denominator");
  value.canonicalize();
  return value;
}

}  // namespace eicat
