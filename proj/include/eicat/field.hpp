#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eicat {

/// Characteristic of the ground field: 0 (the rationals) or a prime p (F_p).
class FieldSpec {
 public:
  FieldSpec() = default;

  /// Throws std::invalid_argument unless `characteristic` is 0 or prime.
  explicit FieldSpec(std::int64_t characteristic);

  std::uint32_t characteristic() const { return characteristic_; }

  /// An integer n is invertible iff the characteristic is 0 or does not divide n.
  bool invertible(std::int64_t n) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t characteristic_ = 0;
};

bool is_prime(std::int64_t n);

/// The prime field F_p. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1 % p_; }
  Element from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// a - b*c
  Element sub_mul(Element a, Element b, Element c) const { return sub(a, mul(b, c)); }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }

  std::string to_string(Element a) const { return std::to_string(a); }
  /// Accepts an integer or a fraction "a/b".
  Element parse(std::string_view text) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// The rationals, backed by GMP with normalized fractions.
class RationalField {
 public:
  using Element = mpq_class;

  std::uint32_t characteristic() const { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t n) const { return Element(static_cast<long>(n)); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element sub_mul(const Element& a, const Element& b, const Element& c) const {
    return a - b * c;
  }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const;

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  std::string to_string(const Element& a) const { return a.get_str(); }
  Element parse(std::string_view text) const;

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Runs `fn(field)` with the concrete field selected by `spec`.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.characteristic() == 0) return fn(RationalField{});
  return fn(PrimeField{spec.characteristic()});
}

}  // namespace eicat
