#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace multipath {

/// Exact rationals, always in lowest terms.
struct Rationals {
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type from_rational(const mpq_class& q) const {
    value_type r = q;
    r.canonicalize();
    return r;
  }
  value_type from_int(long v) const { return v; }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }
  unsigned long characteristic() const { return 0; }
};

bool is_prime(std::uint64_t n);

/// Integers modulo a prime p < 2^31.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
      throw std::invalid_argument(std::to_string(p) + " is not a supported prime");
    }
  }

  std::uint32_t prime() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const;
  bool is_zero(value_type a) const { return a == 0; }
  value_type from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  /// Throws if p divides the denominator.
  value_type from_rational(const mpq_class& q) const;
  std::string to_string(value_type a) const { return std::to_string(a); }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  unsigned long characteristic() const { return p_; }

 private:
  std::uint32_t p_;
};

using AnyField = std::variant<Rationals, PrimeField>;

/// "q" for the rationals or "gf:p" for a prime field.
AnyField parse_field(const std::string& spec);

}  // namespace multipath
