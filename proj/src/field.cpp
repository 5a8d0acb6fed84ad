#include "multipath/field.hpp"

#include <charconv>

namespace multipath {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw std::domain_error("division by zero");
  value_type result = 1;
  value_type base = a;
  for (std::uint32_t e = p_ - 2; e != 0; e >>= 1) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

PrimeField::value_type PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (den == 0) {
    throw std::domain_error(q.get_str() + " has no image in " + name());
  }
  if (num < 0) num += p_;
  return mul(static_cast<value_type>(num.get_ui()), inv(static_cast<value_type>(den.get_ui())));
}

AnyField parse_field(const std::string& spec) {
  if (spec == "q" || spec == "Q") return Rationals{};
  if (spec.rfind("gf:", 0) == 0) {
    std::uint64_t p = 0;
    const char* first = spec.data() + 3;
    const char* last = spec.data() + spec.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc() || ptr != last || first == last) {
      throw std::invalid_argument("bad field '" + spec + "'");
    }
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
      throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not a prime");
    }
    return PrimeField(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("bad field '" + spec + "', expected q or gf:p");
}

}  // namespace multipath
