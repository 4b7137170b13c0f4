#include "mph/core/field.hpp"

#include <string>

#include "mph/core/errors.hpp"

namespace mph {

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (p >= (1u << 16) || !is_prime(p))
    throw ContractError("field characteristic must be a prime below 65536, got " + std::to_string(p));
}

Field::Elem Field::inv(Elem a) const {
  if (a % p_ == 0) throw ContractError("division by zero in field");
  // extended Euclid on (a, p)
  long long t = 0, new_t = 1;
  long long r = p_, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

Field::Elem Field::from_int(long long v) const noexcept {
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += p_;
  return static_cast<Elem>(m);
}

long long Field::to_signed(Elem a) const noexcept {
  if (a > p_ / 2) return static_cast<long long>(a) - p_;
  return a;
}

}  // namespace mph
