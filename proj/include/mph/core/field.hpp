#pragma once

#include <cstdint>

namespace mph {

/// Arithmetic in the prime field Z/pZ, p < 2^16.
class Field {
 public:
  using Elem = std::uint32_t;

  /// Throws ContractError unless p is a prime below 2^16.
  explicit Field(std::uint32_t p = 2);

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_binary() const noexcept { return p_ == 2; }

  Elem add(Elem a, Elem b) const noexcept {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// Multiplicative inverse; a must be nonzero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// Reduces an arbitrary integer into [0, p).
  Elem from_int(long long v) const noexcept;
  /// Representative in (-p/2, p/2], used for +-1 boundary signs in output.
  long long to_signed(Elem a) const noexcept;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

}  // namespace mph
