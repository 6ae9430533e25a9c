#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace rigidity {

/// Element of F_p with p = 2^61 - 1 (a Mersenne prime).
class Fp {
 public:
  static constexpr std::uint64_t modulus = (std::uint64_t{1} << 61) - 1;

  constexpr Fp() = default;
  constexpr explicit Fp(std::uint64_t value) : value_(reduce_word(value)) {}

  static constexpr Fp from_signed(std::int64_t value) {
    if (value >= 0) return Fp(static_cast<std::uint64_t>(value));
    return -Fp(static_cast<std::uint64_t>(-(value + 1)) + 1);
  }

  constexpr std::uint64_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr Fp operator+(Fp a, Fp b) {
    std::uint64_t s = a.value_ + b.value_;
    return raw(s >= modulus ? s - modulus : s);
  }
  friend constexpr Fp operator-(Fp a, Fp b) {
    return raw(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + modulus - b.value_);
  }
  constexpr Fp operator-() const { return raw(value_ == 0 ? 0 : modulus - value_); }
  friend constexpr Fp operator*(Fp a, Fp b) {
    unsigned __int128 prod = static_cast<unsigned __int128>(a.value_) * b.value_;
    std::uint64_t lo = static_cast<std::uint64_t>(prod) & modulus;
    std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
    std::uint64_t s = lo + hi;
    return raw(s >= modulus ? s - modulus : s);
  }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  constexpr Fp pow(std::uint64_t e) const {
    Fp base = *this, acc(1);
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  Fp inverse() const {
    if (is_zero()) throw std::domain_error("Fp: inverse of zero");
    return pow(modulus - 2);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

  friend constexpr bool operator==(Fp a, Fp b) { return a.value_ == b.value_; }

  friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.value_; }

 private:
  static constexpr Fp raw(std::uint64_t v) {
    Fp f;
    f.value_ = v;
    return f;
  }
  static constexpr std::uint64_t reduce_word(std::uint64_t v) {
    std::uint64_t s = (v & modulus) + (v >> 61);
    return s >= modulus ? s - modulus : s;
  }

  std::uint64_t value_ = 0;
};

}  // namespace rigidity
