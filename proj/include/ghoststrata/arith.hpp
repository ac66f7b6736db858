#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace ghoststrata {

using Rational = boost::rational<std::int64_t>;

/// Reduces `x` into [0, modulus).
constexpr std::uint32_t reduce_mod(std::int64_t x, std::uint32_t modulus) {
  const auto m = static_cast<std::int64_t>(modulus);
  auto r = x % m;
  return static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

bool is_prime(std::uint32_t n);

/// Prime factorization as (p, e_p) pairs in increasing p.
std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::uint32_t n);

/// p-adic valuation of a nonzero integer.
std::uint32_t valuation(std::uint64_t x, std::uint32_t p);

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp);

/// Element of Z/n with the modulus carried alongside.
class Residue {
 public:
  Residue(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  bool is_zero() const { return value_ == 0; }
  bool is_unit() const;
  Residue inverse() const;  // throws std::domain_error for non-units

  Residue operator-() const;
  Residue& operator+=(const Residue& o);
  Residue& operator-=(const Residue& o);
  Residue& operator*=(const Residue& o);
  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  void check_same(const Residue& o) const;

  std::uint32_t value_;
  std::uint32_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

/// Inverse of `x` modulo `modulus`; throws std::domain_error if gcd != 1.
std::uint32_t inverse_mod(std::uint32_t x, std::uint32_t modulus);

}  // namespace ghoststrata
