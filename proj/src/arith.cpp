#include "ghoststrata/arith.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

#include <boost/integer/mod_inverse.hpp>

namespace ghoststrata {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint32_t valuation(std::uint64_t x, std::uint32_t p) {
  if (x == 0) throw std::domain_error("valuation of zero");
  std::uint32_t v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint32_t inverse_mod(std::uint32_t x, std::uint32_t modulus) {
  if (modulus == 1) return 0;
  const auto inv = boost::integer::mod_inverse<std::int64_t>(x % modulus, modulus);
  if (inv == 0) throw std::domain_error("residue is not a unit");
  return static_cast<std::uint32_t>(inv);
}

Residue::Residue(std::int64_t value, std::uint32_t modulus)
    : value_(0), modulus_(modulus) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  value_ = reduce_mod(value, modulus);
}

bool Residue::is_unit() const { return std::gcd(value_, modulus_) == 1; }

Residue Residue::inverse() const { return {inverse_mod(value_, modulus_), modulus_}; }

Residue Residue::operator-() const {
  return {-static_cast<std::int64_t>(value_), modulus_};
}

void Residue::check_same(const Residue& o) const {
  if (o.modulus_ != modulus_) throw std::invalid_argument("residue moduli differ");
}

Residue& Residue::operator+=(const Residue& o) {
  check_same(o);
  value_ = reduce_mod(std::int64_t{value_} + o.value_, modulus_);
  return *this;
}

Residue& Residue::operator-=(const Residue& o) {
  check_same(o);
  value_ = reduce_mod(std::int64_t{value_} - o.value_, modulus_);
  return *this;
}

Residue& Residue::operator*=(const Residue& o) {
  check_same(o);
  value_ = reduce_mod(std::int64_t{value_} * o.value_, modulus_);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
  return os << r.value() << " mod " << r.modulus();
}

}  // namespace ghoststrata
