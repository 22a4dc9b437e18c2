#include "dgcm/field.hpp"

#include "dgcm/error.hpp"

namespace dgcm {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) {
    throw UnsupportedInput("field characteristic must be below 2^31");
  }
  if (!is_prime(p)) {
    throw UnsupportedInput("field characteristic " + std::to_string(p) + " is not prime");
  }
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw StructuralError("division by zero in prime field");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Coeff>(t);
}

Coeff PrimeField::from_int(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<Coeff>(m);
}

std::int64_t PrimeField::to_signed(Coeff a) const {
  if (a > p_ / 2) return static_cast<std::int64_t>(a) - p_;
  return a;
}

}  // namespace dgcm
