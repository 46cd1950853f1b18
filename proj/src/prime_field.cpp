#include "mindist/prime_field.hpp"

#include <string>

#include "mindist/errors.hpp"

namespace mindist {

bool is_prime(long long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(long long p) : p_(p) {
  if (p >= (1LL << 31)) {
    throw InputError("field modulus too large: " + std::to_string(p));
  }
  if (!is_prime(p)) {
    throw InputError("field modulus must be prime, got " + std::to_string(p));
  }
}

long long PrimeField::pow(long long a, long long e) const {
  a = reduce(a);
  long long r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

long long PrimeField::inv(long long a) const {
  a = reduce(a);
  if (a == 0) throw InputError("division by zero in F_" + std::to_string(p_));
  // Fermat: a^(p-2) inverts a.
  return pow(a, p_ - 2);
}

}  // namespace mindist
