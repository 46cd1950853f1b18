#pragma once

#include <cstdint>

namespace mindist {

bool is_prime(long long n);

// Arithmetic in F_p for a machine-word prime p.  Elements are canonical residues in
// [0, p); every operation returns a canonical residue.  p is capped below 2^31 so that
// products fit in int64 without overflow.
class PrimeField {
public:
  explicit PrimeField(long long p);

  long long modulus() const { return p_; }

  long long reduce(long long a) const {
    long long r = a % p_;
    return r < 0 ? r + p_ : r;
  }

  long long add(long long a, long long b) const {
    long long r = a + b;
    return r >= p_ ? r - p_ : r;
  }

  long long sub(long long a, long long b) const {
    long long r = a - b;
    return r < 0 ? r + p_ : r;
  }

  long long neg(long long a) const { return a == 0 ? 0 : p_ - a; }

  long long mul(long long a, long long b) const { return (a * b) % p_; }

  long long pow(long long a, long long e) const;

  // Inverse of a nonzero residue; raises on zero.
  long long inv(long long a) const;

  bool operator==(const PrimeField& other) const = default;

private:
  long long p_;
};

}  // namespace mindist
