#pragma once

#include <vector>

namespace mindist {

// Exponent vector of a monomial in s variables.  Entries are nonnegative; the unit
// monomial is the all-zero vector.
class Monomial {
public:
  // Unit monomial in nvars variables.
  explicit Monomial(int nvars);
  explicit Monomial(std::vector<int> exponents);

  int nvars() const { return static_cast<int>(e_.size()); }
  int degree() const;
  int exponent(int i) const { return e_[static_cast<size_t>(i)]; }
  const std::vector<int>& exponents() const { return e_; }

  bool is_unit() const;

  // Does this monomial divide m (entrywise <=)?
  bool divides(const Monomial& m) const;

  Monomial times(const Monomial& m) const;

  // Entrywise difference; requires other | this.
  Monomial exact_quotient(const Monomial& other) const;

  // this / gcd(this, other): the generator of (this) : (other).
  Monomial colon_quotient(const Monomial& other) const;

  // Indices of variables appearing with positive exponent, ascending.
  std::vector<int> support() const;

  bool operator==(const Monomial& other) const = default;

private:
  void check_compatible(const Monomial& other) const;

  std::vector<int> e_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

}  // namespace mindist
