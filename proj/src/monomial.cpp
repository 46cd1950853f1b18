#include "mindist/monomial.hpp"

#include <algorithm>
#include <string>

#include "mindist/errors.hpp"

namespace mindist {

Monomial::Monomial(int nvars) : e_(static_cast<size_t>(nvars), 0) {
  if (nvars <= 0) throw DimensionError("monomial needs at least one variable");
}

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
  if (e_.empty()) throw DimensionError("monomial needs at least one variable");
  for (int x : e_) {
    if (x < 0) throw InputError("negative exponent " + std::to_string(x));
  }
}

int Monomial::degree() const {
  int d = 0;
  for (int x : e_) d += x;
  return d;
}

bool Monomial::is_unit() const {
  return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

void Monomial::check_compatible(const Monomial& other) const {
  if (e_.size() != other.e_.size()) {
    throw DimensionError("exponent vectors of length " + std::to_string(e_.size()) +
                         " and " + std::to_string(other.e_.size()));
  }
}

bool Monomial::divides(const Monomial& m) const {
  check_compatible(m);
  for (size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > m.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::times(const Monomial& m) const {
  check_compatible(m);
  std::vector<int> r(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + m.e_[i];
  return Monomial(std::move(r));
}

Monomial Monomial::exact_quotient(const Monomial& other) const {
  check_compatible(other);
  std::vector<int> r(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) {
    if (other.e_[i] > e_[i]) throw InputError("quotient of non-divisible monomials");
    r[i] = e_[i] - other.e_[i];
  }
  return Monomial(std::move(r));
}

Monomial Monomial::colon_quotient(const Monomial& other) const {
  check_compatible(other);
  std::vector<int> r(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) r[i] = std::max(e_[i] - other.e_[i], 0);
  return Monomial(std::move(r));
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > 0) s.push_back(static_cast<int>(i));
  }
  return s;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<int> r(a.exponents());
  if (a.nvars() != b.nvars()) throw DimensionError("lcm of mismatched monomials");
  for (int i = 0; i < b.nvars(); ++i) {
    r[static_cast<size_t>(i)] = std::max(r[static_cast<size_t>(i)], b.exponent(i));
  }
  return Monomial(std::move(r));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("gcd of mismatched monomials");
  std::vector<int> r(static_cast<size_t>(a.nvars()));
  for (int i = 0; i < a.nvars(); ++i) {
    r[static_cast<size_t>(i)] = std::min(a.exponent(i), b.exponent(i));
  }
  return Monomial(std::move(r));
}

}  // namespace mindist
