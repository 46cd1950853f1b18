#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "mindist/monomial.hpp"
#include "mindist/order.hpp"
#include "mindist/prime_field.hpp"

namespace mindist {

struct Term {
  Monomial mono;
  long long coeff;  // canonical residue, nonzero in stored polynomials
};

// Element of F_p[t1..ts].  Terms are kept strictly descending under the carried order
// with nonzero canonical coefficients, so the leading term is terms().front() in O(1).
class Polynomial {
public:
  // The zero polynomial.
  Polynomial(PrimeField field, int nvars, MonomialOrder order);

  // Canonicalizes: reduces coefficients, merges equal monomials, drops zeros, sorts.
  static Polynomial from_terms(PrimeField field, int nvars, MonomialOrder order,
                               std::vector<Term> terms);
  static Polynomial monomial_poly(PrimeField field, MonomialOrder order,
                                  const Monomial& m, long long coeff = 1);
  static Polynomial constant(PrimeField field, int nvars, MonomialOrder order,
                             long long c);

  const PrimeField& field() const { return field_; }
  int nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const;
  const Monomial& leading_monomial() const;
  long long leading_coeff() const;

  // Max term degree; -1 for the zero polynomial.
  int degree() const;

  // Every term has the same degree; vacuously true for zero.
  bool is_homogeneous() const;

  bool same_ring(const Polynomial& other) const {
    return field_ == other.field_ && nvars_ == other.nvars_;
  }

  Polynomial plus(const Polynomial& g) const;
  Polynomial minus(const Polynomial& g) const;
  Polynomial negated() const;
  Polynomial times(const Polynomial& g) const;
  Polynomial times_term(const Term& t) const;
  Polynomial scaled(long long c) const;
  Polynomial monic() const;

  // Same terms, resorted under a different order.
  Polynomial with_order(MonomialOrder order) const;

  // Ring equality plus equality of the term set (order tag ignored).
  bool equals(const Polynomial& other) const;

private:
  void check_ring(const Polynomial& other) const;

  PrimeField field_;
  int nvars_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

inline Polynomial operator+(const Polynomial& f, const Polynomial& g) { return f.plus(g); }
inline Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f.minus(g); }
inline Polynomial operator*(const Polynomial& f, const Polynomial& g) { return f.times(g); }
inline Polynomial operator-(const Polynomial& f) { return f.negated(); }

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division of f by an ordered list of divisors under f's order, taking
// the FIRST divisor whose leading monomial divides the current leading term.
// Postconditions (checked by tests, not here): f = sum quotients[i]*divisors[i] +
// remainder, and no remainder term is divisible by any divisor's leading monomial.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors);

// Remainder only.
Polynomial remainder(const Polynomial& f, const std::vector<Polynomial>& divisors);

// Renders with the given variable names (defaults to t1..ts): coefficients as
// canonical residues, terms descending, e.g. "t1*t4 + 2*t4^2".
std::string to_string(const Polynomial& f,
                      const std::vector<std::string>& names = {});

}  // namespace mindist
