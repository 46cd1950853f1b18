#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "mindist/monomial.hpp"
#include "mindist/order.hpp"

namespace mindist {

using BigInt = boost::multiprecision::cpp_int;

// Monomial ideal given by its unique minimal generating set (an antichain under
// divisibility), stored sorted descending under grevlex for canonical identity.
// The zero ideal (no generators) is representable; the unit ideal is not.
class MonomialIdeal {
public:
  explicit MonomialIdeal(int nvars);  // zero ideal

  // Discards generators divisible by another generator; rejects the unit monomial.
  static MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens);

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  bool contains(const Monomial& m) const;

  // (this : a), again minimally generated.
  MonomialIdeal colon_by(const Monomial& a) const;

  // this + (a).
  MonomialIdeal plus(const Monomial& a) const;

  // Standard monomials of total degree d (monomials outside the ideal), sorted
  // descending under the given order.
  std::vector<Monomial> standard_monomials(int d, const MonomialOrder& order) const;

  // |standard_monomials(d)| by direct enumeration.
  long long count_standard_monomials(int d) const;

  bool operator==(const MonomialIdeal& other) const = default;

private:
  int nvars_;
  std::vector<Monomial> gens_;
};

// Numerator N(x) of the Hilbert series H(S/M) = N(x)/(1-x)^s, computed by the
// colon/sum recursion N(M) = N(M') - x^deg(g) * N(M' : g) with M' = M minus a pivot
// generator g, and the product base case for pairwise support-disjoint generators.
// Coefficients are arbitrary precision; intermediate swell is expected.
std::vector<BigInt> hilbert_numerator_full(const MonomialIdeal& M);

struct HilbertData {
  std::vector<BigInt> numerator;  // h(x) with h(1) != 0, after cancelling (1-x)^(s-k)
  int dimension = 0;              // Krull dimension k of S/M
  long long degree = 0;           // h(1)
  int a_invariant = 0;            // deg h - k
  int nvars = 0;
};

HilbertData hilbert_data(const MonomialIdeal& M);

long long quotient_degree(const MonomialIdeal& M);
int krull_dimension(const MonomialIdeal& M);

// Hilbert function H(d) of S/M from the series expansion of h(x)/(1-x)^k.
BigInt hilbert_function(const HilbertData& data, long long d);

// Value at d of the Hilbert polynomial (binomials extended polynomially), which
// agrees with hilbert_function for d >= the regularity index.
BigInt hilbert_polynomial_value(const HilbertData& data, long long d);

// Least n with H(d) = hilbert polynomial at d for every d >= n.
int regularity_index(const HilbertData& data);

struct CIProfile {
  bool is_complete_intersection = false;
  std::vector<int> degrees;  // generator degrees ascending, when CI
  int height = 0;            // ht(M) = minimum vertex cover of the support hypergraph
};

// Detects the complete-intersection property: generators with pairwise disjoint
// supports whose count equals the height.  Size guard: nvars <= 16.
CIProfile ci_profile(const MonomialIdeal& M);

// Standard monomials of degree d that are zero divisors on S/M, i.e. (M : m) != M.
std::vector<Monomial> zero_divisor_standard_monomials(const MonomialIdeal& M, int d,
                                                      const MonomialOrder& order);

// For a complete intersection M and a standard zero-divisor monomial t^a, the
// exponent-capped monomial t^b with b_j = min(a_j, max generator exponent of t_j),
// b_j = 0 on variables outside every generator.  Then (M : t^b) = (M : t^a), t^b is
// again a standard zero divisor, and deg b_i < deg alpha_i on every touched
// generator.  Violated preconditions raise input errors.
Monomial reduce_exponents(const MonomialIdeal& M, const Monomial& a);

bool is_squarefree(const MonomialIdeal& M);

// Associated primes of a squarefree monomial ideal as sorted variable index sets:
// the minimal vertex covers of the support hypergraph.  Guard: nvars <= 20.
std::vector<std::vector<int>> squarefree_associated_primes(const MonomialIdeal& M);

// All associated primes of equal height (squarefree input only).
bool is_unmixed_squarefree(const MonomialIdeal& M);

// Small integer-series helpers shared with the enumeration kernels.  Vectors are
// coefficient lists, index = exponent.
BigInt series_value_at_one(const std::vector<BigInt>& v);
std::vector<BigInt> series_sub(const std::vector<BigInt>& a,
                               const std::vector<BigInt>& b);
std::vector<BigInt> series_shift(const std::vector<BigInt>& a, int d);

// Quotient degree encoded by a full numerator over (1-x)^s: cancel every (1-x)
// factor, then evaluate at 1.
long long numerator_degree_value(std::vector<BigInt> numerator);

// Exact binomial C(n, r) for n >= 0, 0 for n < 0 (series views); r >= 0.
BigInt binomial(long long n, int r);

// C(n, r) extended polynomially in n: n(n-1)...(n-r+1)/r! for every integer n.
BigInt binomial_polynomial(long long n, int r);

// Bounds-checked narrowing used wherever series values become machine integers.
long long to_long(const BigInt& v);

}  // namespace mindist
