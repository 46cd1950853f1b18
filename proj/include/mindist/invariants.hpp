#pragma once

#include <optional>
#include <set>
#include <vector>

#include "mindist/enumeration.hpp"
#include "mindist/groebner.hpp"
#include "mindist/monomial_ideal.hpp"

namespace mindist {

// Hypothesis bookkeeping.  Several results below are theorems only under
// unmixedness (all associated primes of equal height) or under radicality with
// linear associated primes; those facts are carried as certified (proved here),
// asserted (claimed by the caller), or unknown, and consumers decide what they
// accept.
enum class TriState { certified, asserted, unknown };

struct AssertedFlags {
  bool unmixed = false;
  bool radical = false;
  bool linear_primes = false;

  bool operator==(const AssertedFlags&) const = default;
};

struct Hypotheses {
  TriState unmixed = TriState::unknown;           // of S/I
  TriState initial_unmixed = TriState::unknown;   // of S/in(I)
  TriState radical_linear_primes = TriState::unknown;
};

// Positive certification routes: zero-dimensional quotient, squarefree cover
// check (monomial input), complete-intersection initial ideal.  Assertions fill
// the gaps; an assertion contradicted by a certificate is an input error.
Hypotheses certify(const Ideal& I, MonomialOrder order,
                   const AssertedFlags& flags = {});

// Footprint function fp(d) = deg(S/I) - max over degree-d standard zero-divisor
// monomials t^a of deg(S/(in(I), t^a)); deg(S/I) when no such monomial exists.
// When in(I) carries an unmixedness certificate the colon formulation below is
// cross-checked internally.
long long fp(const Ideal& I, MonomialOrder order, int d);
long long fp_of_initial(const MonomialIdeal& init, int d, const MonomialOrder& order);

// min over ALL degree-d standard monomials t^a of deg(S/(in(I) : t^a)); equals
// fp(d) whenever in(I) is unmixed.
long long fp_via_colon(const MonomialIdeal& init, int d, const MonomialOrder& order);

// Minimum distance function delta(d) = deg(S/I) - max deg(S/(I, f)) over degree-d
// standard polynomials f that are zero divisors on S/I; deg(S/I) when none is.
long long delta(const Ideal& I, MonomialOrder order, int d,
                const ScanConfig& config = {});

// Vasconcelos function: min deg(S/(I : f)) over degree-d standard polynomials,
// deg(S/I) when every degree-d form lies in I.
long long vasconcelos(const Ideal& I, MonomialOrder order, int d,
                      const ScanConfig& config = {});

// For unmixed I (certificate or assertion required) delta(d) equals
// min deg(S/(I : f)) over degree-d standard polynomials; computed on that route.
long long delta_unmixed_via_colon(const Ideal& I, MonomialOrder order, int d,
                                  const Hypotheses& hyps,
                                  const ScanConfig& config = {});

// Closed form of fp = delta for a complete-intersection monomial ideal with
// generator degrees d_1 <= ... <= d_r (positive dimension):
//   d >= sum(d_i - 1)        -> 1
//   otherwise, writing d = sum_{i<=k}(d_i - 1) + l with 1 <= l <= d_{k+1} - 1,
//                            -> (d_{k+1} - l) * d_{k+2} * ... * d_r.
long long ci_fp_formula(const std::vector<int>& degrees, long long d);

// deg(S/I) = d_1 * ... * d_r and reg(S/I) = sum(d_i - 1) for the same situation.
long long ci_degree(const std::vector<int>& degrees);
long long ci_regularity(const std::vector<int>& degrees);

// The combinatorial bound behind the closed form: for 1 <= e_1 <= ... <= e_m,
// 0 <= b_i <= e_i - 1, b_0 >= 1 and 0 <= k <= m-1,
//   prod(e_i - b_i) >= (sum_{i<=k+1}(e_i - b_i) - (k-1) - b_0 - sum_{i>k+1} b_i)
//                      * e_{k+2} * ... * e_m.
// Returns whether the inequality holds after validating the hypotheses.
bool ci_product_bound_holds(const std::vector<long long>& e,
                            const std::vector<long long>& b, long long b0, int k);

// Least n such that the Hilbert function of S/M agrees with its Hilbert
// polynomial from n on.
int regularity_index_hilbert(const MonomialIdeal& M);

// Reduced row echelon basis of a set of linear forms over F_p, as coefficient
// rows with pivot columns ascending.  Canonical: two spans are equal iff their
// row lists are.
struct LinearSpan {
  const PrimeField* field;
  int nvars;
  std::vector<std::vector<long long>> rows;

  // Reduce v against the rows; true when v lies in the span.
  bool reduces_to_zero(std::vector<long long> v) const;

  // Insert v, returning false when it was already in the span.
  bool insert(std::vector<long long> v);
};

// Coefficient vector of a linear form; rejects terms of degree != 1.
std::vector<long long> linear_form_coefficients(const Polynomial& f);

// For I the intersection of distinct primes each generated by independent
// linear forms, deg(S/(I : f)) equals the number of those primes NOT containing
// the homogeneous f.  Returns that count; degree-1 membership runs on linear
// algebra, higher degrees on basis membership.
long long degree_via_linear_primes(
    const std::vector<std::vector<Polynomial>>& primes, const Polynomial& f,
    MonomialOrder order);

enum class TableColumn { delta, fp, vasconcelos };

struct TableRow {
  int d = 0;
  long long hilbert = 0;  // H(d), counted on standard monomials
  std::optional<long long> delta;
  std::optional<long long> fp;
  std::optional<long long> vasconcelos;
  bool delta_over_budget = false;
  bool vasconcelos_over_budget = false;
};

struct FunctionTable {
  std::vector<TableRow> rows;
  long long degree = 0;  // deg(S/I)
  int dimension = 0;
  MonomialOrder order;
  long long field_modulus = 0;
};

// Rows d = 1..max_d.  delta and vasconcelos share one candidate scan per degree;
// a budget overflow marks the cell instead of aborting the table.  Proven
// inequalities (delta >= 1 and fp <= delta under unmixedness, fp >= 1 under
// initial unmixedness) are enforced; a violation raises an internal error naming
// the possibly wrong assertion.
FunctionTable build_table(const Ideal& I, MonomialOrder order, int max_d,
                          const std::set<TableColumn>& columns,
                          const Hypotheses& hyps, const ScanConfig& config = {});

// Least d with delta(d) = 1.  Sound when delta is eventually 1 and strictly
// decreasing before that, which holds for unmixed radical ideals with linear
// associated primes and for positive-dimensional complete-intersection monomial
// ideals; requires such evidence.  Raises an inconclusive error at the cap.
int delta_regularity_index(const Ideal& I, MonomialOrder order,
                           const Hypotheses& hyps, const ScanConfig& config,
                           int cap);

}  // namespace mindist
