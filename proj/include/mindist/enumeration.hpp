#pragma once

#include "mindist/groebner.hpp"
#include "mindist/monomial_ideal.hpp"

namespace mindist {

struct EnumerationBudget {
  // Cap on q^n - 1, the number of nonzero coefficient vectors at one degree.
  long long max_candidates = 1LL << 24;
  // Skip candidates whose leading monomial is regular on S/in(I); sound by the
  // initial-ideal regularity lemma and cheap to precompute per basis monomial.
  bool prune_regular_leading = true;
};

// fast: one incremental Groebner basis of (I, f) per candidate; zero-divisor test
//   and colon degree recovered from Hilbert numerators via the exact sequence
//   0 -> (S/(I:f))[-d] -> S/I -> S/(I,f) -> 0.
// reference: the literal route, an elimination colon I:f plus a reduced-basis
//   equality test per candidate.  Kept serial as the ground truth the fast and
//   parallel paths are checked against.
enum class EnginePath { fast, reference };

struct ScanConfig {
  EnumerationBudget budget;
  EnginePath path = EnginePath::fast;
  bool parallel = true;
};

// One sweep over the nonzero standard polynomials of degree d: every nonzero
// F_q-combination of the degree-d standard monomials of in(I), visited as base-q
// odometer digits little-endian over the basis sorted descending.
struct DegreeScanResult {
  long long base_degree = 0;   // deg(S/I)
  long long n = 0;             // degree-d standard monomials
  long long evaluated = 0;     // candidates fully evaluated
  long long pruned = 0;        // candidates skipped by the leading-monomial prune
  bool any_zero_divisor = false;
  long long max_deg_sum = -1;   // max deg(S/(I,f)) over zero-divisor candidates
  long long min_deg_colon = 0;  // min deg(S/(I:f)) over ALL candidates
};

// Requires I graded and proper, d >= 1.  Throws BudgetError when q^n - 1 exceeds
// the budget; n = 0 comes back with evaluated = 0 and the base data filled in.
DegreeScanResult scan_degree(const Ideal& I, MonomialOrder order, int d,
                             const ScanConfig& config);

// Number of OpenMP threads the parallel path will use (1 when built without it).
int parallel_width();

}  // namespace mindist
