#include "mindist/invariants.hpp"

#include <algorithm>
#include <string>

#include "mindist/errors.hpp"

namespace mindist {

namespace {

bool all_generators_monomial(const Ideal& I) {
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [](const Polynomial& g) { return g.terms().size() == 1; });
}

// Certificate that S/M is unmixed, via routes that cannot be fooled: dimension
// zero, squarefree cover check, or the complete-intersection profile.  Size
// guards make a route unavailable, not a failure.
enum class UnmixedCheck { yes, no, unavailable };

UnmixedCheck check_monomial_unmixed(const MonomialIdeal& M) {
  if (M.is_zero_ideal()) return UnmixedCheck::yes;  // S itself, one prime
  try {
    if (hilbert_data(M).dimension == 0) return UnmixedCheck::yes;
    if (ci_profile(M).is_complete_intersection) return UnmixedCheck::yes;
    if (is_squarefree(M)) {
      return is_unmixed_squarefree(M) ? UnmixedCheck::yes : UnmixedCheck::no;
    }
  } catch (const SizeGuardError&) {
    return UnmixedCheck::unavailable;
  }
  return UnmixedCheck::unavailable;
}

}  // namespace

Hypotheses certify(const Ideal& I, MonomialOrder order, const AssertedFlags& flags) {
  Hypotheses hyps;
  MonomialIdeal init = initial_ideal(I, order);
  bool monomial_input = all_generators_monomial(I);

  UnmixedCheck init_check = check_monomial_unmixed(init);
  if (init_check == UnmixedCheck::yes) hyps.initial_unmixed = TriState::certified;

  if (monomial_input) {
    // The ideal IS its initial ideal, so the monomial certificates transfer.
    if (init_check == UnmixedCheck::yes) hyps.unmixed = TriState::certified;
    if (init_check == UnmixedCheck::no && flags.unmixed) {
      throw InputError("unmixedness was asserted but the cover check proves the "
                       "ideal mixed");
    }
    if (is_squarefree(init)) {
      // Squarefree monomial ideals are radical with variable-generated primes.
      hyps.radical_linear_primes = TriState::certified;
    }
  } else {
    // A complete-intersection initial ideal forces I itself to be a complete
    // intersection, hence Cohen-Macaulay and unmixed.
    try {
      if (ci_profile(init).is_complete_intersection) {
        hyps.unmixed = TriState::certified;
      }
    } catch (const SizeGuardError&) {
    }
    if (hyps.unmixed == TriState::unknown &&
        hilbert_data(init).dimension == 0) {
      hyps.unmixed = TriState::certified;
    }
  }

  if (hyps.unmixed == TriState::unknown && flags.unmixed) {
    hyps.unmixed = TriState::asserted;
  }
  if (hyps.initial_unmixed == TriState::unknown && flags.unmixed &&
      monomial_input) {
    hyps.initial_unmixed = TriState::asserted;
  }
  if (hyps.radical_linear_primes == TriState::unknown && flags.radical &&
      flags.linear_primes) {
    hyps.radical_linear_primes = TriState::asserted;
  }
  return hyps;
}

long long fp_via_colon(const MonomialIdeal& init, int d, const MonomialOrder& order) {
  if (d < 1) throw InputError("degree must be at least 1");
  HilbertData data = hilbert_data(init);
  long long best = data.degree;
  for (const Monomial& m : init.standard_monomials(d, order)) {
    MonomialIdeal quotient = init.colon_by(m);
    if (quotient == init) continue;  // regular: contributes deg(S/I) itself
    best = std::min(best, quotient_degree(quotient));
  }
  return best;
}

long long fp_of_initial(const MonomialIdeal& init, int d, const MonomialOrder& order) {
  if (d < 1) throw InputError("degree must be at least 1");
  if (init.is_zero_ideal()) throw ZeroIdealError("footprint of the zero ideal");
  HilbertData data = hilbert_data(init);
  std::vector<Monomial> divisors = zero_divisor_standard_monomials(init, d, order);
  long long value = data.degree;
  if (!divisors.empty()) {
    long long best = -1;
    for (const Monomial& m : divisors) {
      best = std::max(best, quotient_degree(init.plus(m)));
    }
    value = data.degree - best;
  }
  if (check_monomial_unmixed(init) == UnmixedCheck::yes &&
      init.count_standard_monomials(d) > 0) {
    if (fp_via_colon(init, d, order) != value) {
      throw InternalError("footprint disagrees with its colon formulation on an "
                          "unmixed-certified initial ideal");
    }
  }
  return value;
}

long long fp(const Ideal& I, MonomialOrder order, int d) {
  if (!I.is_graded()) throw InputError("footprint needs a graded ideal");
  if (!is_proper(I, order)) throw InputError("the ideal is the whole ring");
  return fp_of_initial(initial_ideal(I, order), d, order);
}

long long delta(const Ideal& I, MonomialOrder order, int d, const ScanConfig& config) {
  DegreeScanResult scan = scan_degree(I, order, d, config);
  if (scan.n == 0 || !scan.any_zero_divisor) return scan.base_degree;
  return scan.base_degree - scan.max_deg_sum;
}

long long vasconcelos(const Ideal& I, MonomialOrder order, int d,
                      const ScanConfig& config) {
  DegreeScanResult scan = scan_degree(I, order, d, config);
  // n = 0 means every degree-d form lies in I; the convention is deg(S/I).
  if (scan.n == 0) return scan.base_degree;
  return scan.min_deg_colon;
}

long long delta_unmixed_via_colon(const Ideal& I, MonomialOrder order, int d,
                                  const Hypotheses& hyps,
                                  const ScanConfig& config) {
  if (hyps.unmixed == TriState::unknown) {
    throw UnmixednessUnknownError(
        "the colon route for delta needs unmixedness certified or asserted");
  }
  DegreeScanResult scan = scan_degree(I, order, d, config);
  if (scan.n == 0) {
    throw InputError("every form of this degree lies in the ideal");
  }
  return scan.min_deg_colon;
}

namespace {

std::vector<int> validated_ci_degrees(const std::vector<int>& degrees) {
  if (degrees.empty()) throw InputError("empty generator degree list");
  for (size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 1) throw InputError("generator degrees must be positive");
    if (i > 0 && degrees[i] < degrees[i - 1]) {
      throw InputError("generator degrees must be ascending");
    }
  }
  return degrees;
}

}  // namespace

long long ci_fp_formula(const std::vector<int>& degrees, long long d) {
  validated_ci_degrees(degrees);
  if (d < 1) throw InputError("degree must be at least 1");
  long long total = 0;
  for (int di : degrees) total += di - 1;
  if (d >= total) return 1;
  long long prefix = 0;
  for (size_t k = 0; k < degrees.size(); ++k) {
    long long l = d - prefix;
    if (l >= 1 && l <= degrees[k] - 1) {
      long long value = degrees[k] - l;
      for (size_t i = k + 1; i < degrees.size(); ++i) value *= degrees[i];
      return value;
    }
    prefix += degrees[k] - 1;
  }
  throw InternalError("staircase decomposition failed");
}

long long ci_degree(const std::vector<int>& degrees) {
  validated_ci_degrees(degrees);
  BigInt prod = 1;
  for (int di : degrees) prod *= di;
  return to_long(prod);
}

long long ci_regularity(const std::vector<int>& degrees) {
  validated_ci_degrees(degrees);
  long long total = 0;
  for (int di : degrees) total += di - 1;
  return total;
}

bool ci_product_bound_holds(const std::vector<long long>& e,
                            const std::vector<long long>& b, long long b0, int k) {
  size_t m = e.size();
  if (m == 0 || b.size() != m) throw InputError("parameter lists must match, nonempty");
  for (size_t i = 0; i < m; ++i) {
    if (e[i] < 1) throw InputError("e entries must be positive");
    if (i > 0 && e[i] < e[i - 1]) throw InputError("e must be ascending");
    if (b[i] < 0 || b[i] > e[i] - 1) throw InputError("b entries must lie in [0, e-1]");
  }
  if (b0 < 1) throw InputError("b0 must be at least 1");
  if (k < 0 || static_cast<size_t>(k) >= m) throw InputError("k out of range");

  BigInt lhs = 1;
  for (size_t i = 0; i < m; ++i) lhs *= e[i] - b[i];
  BigInt partial = 0;
  for (size_t i = 0; i <= static_cast<size_t>(k); ++i) partial += e[i] - b[i];
  BigInt tail_b = 0;
  BigInt tail_e = 1;
  for (size_t i = static_cast<size_t>(k) + 1; i < m; ++i) tail_b += b[i];
  for (size_t i = static_cast<size_t>(k) + 1; i < m; ++i) tail_e *= e[i];
  BigInt rhs = (partial - (k - 1) - b0 - tail_b) * tail_e;
  return lhs >= rhs;
}

int regularity_index_hilbert(const MonomialIdeal& M) {
  return regularity_index(hilbert_data(M));
}

bool LinearSpan::reduces_to_zero(std::vector<long long> v) const {
  for (const std::vector<long long>& row : rows) {
    size_t pivot = 0;
    while (pivot < row.size() && row[pivot] == 0) ++pivot;
    if (pivot < row.size() && v[pivot] != 0) {
      long long c = v[pivot];
      for (size_t j = 0; j < v.size(); ++j) {
        v[j] = field->sub(v[j], field->mul(c, row[j]));
      }
    }
  }
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

bool LinearSpan::insert(std::vector<long long> v) {
  for (const std::vector<long long>& row : rows) {
    size_t pivot = 0;
    while (pivot < row.size() && row[pivot] == 0) ++pivot;
    if (pivot < row.size() && v[pivot] != 0) {
      long long c = v[pivot];
      for (size_t j = 0; j < v.size(); ++j) {
        v[j] = field->sub(v[j], field->mul(c, row[j]));
      }
    }
  }
  size_t pivot = 0;
  while (pivot < v.size() && v[pivot] == 0) ++pivot;
  if (pivot == v.size()) return false;
  long long inv = field->inv(v[pivot]);
  for (long long& x : v) x = field->mul(x, inv);
  for (std::vector<long long>& row : rows) {
    if (row[pivot] != 0) {
      long long c = row[pivot];
      for (size_t j = 0; j < row.size(); ++j) {
        row[j] = field->sub(row[j], field->mul(c, v[j]));
      }
    }
  }
  rows.push_back(std::move(v));
  std::sort(rows.begin(), rows.end(),
            [](const std::vector<long long>& a, const std::vector<long long>& b) {
              return a > b;
            });
  return true;
}

std::vector<long long> linear_form_coefficients(const Polynomial& f) {
  std::vector<long long> v(static_cast<size_t>(f.nvars()), 0);
  for (const Term& t : f.terms()) {
    if (t.mono.degree() != 1) {
      throw InputError("prime generators must be linear forms");
    }
    v[static_cast<size_t>(t.mono.support().front())] = t.coeff;
  }
  return v;
}

long long degree_via_linear_primes(
    const std::vector<std::vector<Polynomial>>& primes, const Polynomial& f,
    MonomialOrder order) {
  if (primes.empty()) throw InputError("no primes given");
  if (f.is_zero()) throw InputError("the polynomial must be nonzero");
  if (!f.is_homogeneous()) throw InputError("the polynomial must be homogeneous");

  std::vector<LinearSpan> spans;
  for (size_t i = 0; i < primes.size(); ++i) {
    const std::vector<Polynomial>& forms = primes[i];
    if (forms.empty()) throw InputError("a prime needs at least one linear form");
    LinearSpan span{&f.field(), f.nvars(), {}};
    for (const Polynomial& g : forms) {
      if (!g.same_ring(f)) throw RingMismatchError("prime over a different ring");
      if (g.is_zero()) throw InputError("zero polynomial among prime generators");
      if (!span.insert(linear_form_coefficients(g))) {
        throw InputError("dependent linear forms in prime " + std::to_string(i + 1));
      }
    }
    for (const LinearSpan& previous : spans) {
      if (previous.rows == span.rows) {
        throw InputError("duplicate prime in the list");
      }
    }
    spans.push_back(std::move(span));
  }

  long long count = 0;
  for (size_t i = 0; i < primes.size(); ++i) {
    bool member;
    if (f.degree() == 1) {
      member = spans[i].reduces_to_zero(linear_form_coefficients(f));
    } else {
      member = contains(Ideal(primes[i]), f, order);
    }
    if (!member) ++count;
  }
  return count;
}

FunctionTable build_table(const Ideal& I, MonomialOrder order, int max_d,
                          const std::set<TableColumn>& columns,
                          const Hypotheses& hyps, const ScanConfig& config) {
  if (max_d < 0) throw InputError("table bound must be nonnegative");
  if (!I.is_graded()) throw InputError("table needs a graded ideal");
  if (!is_proper(I, order)) throw InputError("the ideal is the whole ring");

  MonomialIdeal init = initial_ideal(I, order);
  HilbertData data = hilbert_data(init);

  FunctionTable table;
  table.degree = data.degree;
  table.dimension = data.dimension;
  table.order = order;
  table.field_modulus = I.field().modulus();

  bool want_scan = columns.count(TableColumn::delta) > 0 ||
                   columns.count(TableColumn::vasconcelos) > 0;
  for (int d = 1; d <= max_d; ++d) {
    TableRow row;
    row.d = d;
    row.hilbert = init.count_standard_monomials(d);
    if (columns.count(TableColumn::fp)) row.fp = fp_of_initial(init, d, order);
    if (want_scan) {
      try {
        DegreeScanResult scan = scan_degree(I, order, d, config);
        if (columns.count(TableColumn::delta)) {
          row.delta = (scan.n == 0 || !scan.any_zero_divisor)
                          ? scan.base_degree
                          : scan.base_degree - scan.max_deg_sum;
        }
        if (columns.count(TableColumn::vasconcelos)) {
          row.vasconcelos = scan.n == 0 ? scan.base_degree : scan.min_deg_colon;
        }
      } catch (const BudgetError&) {
        row.delta_over_budget = columns.count(TableColumn::delta) > 0;
        row.vasconcelos_over_budget = columns.count(TableColumn::vasconcelos) > 0;
      }
    }
    if (hyps.unmixed != TriState::unknown && row.delta && *row.delta < 1) {
      throw InternalError("delta < 1 although the ideal is unmixed; if "
                          "unmixedness was asserted, the assertion is suspect");
    }
    if (hyps.unmixed != TriState::unknown && row.delta && row.fp &&
        *row.fp > *row.delta) {
      throw InternalError("fp > delta although the ideal is unmixed; if "
                          "unmixedness was asserted, the assertion is suspect");
    }
    if (hyps.initial_unmixed != TriState::unknown && row.fp && *row.fp < 1) {
      throw InternalError("fp < 1 although the initial ideal is unmixed");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

int delta_regularity_index(const Ideal& I, MonomialOrder order,
                           const Hypotheses& hyps, const ScanConfig& config,
                           int cap) {
  if (cap < 1) throw InputError("cap must be at least 1");
  bool decreasing_hypotheses = hyps.unmixed != TriState::unknown &&
                               hyps.radical_linear_primes != TriState::unknown;
  bool ci_route = false;
  if (!decreasing_hypotheses && all_generators_monomial(I)) {
    try {
      MonomialIdeal init = initial_ideal(I, order);
      ci_route = ci_profile(init).is_complete_intersection &&
                 hilbert_data(init).dimension >= 1;
    } catch (const SizeGuardError&) {
    }
  }
  if (!decreasing_hypotheses && !ci_route) {
    throw UnmixednessUnknownError(
        "reaching delta = 1 is only guaranteed for unmixed radical ideals with "
        "linear primes or positive-dimensional complete-intersection monomial "
        "ideals; certify or assert those hypotheses");
  }
  for (int d = 1; d <= cap; ++d) {
    if (delta(I, order, d, config) == 1) return d;
  }
  throw InconclusiveError("delta did not reach 1 up to degree " +
                              std::to_string(cap),
                          cap);
}

}  // namespace mindist
