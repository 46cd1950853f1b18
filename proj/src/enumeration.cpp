#include "mindist/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <string>

#include "mindist/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mindist {

namespace {

struct ScanContext {
  const Ideal* ideal = nullptr;
  MonomialOrder order;
  int d = 0;
  const GroebnerBasis* base_gb = nullptr;
  MonomialIdeal init{1};
  std::vector<BigInt> base_numerator;
  std::vector<BigInt> regular_numerator;  // N_I * (1 - x^d)
  long long base_degree = 0;
  std::vector<Monomial> basis;  // degree-d standard monomials, descending
  std::vector<char> lm_regular;
  long long q = 0;
};

struct CandidateEval {
  bool zero_divisor = false;
  long long deg_sum = 0;
  long long deg_colon = 0;
};

std::vector<BigInt> divide_by_x_power(const std::vector<BigInt>& v, int d) {
  for (int i = 0; i < d && i < static_cast<int>(v.size()); ++i) {
    if (v[static_cast<size_t>(i)] != 0) {
      throw InternalError("numerator difference not divisible by x^d");
    }
  }
  if (static_cast<int>(v.size()) <= d) return {};
  return std::vector<BigInt>(v.begin() + d, v.end());
}

// One incremental basis of (I, f), then two numerator identities:
//   f regular       <=>  N_{(I,f)} = N_I * (1 - x^d)
//   N_{(I:f)} * x^d  =   N_I - N_{(I,f)}
// both over (1-x)^s, from the standard exact sequence for multiplication by f.
CandidateEval evaluate_fast(const ScanContext& ctx, const Polynomial& f) {
  GroebnerBasis gb2 = buchberger_extend(*ctx.base_gb, f);
  std::vector<Monomial> lms;
  lms.reserve(gb2.elements().size());
  for (const Polynomial& g : gb2.elements()) {
    if (g.leading_monomial().is_unit()) {
      throw InternalError("graded sum ideal became the whole ring");
    }
    lms.push_back(g.leading_monomial());
  }
  MonomialIdeal init2 =
      MonomialIdeal::minimalize(ctx.ideal->nvars(), std::move(lms));
  std::vector<BigInt> sum_numerator = hilbert_numerator_full(init2);
  CandidateEval eval;
  eval.zero_divisor = sum_numerator != ctx.regular_numerator;
  eval.deg_sum = numerator_degree_value(sum_numerator);
  std::vector<BigInt> colon_numerator = divide_by_x_power(
      series_sub(ctx.base_numerator, sum_numerator), ctx.d);
  eval.deg_colon = numerator_degree_value(std::move(colon_numerator));
  return eval;
}

// The literal route: elimination colon plus reduced-basis equality.
CandidateEval evaluate_reference(const ScanContext& ctx, const Polynomial& f) {
  CandidateEval eval;
  Ideal quotient = colon(*ctx.ideal, f, ctx.order);
  eval.zero_divisor = !ideal_equal(quotient, *ctx.ideal, ctx.order);
  eval.deg_colon = quotient_degree(initial_ideal(quotient, ctx.order));
  eval.deg_sum =
      quotient_degree(initial_ideal(ideal_sum(*ctx.ideal, f), ctx.order));
  return eval;
}

struct Accumulator {
  long long evaluated = 0;
  long long pruned = 0;
  bool any_zero_divisor = false;
  long long max_deg_sum = -1;
  long long min_deg_colon = std::numeric_limits<long long>::max();

  void absorb(const Accumulator& other) {
    evaluated += other.evaluated;
    pruned += other.pruned;
    any_zero_divisor = any_zero_divisor || other.any_zero_divisor;
    max_deg_sum = std::max(max_deg_sum, other.max_deg_sum);
    min_deg_colon = std::min(min_deg_colon, other.min_deg_colon);
  }
};

// Digits of idx base q, little-endian over the descending basis; the first nonzero
// digit marks the leading monomial.
void process_candidate(const ScanContext& ctx, const ScanConfig& config,
                       long long idx, Accumulator& acc) {
  long long digits[64];
  long long rem = idx;
  int lead = -1;
  int n = static_cast<int>(ctx.basis.size());
  for (int j = 0; j < n; ++j) {
    digits[j] = rem % ctx.q;
    rem /= ctx.q;
    if (digits[j] != 0 && lead < 0) lead = j;
  }
  if (config.budget.prune_regular_leading && ctx.lm_regular[static_cast<size_t>(lead)]) {
    ++acc.pruned;
    return;
  }
  std::vector<Term> terms;
  terms.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (digits[j] != 0) terms.push_back(Term{ctx.basis[static_cast<size_t>(j)], digits[j]});
  }
  Polynomial f = Polynomial::from_terms(ctx.ideal->field(), ctx.ideal->nvars(),
                                        ctx.order, std::move(terms));
  CandidateEval eval = config.path == EnginePath::fast
                           ? evaluate_fast(ctx, f)
                           : evaluate_reference(ctx, f);
  ++acc.evaluated;
  if (eval.zero_divisor) {
    acc.any_zero_divisor = true;
    acc.max_deg_sum = std::max(acc.max_deg_sum, eval.deg_sum);
  }
  acc.min_deg_colon = std::min(acc.min_deg_colon, eval.deg_colon);
}

}  // namespace

int parallel_width() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

DegreeScanResult scan_degree(const Ideal& I, MonomialOrder order, int d,
                             const ScanConfig& config) {
  if (d < 1) throw InputError("degree must be at least 1");
  if (!I.is_graded()) throw InputError("candidate scan needs a graded ideal");
  if (!is_proper(I, order)) throw InputError("the ideal is the whole ring");
  if (config.budget.max_candidates < 1 ||
      config.budget.max_candidates > (1LL << 62)) {
    throw InputError("budget must lie in [1, 2^62]");
  }

  ScanContext ctx;
  ctx.ideal = &I;
  ctx.order = order;
  ctx.d = d;
  ctx.base_gb = &I.groebner(order);
  ctx.init = initial_ideal(I, order);
  ctx.base_numerator = hilbert_numerator_full(ctx.init);
  ctx.base_degree = numerator_degree_value(ctx.base_numerator);
  ctx.basis = ctx.init.standard_monomials(d, order);
  ctx.q = I.field().modulus();

  DegreeScanResult res;
  res.base_degree = ctx.base_degree;
  res.n = static_cast<long long>(ctx.basis.size());
  res.min_deg_colon = ctx.base_degree;
  if (res.n == 0) return res;

  BigInt candidates = boost::multiprecision::pow(BigInt(ctx.q),
                                                 static_cast<unsigned>(res.n)) - 1;
  if (candidates > config.budget.max_candidates) {
    throw BudgetError("candidate count " + candidates.str() + " = q^n - 1 with n = " +
                          std::to_string(res.n) + " exceeds the budget " +
                          std::to_string(config.budget.max_candidates),
                      res.n, candidates.str());
  }
  long long total = to_long(candidates);

  ctx.regular_numerator =
      series_sub(ctx.base_numerator, series_shift(ctx.base_numerator, d));
  ctx.lm_regular.assign(ctx.basis.size(), 0);
  for (size_t j = 0; j < ctx.basis.size(); ++j) {
    ctx.lm_regular[j] = (ctx.init.colon_by(ctx.basis[j]) == ctx.init) ? 1 : 0;
  }

  Accumulator acc;
#ifdef _OPENMP
  if (config.parallel && total > 1) {
    std::exception_ptr first_error = nullptr;
    std::atomic<bool> failed{false};
#pragma omp parallel
    {
      Accumulator local;
#pragma omp for schedule(dynamic, 16) nowait
      for (long long idx = 1; idx <= total; ++idx) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
          process_candidate(ctx, config, idx, local);
        } catch (...) {
#pragma omp critical(mindist_scan_error)
          {
            if (!first_error) first_error = std::current_exception();
          }
          failed.store(true, std::memory_order_relaxed);
        }
      }
#pragma omp critical(mindist_scan_merge)
      acc.absorb(local);
    }
    if (first_error) std::rethrow_exception(first_error);
  } else {
    for (long long idx = 1; idx <= total; ++idx) {
      process_candidate(ctx, config, idx, acc);
    }
  }
#else
  for (long long idx = 1; idx <= total; ++idx) {
    process_candidate(ctx, config, idx, acc);
  }
#endif

  res.evaluated = acc.evaluated;
  res.pruned = acc.pruned;
  res.any_zero_divisor = acc.any_zero_divisor;
  res.max_deg_sum = acc.max_deg_sum;
  // Pruned candidates are certified regular: their colon is I itself.
  res.min_deg_colon = acc.min_deg_colon;
  if (acc.pruned > 0 || acc.evaluated == 0) {
    res.min_deg_colon = std::min(res.min_deg_colon, ctx.base_degree);
  }
  if (res.min_deg_colon == std::numeric_limits<long long>::max()) {
    res.min_deg_colon = ctx.base_degree;
  }
  return res;
}

}  // namespace mindist
