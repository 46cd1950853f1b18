#include "mindist/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <string>

#include "mindist/errors.hpp"

namespace mindist {

namespace {

void trim(std::vector<BigInt>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

BigInt eval_at_one(const std::vector<BigInt>& v) {
  BigInt s = 0;
  for (const BigInt& c : v) s += c;
  return s;
}

std::vector<BigInt> poly_sub(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

std::vector<BigInt> poly_shift(const std::vector<BigInt>& a, int d) {
  if (a.empty()) return a;
  std::vector<BigInt> r(a.size() + static_cast<size_t>(d), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i + static_cast<size_t>(d)] = a[i];
  return r;
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<BigInt> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Quotient of v by (1-x); valid only when v(1) = 0, in which case the quotient
// coefficients are the prefix sums of v.
std::vector<BigInt> quotient_by_one_minus_x(const std::vector<BigInt>& v) {
  std::vector<BigInt> q(v.size() > 0 ? v.size() - 1 : 0, 0);
  BigInt acc = 0;
  for (size_t i = 0; i + 1 < v.size(); ++i) {
    acc += v[i];
    q[i] = acc;
  }
  trim(q);
  return q;
}

void enumerate_exponents(int nvars, int total, std::vector<int>& buf, int pos,
                         const std::function<void(const std::vector<int>&)>& emit) {
  if (pos == nvars - 1) {
    buf[static_cast<size_t>(pos)] = total;
    emit(buf);
    return;
  }
  for (int e = 0; e <= total; ++e) {
    buf[static_cast<size_t>(pos)] = e;
    enumerate_exponents(nvars, total - e, buf, pos + 1, emit);
  }
}

std::vector<BigInt> numerator_recursive(int nvars, std::vector<Monomial> gens);

// Pairwise support-disjoint generators form a regular sequence, so the numerator is
// the product of (1 - x^deg).
bool supports_pairwise_disjoint(const std::vector<Monomial>& gens, int nvars) {
  std::vector<int> freq(static_cast<size_t>(nvars), 0);
  for (const Monomial& g : gens) {
    for (int v : g.support()) {
      if (++freq[static_cast<size_t>(v)] > 1) return false;
    }
  }
  return true;
}

std::vector<BigInt> numerator_recursive(int nvars, std::vector<Monomial> gens) {
  if (gens.empty()) return {1};
  if (supports_pairwise_disjoint(gens, nvars)) {
    std::vector<BigInt> r{1};
    for (const Monomial& g : gens) {
      std::vector<BigInt> factor(static_cast<size_t>(g.degree()) + 1, 0);
      factor[0] = 1;
      factor[static_cast<size_t>(g.degree())] = -1;
      r = poly_mul(r, factor);
    }
    return r;
  }
  // Pivot: among generators containing the most shared variable, the one carrying
  // its highest power.  This keeps both branches of the recursion small.
  std::vector<int> freq(static_cast<size_t>(nvars), 0);
  for (const Monomial& g : gens) {
    for (int v : g.support()) ++freq[static_cast<size_t>(v)];
  }
  int var = 0;
  for (int v = 1; v < nvars; ++v) {
    if (freq[static_cast<size_t>(v)] > freq[static_cast<size_t>(var)]) var = v;
  }
  size_t pivot = 0;
  int best = -1;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].exponent(var) > best) {
      best = gens[i].exponent(var);
      pivot = i;
    }
  }
  Monomial g = gens[pivot];
  gens.erase(gens.begin() + static_cast<ptrdiff_t>(pivot));
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const Monomial& a : gens) colon.push_back(a.colon_quotient(g));
  MonomialIdeal quot = MonomialIdeal::minimalize(nvars, std::move(colon));
  std::vector<BigInt> without = numerator_recursive(nvars, std::move(gens));
  std::vector<BigInt> coloned =
      numerator_recursive(nvars, quot.generators());
  return poly_sub(without, poly_shift(coloned, g.degree()));
}

}  // namespace

MonomialIdeal::MonomialIdeal(int nvars) : nvars_(nvars) {
  if (nvars <= 0) throw DimensionError("monomial ideal needs at least one variable");
}

MonomialIdeal MonomialIdeal::minimalize(int nvars, std::vector<Monomial> gens) {
  MonomialIdeal M(nvars);
  for (const Monomial& g : gens) {
    if (g.nvars() != nvars) {
      throw DimensionError("generator in " + std::to_string(g.nvars()) +
                           " variables for an ideal in " + std::to_string(nvars));
    }
    if (g.is_unit()) throw InputError("unit monomial generates the whole ring");
  }
  // Keep generators no other generator divides; ties collapse to one copy.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return compare(grevlex_order(), a, b) < 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> keep;
  for (const Monomial& g : gens) {
    bool redundant = std::any_of(keep.begin(), keep.end(),
                                 [&g](const Monomial& h) { return h.divides(g); });
    if (!redundant) keep.push_back(g);
  }
  std::sort(keep.begin(), keep.end(), [](const Monomial& a, const Monomial& b) {
    return compare(grevlex_order(), a, b) > 0;
  });
  M.gens_ = std::move(keep);
  return M;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.nvars() != nvars_) throw DimensionError("membership across different rings");
  return std::any_of(gens_.begin(), gens_.end(),
                     [&m](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal MonomialIdeal::colon_by(const Monomial& a) const {
  std::vector<Monomial> q;
  q.reserve(gens_.size());
  for (const Monomial& g : gens_) q.push_back(g.colon_quotient(a));
  bool has_unit = std::any_of(q.begin(), q.end(),
                              [](const Monomial& m) { return m.is_unit(); });
  if (has_unit) {
    throw InputError("colon by an element of the ideal is the whole ring");
  }
  return minimalize(nvars_, std::move(q));
}

MonomialIdeal MonomialIdeal::plus(const Monomial& a) const {
  std::vector<Monomial> g = gens_;
  g.push_back(a);
  return minimalize(nvars_, std::move(g));
}

std::vector<Monomial> MonomialIdeal::standard_monomials(
    int d, const MonomialOrder& order) const {
  if (d < 0) throw InputError("negative degree");
  std::vector<Monomial> out;
  std::vector<int> buf(static_cast<size_t>(nvars_), 0);
  enumerate_exponents(nvars_, d, buf, 0, [&](const std::vector<int>& e) {
    Monomial m{e};
    if (!contains(m)) out.push_back(m);
  });
  std::sort(out.begin(), out.end(), [&order](const Monomial& a, const Monomial& b) {
    return compare(order, a, b) > 0;
  });
  return out;
}

long long MonomialIdeal::count_standard_monomials(int d) const {
  if (d < 0) throw InputError("negative degree");
  long long count = 0;
  std::vector<int> buf(static_cast<size_t>(nvars_), 0);
  enumerate_exponents(nvars_, d, buf, 0, [&](const std::vector<int>& e) {
    if (!contains(Monomial{e})) ++count;
  });
  return count;
}

std::vector<BigInt> hilbert_numerator_full(const MonomialIdeal& M) {
  return numerator_recursive(M.nvars(), M.generators());
}

HilbertData hilbert_data(const MonomialIdeal& M) {
  HilbertData data;
  data.nvars = M.nvars();
  data.numerator = hilbert_numerator_full(M);
  int cancelled = 0;
  while (eval_at_one(data.numerator) == 0) {
    data.numerator = quotient_by_one_minus_x(data.numerator);
    ++cancelled;
    if (cancelled > M.nvars()) {
      throw InternalError("numerator divisible by (1-x) more than nvars times");
    }
  }
  data.dimension = M.nvars() - cancelled;
  BigInt deg = eval_at_one(data.numerator);
  if (deg <= 0) throw InternalError("nonpositive quotient degree");
  data.degree = to_long(deg);
  data.a_invariant = static_cast<int>(data.numerator.size()) - 1 - data.dimension;
  return data;
}

long long quotient_degree(const MonomialIdeal& M) { return hilbert_data(M).degree; }

int krull_dimension(const MonomialIdeal& M) { return hilbert_data(M).dimension; }

BigInt hilbert_function(const HilbertData& data, long long d) {
  if (d < 0) return 0;
  const std::vector<BigInt>& h = data.numerator;
  if (data.dimension == 0) {
    return d < static_cast<long long>(h.size()) ? h[static_cast<size_t>(d)] : 0;
  }
  BigInt s = 0;
  for (size_t i = 0; i < h.size(); ++i) {
    s += h[i] * binomial(d - static_cast<long long>(i) + data.dimension - 1,
                         data.dimension - 1);
  }
  return s;
}

BigInt hilbert_polynomial_value(const HilbertData& data, long long d) {
  if (data.dimension == 0) return 0;
  BigInt s = 0;
  const std::vector<BigInt>& h = data.numerator;
  for (size_t i = 0; i < h.size(); ++i) {
    s += h[i] * binomial_polynomial(d - static_cast<long long>(i) + data.dimension - 1,
                                    data.dimension - 1);
  }
  return s;
}

int regularity_index(const HilbertData& data) {
  // H(d) and the polynomial agree once every binomial argument is nonnegative, so
  // the last possible disagreement sits at d = deg h.
  int top = static_cast<int>(data.numerator.size()) - 1;
  for (int d = top; d >= 0; --d) {
    if (hilbert_function(data, d) != hilbert_polynomial_value(data, d)) return d + 1;
  }
  return 0;
}

CIProfile ci_profile(const MonomialIdeal& M) {
  if (M.nvars() > 16) {
    throw SizeGuardError("ci_profile supports at most 16 variables, got " +
                         std::to_string(M.nvars()));
  }
  CIProfile prof;
  if (M.is_zero_ideal()) return prof;
  const std::vector<Monomial>& gens = M.generators();
  // Height = least hitting set of the supports, by ascending-popcount mask scan.
  unsigned total = 1u << M.nvars();
  int best = M.nvars() + 1;
  std::vector<unsigned> supp_masks;
  for (const Monomial& g : gens) {
    unsigned m = 0;
    for (int v : g.support()) m |= 1u << v;
    supp_masks.push_back(m);
  }
  for (unsigned mask = 0; mask < total; ++mask) {
    int size = std::popcount(mask);
    if (size >= best) continue;
    bool hits = std::all_of(supp_masks.begin(), supp_masks.end(),
                            [mask](unsigned s) { return (s & mask) != 0; });
    if (hits) best = size;
  }
  prof.height = best;
  bool disjoint = supports_pairwise_disjoint(gens, M.nvars());
  prof.is_complete_intersection =
      disjoint && static_cast<int>(gens.size()) == prof.height;
  if (prof.is_complete_intersection) {
    for (const Monomial& g : gens) prof.degrees.push_back(g.degree());
    std::sort(prof.degrees.begin(), prof.degrees.end());
  }
  return prof;
}

std::vector<Monomial> zero_divisor_standard_monomials(const MonomialIdeal& M, int d,
                                                      const MonomialOrder& order) {
  if (M.is_zero_ideal()) return {};
  std::vector<Monomial> out;
  for (const Monomial& m : M.standard_monomials(d, order)) {
    if (!(M.colon_by(m) == M)) out.push_back(m);
  }
  return out;
}

Monomial reduce_exponents(const MonomialIdeal& M, const Monomial& a) {
  CIProfile prof = ci_profile(M);
  if (!prof.is_complete_intersection) {
    throw InputError("exponent reduction needs a complete-intersection monomial ideal");
  }
  if (a.nvars() != M.nvars()) throw DimensionError("monomial from a different ring");
  if (M.contains(a)) {
    throw InputError("exponent reduction needs a standard monomial, but " +
                     std::string("the input lies in the ideal"));
  }
  if (M.colon_by(a) == M) {
    throw InputError("exponent reduction needs a zero divisor, but the input is "
                     "regular on the quotient");
  }
  // Supports are pairwise disjoint, so each variable belongs to at most one
  // generator; cap its exponent there and zero it elsewhere.
  std::vector<int> b(static_cast<size_t>(M.nvars()), 0);
  for (const Monomial& g : M.generators()) {
    for (int v : g.support()) {
      b[static_cast<size_t>(v)] = std::min(a.exponent(v), g.exponent(v));
    }
  }
  Monomial reduced{b};
  if (!(M.colon_by(reduced) == M.colon_by(a))) {
    throw InternalError("exponent reduction changed the colon ideal");
  }
  return reduced;
}

bool is_squarefree(const MonomialIdeal& M) {
  for (const Monomial& g : M.generators()) {
    for (int v : g.support()) {
      if (g.exponent(v) > 1) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> squarefree_associated_primes(const MonomialIdeal& M) {
  if (M.is_zero_ideal()) throw InputError("the zero ideal has no variable primes");
  if (!is_squarefree(M)) {
    throw InputError("associated primes via covers need a squarefree ideal");
  }
  if (M.nvars() > 20) {
    throw SizeGuardError("squarefree_associated_primes supports at most 20 "
                         "variables, got " + std::to_string(M.nvars()));
  }
  std::vector<unsigned> supp_masks;
  for (const Monomial& g : M.generators()) {
    unsigned m = 0;
    for (int v : g.support()) m |= 1u << v;
    supp_masks.push_back(m);
  }
  std::vector<std::vector<int>> primes;
  unsigned total = 1u << M.nvars();
  for (unsigned mask = 0; mask < total; ++mask) {
    bool hits = std::all_of(supp_masks.begin(), supp_masks.end(),
                            [mask](unsigned s) { return (s & mask) != 0; });
    if (!hits) continue;
    // Inclusion-minimal: every chosen vertex is the sole hit of some support.
    bool minimal = true;
    for (int v = 0; v < M.nvars() && minimal; ++v) {
      if (!(mask & (1u << v))) continue;
      bool witness = std::any_of(supp_masks.begin(), supp_masks.end(),
                                 [mask, v](unsigned s) {
                                   return (s & mask) == (1u << v) && (s & (1u << v));
                                 });
      if (!witness) minimal = false;
    }
    if (!minimal) continue;
    std::vector<int> prime;
    for (int v = 0; v < M.nvars(); ++v) {
      if (mask & (1u << v)) prime.push_back(v);
    }
    primes.push_back(std::move(prime));
  }
  std::sort(primes.begin(), primes.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return primes;
}

bool is_unmixed_squarefree(const MonomialIdeal& M) {
  std::vector<std::vector<int>> primes = squarefree_associated_primes(M);
  for (const std::vector<int>& p : primes) {
    if (p.size() != primes.front().size()) return false;
  }
  return true;
}

BigInt series_value_at_one(const std::vector<BigInt>& v) { return eval_at_one(v); }

std::vector<BigInt> series_sub(const std::vector<BigInt>& a,
                               const std::vector<BigInt>& b) {
  return poly_sub(a, b);
}

std::vector<BigInt> series_shift(const std::vector<BigInt>& a, int d) {
  return poly_shift(a, d);
}

long long numerator_degree_value(std::vector<BigInt> numerator) {
  BigInt v = eval_at_one(numerator);
  int guard = 0;
  while (v == 0) {
    numerator = quotient_by_one_minus_x(numerator);
    v = eval_at_one(numerator);
    if (++guard > 1024) throw InternalError("numerator cancellation loop");
  }
  if (v <= 0) throw InternalError("nonpositive degree from numerator");
  return to_long(v);
}

BigInt binomial(long long n, int r) {
  if (r < 0) throw InputError("negative binomial index");
  if (n < 0 || n < r) return 0;
  BigInt num = 1;
  for (int j = 0; j < r; ++j) num *= n - j;
  for (int j = 2; j <= r; ++j) num /= j;
  return num;
}

BigInt binomial_polynomial(long long n, int r) {
  if (r < 0) throw InputError("negative binomial index");
  BigInt num = 1;
  for (int j = 0; j < r; ++j) num *= n - j;
  BigInt den = 1;
  for (int j = 2; j <= r; ++j) den *= j;
  return num / den;
}

long long to_long(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw InternalError("value exceeds machine integer range");
  }
  return v.convert_to<long long>();
}

}  // namespace mindist
