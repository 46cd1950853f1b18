// Times one degree scan on the three engine configurations and checks that they
// agree.  The ideal is the pairwise-binomial family ti*tj^q - ti^q*tj (i < j),
// the shape of the worked GRevLex examples, where candidate counts grow as
// q^H(d) and the scan dominates everything else.
//
// usage: bench_enum [q] [s] [d]   (defaults 3 3 2)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "mindist/enumeration.hpp"
#include "mindist/errors.hpp"

using namespace mindist;

namespace {

Ideal pairwise_binomial_ideal(long long q, int s) {
  PrimeField field(q);
  MonomialOrder order = grevlex_order();
  std::vector<Polynomial> gens;
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) {
      std::vector<int> low(static_cast<size_t>(s), 0);
      std::vector<int> high(static_cast<size_t>(s), 0);
      low[static_cast<size_t>(i)] = 1;
      low[static_cast<size_t>(j)] = static_cast<int>(q);
      high[static_cast<size_t>(i)] = static_cast<int>(q);
      high[static_cast<size_t>(j)] = 1;
      gens.push_back(Polynomial::from_terms(
          field, s, order,
          {Term{Monomial(low), 1}, Term{Monomial(high), field.neg(1)}}));
    }
  }
  return Ideal(std::move(gens));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

bool agree(const DegreeScanResult& a, const DegreeScanResult& b) {
  return a.base_degree == b.base_degree && a.n == b.n &&
         a.any_zero_divisor == b.any_zero_divisor &&
         a.max_deg_sum == b.max_deg_sum && a.min_deg_colon == b.min_deg_colon;
}

}  // namespace

int main(int argc, char** argv) {
  long long q = argc > 1 ? std::atoll(argv[1]) : 3;
  int s = argc > 2 ? std::atoi(argv[2]) : 3;
  int d = argc > 3 ? std::atoi(argv[3]) : 2;

  try {
    Ideal ideal = pairwise_binomial_ideal(q, s);
    MonomialOrder order = grevlex_order();

    ScanConfig config;
    config.path = EnginePath::fast;
    config.parallel = false;
    auto start = std::chrono::steady_clock::now();
    DegreeScanResult fast_serial = scan_degree(ideal, order, d, config);
    double t_fast = seconds_since(start);

    std::printf("scan q=%lld s=%d d=%d: H(d)=%lld candidates=%lld deg(S/I)=%lld\n",
                q, s, d, fast_serial.n,
                fast_serial.evaluated + fast_serial.pruned,
                fast_serial.base_degree);
    std::printf("  fast serial    %8.3fs  evaluated=%lld pruned=%lld\n", t_fast,
                fast_serial.evaluated, fast_serial.pruned);

    config.parallel = true;
    start = std::chrono::steady_clock::now();
    DegreeScanResult fast_parallel = scan_degree(ideal, order, d, config);
    double t_par = seconds_since(start);
    std::printf("  fast parallel  %8.3fs  threads=%d  speedup=%.2fx\n", t_par,
                parallel_width(), t_par > 0 ? t_fast / t_par : 0.0);

    bool ok = agree(fast_serial, fast_parallel);

    long long candidates = fast_serial.evaluated + fast_serial.pruned;
    if (candidates <= 2000) {
      config.path = EnginePath::reference;
      config.parallel = false;
      start = std::chrono::steady_clock::now();
      DegreeScanResult reference = scan_degree(ideal, order, d, config);
      double t_ref = seconds_since(start);
      std::printf("  reference      %8.3fs  fast-vs-reference speedup=%.2fx\n",
                  t_ref, t_fast > 0 ? t_ref / t_fast : 0.0);
      ok = ok && agree(fast_serial, reference);
    } else {
      std::printf("  reference      skipped (%lld candidates; run with a smaller "
                  "d to compare)\n",
                  candidates);
    }

    std::printf("agreement: %s\n", ok ? "OK" : "MISMATCH");
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
