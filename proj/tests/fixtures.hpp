#pragma once

// Shared fixtures.  Everything is deterministic; random builders take the
// engine by reference so each test pins its own seed.

#include <random>
#include <string>
#include <vector>

#include "mindist/errors.hpp"
#include "mindist/graph.hpp"
#include "mindist/groebner.hpp"
#include "mindist/invariants.hpp"
#include "mindist/monomial_ideal.hpp"

namespace fixtures {

using namespace mindist;

// Generators ti*tj^q - ti^q*tj for i < j over F_q: the ideal of the worked
// GRevLex table at q = 2, s = 3 (deg 7, H = 3,6,7, delta = 4,2,1, fp = 4,1,1).
inline Ideal pairwise_binomial_ideal(long long q, int s) {
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

// Vanishing prime of a projective point: s-1 independent forms tj - (pj/pk)*tk
// around a nonzero pivot coordinate pk.
inline std::vector<Polynomial> point_prime_forms(const PrimeField& field, int s,
                                                 const std::vector<long long>& point,
                                                 MonomialOrder order) {
  int pivot = -1;
  for (int i = 0; i < s; ++i) {
    if (field.reduce(point[static_cast<size_t>(i)]) != 0) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0) throw InputError("projective point with all coordinates zero");
  long long inv = field.inv(field.reduce(point[static_cast<size_t>(pivot)]));
  std::vector<Polynomial> forms;
  for (int j = 0; j < s; ++j) {
    if (j == pivot) continue;
    long long ratio = field.mul(field.reduce(point[static_cast<size_t>(j)]), inv);
    std::vector<int> ej(static_cast<size_t>(s), 0);
    std::vector<int> ek(static_cast<size_t>(s), 0);
    ej[static_cast<size_t>(j)] = 1;
    ek[static_cast<size_t>(pivot)] = 1;
    forms.push_back(Polynomial::from_terms(
        field, s, order,
        {Term{Monomial(ej), 1}, Term{Monomial(ek), field.neg(ratio)}}));
  }
  return forms;
}

// Vanishing ideal of distinct projective points: the intersection of their primes.
inline Ideal point_ideal(const PrimeField& field, int s,
                         const std::vector<std::vector<long long>>& points,
                         MonomialOrder order) {
  Ideal ideal{point_prime_forms(field, s, points.at(0), order)};
  for (size_t i = 1; i < points.size(); ++i) {
    ideal = intersect(ideal, Ideal(point_prime_forms(field, s, points[i], order)),
                      order);
  }
  return ideal;
}

// The five points in P^3 over F_3 whose ideal has fp(1) = 0 while delta(1) = 1:
// the footprint lower bound is sharp on it.  Listed as the five prime form lists.
inline std::vector<std::vector<Polynomial>> five_point_prime_forms() {
  PrimeField field(3);
  MonomialOrder order = grevlex_order();
  int s = 4;
  auto lin = [&](std::vector<long long> coeffs) {
    std::vector<Term> terms;
    for (int j = 0; j < s; ++j) {
      long long c = field.reduce(coeffs[static_cast<size_t>(j)]);
      if (c == 0) continue;
      std::vector<int> e(static_cast<size_t>(s), 0);
      e[static_cast<size_t>(j)] = 1;
      terms.push_back(Term{Monomial(std::move(e)), c});
    }
    return Polynomial::from_terms(field, s, order, std::move(terms));
  };
  return {
      {lin({0, 0, 1, 1}), lin({0, 1, 0, 1}), lin({1, 0, 0, 1})},
      {lin({0, 0, 1, 1}), lin({0, 1, 0, 0}), lin({1, 0, 0, -1})},
      {lin({0, 0, 0, 1}), lin({0, 1, 0, 0}), lin({1, 0, 0, 0})},
      {lin({0, 0, 0, 1}), lin({0, 0, 1, 0}), lin({1, 0, 0, 0})},
      {lin({0, 0, 0, 1}), lin({0, 1, -1, 0}), lin({1, 0, 0, 0})},
  };
}

inline Ideal five_point_ideal() {
  MonomialOrder order = grevlex_order();
  std::vector<std::vector<Polynomial>> primes = five_point_prime_forms();
  Ideal ideal{primes[0]};
  for (size_t i = 1; i < primes.size(); ++i) {
    ideal = intersect(ideal, Ideal(primes[i]), order);
  }
  return ideal;
}

// Monomial t^e as a one-term ideal generator list, for building monomial ideals
// through the polynomial front door.
inline std::vector<Polynomial> monomial_generators(const PrimeField& field,
                                                   MonomialOrder order,
                                                   const MonomialIdeal& M) {
  std::vector<Polynomial> gens;
  for (const Monomial& m : M.generators()) {
    gens.push_back(Polynomial::monomial_poly(field, order, m));
  }
  return gens;
}

// All complete-intersection monomial ideals on pairwise disjoint single-variable
// supports: generators ti^{d_i} on the first r variables of s.  Every CI profile
// on distinct variables is isomorphic to one of these up to renaming, which is
// all the closed formulas see.
inline MonomialIdeal power_ci_ideal(int s, const std::vector<int>& degrees) {
  std::vector<Monomial> gens;
  for (size_t i = 0; i < degrees.size(); ++i) {
    std::vector<int> e(static_cast<size_t>(s), 0);
    e[i] = degrees[i];
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal::minimalize(s, std::move(gens));
}

// Random antichain of monomials; never the unit monomial, possibly zero ideal.
inline MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, int nvars,
                                           int max_exponent, int max_gens) {
  std::uniform_int_distribution<int> gen_count(1, max_gens);
  std::uniform_int_distribution<int> expo(0, max_exponent);
  int count = gen_count(rng);
  std::vector<Monomial> gens;
  for (int g = 0; g < count; ++g) {
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    int degree = 0;
    for (int i = 0; i < nvars; ++i) {
      e[static_cast<size_t>(i)] = expo(rng);
      degree += e[static_cast<size_t>(i)];
    }
    if (degree == 0) continue;  // skip the unit monomial
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal::minimalize(nvars, std::move(gens));
}

// Random homogeneous polynomial of the given degree; may be zero.
inline Polynomial random_homogeneous(std::mt19937_64& rng, const PrimeField& field,
                                     int nvars, int degree, MonomialOrder order) {
  std::vector<Monomial> basis;
  std::vector<int> e(static_cast<size_t>(nvars), 0);
  // enumerate all exponent vectors of total degree `degree`
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      e[static_cast<size_t>(var)] = remaining;
      basis.push_back(Monomial(e));
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[static_cast<size_t>(var)] = k;
      self(self, var + 1, remaining - k);
    }
  };
  rec(rec, 0, degree);
  std::uniform_int_distribution<long long> coeff(0, field.modulus() - 1);
  std::vector<Term> terms;
  for (const Monomial& m : basis) {
    long long c = coeff(rng);
    if (c != 0) terms.push_back(Term{m, c});
  }
  return Polynomial::from_terms(field, nvars, order, std::move(terms));
}

// ---- graphs ----

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

// k disjoint edges {0,1}, {2,3}, ...
inline Graph perfect_matching_graph(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  return Graph(2 * k, std::move(edges));
}

inline Graph complete_bipartite_graph(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph(a + b, std::move(edges));
}

// Every vertex of the base path 0..n-1 gets a pendant neighbor n+i: trees whose
// edge ideals are Cohen-Macaulay.
inline Graph whiskered_path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
  return Graph(2 * n, std::move(edges));
}

}  // namespace fixtures
