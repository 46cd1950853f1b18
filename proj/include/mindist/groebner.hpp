#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "mindist/monomial_ideal.hpp"
#include "mindist/polynomial.hpp"

namespace mindist {

// Reduced Groebner basis: monic elements, no term of any element divisible by the
// leading monomial of another, sorted by leading monomial descending.  Unique for a
// given ideal and order, so equality of bases decides equality of ideals.
class GroebnerBasis {
public:
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }

  bool equals(const GroebnerBasis& other) const;

private:
  friend GroebnerBasis buchberger(const std::vector<Polynomial>&, MonomialOrder);
  friend GroebnerBasis buchberger_extend(const GroebnerBasis&, const Polynomial&);

  MonomialOrder order_;
  std::vector<Polynomial> elements_;
};

// Buchberger with the normal selection strategy (least lcm degree first) and the
// coprimality and chain criteria, followed by interreduction to the reduced basis.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder order);

// Reduced basis of (base) + (f), skipping all S-pairs internal to base, which are
// already known to reduce to zero.  This is the per-candidate workhorse of the
// enumeration kernels.
GroebnerBasis buchberger_extend(const GroebnerBasis& base, const Polynomial& f);

// Remainder of f on division by the basis; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Finitely generated nonzero ideal of F_p[t1..ts].  Groebner bases are computed on
// demand and cached per order; the cache is guarded so concurrent readers are safe.
class Ideal {
public:
  explicit Ideal(std::vector<Polynomial> gens);

  Ideal(const Ideal& other);
  Ideal& operator=(const Ideal& other);

  const std::vector<Polynomial>& generators() const { return gens_; }
  const PrimeField& field() const { return gens_.front().field(); }
  int nvars() const { return gens_.front().nvars(); }

  // All generators homogeneous.
  bool is_graded() const { return graded_; }

  const GroebnerBasis& groebner(MonomialOrder order) const;

private:
  std::vector<Polynomial> gens_;
  bool graded_ = false;
  mutable std::map<MonomialOrder, GroebnerBasis> cache_;
  mutable std::mutex mutex_;
};

// Leading monomials of the reduced basis, minimally generated.  Rejects the unit
// ideal since its initial ideal is the whole ring.
MonomialIdeal initial_ideal(const Ideal& I, MonomialOrder order);

bool contains(const Ideal& I, const Polynomial& f, MonomialOrder order);

// The reduced basis contains no constant.
bool is_proper(const Ideal& I, MonomialOrder order);

bool ideal_equal(const Ideal& I, const Ideal& J, MonomialOrder order);

// I + (f) for nonzero f.
Ideal ideal_sum(const Ideal& I, const Polynomial& f);

// I : f for nonzero homogeneous f, via the single-auxiliary-variable elimination
//   I cap (f) = (u*I + (1-u)*f) cap F_p[t],
// then exact division of the intersection generators by f.  Checks that division is
// exact and that every returned generator multiplies back into I.
Ideal colon(const Ideal& I, const Polynomial& f, MonomialOrder order);

// I cap J by the same elimination device.
Ideal intersect(const Ideal& I, const Ideal& J, MonomialOrder order);

}  // namespace mindist
