#include "mindist/groebner.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "mindist/errors.hpp"

namespace mindist {

namespace {

bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i) {
    if (a.exponent(i) > 0 && b.exponent(i) > 0) return false;
  }
  return true;
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  // Both inputs are monic.
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Term tf{l.exact_quotient(f.leading_monomial()), 1};
  Term tg{l.exact_quotient(g.leading_monomial()), 1};
  return f.times_term(tf).minus(g.times_term(tg));
}

struct PairEntry {
  int i, j;
  Monomial lcm;
  int degree;
};

class BuchbergerRun {
public:
  BuchbergerRun(std::vector<Polynomial> basis, MonomialOrder order, size_t trusted)
      : order_(order), basis_(std::move(basis)) {
    // S-pairs inside the trusted prefix reduce to zero by assumption; mark them
    // handled so the chain criterion can still use them.
    for (size_t i = 0; i < trusted; ++i) {
      for (size_t j = i + 1; j < trusted; ++j) {
        done_.insert({static_cast<int>(i), static_cast<int>(j)});
      }
    }
    for (size_t j = trusted; j < basis_.size(); ++j) {
      add_pairs_for(static_cast<int>(j));
    }
  }

  std::vector<Polynomial> run() {
    while (!pending_.empty()) {
      size_t pick = 0;
      for (size_t k = 1; k < pending_.size(); ++k) {
        if (pair_precedes(pending_[k], pending_[pick])) pick = k;
      }
      PairEntry pair = pending_[pick];
      pending_.erase(pending_.begin() + static_cast<ptrdiff_t>(pick));
      done_.insert({pair.i, pair.j});
      const Polynomial& fi = basis_[static_cast<size_t>(pair.i)];
      const Polynomial& fj = basis_[static_cast<size_t>(pair.j)];
      if (coprime(fi.leading_monomial(), fj.leading_monomial())) continue;
      if (chain_criterion(pair)) continue;
      Polynomial h = remainder(spoly(fi, fj), basis_);
      if (!h.is_zero()) {
        basis_.push_back(h.monic());
        add_pairs_for(static_cast<int>(basis_.size()) - 1);
      }
    }
    return interreduce();
  }

private:
  void add_pairs_for(int j) {
    for (int i = 0; i < j; ++i) {
      Monomial l = lcm(basis_[static_cast<size_t>(i)].leading_monomial(),
                       basis_[static_cast<size_t>(j)].leading_monomial());
      pending_.push_back(PairEntry{i, j, l, l.degree()});
    }
  }

  // Normal strategy: least lcm degree, ties by the order on lcms, then by index.
  bool pair_precedes(const PairEntry& a, const PairEntry& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    int c = compare(order_, a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  bool chain_criterion(const PairEntry& pair) const {
    for (int k = 0; k < static_cast<int>(basis_.size()); ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!basis_[static_cast<size_t>(k)].leading_monomial().divides(pair.lcm)) {
        continue;
      }
      auto key = [](int a, int b) { return std::pair{std::min(a, b), std::max(a, b)}; };
      if (done_.count(key(pair.i, k)) && done_.count(key(pair.j, k))) return true;
    }
    return false;
  }

  std::vector<Polynomial> interreduce() {
    // Minimal basis first: divisors are strictly smaller in every monomial order,
    // so an ascending sweep by leading monomial suffices.
    std::sort(basis_.begin(), basis_.end(),
              [this](const Polynomial& a, const Polynomial& b) {
                return compare(order_, a.leading_monomial(), b.leading_monomial()) < 0;
              });
    std::vector<Polynomial> minimal;
    for (const Polynomial& g : basis_) {
      bool redundant =
          std::any_of(minimal.begin(), minimal.end(), [&g](const Polynomial& h) {
            return h.leading_monomial().divides(g.leading_monomial());
          });
      if (!redundant) minimal.push_back(g);
    }
    // Tail reduction against the other elements.
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(minimal[j]);
      }
      reduced.push_back(remainder(minimal[i], others).monic());
    }
    std::sort(reduced.begin(), reduced.end(),
              [this](const Polynomial& a, const Polynomial& b) {
                return compare(order_, a.leading_monomial(), b.leading_monomial()) > 0;
              });
    return reduced;
  }

  MonomialOrder order_;
  std::vector<Polynomial> basis_;
  std::vector<PairEntry> pending_;
  std::set<std::pair<int, int>> done_;
};

std::vector<Polynomial> validate_generators(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw ZeroIdealError("no generators: the zero ideal is rejected");
  for (const Polynomial& g : gens) {
    if (g.is_zero()) throw InputError("zero polynomial among ideal generators");
    if (!g.same_ring(gens.front())) {
      throw RingMismatchError("generators over different rings");
    }
  }
  return gens;
}

}  // namespace

bool GroebnerBasis::equals(const GroebnerBasis& other) const {
  if (order_ != other.order_ || elements_.size() != other.elements_.size()) {
    return false;
  }
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (!elements_[i].equals(other.elements_[i])) return false;
  }
  return true;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, MonomialOrder order) {
  validate_generators(gens);
  std::vector<Polynomial> start;
  start.reserve(gens.size());
  for (const Polynomial& g : gens) start.push_back(g.with_order(order).monic());
  GroebnerBasis gb;
  gb.order_ = order;
  gb.elements_ = BuchbergerRun(std::move(start), order, 0).run();
  return gb;
}

GroebnerBasis buchberger_extend(const GroebnerBasis& base, const Polynomial& f) {
  if (f.is_zero()) throw InputError("extending a basis by the zero polynomial");
  std::vector<Polynomial> start = base.elements();
  if (!start.empty() && !start.front().same_ring(f)) {
    throw RingMismatchError("extension polynomial over a different ring");
  }
  size_t trusted = start.size();
  start.push_back(f.with_order(base.order()).monic());
  GroebnerBasis gb;
  gb.order_ = base.order();
  gb.elements_ = BuchbergerRun(std::move(start), base.order(), trusted).run();
  return gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return remainder(f.with_order(gb.order()), gb.elements());
}

Ideal::Ideal(std::vector<Polynomial> gens) : gens_(validate_generators(gens)) {
  graded_ = std::all_of(gens_.begin(), gens_.end(),
                        [](const Polynomial& g) { return g.is_homogeneous(); });
}

Ideal::Ideal(const Ideal& other) {
  std::lock_guard<std::mutex> lock(other.mutex_);
  gens_ = other.gens_;
  graded_ = other.graded_;
  cache_ = other.cache_;
}

Ideal& Ideal::operator=(const Ideal& other) {
  if (this == &other) return *this;
  std::scoped_lock lock(mutex_, other.mutex_);
  gens_ = other.gens_;
  graded_ = other.graded_;
  cache_ = other.cache_;
  return *this;
}

const GroebnerBasis& Ideal::groebner(MonomialOrder order) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(order);
  if (it == cache_.end()) {
    it = cache_.emplace(order, buchberger(gens_, order)).first;
  }
  return it->second;
}

MonomialIdeal initial_ideal(const Ideal& I, MonomialOrder order) {
  const GroebnerBasis& gb = I.groebner(order);
  std::vector<Monomial> lms;
  for (const Polynomial& g : gb.elements()) {
    if (g.leading_monomial().is_unit()) {
      throw InputError("the ideal is the whole ring");
    }
    lms.push_back(g.leading_monomial());
  }
  return MonomialIdeal::minimalize(I.nvars(), std::move(lms));
}

bool contains(const Ideal& I, const Polynomial& f, MonomialOrder order) {
  if (!f.same_ring(I.generators().front())) {
    throw RingMismatchError("membership test across different rings");
  }
  return normal_form(f, I.groebner(order)).is_zero();
}

bool is_proper(const Ideal& I, MonomialOrder order) {
  const GroebnerBasis& gb = I.groebner(order);
  return std::none_of(gb.elements().begin(), gb.elements().end(),
                      [](const Polynomial& g) {
                        return g.leading_monomial().is_unit();
                      });
}

bool ideal_equal(const Ideal& I, const Ideal& J, MonomialOrder order) {
  if (!I.generators().front().same_ring(J.generators().front())) {
    throw RingMismatchError("comparing ideals over different rings");
  }
  return I.groebner(order).equals(J.groebner(order));
}

Ideal ideal_sum(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw InputError("adding the zero polynomial to an ideal");
  if (!f.same_ring(I.generators().front())) {
    throw RingMismatchError("summand over a different ring");
  }
  std::vector<Polynomial> gens = I.generators();
  gens.push_back(f);
  return Ideal(std::move(gens));
}

namespace {

// Embedding into F_p[u, t1..ts] with the auxiliary variable in front (slot 0),
// which is exactly what the elim1 order eliminates.
Polynomial embed_aux(const Polynomial& f) {
  std::vector<Term> terms;
  for (const Term& t : f.terms()) {
    std::vector<int> e;
    e.reserve(static_cast<size_t>(t.mono.nvars()) + 1);
    e.push_back(0);
    for (int i = 0; i < t.mono.nvars(); ++i) e.push_back(t.mono.exponent(i));
    terms.push_back(Term{Monomial{std::move(e)}, t.coeff});
  }
  return Polynomial::from_terms(f.field(), f.nvars() + 1, elim1_order(),
                                std::move(terms));
}

Polynomial contract_aux(const Polynomial& f, MonomialOrder order) {
  std::vector<Term> terms;
  for (const Term& t : f.terms()) {
    std::vector<int> e;
    e.reserve(static_cast<size_t>(t.mono.nvars()) - 1);
    for (int i = 1; i < t.mono.nvars(); ++i) e.push_back(t.mono.exponent(i));
    terms.push_back(Term{Monomial{std::move(e)}, t.coeff});
  }
  return Polynomial::from_terms(f.field(), f.nvars() - 1, order, std::move(terms));
}

bool free_of_aux(const Polynomial& f) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [](const Term& t) { return t.mono.exponent(0) == 0; });
}

std::vector<Polynomial> homogeneous_components(const Polynomial& f) {
  std::vector<Polynomial> out;
  std::map<int, std::vector<Term>> by_degree;
  for (const Term& t : f.terms()) by_degree[t.mono.degree()].push_back(t);
  for (auto& [d, terms] : by_degree) {
    out.push_back(
        Polynomial::from_terms(f.field(), f.nvars(), f.order(), std::move(terms)));
  }
  return out;
}

// u-free elements of the elim1 basis of u*I + (1-u)*J, contracted back; generates
// I cap J.  Components are split out so graded inputs yield homogeneous generators.
std::vector<Polynomial> eliminate_intersection(const std::vector<Polynomial>& left,
                                               const std::vector<Polynomial>& right,
                                               MonomialOrder order, bool split) {
  const Polynomial& model = left.front();
  std::vector<Polynomial> egens;
  Monomial u_mono = [&] {
    std::vector<int> e(static_cast<size_t>(model.nvars()) + 1, 0);
    e[0] = 1;
    return Monomial{std::move(e)};
  }();
  Term u{u_mono, 1};
  for (const Polynomial& g : left) egens.push_back(embed_aux(g).times_term(u));
  for (const Polynomial& h : right) {
    Polynomial eh = embed_aux(h);
    egens.push_back(eh.minus(eh.times_term(u)));
  }
  GroebnerBasis gb = buchberger(egens, elim1_order());
  std::vector<Polynomial> result;
  for (const Polynomial& g : gb.elements()) {
    if (!free_of_aux(g)) continue;
    Polynomial c = contract_aux(g, order);
    if (split) {
      for (Polynomial& comp : homogeneous_components(c)) {
        result.push_back(std::move(comp));
      }
    } else {
      result.push_back(std::move(c));
    }
  }
  if (result.empty()) {
    throw InternalError("elimination produced no intersection generators");
  }
  return result;
}

}  // namespace

Ideal colon(const Ideal& I, const Polynomial& f, MonomialOrder order) {
  if (f.is_zero()) throw InputError("colon by the zero polynomial");
  if (!f.same_ring(I.generators().front())) {
    throw RingMismatchError("colon divisor over a different ring");
  }
  if (!f.is_homogeneous()) throw InputError("colon divisor must be homogeneous");
  std::vector<Polynomial> inter =
      eliminate_intersection(I.generators(), {f}, order, true);
  std::vector<Polynomial> quotients;
  Polynomial divisor = f.with_order(order);
  for (const Polynomial& h : inter) {
    DivisionResult dr = divide(h.with_order(order), {divisor});
    if (!dr.remainder.is_zero()) {
      throw InternalError("intersection generator not divisible by the colon divisor");
    }
    if (!dr.quotients[0].is_zero()) quotients.push_back(dr.quotients[0]);
  }
  if (quotients.empty()) {
    throw InternalError("colon computation produced no generators");
  }
  Ideal result(std::move(quotients));
  for (const Polynomial& q : result.generators()) {
    if (!contains(I, q.times(divisor), order)) {
      throw InternalError("colon generator fails the product membership check");
    }
  }
  return result;
}

Ideal intersect(const Ideal& I, const Ideal& J, MonomialOrder order) {
  if (!I.generators().front().same_ring(J.generators().front())) {
    throw RingMismatchError("intersecting ideals over different rings");
  }
  bool split = I.is_graded() && J.is_graded();
  return Ideal(eliminate_intersection(I.generators(), J.generators(), order, split));
}

}  // namespace mindist
