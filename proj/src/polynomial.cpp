#include "mindist/polynomial.hpp"

#include <algorithm>
#include <map>

#include "mindist/errors.hpp"

namespace mindist {

Polynomial::Polynomial(PrimeField field, int nvars, MonomialOrder order)
    : field_(field), nvars_(nvars), order_(order) {
  if (nvars <= 0) throw DimensionError("polynomial ring needs at least one variable");
}

Polynomial Polynomial::from_terms(PrimeField field, int nvars, MonomialOrder order,
                                  std::vector<Term> terms) {
  Polynomial f(field, nvars, order);
  // Merge coefficients of equal monomials under a descending map.
  auto cmp = [&order](const Monomial& a, const Monomial& b) {
    return compare(order, a, b) > 0;
  };
  std::map<Monomial, long long, decltype(cmp)> acc(cmp);
  for (Term& t : terms) {
    if (t.mono.nvars() != nvars) {
      throw DimensionError("term in " + std::to_string(t.mono.nvars()) +
                           " variables inserted into a ring with " +
                           std::to_string(nvars));
    }
    long long c = field.reduce(t.coeff);
    if (c == 0) continue;
    auto [it, fresh] = acc.try_emplace(t.mono, c);
    if (!fresh) it->second = field.add(it->second, c);
  }
  f.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) f.terms_.push_back(Term{m, c});
  }
  return f;
}

Polynomial Polynomial::monomial_poly(PrimeField field, MonomialOrder order,
                                     const Monomial& m, long long coeff) {
  return from_terms(field, m.nvars(), order, {Term{m, coeff}});
}

Polynomial Polynomial::constant(PrimeField field, int nvars, MonomialOrder order,
                                long long c) {
  return from_terms(field, nvars, order, {Term{Monomial(nvars), c}});
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.front();
}

const Monomial& Polynomial::leading_monomial() const { return leading_term().mono; }

long long Polynomial::leading_coeff() const { return leading_term().coeff; }

int Polynomial::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.mono.degree() == d; });
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!same_ring(other)) {
    throw RingMismatchError("operands over F_" + std::to_string(field_.modulus()) +
                            "[" + std::to_string(nvars_) + " vars] and F_" +
                            std::to_string(other.field_.modulus()) + "[" +
                            std::to_string(other.nvars_) + " vars]");
  }
}

Polynomial Polynomial::plus(const Polynomial& g) const {
  check_ring(g);
  const Polynomial& h = (order_ == g.order_) ? g : g.with_order(order_);
  Polynomial r(field_, nvars_, order_);
  r.terms_.reserve(terms_.size() + h.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < h.terms_.size()) {
    int c = compare(order_, terms_[i].mono, h.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(h.terms_[j++]);
    } else {
      long long s = field_.add(terms_[i].coeff, h.terms_[j].coeff);
      if (s != 0) r.terms_.push_back(Term{terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < h.terms_.size(); ++j) r.terms_.push_back(h.terms_[j]);
  return r;
}

Polynomial Polynomial::negated() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = field_.neg(t.coeff);
  return r;
}

Polynomial Polynomial::minus(const Polynomial& g) const { return plus(g.negated()); }

Polynomial Polynomial::times_term(const Term& t) const {
  long long c = field_.reduce(t.coeff);
  if (c == 0) return Polynomial(field_, nvars_, order_);
  Polynomial r(field_, nvars_, order_);
  r.terms_.reserve(terms_.size());
  // Multiplying by a fixed term preserves the descending arrangement.
  for (const Term& u : terms_) {
    r.terms_.push_back(Term{u.mono.times(t.mono), field_.mul(u.coeff, c)});
  }
  return r;
}

Polynomial Polynomial::times(const Polynomial& g) const {
  check_ring(g);
  Polynomial r(field_, nvars_, order_);
  for (const Term& t : g.terms_) r = r.plus(times_term(t));
  return r;
}

Polynomial Polynomial::scaled(long long c) const {
  c = field_.reduce(c);
  if (c == 0) return Polynomial(field_, nvars_, order_);
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) throw Error("monic form of the zero polynomial");
  return scaled(field_.inv(leading_coeff()));
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  Polynomial r = *this;
  r.order_ = order;
  std::sort(r.terms_.begin(), r.terms_.end(), [&order](const Term& a, const Term& b) {
    return compare(order, a.mono, b.mono) > 0;
  });
  return r;
}

bool Polynomial::equals(const Polynomial& other) const {
  if (!same_ring(other)) return false;
  const Polynomial& h = (order_ == other.order_) ? other : other.with_order(order_);
  if (terms_.size() != h.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == h.terms_[i].mono) || terms_[i].coeff != h.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  for (const Polynomial& g : divisors) {
    if (g.is_zero()) throw InputError("zero polynomial in divisor list");
    if (!f.same_ring(g)) {
      throw RingMismatchError("divisor over a different ring than the dividend");
    }
  }
  const MonomialOrder order = f.order();
  DivisionResult res{std::vector<Polynomial>(
                         divisors.size(), Polynomial(f.field(), f.nvars(), order)),
                     Polynomial(f.field(), f.nvars(), order)};
  std::vector<Term> rem_terms;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    bool reduced = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      const Polynomial& g = divisors[i].order() == order ? divisors[i]
                                                         : divisors[i].with_order(order);
      if (g.leading_monomial().divides(lt.mono)) {
        Term t{lt.mono.exact_quotient(g.leading_monomial()),
               f.field().mul(lt.coeff, f.field().inv(g.leading_coeff()))};
        res.quotients[i] = res.quotients[i].plus(
            Polynomial::monomial_poly(f.field(), order, t.mono, t.coeff));
        p = p.minus(g.times_term(t));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      // Successive moved terms strictly decrease, so appending keeps order.
      rem_terms.push_back(lt);
      p = p.minus(Polynomial::monomial_poly(f.field(), order, lt.mono, lt.coeff));
    }
  }
  res.remainder = Polynomial::from_terms(f.field(), f.nvars(), order, std::move(rem_terms));
  return res;
}

Polynomial remainder(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  return divide(f, divisors).remainder;
}

std::string to_string(const Polynomial& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  if (!names.empty() && static_cast<int>(names.size()) != f.nvars()) {
    throw InputError("variable name list length does not match the ring");
  }
  auto name = [&](int i) {
    return names.empty() ? "t" + std::to_string(i + 1) : names[static_cast<size_t>(i)];
  };
  std::string out;
  for (const Term& t : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (int i = 0; i < t.mono.nvars(); ++i) {
      int e = t.mono.exponent(i);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      out += mono;
    } else {
      out += std::to_string(t.coeff) + "*" + mono;
    }
  }
  return out;
}

}  // namespace mindist
