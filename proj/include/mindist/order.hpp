#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "mindist/monomial.hpp"

namespace mindist {

// Variables are ordered t1 > t2 > ... > ts throughout.
//
// elim1 is internal only: a block order making the FIRST variable larger than any
// power product of the rest and ordering the rest by grevlex.  It eliminates an
// auxiliary variable in colon and intersection computations and is not accepted from
// user input.
enum class OrderKind { lex, grlex, grevlex, elim1 };

struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  auto operator<=>(const MonomialOrder&) const = default;
};

inline MonomialOrder lex_order() { return {OrderKind::lex}; }
inline MonomialOrder grlex_order() { return {OrderKind::grlex}; }
inline MonomialOrder grevlex_order() { return {OrderKind::grevlex}; }
inline MonomialOrder elim1_order() { return {OrderKind::elim1}; }

// Three-way comparison: -1 if a < b, 0 if equal, +1 if a > b.
int compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);

inline bool less(const MonomialOrder& o, const Monomial& a, const Monomial& b) {
  return compare(o, a, b) < 0;
}
inline bool greater(const MonomialOrder& o, const Monomial& a, const Monomial& b) {
  return compare(o, a, b) > 0;
}

// Degree-compatible orders refine the total degree.
bool is_graded(const MonomialOrder& order);

std::string to_string(const MonomialOrder& order);

// Accepts the user-facing names lex | grlex | grevlex only.
std::optional<MonomialOrder> order_from_name(std::string_view name);

}  // namespace mindist
