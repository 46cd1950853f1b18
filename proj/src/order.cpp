#include "mindist/order.hpp"

#include "mindist/errors.hpp"

namespace mindist {

namespace {

int compare_lex(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

int compare_degrees(const std::vector<int>& a, const std::vector<int>& b) {
  int da = 0, db = 0;
  for (int x : a) da += x;
  for (int x : b) db += x;
  if (da != db) return da > db ? 1 : -1;
  return 0;
}

// Among equal degrees the monomial whose rightmost differing exponent is SMALLER is
// the larger one.
int compare_revlex_tail(const std::vector<int>& a, const std::vector<int>& b,
                        size_t begin) {
  for (size_t i = a.size(); i-- > begin;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int compare(const MonomialOrder& order, const Monomial& ma, const Monomial& mb) {
  if (ma.nvars() != mb.nvars()) {
    throw DimensionError("comparing monomials in " + std::to_string(ma.nvars()) +
                         " and " + std::to_string(mb.nvars()) + " variables");
  }
  const std::vector<int>& a = ma.exponents();
  const std::vector<int>& b = mb.exponents();
  switch (order.kind) {
    case OrderKind::lex:
      return compare_lex(a, b);
    case OrderKind::grlex: {
      int c = compare_degrees(a, b);
      return c != 0 ? c : compare_lex(a, b);
    }
    case OrderKind::grevlex: {
      int c = compare_degrees(a, b);
      return c != 0 ? c : compare_revlex_tail(a, b, 0);
    }
    case OrderKind::elim1: {
      if (a[0] != b[0]) return a[0] > b[0] ? 1 : -1;
      int da = 0, db = 0;
      for (size_t i = 1; i < a.size(); ++i) da += a[i];
      for (size_t i = 1; i < b.size(); ++i) db += b[i];
      if (da != db) return da > db ? 1 : -1;
      return compare_revlex_tail(a, b, 1);
    }
  }
  throw InternalError("unhandled order kind");
}

bool is_graded(const MonomialOrder& order) {
  return order.kind == OrderKind::grlex || order.kind == OrderKind::grevlex;
}

std::string to_string(const MonomialOrder& order) {
  switch (order.kind) {
    case OrderKind::lex: return "lex";
    case OrderKind::grlex: return "grlex";
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::elim1: return "elim1";
  }
  return "?";
}

std::optional<MonomialOrder> order_from_name(std::string_view name) {
  if (name == "lex") return lex_order();
  if (name == "grlex") return grlex_order();
  if (name == "grevlex") return grevlex_order();
  return std::nullopt;
}

}  // namespace mindist
