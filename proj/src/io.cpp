#include "mindist/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mindist/errors.hpp"

namespace mindist {

namespace {

constexpr long long kMaxBudget = 1LL << 62;

[[noreturn]] void fail(const std::string& path, const std::string& detail) {
  throw InputError(path + ": " + detail);
}

std::string type_name(const Json& j) {
  if (j.is_object()) return "an object";
  if (j.is_array()) return "an array";
  if (j.is_string()) return "a string";
  if (j.is_boolean()) return "a boolean";
  if (j.is_null()) return "null";
  if (j.is_number_float()) return "a fractional number";
  return "a number";
}

const Json& at(const Json& obj, const std::string& prefix, const std::string& key) {
  auto it = obj.find(key);
  std::string path = prefix.empty() ? key : prefix + "." + key;
  if (it == obj.end()) fail(path, "missing");
  return *it;
}

long long as_integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer, got " + type_name(j));
  return j.get<long long>();
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string, got " + type_name(j));
  return j.get<std::string>();
}

bool as_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected a boolean, got " + type_name(j));
  return j.get<bool>();
}

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

// Structural checks shared by parse_spec and materialize, so hand-built specs go
// through the same gate as parsed ones.
void validate_spec(const ProblemSpec& spec) {
  if (spec.field < 2 || spec.field >= (1LL << 31) || !is_prime(spec.field)) {
    fail("field", std::to_string(spec.field) + " is not a prime below 2^31");
  }
  int sources = (spec.generators.empty() ? 0 : 1) + (spec.primes.empty() ? 0 : 1) +
                (spec.graph.has_value() ? 1 : 0);
  if (sources != 1) {
    throw InputError(
        "exactly one of \"generators\", \"primes\", \"graph\" must be given");
  }
  if (spec.variables.empty()) fail("variables", "at least one name is required");
  std::set<std::string> seen;
  for (size_t i = 0; i < spec.variables.size(); ++i) {
    std::string path = "variables[" + std::to_string(i) + "]";
    if (!valid_name(spec.variables[i])) {
      fail(path, "\"" + spec.variables[i] + "\" is not an identifier");
    }
    if (!seen.insert(spec.variables[i]).second) {
      fail(path, "duplicate name \"" + spec.variables[i] + "\"");
    }
  }
  if (!order_from_name(spec.order)) {
    fail("order", "unknown order \"" + spec.order +
                      "\" (expected lex, grlex, or grevlex)");
  }
  for (size_t i = 0; i < spec.generators.size(); ++i) {
    if (spec.generators[i].empty()) {
      fail("generators[" + std::to_string(i) + "]", "empty string");
    }
  }
  for (size_t i = 0; i < spec.primes.size(); ++i) {
    std::string path = "primes[" + std::to_string(i) + "]";
    if (spec.primes[i].empty()) fail(path, "a prime needs at least one form");
    for (size_t k = 0; k < spec.primes[i].size(); ++k) {
      if (spec.primes[i][k].empty()) {
        fail(path + "[" + std::to_string(k) + "]", "empty string");
      }
    }
  }
  if (spec.graph) {
    const GraphSpec& g = *spec.graph;
    if (g.vertices < 1 || g.vertices > 64) {
      fail("graph.vertices", "expected an integer in [1, 64], got " +
                                 std::to_string(g.vertices));
    }
    if (static_cast<int>(spec.variables.size()) != g.vertices) {
      fail("variables", "expected one name per vertex (" +
                            std::to_string(g.vertices) + "), got " +
                            std::to_string(spec.variables.size()));
    }
    if (g.edges.empty()) fail("graph.edges", "at least one edge is required");
    std::set<std::pair<int, int>> edge_set;
    for (size_t i = 0; i < g.edges.size(); ++i) {
      std::string path = "graph.edges[" + std::to_string(i) + "]";
      auto [u, v] = g.edges[i];
      if (u < 1 || u > g.vertices || v < 1 || v > g.vertices) {
        fail(path, "vertex out of range [1, " + std::to_string(g.vertices) + "]");
      }
      if (u == v) fail(path, "loop at vertex " + std::to_string(u));
      if (!edge_set.insert({std::min(u, v), std::max(u, v)}).second) {
        fail(path, "duplicate edge");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Polynomial text
// ---------------------------------------------------------------------------

class PolynomialParser {
public:
  PolynomialParser(const std::string& text, const PrimeField& field,
                   const std::vector<std::string>& names,
                   const MonomialOrder& order, const std::string& where)
      : text_(text), field_(field), names_(names), order_(order), where_(where) {
    for (size_t i = 0; i < names.size(); ++i) {
      index_[names[i]] = static_cast<int>(i);
    }
  }

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (done()) error("empty polynomial");
    long long sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = take() == '-' ? -1 : 1;
      skip_ws();
    }
    terms.push_back(parse_term(sign));
    skip_ws();
    while (!done()) {
      char c = take();
      if (c != '+' && c != '-') {
        error(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      terms.push_back(parse_term(c == '-' ? -1 : 1));
      skip_ws();
    }
    return Polynomial::from_terms(field_, static_cast<int>(names_.size()), order_,
                                  std::move(terms));
  }

private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void error(const std::string& detail) const {
    throw InputError(where_ + ": parse error at position " +
                     std::to_string(pos_ + 1) + ": " + detail);
  }

  Term parse_term(long long sign) {
    long long coeff = field_.reduce(sign);
    std::vector<int> exps(names_.size(), 0);
    parse_factor(coeff, exps);
    while (true) {
      skip_ws();
      if (done() || peek() != '*') break;
      take();
      skip_ws();
      parse_factor(coeff, exps);
    }
    return Term{Monomial(std::move(exps)), coeff};
  }

  void parse_factor(long long& coeff, std::vector<int>& exps) {
    if (done()) error("expected a coefficient or variable");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff = field_.mul(coeff, parse_natural_mod_p());
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      int var = parse_variable();
      int e = 1;
      skip_ws();
      if (!done() && peek() == '^') {
        take();
        skip_ws();
        e = parse_exponent();
      }
      exps[static_cast<size_t>(var)] += e;
      return;
    }
    error(std::string("unexpected character '") + c + "'");
  }

  long long parse_natural_mod_p() {
    long long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = field_.reduce(v * 10 + (take() - '0'));
    }
    return v;
  }

  int parse_exponent() {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      error("expected an exponent");
    }
    long long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (take() - '0');
      if (v > 1000000) error("exponent too large");
    }
    return static_cast<int>(v);
  }

  int parse_variable() {
    size_t start = pos_;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                       peek() == '_')) {
      ++pos_;
    }
    std::string name = text_.substr(start, pos_ - start);
    auto it = index_.find(name);
    if (it == index_.end()) {
      pos_ = start;
      error("unknown variable \"" + name + "\"");
    }
    return it->second;
  }

  const std::string& text_;
  const PrimeField& field_;
  const std::vector<std::string>& names_;
  MonomialOrder order_;
  std::string where_;
  std::map<std::string, int> index_;
  size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string monomial_string(const Monomial& m,
                            const std::vector<std::string>& names) {
  if (m.is_unit()) return "1";
  std::string out;
  for (size_t j = 0; j < m.exponents().size(); ++j) {
    int e = m.exponents()[j];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += names[j];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string series_string(const std::vector<BigInt>& h) {
  std::string out;
  for (size_t i = 0; i < h.size(); ++i) {
    if (h[i] == 0) continue;
    BigInt a = h[i];
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    if (a < 0) a = -a;
    std::string power =
        i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (power.empty()) {
      out += a.str();
    } else if (a == 1) {
      out += power;
    } else {
      out += a.str() + "*" + power;
    }
  }
  return out.empty() ? "0" : out;
}

long long effective_budget(const RunFlags& flags) {
  return flags.budget.value_or(EnumerationBudget{}.max_candidates);
}

ScanConfig scan_config(const RunFlags& flags) {
  ScanConfig c;
  c.budget.max_candidates = effective_budget(flags);
  c.budget.prune_regular_leading = !flags.no_prune;
  c.path = flags.path;
  c.parallel = flags.parallel;
  return c;
}

Json provenance(const Problem& prob, const RunFlags& flags) {
  Json p;
  p["field"] = prob.spec.field;
  p["order"] = prob.spec.order;
  p["budget"] = effective_budget(flags);
  p["prune"] = !flags.no_prune;
  p["path"] = flags.path == EnginePath::fast ? "fast" : "reference";
  p["parallel"] = flags.parallel;
  return p;
}

// d, or 1..max_d; exactly one must be given.
std::vector<int> degree_range(const RunFlags& flags, const std::string& command) {
  if (flags.d && flags.max_d) {
    throw InputError(command + ": give -d or --max-d, not both");
  }
  if (flags.d) {
    if (*flags.d < 1) throw InputError(command + ": d must be at least 1");
    return {*flags.d};
  }
  if (flags.max_d) {
    if (*flags.max_d < 1) throw InputError(command + ": max-d must be at least 1");
    std::vector<int> ds;
    for (int d = 1; d <= *flags.max_d; ++d) ds.push_back(d);
    return ds;
  }
  throw InputError(command + ": give -d N or --max-d N");
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

Report run_gb(const Problem& prob, const RunFlags& flags) {
  const GroebnerBasis& gb = prob.ideal.groebner(prob.order);
  std::ostringstream text;
  text << "reduced Groebner basis (" << prob.spec.order << "), "
       << gb.elements().size() << " elements:\n";
  Json basis = Json::array();
  for (const Polynomial& f : gb.elements()) {
    std::string s = to_string(f, prob.spec.variables);
    text << "  " << s << "\n";
    basis.push_back(s);
  }
  Json data;
  data["command"] = "gb";
  data["basis"] = std::move(basis);
  data["provenance"] = provenance(prob, flags);
  return {text.str(), std::move(data)};
}

Report run_initial(const Problem& prob, const RunFlags& flags) {
  MonomialIdeal init = initial_ideal(prob.ideal, prob.order);
  std::ostringstream text;
  text << "initial ideal (" << prob.spec.order << "), "
       << init.generators().size() << " generators:\n";
  Json gens = Json::array();
  for (const Monomial& m : init.generators()) {
    std::string s = monomial_string(m, prob.spec.variables);
    text << "  " << s << "\n";
    gens.push_back(s);
  }
  Json data;
  data["command"] = "initial";
  data["generators"] = std::move(gens);
  data["provenance"] = provenance(prob, flags);
  return {text.str(), std::move(data)};
}

Report run_hilbert(const Problem& prob, const RunFlags& flags) {
  MonomialIdeal init = initial_ideal(prob.ideal, prob.order);
  HilbertData hd = hilbert_data(init);
  int ri = regularity_index_hilbert(init);
  std::ostringstream text;
  text << "deg(S/I) = " << hd.degree << "\n";
  text << "dim(S/I) = " << hd.dimension << "\n";
  text << "a-invariant = " << hd.a_invariant << "\n";
  text << "regularity index = " << ri << "\n";
  text << "h(x) = " << series_string(hd.numerator) << "\n";
  Json h = Json::array();
  for (const BigInt& c : hd.numerator) h.push_back(c.str());
  Json data;
  data["command"] = "hilbert";
  data["degree"] = hd.degree;
  data["dimension"] = hd.dimension;
  data["a_invariant"] = hd.a_invariant;
  data["regularity_index"] = ri;
  data["h"] = std::move(h);
  data["provenance"] = provenance(prob, flags);
  return {text.str(), std::move(data)};
}

Report run_values(const std::string& command, const Problem& prob,
                  const RunFlags& flags) {
  std::vector<int> ds = degree_range(flags, command);
  ScanConfig config = scan_config(flags);
  std::ostringstream text;
  Json values = Json::array();
  for (int d : ds) {
    long long v = 0;
    if (command == "fp") {
      v = fp(prob.ideal, prob.order, d);
    } else if (command == "delta") {
      v = delta(prob.ideal, prob.order, d, config);
    } else {
      v = vasconcelos(prob.ideal, prob.order, d, config);
    }
    text << command << "(" << d << ") = " << v << "\n";
    Json row;
    row["d"] = d;
    row["value"] = v;
    values.push_back(std::move(row));
  }
  Json data;
  data["command"] = command;
  data["values"] = std::move(values);
  data["provenance"] = provenance(prob, flags);
  return {text.str(), std::move(data)};
}

std::string pad_left(const std::string& s, size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

Report run_table(const Problem& prob, const RunFlags& flags) {
  if (flags.d) throw InputError("table: use --max-d (the table always starts at d = 1)");
  int max_d = flags.max_d.value_or(3);
  if (max_d < 1) throw InputError("table: max-d must be at least 1");
  FunctionTable table = build_table(
      prob.ideal, prob.order, max_d,
      {TableColumn::delta, TableColumn::fp, TableColumn::vasconcelos},
      prob.hypotheses, scan_config(flags));
  int ri = regularity_index_hilbert(initial_ideal(prob.ideal, prob.order));

  std::vector<std::string> headers = {"d", "H", "delta", "fp", "vasconcelos"};
  std::vector<std::vector<std::string>> cells;
  bool any_over = false;
  auto render_cell = [&any_over](const std::optional<long long>& v, bool over) {
    if (v) return std::to_string(*v);
    any_over = any_over || over;
    return std::string(over ? "over" : "-");
  };
  for (const TableRow& row : table.rows) {
    cells.push_back({std::to_string(row.d), std::to_string(row.hilbert),
                     render_cell(row.delta, row.delta_over_budget),
                     render_cell(row.fp, false),
                     render_cell(row.vasconcelos, row.vasconcelos_over_budget)});
  }
  std::vector<size_t> widths;
  for (size_t c = 0; c < headers.size(); ++c) {
    size_t w = headers[c].size();
    for (const auto& row : cells) w = std::max(w, row[c].size());
    widths.push_back(w);
  }
  std::ostringstream text;
  text << "deg(S/I) = " << table.degree << "   dim(S/I) = " << table.dimension
       << "   regularity index = " << ri << "\n";
  for (size_t c = 0; c < headers.size(); ++c) {
    text << (c == 0 ? " " : " | ") << pad_left(headers[c], widths[c]);
  }
  text << "\n";
  for (const auto& row : cells) {
    for (size_t c = 0; c < row.size(); ++c) {
      text << (c == 0 ? " " : " | ") << pad_left(row[c], widths[c]);
    }
    text << "\n";
  }
  if (any_over) {
    text << "over = candidate budget exceeded (q^H(d) - 1 > budget); raise --budget\n";
  }

  Json rows = Json::array();
  for (const TableRow& row : table.rows) {
    Json r;
    r["d"] = row.d;
    r["H"] = row.hilbert;
    if (row.delta) r["delta"] = *row.delta; else r["delta"] = nullptr;
    if (row.fp) r["fp"] = *row.fp; else r["fp"] = nullptr;
    if (row.vasconcelos) r["vasconcelos"] = *row.vasconcelos;
    else r["vasconcelos"] = nullptr;
    r["delta_over_budget"] = row.delta_over_budget;
    r["vasconcelos_over_budget"] = row.vasconcelos_over_budget;
    rows.push_back(std::move(r));
  }
  Json data;
  data["command"] = "table";
  data["degree"] = table.degree;
  data["dimension"] = table.dimension;
  data["regularity_index"] = ri;
  data["rows"] = std::move(rows);
  data["provenance"] = provenance(prob, flags);
  return {text.str(), std::move(data)};
}

Report run_edge_ideal(const Problem& prob, const RunFlags& flags) {
  if (!prob.graph) throw InputError("edge-ideal: the input document has no graph");
  const Graph& g = *prob.graph;
  const std::vector<std::string>& names = prob.spec.variables;
  MonomialIdeal ei = edge_ideal(g);

  std::ostringstream text;
  std::string gens;
  Json gens_json = Json::array();
  for (const Monomial& m : ei.generators()) {
    std::string s = monomial_string(m, names);
    if (!gens.empty()) gens += ", ";
    gens += s;
    gens_json.push_back(s);
  }
  text << "edge ideal: (" << gens << ")\n";

  Json data;
  data["command"] = "edge-ideal";
  data["generators"] = std::move(gens_json);

  bool covers_in_reach = g.vertex_count() <= 20;
  if (covers_in_reach) {
    std::vector<std::vector<int>> covers = minimal_vertex_covers(g);
    text << "minimal vertex covers: " << covers.size() << "\n";
    if (covers.size() <= 32) {
      for (const std::vector<int>& cover : covers) {
        text << "  {";
        for (size_t i = 0; i < cover.size(); ++i) {
          text << (i ? ", " : "") << names[static_cast<size_t>(cover[i])];
        }
        text << "}\n";
      }
    }
    bool unmixed = is_unmixed_graph(g);
    text << "unmixed: " << (unmixed ? "yes" : "no") << "\n";
    Json covers_json = Json::array();
    for (const std::vector<int>& cover : covers) {
      Json one = Json::array();
      for (int v : cover) one.push_back(names[static_cast<size_t>(v)]);
      covers_json.push_back(std::move(one));
    }
    data["cover_count"] = covers.size();
    data["covers"] = std::move(covers_json);
    data["unmixed"] = unmixed ? "yes" : "no";
  } else {
    text << "minimal vertex covers: not computed (more than 20 vertices)\n";
    text << "unmixed: unknown (more than 20 vertices)\n";
    data["cover_count"] = nullptr;
    data["covers"] = nullptr;
    data["unmixed"] = "unknown";
  }

  if (static_cast<int>(g.edges().size()) <= 24) {
    int im = induced_matching_number(g);
    text << "induced matching number: " << im << "\n";
    data["induced_matching"] = im;
  } else {
    text << "induced matching number: not computed (more than 24 edges)\n";
    data["induced_matching"] = nullptr;
  }

  data["provenance"] = provenance(prob, flags);
  return {text.str(), std::move(data)};
}

Report run_witness(const Problem& prob, const RunFlags& flags) {
  if (!prob.graph) throw InputError("witness: the input document has no graph");
  const Graph& g = *prob.graph;
  const std::vector<std::string>& names = prob.spec.variables;

  std::optional<HHLabeling> labeling = find_hh_labeling(g);
  if (!labeling) {
    throw InputError(
        "witness: the graph admits no Cohen-Macaulay bipartite labeling");
  }
  Monomial w = cm_witness_monomial(g, *labeling);
  int witness_degree = w.degree();
  Polynomial wp = Polynomial::monomial_poly(prob.ideal.field(), prob.order, w);
  Ideal quotient = colon(prob.ideal, wp, prob.order);
  long long colon_degree = quotient_degree(initial_ideal(quotient, prob.order));
  if (colon_degree != 1) {
    throw InternalError("witness colon degree is " +
                        std::to_string(colon_degree) + ", expected 1");
  }

  std::ostringstream text;
  text << "Cohen-Macaulay bipartite labeling:\n";
  auto side = [&](const char* tag, const std::vector<int>& part) {
    text << "  " << tag << ":";
    for (int v : part) text << " " << names[static_cast<size_t>(v)];
    text << "\n";
  };
  side("x", labeling->v1);
  side("y", labeling->v2);
  std::string ws = monomial_string(w, names);
  text << "witness monomial: " << ws << " (degree " << witness_degree << ")\n";
  text << "deg(S/(I : witness)) = " << colon_degree << "\n";

  Json data;
  data["command"] = "witness";
  Json v1 = Json::array(), v2 = Json::array();
  for (int v : labeling->v1) v1.push_back(names[static_cast<size_t>(v)]);
  for (int v : labeling->v2) v2.push_back(names[static_cast<size_t>(v)]);
  data["x"] = std::move(v1);
  data["y"] = std::move(v2);
  data["monomial"] = ws;
  data["witness_degree"] = witness_degree;
  data["colon_degree"] = colon_degree;

  if (static_cast<int>(g.edges().size()) <= 24) {
    int im = induced_matching_number(g);
    text << "induced matching number: " << im << "\n";
    data["induced_matching"] = im;
  } else {
    text << "induced matching number: not computed (more than 24 edges)\n";
    data["induced_matching"] = nullptr;
  }

  // delta eventually reaches 1 no later than the witness degree; report where,
  // budget permitting.
  try {
    int r0 = delta_regularity_index(prob.ideal, prob.order, prob.hypotheses,
                                    scan_config(flags), witness_degree);
    text << "least d with delta(d) = 1: " << r0 << "\n";
    data["delta_reaches_one_at"] = r0;
  } catch (const BudgetError&) {
    text << "least d with delta(d) = 1: not determined within budget\n";
    data["delta_reaches_one_at"] = nullptr;
  }

  data["provenance"] = provenance(prob, flags);
  return {text.str(), std::move(data)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------------

ProblemSpec parse_spec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("not well-formed JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw InputError("top level: expected an object, got " + type_name(j));
  }
  static const std::set<std::string> known = {
      "field", "variables", "order", "generators", "primes", "graph", "assert"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key())) fail(it.key(), "unknown key");
  }

  ProblemSpec spec;
  spec.field = as_integer(at(j, "", "field"), "field");
  if (j.contains("order")) spec.order = as_string(j["order"], "order");

  if (j.contains("generators")) {
    const Json& gj = j["generators"];
    if (!gj.is_array() || gj.empty()) {
      fail("generators", "expected a nonempty array");
    }
    for (size_t i = 0; i < gj.size(); ++i) {
      spec.generators.push_back(
          as_string(gj[i], "generators[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("primes")) {
    const Json& pj = j["primes"];
    if (!pj.is_array() || pj.empty()) fail("primes", "expected a nonempty array");
    for (size_t i = 0; i < pj.size(); ++i) {
      std::string path = "primes[" + std::to_string(i) + "]";
      if (!pj[i].is_array() || pj[i].empty()) {
        fail(path, "expected a nonempty array of linear forms");
      }
      std::vector<std::string> forms;
      for (size_t k = 0; k < pj[i].size(); ++k) {
        forms.push_back(as_string(pj[i][k], path + "[" + std::to_string(k) + "]"));
      }
      spec.primes.push_back(std::move(forms));
    }
  }
  if (j.contains("graph")) {
    const Json& gj = j["graph"];
    if (!gj.is_object()) fail("graph", "expected an object, got " + type_name(gj));
    for (auto it = gj.begin(); it != gj.end(); ++it) {
      if (it.key() != "vertices" && it.key() != "edges") {
        fail("graph." + it.key(), "unknown key");
      }
    }
    GraphSpec gs;
    gs.vertices = static_cast<int>(
        as_integer(at(gj, "graph", "vertices"), "graph.vertices"));
    const Json& ej = at(gj, "graph", "edges");
    if (!ej.is_array()) fail("graph.edges", "expected an array");
    for (size_t i = 0; i < ej.size(); ++i) {
      std::string path = "graph.edges[" + std::to_string(i) + "]";
      const Json& e = ej[i];
      if (!e.is_array() || e.size() != 2) fail(path, "expected a pair [u, v]");
      gs.edges.emplace_back(static_cast<int>(as_integer(e[0], path + "[0]")),
                            static_cast<int>(as_integer(e[1], path + "[1]")));
    }
    spec.graph = std::move(gs);
  }

  if (spec.variables.empty() && spec.graph && !j.contains("variables")) {
    for (int v = 1; v <= spec.graph->vertices; ++v) {
      spec.variables.push_back("t" + std::to_string(v));
    }
  }
  if (j.contains("variables")) {
    const Json& vj = j["variables"];
    if (!vj.is_array() || vj.empty()) {
      fail("variables", "expected a nonempty array");
    }
    for (size_t i = 0; i < vj.size(); ++i) {
      spec.variables.push_back(
          as_string(vj[i], "variables[" + std::to_string(i) + "]"));
    }
  }

  if (j.contains("assert")) {
    const Json& aj = j["assert"];
    if (!aj.is_object()) fail("assert", "expected an object, got " + type_name(aj));
    for (auto it = aj.begin(); it != aj.end(); ++it) {
      std::string path = "assert." + it.key();
      if (it.key() == "unmixed") {
        spec.asserted.unmixed = as_bool(*it, path);
      } else if (it.key() == "radical") {
        spec.asserted.radical = as_bool(*it, path);
      } else if (it.key() == "linear_primes") {
        spec.asserted.linear_primes = as_bool(*it, path);
      } else {
        fail(path, "unknown key");
      }
    }
  }

  validate_spec(spec);
  return spec;
}

std::string render_spec(const ProblemSpec& spec) {
  Json j;
  j["field"] = spec.field;
  j["variables"] = spec.variables;
  j["order"] = spec.order;
  if (!spec.generators.empty()) j["generators"] = spec.generators;
  if (!spec.primes.empty()) j["primes"] = spec.primes;
  if (spec.graph) {
    Json gj;
    gj["vertices"] = spec.graph->vertices;
    Json edges = Json::array();
    for (const auto& [u, v] : spec.graph->edges) {
      Json e = Json::array();
      e.push_back(u);
      e.push_back(v);
      edges.push_back(std::move(e));
    }
    gj["edges"] = std::move(edges);
    j["graph"] = std::move(gj);
  }
  if (spec.asserted.unmixed || spec.asserted.radical ||
      spec.asserted.linear_primes) {
    Json a;
    a["unmixed"] = spec.asserted.unmixed;
    a["radical"] = spec.asserted.radical;
    a["linear_primes"] = spec.asserted.linear_primes;
    j["assert"] = std::move(a);
  }
  return j.dump(2) + "\n";
}

Polynomial parse_polynomial(const std::string& text, const PrimeField& field,
                            const std::vector<std::string>& variables,
                            const MonomialOrder& order, const std::string& where) {
  return PolynomialParser(text, field, variables, order, where).parse();
}

Problem materialize(const ProblemSpec& spec_in) {
  ProblemSpec spec = spec_in;
  if (spec.order.empty()) spec.order = "grevlex";
  if (spec.variables.empty() && spec.graph) {
    for (int v = 1; v <= spec.graph->vertices; ++v) {
      spec.variables.push_back("t" + std::to_string(v));
    }
  }
  validate_spec(spec);
  PrimeField field(spec.field);
  MonomialOrder order = *order_from_name(spec.order);

  if (!spec.generators.empty()) {
    std::vector<Polynomial> gens;
    for (size_t i = 0; i < spec.generators.size(); ++i) {
      std::string where = "generators[" + std::to_string(i) + "]";
      Polynomial f =
          parse_polynomial(spec.generators[i], field, spec.variables, order, where);
      if (f.is_zero()) {
        throw InputError(where + ": the polynomial is zero over F_" +
                         std::to_string(spec.field));
      }
      if (!f.is_homogeneous()) {
        throw InputError(where + ": not homogeneous; only graded ideals are supported");
      }
      gens.push_back(std::move(f));
    }
    Ideal ideal(std::move(gens));
    Hypotheses hyps = certify(ideal, order, spec.asserted);
    return Problem{std::move(spec), order, std::move(ideal), hyps, {}, std::nullopt};
  }

  if (!spec.primes.empty()) {
    int s = static_cast<int>(spec.variables.size());
    std::vector<std::vector<Polynomial>> prime_forms;
    std::vector<LinearSpan> spans;
    for (size_t i = 0; i < spec.primes.size(); ++i) {
      std::vector<Polynomial> forms;
      LinearSpan span{&field, s, {}};
      for (size_t k = 0; k < spec.primes[i].size(); ++k) {
        std::string where =
            "primes[" + std::to_string(i) + "][" + std::to_string(k) + "]";
        Polynomial f =
            parse_polynomial(spec.primes[i][k], field, spec.variables, order, where);
        if (f.is_zero()) {
          throw InputError(where + ": the form is zero over F_" +
                           std::to_string(spec.field));
        }
        if (f.degree() != 1 || !f.is_homogeneous()) {
          throw InputError(where + ": expected a homogeneous linear form");
        }
        if (!span.insert(linear_form_coefficients(f))) {
          throw InputError(where +
                           ": linearly dependent on the other forms of this prime");
        }
        forms.push_back(std::move(f));
      }
      prime_forms.push_back(std::move(forms));
      spans.push_back(std::move(span));
    }

    auto contains_span = [](const LinearSpan& big, const LinearSpan& small) {
      for (const std::vector<long long>& row : small.rows) {
        if (!big.reduces_to_zero(row)) return false;
      }
      return true;
    };
    for (size_t i = 0; i < spans.size(); ++i) {
      for (size_t k = 0; k < spans.size(); ++k) {
        if (i == k || !contains_span(spans[i], spans[k])) continue;
        if (contains_span(spans[k], spans[i])) {
          if (i > k) {
            throw InputError("primes[" + std::to_string(i) + "]: duplicate of primes[" +
                             std::to_string(k) + "]");
          }
        } else {
          throw InputError("primes[" + std::to_string(i) + "]: contains primes[" +
                           std::to_string(k) +
                           "] and is redundant in the intersection");
        }
      }
    }

    bool heights_equal = true;
    for (const LinearSpan& span : spans) {
      heights_equal = heights_equal && span.rows.size() == spans[0].rows.size();
    }
    if (!heights_equal && spec.asserted.unmixed) {
      throw InputError(
          "unmixedness was asserted but the listed primes have different heights");
    }

    Ideal ideal{prime_forms[0]};
    for (size_t i = 1; i < prime_forms.size(); ++i) {
      ideal = intersect(ideal, Ideal(prime_forms[i]), order);
    }
    Hypotheses hyps = certify(ideal, order, spec.asserted);
    if (heights_equal) hyps.unmixed = TriState::certified;
    hyps.radical_linear_primes = TriState::certified;
    return Problem{std::move(spec),       order, std::move(ideal), hyps,
                   std::move(prime_forms), std::nullopt};
  }

  std::vector<std::pair<int, int>> edges0;
  for (const auto& [u, v] : spec.graph->edges) edges0.emplace_back(u - 1, v - 1);
  Graph graph(spec.graph->vertices, std::move(edges0));
  MonomialIdeal ei = edge_ideal(graph);
  std::vector<Polynomial> gens;
  for (const Monomial& m : ei.generators()) {
    gens.push_back(Polynomial::monomial_poly(field, order, m));
  }
  Ideal ideal(std::move(gens));
  Hypotheses hyps = certify(ideal, order, spec.asserted);
  return Problem{std::move(spec), order,           std::move(ideal),
                 hyps,            {},              std::move(graph)};
}

Report run_command(const std::string& command, const Problem& problem,
                   const RunFlags& flags) {
  if (flags.budget && (*flags.budget < 1 || *flags.budget > kMaxBudget)) {
    throw InputError("budget: expected an integer in [1, 2^62]");
  }
  if (command == "gb") return run_gb(problem, flags);
  if (command == "initial") return run_initial(problem, flags);
  if (command == "hilbert") return run_hilbert(problem, flags);
  if (command == "fp" || command == "delta" || command == "vasconcelos") {
    return run_values(command, problem, flags);
  }
  if (command == "table") return run_table(problem, flags);
  if (command == "edge-ideal") return run_edge_ideal(problem, flags);
  if (command == "witness") return run_witness(problem, flags);
  if (command == "ci") {
    throw InputError("ci: takes --degrees, not an input document");
  }
  throw InputError("unknown command \"" + command + "\"");
}

Report run_ci(const std::vector<int>& degrees, const RunFlags& flags) {
  std::vector<int> sorted = degrees;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ds = degree_range(flags, "ci");
  long long deg = ci_degree(sorted);
  long long reg = ci_regularity(sorted);

  std::ostringstream text;
  text << "deg(S/I) = " << deg << "\n";
  text << "reg(S/I) = " << reg << "\n";
  Json values = Json::array();
  for (int d : ds) {
    long long v = ci_fp_formula(sorted, d);
    text << "delta(" << d << ") = fp(" << d << ") = " << v << "\n";
    Json row;
    row["d"] = d;
    row["value"] = v;
    values.push_back(std::move(row));
  }
  Json data;
  data["command"] = "ci";
  data["degrees"] = sorted;
  data["degree"] = deg;
  data["regularity"] = reg;
  data["values"] = std::move(values);
  Json prov;
  prov["route"] = "closed-formula";
  data["provenance"] = std::move(prov);
  return {text.str(), std::move(data)};
}

int exit_code_for(const std::exception& error) {
  if (dynamic_cast<const BudgetError*>(&error)) return exit_budget;
  if (dynamic_cast<const InconclusiveError*>(&error)) return exit_budget;
  if (dynamic_cast<const InternalError*>(&error)) return exit_other;
  if (dynamic_cast<const Error*>(&error)) return exit_input;
  return exit_other;
}

}  // namespace mindist
