#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "mindist/errors.hpp"
#include "mindist/io.hpp"

using namespace mindist;

namespace {

const char* kBinomialDoc = R"({
  "field": 2,
  "variables": ["t1", "t2", "t3"],
  "order": "grevlex",
  "generators": ["t1*t2^2 - t1^2*t2", "t1*t3^2 - t1^2*t3", "t2^2*t3 - t2*t3^2"]
})";

const char* kFivePointsDoc = R"({
  "field": 3,
  "variables": ["t1", "t2", "t3", "t4"],
  "order": "grevlex",
  "primes": [
    ["t3 + t4", "t2 + t4", "t1 + t4"],
    ["t3 + t4", "t2", "t1 - t4"],
    ["t4", "t2", "t1"],
    ["t4", "t3", "t1"],
    ["t4", "t2 - t3", "t1"]
  ]
})";

const char* kPathDoc = R"({
  "field": 2,
  "graph": {"vertices": 4, "edges": [[1, 2], [2, 3], [3, 4]]}
})";

Problem problem_of(const char* text) { return materialize(parse_spec(text)); }

Polynomial reparse(const Problem& prob, const std::string& text) {
  return parse_polynomial(text, prob.ideal.field(), prob.spec.variables, prob.order);
}

}  // namespace

TEST_CASE("spec round trip for every source kind") {
  ProblemSpec gens = parse_spec(kBinomialDoc);
  CHECK(gens.field == 2);
  CHECK(gens.variables == std::vector<std::string>{"t1", "t2", "t3"});
  CHECK(gens.order == "grevlex");
  CHECK(gens.generators.size() == 3);
  CHECK(parse_spec(render_spec(gens)) == gens);

  ProblemSpec primes = parse_spec(kFivePointsDoc);
  CHECK(primes.primes.size() == 5);
  CHECK(parse_spec(render_spec(primes)) == primes);

  ProblemSpec graph = parse_spec(kPathDoc);
  REQUIRE(graph.graph.has_value());
  CHECK(graph.graph->vertices == 4);
  CHECK(graph.graph->edges ==
        std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});
  // Graph input defaults the variables, one per vertex.
  CHECK(graph.variables == std::vector<std::string>{"t1", "t2", "t3", "t4"});
  CHECK(parse_spec(render_spec(graph)) == graph);

  // Omitted order defaults to grevlex; asserted flags survive the round trip.
  ProblemSpec asserted = parse_spec(R"({
    "field": 5,
    "variables": ["x", "y"],
    "generators": ["x^2 - y^2"],
    "assert": {"unmixed": true, "radical": true, "linear_primes": true}
  })");
  CHECK(asserted.order == "grevlex");
  CHECK(asserted.asserted.unmixed);
  CHECK(asserted.asserted.radical);
  CHECK(asserted.asserted.linear_primes);
  CHECK(parse_spec(render_spec(asserted)) == asserted);

  // Explicit names on a graph input are kept as given.
  ProblemSpec named = parse_spec(R"({
    "field": 2,
    "variables": ["a", "b"],
    "graph": {"vertices": 2, "edges": [[1, 2]]}
  })");
  CHECK(named.variables == std::vector<std::string>{"a", "b"});
  CHECK(parse_spec(render_spec(named)) == named);
}

TEST_CASE("schema violations name the offending path") {
  auto bad = [](const char* text) { return parse_spec(text); };

  CHECK_THROWS_AS(bad("not json at all"), InputError);
  try {
    bad("not json at all");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("not well-formed JSON") == 0);
  }
  CHECK_THROWS_WITH_AS(bad("[1, 2]"), "top level: expected an object, got an array",
                       InputError);
  CHECK_THROWS_WITH_AS(bad(R"({"field": 2, "bogus": 1})"), "bogus: unknown key",
                       InputError);
  CHECK_THROWS_WITH_AS(bad(R"({"variables": ["x"], "generators": ["x"]})"),
                       "field: missing", InputError);
  CHECK_THROWS_WITH_AS(bad(R"({"field": "2"})"),
                       "field: expected an integer, got a string", InputError);
  CHECK_THROWS_WITH_AS(bad(R"({"field": 2.5})"),
                       "field: expected an integer, got a fractional number",
                       InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 4, "variables": ["x"], "generators": ["x"]})"),
      "field: 4 is not a prime below 2^31", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 2, "variables": ["x"]})"),
      "exactly one of \"generators\", \"primes\", \"graph\" must be given",
      InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 2, "variables": ["x"], "generators": ["x"],
              "graph": {"vertices": 1, "edges": [[1, 1]]}})"),
      "exactly one of \"generators\", \"primes\", \"graph\" must be given",
      InputError);
  CHECK_THROWS_WITH_AS(bad(R"({"field": 2, "graph": {"vertices": 1, "edges": []}})"),
                       "graph.edges: at least one edge is required", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 2, "variables": ["x", "x"], "generators": ["x"]})"),
      "variables[1]: duplicate name \"x\"", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 2, "variables": ["2x"], "generators": ["2x"]})"),
      "variables[0]: \"2x\" is not an identifier", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 2, "variables": ["x"], "order": "weird",
              "generators": ["x"]})"),
      "order: unknown order \"weird\" (expected lex, grlex, or grevlex)",
      InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 2, "variables": ["x"], "generators": []})"),
      "generators: expected a nonempty array", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 2, "variables": ["x"], "generators": ["x", 7]})"),
      "generators[1]: expected a string, got a number", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 2, "variables": ["x"], "generators": [""]})"),
      "generators[0]: empty string", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 2, "variables": ["x"], "primes": ["x"]})"),
      "primes[0]: expected a nonempty array of linear forms", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 2, "variables": ["x"], "primes": [["x", true]]})"),
      "primes[0][1]: expected a string, got a boolean", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 2, "variables": ["x"], "generators": ["x"],
              "assert": {"unmixed": 1}})"),
      "assert.unmixed: expected a boolean, got a number", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 2, "variables": ["x"], "generators": ["x"],
              "assert": {"foo": true}})"),
      "assert.foo: unknown key", InputError);
}

TEST_CASE("graph schema violations name the offending path") {
  auto bad = [](const char* text) { return parse_spec(text); };

  CHECK_THROWS_WITH_AS(bad(R"({"field": 2, "graph": [1]})"),
                       "graph: expected an object, got an array", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 2, "graph": {"vertices": 2, "edges": [[1, 2]],
              "color": "red"}})"),
      "graph.color: unknown key", InputError);
  CHECK_THROWS_WITH_AS(bad(R"({"field": 2, "graph": {"edges": [[1, 2]]}})"),
                       "graph.vertices: missing", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 2, "variables": ["x"],
              "graph": {"vertices": 0, "edges": [[1, 2]]}})"),
      "graph.vertices: expected an integer in [1, 64], got 0", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 2, "graph": {"vertices": 2, "edges": [[1, 2, 3]]}})"),
      "graph.edges[0]: expected a pair [u, v]", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 2, "graph": {"vertices": 2, "edges": [[1, 2], [1, "2"]]}})"),
      "graph.edges[1][1]: expected an integer, got a string", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 2, "graph": {"vertices": 4, "edges": [[1, 5]]}})"),
      "graph.edges[0]: vertex out of range [1, 4]", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 2, "graph": {"vertices": 4, "edges": [[2, 2]]}})"),
      "graph.edges[0]: loop at vertex 2", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 2, "graph": {"vertices": 4,
              "edges": [[1, 2], [3, 4], [2, 1]]}})"),
      "graph.edges[2]: duplicate edge", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 2, "variables": ["a", "b"],
              "graph": {"vertices": 3, "edges": [[1, 2]]}})"),
      "variables: expected one name per vertex (3), got 2", InputError);
}

TEST_CASE("polynomial parser accepts the documented grammar") {
  PrimeField f7(7);
  std::vector<std::string> vars{"t1", "t2", "t3"};
  MonomialOrder order = grevlex_order();
  auto parse = [&](const std::string& text) {
    return parse_polynomial(text, f7, vars, order);
  };
  auto term = [&](std::vector<int> e, long long c) {
    return Term{Monomial(std::move(e)), f7.reduce(c)};
  };

  Polynomial expected = Polynomial::from_terms(
      f7, 3, order, {term({2, 1, 0}, 1), term({0, 0, 3}, -3), term({1, 1, 1}, 2)});
  CHECK(parse("t1^2*t2 - 3*t3^3 + 2*t1*t2*t3").equals(expected));
  // Whitespace is insignificant.
  CHECK(parse(" t1 ^ 2 * t2  -  3 * t3 ^ 3 + 2*t1*t2*t3 ").equals(expected));

  // Leading sign, coefficient products, repeated variables, zero exponents.
  CHECK(parse("-t1 + t2").equals(
      Polynomial::from_terms(f7, 3, order, {term({1, 0, 0}, -1), term({0, 1, 0}, 1)})));
  CHECK(parse("2*3*t1").equals(
      Polynomial::from_terms(f7, 3, order, {term({1, 0, 0}, 6)})));
  CHECK(parse("t1*t1*t1").equals(
      Polynomial::from_terms(f7, 3, order, {term({3, 0, 0}, 1)})));
  CHECK(parse("t1^0*t2").equals(
      Polynomial::from_terms(f7, 3, order, {term({0, 1, 0}, 1)})));
  CHECK(parse("7*t1").is_zero());
  CHECK(parse("0").is_zero());
  CHECK(parse("0*t1 + t2").equals(
      Polynomial::from_terms(f7, 3, order, {term({0, 1, 0}, 1)})));
  CHECK(parse("9").equals(Polynomial::constant(f7, 3, order, 2)));
  // Long literals are reduced digit by digit: 10^20 + 3 = 5 (mod 7).
  CHECK(parse("100000000000000000003*t1").equals(
      Polynomial::from_terms(f7, 3, order, {term({1, 0, 0}, 5)})));

  // Names are read greedily, so t10 is one variable, not t1 * 0.
  PrimeField f5(5);
  std::vector<std::string> longer{"t1", "t10"};
  Polynomial p = parse_polynomial("t10*t1", f5, longer, order);
  CHECK(p.equals(Polynomial::from_terms(f5, 2, order,
                                        {Term{Monomial({1, 1}), 1}})));
  std::vector<std::string> scored{"x_1", "y"};
  Polynomial q = parse_polynomial("x_1^2*y", f5, scored, order);
  CHECK(q.equals(Polynomial::from_terms(f5, 2, order,
                                        {Term{Monomial({2, 1}), 1}})));
}

TEST_CASE("polynomial parse errors report one-based positions") {
  PrimeField f7(7);
  std::vector<std::string> vars{"t1", "t2", "t3"};
  MonomialOrder order = grevlex_order();
  auto parse = [&](const std::string& text, const std::string& where = "polynomial") {
    return parse_polynomial(text, f7, vars, order, where);
  };

  CHECK_THROWS_WITH_AS(parse(""),
                       "polynomial: parse error at position 1: empty polynomial",
                       InputError);
  CHECK_THROWS_WITH_AS(parse("   "),
                       "polynomial: parse error at position 4: empty polynomial",
                       InputError);
  CHECK_THROWS_WITH_AS(parse("", "generators[0]"),
                       "generators[0]: parse error at position 1: empty polynomial",
                       InputError);
  CHECK_THROWS_WITH_AS(
      parse("t9"), "polynomial: parse error at position 1: unknown variable \"t9\"",
      InputError);
  CHECK_THROWS_WITH_AS(
      parse("t1 + t9"),
      "polynomial: parse error at position 6: unknown variable \"t9\"", InputError);
  CHECK_THROWS_WITH_AS(parse("t1^"),
                       "polynomial: parse error at position 4: expected an exponent",
                       InputError);
  CHECK_THROWS_WITH_AS(parse("t1^x"),
                       "polynomial: parse error at position 4: expected an exponent",
                       InputError);
  CHECK_THROWS_WITH_AS(
      parse("t1++t2"),
      "polynomial: parse error at position 4: unexpected character '+'", InputError);
  CHECK_THROWS_WITH_AS(
      parse("t1*"),
      "polynomial: parse error at position 4: expected a coefficient or variable",
      InputError);
  CHECK_THROWS_WITH_AS(
      parse("@"), "polynomial: parse error at position 1: unexpected character '@'",
      InputError);
  try {
    parse("t1^99999999");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("exponent too large") != std::string::npos);
  }
}

TEST_CASE("materialize builds the generators route") {
  Problem prob = problem_of(kBinomialDoc);
  CHECK(prob.order == grevlex_order());
  CHECK(prob.ideal.generators().size() == 3);
  CHECK(!prob.graph.has_value());
  CHECK(prob.prime_forms.empty());
  // Nothing certifiable here: positive dimension, overlapping initial supports.
  CHECK(prob.hypotheses.unmixed == TriState::unknown);
  CHECK(prob.hypotheses.initial_unmixed == TriState::unknown);
  CHECK(prob.hypotheses.radical_linear_primes == TriState::unknown);

  CHECK_THROWS_WITH_AS(
      problem_of(R"({"field": 2, "variables": ["x"], "generators": ["2*x"]})"),
      "generators[0]: the polynomial is zero over F_2", InputError);
  CHECK_THROWS_WITH_AS(
      problem_of(R"({"field": 2, "variables": ["x"], "generators": ["x + 1"]})"),
      "generators[0]: not homogeneous; only graded ideals are supported",
      InputError);
}

TEST_CASE("materialize builds the primes route with certificates") {
  Problem prob = problem_of(kFivePointsDoc);
  REQUIRE(prob.prime_forms.size() == 5);
  for (const auto& forms : prob.prime_forms) CHECK(forms.size() == 3);
  // Equal heights certify unmixedness; the listing itself certifies radicality.
  CHECK(prob.hypotheses.unmixed == TriState::certified);
  CHECK(prob.hypotheses.radical_linear_primes == TriState::certified);
  CHECK(quotient_degree(initial_ideal(prob.ideal, prob.order)) == 5);

  // Two points in P^2 over F_5: degree 2, one linear form in the initial ideal.
  Problem two = problem_of(R"({
    "field": 5,
    "variables": ["t1", "t2", "t3"],
    "primes": [["t1 - t3", "t2 - 2*t3"], ["t1", "3*t2 - t3"]]
  })");
  CHECK(two.hypotheses.unmixed == TriState::certified);
  CHECK(two.hypotheses.radical_linear_primes == TriState::certified);
  MonomialIdeal init = initial_ideal(two.ideal, two.order);
  CHECK(quotient_degree(init) == 2);
  int linear = 0;
  for (const Monomial& m : init.generators()) linear += m.degree() == 1 ? 1 : 0;
  CHECK(linear == 1);
}

TEST_CASE("materialize rejects degenerate prime lists") {
  auto bad = [](const char* text) { return problem_of(text); };

  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 5, "variables": ["x", "y"],
              "primes": [["x"], ["2*x"]]})"),
      "primes[1]: duplicate of primes[0]", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 5, "variables": ["x", "y"],
              "primes": [["x", "y"], ["x"]]})"),
      "primes[0]: contains primes[1] and is redundant in the intersection",
      InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 5, "variables": ["x", "y"],
              "primes": [["x", "2*x"]]})"),
      "primes[0][1]: linearly dependent on the other forms of this prime",
      InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 5, "variables": ["x", "y"], "primes": [["x^2"]]})"),
      "primes[0][0]: expected a homogeneous linear form", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 3, "variables": ["x", "y"], "primes": [["3*x"]]})"),
      "primes[0][0]: the form is zero over F_3", InputError);
  CHECK_THROWS_WITH_AS(
      bad(R"({"field": 5, "variables": ["x", "y", "z"],
              "primes": [["x", "y"], ["z"]], "assert": {"unmixed": true}})"),
      "unmixedness was asserted but the listed primes have different heights",
      InputError);

  // Different heights without the assertion: allowed, but unmixedness stays open.
  Problem mixed = problem_of(R"({
    "field": 5,
    "variables": ["x", "y", "z"],
    "primes": [["x", "y"], ["z"]]
  })");
  CHECK(mixed.hypotheses.unmixed == TriState::unknown);
  CHECK(mixed.hypotheses.radical_linear_primes == TriState::certified);
}

TEST_CASE("materialize builds the graph route") {
  Problem prob = problem_of(kPathDoc);
  REQUIRE(prob.graph.has_value());
  CHECK(prob.spec.variables == std::vector<std::string>{"t1", "t2", "t3", "t4"});
  CHECK(prob.ideal.generators().size() == 3);
  // The path is unmixed and squarefree, so every certificate transfers.
  CHECK(prob.hypotheses.unmixed == TriState::certified);
  CHECK(prob.hypotheses.initial_unmixed == TriState::certified);
  CHECK(prob.hypotheses.radical_linear_primes == TriState::certified);

  // Hand-built specs go through the same normalization as parsed ones.
  ProblemSpec raw;
  raw.field = 2;
  raw.order = "";
  raw.graph = GraphSpec{3, {{1, 2}, {2, 3}}};
  Problem norm = materialize(raw);
  CHECK(norm.spec.order == "grevlex");
  CHECK(norm.spec.variables == std::vector<std::string>{"t1", "t2", "t3"});

  ProblemSpec invalid = raw;
  invalid.field = 6;
  CHECK_THROWS_WITH_AS(materialize(invalid), "field: 6 is not a prime below 2^31",
                       InputError);
}

TEST_CASE("table command renders the worked example") {
  Problem prob = problem_of(kBinomialDoc);
  RunFlags flags;
  flags.max_d = 3;
  Report r = run_command("table", prob, flags);
  CHECK(r.text ==
        "deg(S/I) = 7   dim(S/I) = 1   regularity index = 3\n"
        " d | H | delta | fp | vasconcelos\n"
        " 1 | 3 |     4 |  4 |           4\n"
        " 2 | 6 |     2 |  1 |           2\n"
        " 3 | 7 |     1 |  1 |           1\n");
  CHECK(r.data["command"] == "table");
  CHECK(r.data["degree"] == 7);
  CHECK(r.data["dimension"] == 1);
  CHECK(r.data["regularity_index"] == 3);
  REQUIRE(r.data["rows"].size() == 3);
  CHECK(r.data["rows"][0]["d"] == 1);
  CHECK(r.data["rows"][0]["H"] == 3);
  CHECK(r.data["rows"][0]["delta"] == 4);
  CHECK(r.data["rows"][0]["fp"] == 4);
  CHECK(r.data["rows"][0]["vasconcelos"] == 4);
  CHECK(r.data["rows"][0]["delta_over_budget"] == false);
  CHECK(r.data["rows"][2]["delta"] == 1);
  CHECK(r.data["rows"][2]["fp"] == 1);

  Json prov = r.data["provenance"];
  CHECK(prov["field"] == 2);
  CHECK(prov["order"] == "grevlex");
  CHECK(prov["budget"] == (1LL << 24));
  CHECK(prov["prune"] == true);
  CHECK(prov["path"] == "fast");
  CHECK(prov["parallel"] == true);

  RunFlags with_d;
  with_d.d = 2;
  CHECK_THROWS_WITH_AS(run_command("table", prob, with_d),
                       "table: use --max-d (the table always starts at d = 1)",
                       InputError);
}

TEST_CASE("table marks budget overflow per cell") {
  Problem prob = problem_of(kBinomialDoc);
  RunFlags flags;
  flags.max_d = 2;
  flags.budget = 3;
  Report r = run_command("table", prob, flags);
  CHECK(r.text ==
        "deg(S/I) = 7   dim(S/I) = 1   regularity index = 3\n"
        " d | H | delta | fp | vasconcelos\n"
        " 1 | 3 |  over |  4 |        over\n"
        " 2 | 6 |  over |  1 |        over\n"
        "over = candidate budget exceeded (q^H(d) - 1 > budget); raise --budget\n");
  CHECK(r.data["rows"][0]["delta"].is_null());
  CHECK(r.data["rows"][0]["vasconcelos"].is_null());
  CHECK(r.data["rows"][0]["fp"] == 4);
  CHECK(r.data["rows"][0]["delta_over_budget"] == true);
  CHECK(r.data["rows"][0]["vasconcelos_over_budget"] == true);
  CHECK(r.data["rows"][1]["fp"] == 1);
  CHECK(r.data["provenance"]["budget"] == 3);
}

TEST_CASE("value commands take a degree or a range") {
  Problem binomial = problem_of(kBinomialDoc);
  Problem five = problem_of(kFivePointsDoc);

  RunFlags range;
  range.max_d = 2;
  Report d2 = run_command("delta", binomial, range);
  CHECK(d2.text == "delta(1) = 4\ndelta(2) = 2\n");
  CHECK(d2.data["command"] == "delta");
  REQUIRE(d2.data["values"].size() == 2);
  CHECK(d2.data["values"][0]["d"] == 1);
  CHECK(d2.data["values"][0]["value"] == 4);
  CHECK(d2.data["values"][1]["value"] == 2);

  RunFlags one;
  one.d = 1;
  Report f1 = run_command("fp", five, one);
  CHECK(f1.text == "fp(1) = 0\n");
  CHECK(f1.data["values"][0]["value"] == 0);
  Report v1 = run_command("vasconcelos", binomial, one);
  CHECK(v1.text == "vasconcelos(1) = 4\n");

  RunFlags both;
  both.d = 1;
  both.max_d = 2;
  CHECK_THROWS_WITH_AS(run_command("delta", binomial, both),
                       "delta: give -d or --max-d, not both", InputError);
  CHECK_THROWS_WITH_AS(run_command("delta", binomial, RunFlags{}),
                       "delta: give -d N or --max-d N", InputError);
  RunFlags zero;
  zero.d = 0;
  CHECK_THROWS_WITH_AS(run_command("delta", binomial, zero),
                       "delta: d must be at least 1", InputError);
  RunFlags low;
  low.max_d = 0;
  CHECK_THROWS_WITH_AS(run_command("fp", binomial, low),
                       "fp: max-d must be at least 1", InputError);

  RunFlags bad_budget;
  bad_budget.budget = 0;
  CHECK_THROWS_WITH_AS(run_command("gb", binomial, bad_budget),
                       "budget: expected an integer in [1, 2^62]", InputError);
}

TEST_CASE("gb and initial and hilbert commands") {
  Problem binomial = problem_of(kBinomialDoc);
  Problem five = problem_of(kFivePointsDoc);
  RunFlags flags;

  Report gb = run_command("gb", binomial, flags);
  CHECK(gb.text ==
        "reduced Groebner basis (grevlex), 3 elements:\n"
        "  t1^2*t2 + t1*t2^2\n"
        "  t1^2*t3 + t1*t3^2\n"
        "  t2^2*t3 + t2*t3^2\n");
  REQUIRE(gb.data["basis"].size() == 3);
  // Every rendered element reparses to the library object it came from.
  const GroebnerBasis& basis = binomial.ideal.groebner(binomial.order);
  for (size_t i = 0; i < basis.elements().size(); ++i) {
    Polynomial back = reparse(binomial, gb.data["basis"][i].get<std::string>());
    CHECK(back.equals(basis.elements()[i]));
  }

  Report init = run_command("initial", five, flags);
  CHECK(init.text ==
        "initial ideal (grevlex), 7 generators:\n"
        "  t2^2*t3\n"
        "  t2^2*t4\n"
        "  t1^2\n"
        "  t1*t2\n"
        "  t1*t3\n"
        "  t1*t4\n"
        "  t3*t4\n");
  CHECK(init.data["generators"].size() == 7);

  Report hil = run_command("hilbert", five, flags);
  CHECK(hil.text ==
        "deg(S/I) = 5\n"
        "dim(S/I) = 1\n"
        "a-invariant = 1\n"
        "regularity index = 2\n"
        "h(x) = 1 + 3*x + x^2\n");
  CHECK(hil.data["degree"] == 5);
  CHECK(hil.data["dimension"] == 1);
  CHECK(hil.data["a_invariant"] == 1);
  CHECK(hil.data["regularity_index"] == 2);
  CHECK(hil.data["h"] == Json::array({"1", "3", "1"}));
}

TEST_CASE("edge ideal command reports covers and mixedness") {
  Problem prob = problem_of(kPathDoc);
  RunFlags flags;
  Report r = run_command("edge-ideal", prob, flags);
  CHECK(r.text ==
        "edge ideal: (t1*t2, t2*t3, t3*t4)\n"
        "minimal vertex covers: 3\n"
        "  {t1, t3}\n"
        "  {t2, t3}\n"
        "  {t2, t4}\n"
        "unmixed: yes\n"
        "induced matching number: 1\n");
  CHECK(r.data["generators"] == Json::array({"t1*t2", "t2*t3", "t3*t4"}));
  CHECK(r.data["cover_count"] == 3);
  CHECK(r.data["covers"] ==
        Json::array({Json::array({"t1", "t3"}), Json::array({"t2", "t3"}),
                     Json::array({"t2", "t4"})}));
  CHECK(r.data["unmixed"] == "yes");
  CHECK(r.data["induced_matching"] == 1);

  Problem gens = problem_of(kBinomialDoc);
  CHECK_THROWS_WITH_AS(run_command("edge-ideal", gens, flags),
                       "edge-ideal: the input document has no graph", InputError);
}

TEST_CASE("witness command constructs and checks the monomial") {
  RunFlags flags;
  Problem path = problem_of(kPathDoc);
  Report r = run_command("witness", path, flags);
  CHECK(r.data["x"] == Json::array({"t3", "t1"}));
  CHECK(r.data["y"] == Json::array({"t4", "t2"}));
  CHECK(r.data["monomial"] == "t3");
  CHECK(r.data["witness_degree"] == 1);
  CHECK(r.data["colon_degree"] == 1);
  CHECK(r.data["induced_matching"] == 1);
  CHECK(r.data["delta_reaches_one_at"] == 1);
  CHECK(r.text.find("witness monomial: t3 (degree 1)") != std::string::npos);
  CHECK(r.text.find("deg(S/(I : witness)) = 1") != std::string::npos);

  // Whiskered path: the search may return a labeling whose greedy neighborhoods
  // overlap; the witness still has colon degree 1.
  Problem whisker = problem_of(R"({
    "field": 2,
    "graph": {"vertices": 6, "edges": [[1, 2], [2, 3], [1, 4], [2, 5], [3, 6]]}
  })");
  Report w = run_command("witness", whisker, flags);
  CHECK(w.data["monomial"] == "t1*t3");
  CHECK(w.data["witness_degree"] == 2);
  CHECK(w.data["colon_degree"] == 1);
  CHECK(w.data["induced_matching"] == 2);
  CHECK(w.data["delta_reaches_one_at"] == 1);

  Problem square = problem_of(R"({
    "field": 2,
    "graph": {"vertices": 4, "edges": [[1, 2], [2, 3], [3, 4], [4, 1]]}
  })");
  CHECK_THROWS_WITH_AS(
      run_command("witness", square, flags),
      "witness: the graph admits no Cohen-Macaulay bipartite labeling", InputError);

  Problem gens = problem_of(kBinomialDoc);
  CHECK_THROWS_WITH_AS(run_command("witness", gens, flags),
                       "witness: the input document has no graph", InputError);
}

TEST_CASE("command dispatch rejects unknown names") {
  Problem prob = problem_of(kBinomialDoc);
  RunFlags flags;
  CHECK_THROWS_WITH_AS(run_command("frobnicate", prob, flags),
                       "unknown command \"frobnicate\"", InputError);
  CHECK_THROWS_WITH_AS(run_command("ci", prob, flags),
                       "ci: takes --degrees, not an input document", InputError);
}

TEST_CASE("ci command evaluates the closed formulas") {
  RunFlags flags;
  flags.max_d = 4;
  Report r = run_ci({3, 2}, flags);
  CHECK(r.text ==
        "deg(S/I) = 6\n"
        "reg(S/I) = 3\n"
        "delta(1) = fp(1) = 3\n"
        "delta(2) = fp(2) = 2\n"
        "delta(3) = fp(3) = 1\n"
        "delta(4) = fp(4) = 1\n");
  CHECK(r.data["degrees"] == Json::array({2, 3}));
  CHECK(r.data["degree"] == 6);
  CHECK(r.data["regularity"] == 3);
  REQUIRE(r.data["values"].size() == 4);
  CHECK(r.data["values"][0]["value"] == 3);
  CHECK(r.data["values"][3]["value"] == 1);
  CHECK(r.data["provenance"]["route"] == "closed-formula");

  RunFlags one;
  one.d = 2;
  Report single = run_ci({2, 2, 4}, one);
  CHECK(single.data["values"][0]["value"] == 4);

  RunFlags zero;
  zero.d = 0;
  CHECK_THROWS_WITH_AS(run_ci({2, 2}, zero), "ci: d must be at least 1", InputError);
  CHECK_THROWS_AS(run_ci({0, 2}, one), InputError);
}

TEST_CASE("exit codes partition the error taxonomy") {
  CHECK(exit_code_for(BudgetError("over", 4, "80")) == exit_budget);
  CHECK(exit_code_for(InconclusiveError("cap", 16)) == exit_budget);
  CHECK(exit_code_for(InternalError("bug")) == exit_other);
  CHECK(exit_code_for(InputError("bad")) == exit_input);
  CHECK(exit_code_for(DimensionError("len")) == exit_input);
  CHECK(exit_code_for(RingMismatchError("ring")) == exit_input);
  CHECK(exit_code_for(ZeroIdealError("zero")) == exit_input);
  CHECK(exit_code_for(SizeGuardError("big")) == exit_input);
  CHECK(exit_code_for(UnmixednessUnknownError("open")) == exit_input);
  CHECK(exit_code_for(std::runtime_error("plain")) == exit_other);
}
