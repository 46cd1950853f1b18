#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mindist/graph.hpp"
#include "mindist/invariants.hpp"

namespace mindist {

using Json = nlohmann::ordered_json;

struct GraphSpec {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // 1-based, as given

  bool operator==(const GraphSpec&) const = default;
};

// Parsed problem document: one ring, one ideal source (exactly one of
// generators / primes / graph).  Normalized: the order name is always present
// and variables are filled in (graph input defaults them to t1..tn).
struct ProblemSpec {
  long long field = 0;
  std::vector<std::string> variables;
  std::string order = "grevlex";
  std::vector<std::string> generators;
  std::vector<std::vector<std::string>> primes;
  std::optional<GraphSpec> graph;
  AssertedFlags asserted;

  bool operator==(const ProblemSpec&) const = default;
};

// Schema violations carry the JSON path of the offending value, e.g.
// "primes[2][0]: expected a string".  Round trip: parse_spec(render_spec(s)) == s.
ProblemSpec parse_spec(const std::string& text);
std::string render_spec(const ProblemSpec& spec);

// Polynomial text: terms joined by + or -, each a product of integer literals
// and variable powers joined by '*', exponents written with '^'.  Whitespace is
// insignificant.  `where` prefixes error messages.
Polynomial parse_polynomial(const std::string& text, const PrimeField& field,
                            const std::vector<std::string>& variables,
                            const MonomialOrder& order,
                            const std::string& where = "polynomial");

// The problem document turned into objects: the ideal, the hypotheses that
// certification plus input provenance support, and the source-specific extras.
struct Problem {
  ProblemSpec spec;
  MonomialOrder order;
  Ideal ideal;
  Hypotheses hypotheses;
  // Primes input: the validated linear generators of each prime, for the
  // degree-by-counting route.
  std::vector<std::vector<Polynomial>> prime_forms;
  std::optional<Graph> graph;
};

// Provenance upgrades beyond certify(): a list of pairwise-incomparable linear
// primes certifies radicality and, when their heights agree, unmixedness; a graph
// yields a squarefree edge ideal with the cover check.
Problem materialize(const ProblemSpec& spec);

struct RunFlags {
  std::optional<int> d;
  std::optional<int> max_d;
  std::optional<long long> budget;
  bool no_prune = false;
  EnginePath path = EnginePath::fast;
  bool parallel = true;
};

struct Report {
  std::string text;  // human-readable, newline-terminated
  Json data;         // stable-keyed, includes provenance
};

// commands: gb | initial | hilbert | fp | delta | vasconcelos | table |
// edge-ideal | witness.  `table` uses max_d (default 3); fp/delta/vasconcelos
// take d or max_d.  Errors propagate as the library's exception types.
Report run_command(const std::string& command, const Problem& problem,
                   const RunFlags& flags);

// The closed-formula command; no input document.  Reports the value at d (or a
// table up to max_d) together with degree and regularity.
Report run_ci(const std::vector<int>& degrees, const RunFlags& flags);

// Process exit codes: input-shaped failures map to 2, resource bounds
// (candidate budget, search caps) to 3, everything else to 1.
inline constexpr int exit_ok = 0;
inline constexpr int exit_other = 1;
inline constexpr int exit_input = 2;
inline constexpr int exit_budget = 3;

int exit_code_for(const std::exception& error);

}  // namespace mindist
