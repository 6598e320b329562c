#pragma once

// Property suites shared by the `verify` command and the acceptance binary.
// Every suite is deterministic for a given seed.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tangle/algebra.hpp"

namespace tangle {

struct VerifyOptions {
  int max_crossings = 6;
  std::uint64_t seed = 1;
  int relation_sites = 200;
  int move_triples = 500;
};

struct Failure {
  std::string what;
  std::string diagram;  // replayable input text
};

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<Failure> failures;
  /// Case labels (move variants, relation names, ...) and how often they ran.
  std::map<std::string, int> coverage;
  /// Values that were produced and range-checked.
  int values_checked = 0;
  int values_outside = 0;
  double seconds = 0;
  std::vector<std::string> notes;

  bool ok() const { return failed == 0 && values_outside == 0; }
  void check(bool ok, const std::string& what, const std::string& diagram = {});
  /// Range check: value must lie in Q(x, t, w).
  void note_value(const Rational& v, const std::string& diagram = {});
};

/// Unknot, unlinks under all colorings, circle multiplication.
SuiteResult verify_axioms(const VerifyOptions& o);
/// Skein relations (mixed colors, merged, switch identity) and both vertex
/// resolutions at seeded random sites.
SuiteResult verify_relations(const VerifyOptions& o);
/// Invariance under R1-R5 at seeded (diagram, move, site) triples, plus
/// HOMFLY-PT invariance under R1-R3.
SuiteResult verify_moves(const VerifyOptions& o);
/// State sum versus recursion on every classical corpus diagram.
SuiteResult verify_engines(const VerifyOptions& o);
/// Graph calculus: randomized strategies agree; local relations close up.
SuiteResult verify_confluence(const VerifyOptions& o);
/// HOMFLY-PT values, its skein relation, and the specialization.
SuiteResult verify_homfly(const VerifyOptions& o);
/// Rel1 versus Rel2 resolution of singular vertices.
SuiteResult verify_singular(const VerifyOptions& o);

/// Names accepted by run_suites: moves, relations, oracles, all.
std::vector<SuiteResult> run_suites(const std::string& which, const VerifyOptions& o);

/// Move variant classes that the moves suite must cover.
std::vector<std::string> required_move_variants();

}  // namespace tangle
