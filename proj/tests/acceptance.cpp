// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Seed from argv[1], else $TANGLE_SEED, else 1.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "tangle/verify.hpp"

using namespace tangle;

namespace {

int count(const SuiteResult& r, const std::string& key) {
  auto it = r.coverage.find(key);
  return it == r.coverage.end() ? 0 : it->second;
}

int count_prefix(const SuiteResult& r, const std::string& prefix) {
  int n = 0;
  for (const auto& [k, v] : r.coverage)
    if (k.rfind(prefix, 0) == 0) n += v;
  return n;
}

bool all_ok = true;

void line(int id, const std::string& title, bool ok, const std::string& detail, const SuiteResult* r = nullptr) {
  all_ok = all_ok && ok;
  std::cout << (ok ? "PASS" : "FAIL") << "  [" << id << "] " << title << ": " << detail << '\n';
  if (!ok && r)
    for (const auto& f : r->failures) {
      std::cout << "      " << f.what << '\n';
      if (!f.diagram.empty()) std::cout << f.diagram;
    }
}

}  // namespace

int main(int argc, char** argv) {
  VerifyOptions o;
  o.max_crossings = 6;
  if (argc > 1)
    o.seed = std::stoull(argv[1]);
  else if (const char* env = std::getenv("TANGLE_SEED"))
    o.seed = std::stoull(env);
  const auto start = std::chrono::steady_clock::now();

  const SuiteResult axioms = verify_axioms(o);
  line(1, "axiom values (unknot, distinct-color unlinks, circle factor)", axioms.ok(),
       std::to_string(axioms.passed) + " checks, " + std::to_string(axioms.failed) + " failed", &axioms);

  const SuiteResult rel = verify_relations(o);
  const int sites = count(rel, "site: crossing") + count(rel, "site: vertex");
  bool every_relation = true;
  for (const char* name : {"mixed-color skein", "merged skein", "switch identity", "vertex = Rel1", "vertex = Rel2", "Rel1 = Rel2"})
    every_relation = every_relation && count(rel, std::string("relation: ") + name) > 0;
  line(2, "skein and vertex-resolution identities", rel.ok() && sites >= 200 && every_relation,
       std::to_string(sites) + " sites, " + std::to_string(rel.passed) + " identities, " +
           std::to_string(rel.failed) + " failed",
       &rel);

  const SuiteResult moves = verify_moves(o);
  int triples = 0, variants = 0;
  for (const auto& v : required_move_variants()) {
    triples += count(moves, v);
    variants += count(moves, v) > 0;
  }
  const int required = static_cast<int>(required_move_variants().size());
  line(3, "invariance under R1-R5", moves.ok() && triples >= 500 && variants == required,
       std::to_string(triples) + " triples, " + std::to_string(variants) + "/" + std::to_string(required) +
           " variants, " + std::to_string(moves.failed) + " failed",
       &moves);

  const SuiteResult engines = verify_engines(o);
  const int diagrams = count(engines, "diagrams"), multi = count(engines, "multi-colored");
  line(4, "state sum = skein recursion", engines.ok() && diagrams >= 50 && multi > 0,
       std::to_string(diagrams) + " diagrams (" + std::to_string(multi) + " multi-colored), " +
           std::to_string(engines.failed) + " failed",
       &engines);

  const SuiteResult conf = verify_confluence(o);
  const int graphs = count(conf, "graphs<=5 vertices"), closed = count(conf, "closed forms");
  line(5, "graph reduction confluence and closed forms", conf.ok() && graphs > 0 && closed >= 4,
       std::to_string(graphs) + " graphs x 3 randomized strategies, " + std::to_string(closed) +
           " closed forms, " + std::to_string(conf.failed) + " failed",
       &conf);

  const SuiteResult hom = verify_homfly(o);
  line(6, "HOMFLY-PT specialization", hom.ok() && count(hom, "hand values") >= 4 && count(hom, "substitution") > 0,
       std::to_string(count(hom, "substitution")) + " links <= 7 crossings, " +
           std::to_string(count(hom, "hand values")) + " hand values, " + std::to_string(hom.failed) + " failed",
       &hom);

  const SuiteResult sing = verify_singular(o);
  const int singular = count_prefix(sing, "vertices=");
  line(7, "Rel1 = Rel2 on singular diagrams", sing.ok() && singular >= 30,
       std::to_string(singular) + " diagrams, " + std::to_string(sing.failed) + " failed", &sing);

  int checked = 0, outside = 0;
  for (const SuiteResult* r : {&axioms, &rel, &moves, &engines, &conf, &hom, &sing}) {
    checked += r->values_checked;
    outside += r->values_outside;
  }
  line(8, "every value lies in Q(x, t, w)", checked > 0 && outside == 0,
       std::to_string(checked) + " values, " + std::to_string(outside) + " outside");

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (all_ok ? "ALL PASS" : "SOME FAILED") << " (seed " << o.seed << ", " << secs << " s)\n";
  return all_ok ? 0 : 1;
}
