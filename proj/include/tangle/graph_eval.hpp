#pragma once

// Evaluation of colored 4-valent planar graphs by local graphical relations:
// curl removal, parallel and anti-parallel bigons, and triangle slides that
// steer the graph toward a bigon. Classical crossings met along the way are
// expanded into vertices first.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "tangle/algebra.hpp"
#include "tangle/corpus.hpp"
#include "tangle/moves.hpp"
#include "tangle/relations.hpp"

namespace tangle {

/// Value of a crossingless unlink given the number of circles in each color
/// class: (1/(wx))^(c-1) * DELTA_SAME^(n-c). Throws on an empty multiset.
Rational unlink_value(const std::vector<int>& circles_per_class);

enum class SiteKind { None, Loop, BigonParallel, BigonAntiparallel, Triangle };
const char* site_name(SiteKind k);

struct ReducibleSite {
  SiteKind kind = SiteKind::None;
  int node = -1;           // Loop
  BigonSite bigon;         // bigons
  TriangleSite triangle;   // Triangle: first slide of a shortest path to a bigon
};

/// Thrown when the triangle search exceeds its bound.
class SearchBoundError : public DiagramError {
 public:
  SearchBoundError(const std::string& msg, std::string diagram)
      : DiagramError(msg), diagram_(std::move(diagram)) {}
  const std::string& diagram() const { return diagram_; }

 private:
  std::string diagram_;
};

/// All curl and bigon sites of a vertex-only graph.
std::vector<ReducibleSite> local_sites(const ColoredDiagram& g);

/// A loop or bigon if one exists; otherwise a triangle slide found by
/// breadth-first search; None when the graph has no vertices. The rng (if
/// given) randomizes which site is picked among equally good ones.
ReducibleSite find_reducible(const ColoredDiagram& g, Rng* rng = nullptr);

/// One application of the relation at `site`. Output graphs have fewer
/// vertices, except the slid graph of a triangle site. Classical crossings
/// introduced by the triangle relation are left in place.
Terms reduce_once(const ColoredDiagram& g, const ReducibleSite& site);

/// Memo table keyed by canonical form; safe for concurrent use.
class EvalMemo {
 public:
  bool lookup(const std::string& key, Rational& out) const;
  /// Inserts unless present; returns the stored value.
  Rational insert(const std::string& key, const Rational& value);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Rational> table_;
};

struct EvalOptions {
  /// 0 selects the deterministic strategy; other values seed a randomized
  /// choice of sites, crossings and loops.
  std::uint64_t random_seed = 0;
  /// One line per reduction: digest, rule, coefficients.
  std::ostream* trace = nullptr;
};

/// Evaluates colored diagrams whose classical crossings are expanded into
/// vertex graphs on the fly. Each evaluator owns its memo unless one is shared
/// in; randomized evaluators must not be shared across threads.
class GraphEvaluator {
 public:
  explicit GraphEvaluator(EvalOptions options = {}, std::shared_ptr<EvalMemo> memo = nullptr);

  Rational evaluate(const ColoredDiagram& d);
  const EvalMemo& memo() const { return *memo_; }

 private:
  Rational evaluate_uncached(const ColoredDiagram& d);

  EvalOptions options_;
  std::unique_ptr<Rng> rng_;
  std::shared_ptr<EvalMemo> memo_;
};

/// Deterministic evaluation with a process-wide memo.
Rational evaluate_graph(const ColoredDiagram& g);

}  // namespace tangle
