#pragma once

// The invariant of colored classical and singular links, computed two ways:
// a state sum over vertex graphs, and a descending-diagram skein recursion.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tangle/algebra.hpp"
#include "tangle/diagram.hpp"
#include "tangle/relations.hpp"

namespace tangle {

enum class Engine { StateSum, Recursive, Both };

struct EngineOptions {
  /// How the recursion removes singular vertices.
  Resolution resolution = Resolution::Rel1;
  /// Worker threads for evaluating states (state sum only).
  unsigned threads = 1;
  /// Nonzero: randomized reduction strategy in the graph evaluator.
  std::uint64_t random_seed = 0;
  std::ostream* trace = nullptr;
};

class EngineDisagreement : public std::runtime_error {
 public:
  EngineDisagreement(const std::string& diagram, const Rational& state_sum, const Rational& recursive);
  const std::string& diagram() const { return diagram_; }

 private:
  std::string diagram_;
};

/// Expands every classical crossing into vertices; like states combined.
Terms expand_states(const ColoredDiagram& d);

Rational state_sum(const ColoredDiagram& d, const EngineOptions& options = {});

/// Classical recursion. Singular vertices are first resolved with
/// options.resolution.
Rational skein_recursive(const ColoredDiagram& d, const EngineOptions& options = {});

/// Both: runs the two engines and throws EngineDisagreement unless equal.
Rational invariant(const ColoredDiagram& d, Engine engine = Engine::StateSum, const EngineOptions& options = {});

/// First crossing met on its under-strand before its over-strand, walking the
/// components in order (by smallest arc) from their smallest arcs; -1 when
/// the diagram is descending. Classical diagrams only.
int first_bad_crossing(const Diagram& d);

}  // namespace tangle
