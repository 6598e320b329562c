#pragma once

// Local linear rewrites shared by the graph calculus and the skein engine.

#include <string>
#include <unordered_map>
#include <vector>

#include "tangle/algebra.hpp"
#include "tangle/diagram.hpp"

namespace tangle {

struct WeightedDiagram {
  Rational weight;
  ColoredDiagram diagram;
};
using Terms = std::vector<WeightedDiagram>;

/// Classical crossing as vertices and a smoothing:
///   X+ = -w/(t+1) [smooth, merged] - w/(t+1) [vertex, merged] + w [vertex, kept]
///   X- = -t/(w(t+1)) [smooth, merged] - t/(w(t+1)) [vertex, merged] + 1/w [vertex, kept]
/// Throws DiagramError on a singular node.
Terms expand_crossing(const ColoredDiagram& d, int n);

enum class Resolution { Rel1, Rel2 };

/// Singular vertex in terms of crossings:
///   Rel1: V = 1/w [X+, kept] + 1/t [smooth, merged] + 1/(tw) [X+, merged]
///   Rel2: V = w [X-, kept] + t [smooth, merged] + tw [X-, merged]
/// Throws DiagramError on a classical node.
Terms resolve_singular(const ColoredDiagram& d, int n, Resolution r);

/// Coefficients (kept crossing, smoothing, merged crossing) of a resolution.
struct ResolutionCoefficients {
  Rational kept, smooth, merged;
  NodeKind sign;
};
ResolutionCoefficients resolution_coefficients(Resolution r);

/// Terms sharing a canonical form are combined; zero weights are dropped.
class LinearCombination {
 public:
  void add(const Rational& weight, ColoredDiagram d);
  void add(const Terms& terms, const Rational& scale = Rational(1));
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  /// Materializes the combined terms (zero weights removed).
  Terms collected() const;

 private:
  Terms terms_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace tangle
