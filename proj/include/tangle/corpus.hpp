#pragma once

// Test corpus: braid closures of small named links, all colorings of each,
// singular variants, and seeded random braid diagrams. Braid closures are
// planar by construction.

#include <cstdint>
#include <string>
#include <vector>

#include "tangle/diagram.hpp"

namespace tangle {

/// Deterministic RNG wrapper (same stream on every platform).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform-ish integer in [0, n).
  int below(int n);
  bool chance(int numerator, int denominator) { return below(denominator) < numerator; }

 private:
  std::uint64_t state_;
};

/// Closure of a braid word on `strands` strands. Letter k > 0 is sigma_k
/// (positive crossing between positions k-1 and k), k < 0 its inverse.
/// Strands that no letter touches become free loops.
Diagram braid_closure(int strands, const std::vector<int>& word);

/// The same picture with one component's orientation reversed. Crossing
/// signs follow from the geometry (the over strand stays over).
Diagram reverse_component(const Diagram& d, int component);

struct NamedLink {
  std::string name;
  int strands;
  std::vector<int> word;
  Diagram diagram() const { return braid_closure(strands, word); }
};

/// Small knots and links used throughout the tests and the CLI.
const std::vector<NamedLink>& named_links();
/// Throws std::out_of_range for unknown names.
const NamedLink& named_link(const std::string& name);

/// All set partitions of k components as restricted growth strings.
std::vector<Coloration> all_colorations(int k);

struct CorpusEntry {
  std::string name;
  ColoredDiagram diagram;
  int classical = 0;
  int singular = 0;
};

/// Every named link with at most `max_crossings` crossings, under every
/// coloring of its components.
std::vector<CorpusEntry> classical_corpus(int max_crossings);

/// Singular variants: for each named link, each choice of up to
/// `max_vertices` crossings turned singular (coloring: all distinct, and all
/// one color), keeping at most `max_classical` classical crossings.
std::vector<CorpusEntry> singular_corpus(int max_vertices, int max_classical);

/// Vertex-only graphs: named links (and random braids) with every crossing
/// made singular, at most `max_vertices` vertices, under every coloring.
std::vector<CorpusEntry> graph_corpus(int max_vertices);

/// Every orientation of the diagram's components, the given one first
/// (components reversed by subsets; free loops are left alone).
std::vector<Diagram> all_orientations(const Diagram& d);

/// Random braid closure: `strands` strands, `length` letters, each letter
/// singular with probability singular_percent/100, random coloring.
CorpusEntry random_diagram(Rng& rng, int strands, int length, int singular_percent);

}  // namespace tangle
