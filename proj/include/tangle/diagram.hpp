#pragma once

// Oriented colored link and singular-link diagrams in an extended PD form.
//
// Every node stores its four arcs counter-clockwise, rotated so that slots 0
// and 1 carry incoming arcs and slots 2 and 3 outgoing ones. The two strands
// through a node are slot 0 -> slot 2 and slot 1 -> slot 3. A classical node
// is Positive when strand 0 is the over-strand and Negative when strand 1 is.
// Arcs are numbered 0..arc_count()-1; crossingless circles ("free loops") own
// one arc each.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tangle {

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input error with a 1-based source position (column 0 when unknown).
class InputError : public DiagramError {
 public:
  InputError(const std::string& msg, std::size_t line, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// Message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

enum class NodeKind : std::uint8_t { Positive, Negative, Singular };

const char* kind_name(NodeKind k);

struct Node {
  NodeKind kind = NodeKind::Singular;
  std::array<int, 4> arcs{};

  bool classical() const { return kind != NodeKind::Singular; }
  /// Incoming slot (0 or 1) of the over-strand; classical nodes only.
  int over_in_slot() const { return kind == NodeKind::Positive ? 0 : 1; }
  friend bool operator==(const Node&, const Node&) = default;
};

/// Builds a normalized node from arcs listed counter-clockwise from any start.
/// `incoming[k]` says whether ccw[k] enters the node. For classical nodes
/// `over_pos` is a ccw position (0..3) on the over-strand, and the sign
/// follows from it.
Node make_node(bool singular, const std::array<int, 4>& ccw, const std::array<bool, 4>& incoming,
               int over_pos = 0);

struct Endpoint {
  int node = -1;
  int slot = -1;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// A side of an arc: forward follows the orientation.
struct Dart {
  int arc = -1;
  bool forward = true;
  friend bool operator==(const Dart&, const Dart&) = default;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

class Diagram {
 public:
  Diagram() = default;
  /// Validates: arcs used are exactly 0..N-1, each with one head and one tail,
  /// or owned by a single free loop; every node has pattern (in, in, out, out).
  Diagram(std::vector<Node> nodes, std::vector<int> loops);

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int n) const { return nodes_.at(static_cast<std::size_t>(n)); }
  const std::vector<int>& loops() const { return loops_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int arc_count() const { return static_cast<int>(head_.size()); }
  int classical_count() const;
  int singular_count() const;
  bool is_loop_arc(int arc) const { return head_.at(static_cast<std::size_t>(arc)).node < 0; }

  /// Where the arc ends (an incoming slot) / starts (an outgoing slot).
  Endpoint head(int arc) const { return head_.at(static_cast<std::size_t>(arc)); }
  Endpoint tail(int arc) const { return tail_.at(static_cast<std::size_t>(arc)); }

  /// Arc continuing the strand after `arc` passes through its head node.
  int next_arc(int arc) const;
  int prev_arc(int arc) const;

  /// Closed strands, each listed in traversal order from its smallest arc;
  /// sorted by that smallest arc. Free loops are singleton components.
  const std::vector<std::vector<int>>& components() const { return components_; }
  int component_of(int arc) const { return component_of_.at(static_cast<std::size_t>(arc)); }

  /// Groups of nodes and loops joined by arcs (the connected pieces of the
  /// underlying 4-valent graph). Each entry lists node ids; loops are pieces
  /// without nodes and are not listed.
  std::vector<std::vector<int>> connected_pieces() const;

  // Faces of the rotation system. Arriving at a node through slot p, the face
  // boundary leaves through slot p+1 (mod 4); the face lies to the right.
  Endpoint arrival(const Dart& d) const { return d.forward ? head(d.arc) : tail(d.arc); }
  Endpoint departure(const Dart& d) const { return d.forward ? tail(d.arc) : head(d.arc); }
  Dart next_in_face(const Dart& d) const;
  /// All faces as dart cycles; a free loop contributes two one-dart faces.
  std::vector<std::vector<Dart>> faces() const;
  /// V - E + F == 2 for every connected piece with at least one node.
  bool is_planar() const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.nodes_ == b.nodes_ && a.loops_ == b.loops_;
  }

 private:
  void build();

  std::vector<Node> nodes_;
  std::vector<int> loops_;
  std::vector<Endpoint> head_;
  std::vector<Endpoint> tail_;
  std::vector<std::vector<int>> components_;
  std::vector<int> component_of_;
};

// ---------------------------------------------------------------------------
// Colors.

/// Union-find over color labels 0..n-1.
class ColorPartition {
 public:
  ColorPartition() = default;
  explicit ColorPartition(int labels);

  int size() const { return static_cast<int>(parent_.size()); }
  int add_label();
  int find(int label) const;
  bool same(int a, int b) const { return find(a) == find(b); }
  /// Unites the classes of a and b; returns the surviving root.
  int merge(int a, int b);
  friend bool operator==(const ColorPartition& a, const ColorPartition& b);

 private:
  std::vector<int> parent_;
};

/// Component -> color label, in the diagram's component order.
using Coloration = std::vector<int>;

/// A diagram whose arcs carry color labels, plus the merge history of those
/// labels. All strand arcs of a component share one color class.
struct ColoredDiagram {
  Diagram diagram;
  std::vector<int> arc_label;
  ColorPartition partition;

  ColoredDiagram() = default;
  ColoredDiagram(Diagram d, const Coloration& c);
  ColoredDiagram(Diagram d, std::vector<int> arc_label, ColorPartition p);

  int color_class(int arc) const { return partition.find(arc_label.at(static_cast<std::size_t>(arc))); }
  /// Class of each component (component order).
  std::vector<int> component_classes() const;
  /// Number of circles per distinct class, ascending.
  std::vector<int> class_multiset() const;
  /// Relabels colors 0..k-1 by first appearance along components and
  /// drops the merge history; semantics unchanged.
  ColoredDiagram compacted() const;
  /// Coloration with labels compacted to first-appearance order.
  Coloration coloration() const;
  /// Unites the classes of two arcs.
  void merge_colors(int arc_a, int arc_b) {
    partition.merge(arc_label.at(static_cast<std::size_t>(arc_a)), arc_label.at(static_cast<std::size_t>(arc_b)));
  }
};

// ---------------------------------------------------------------------------
// Local surgery. Remove nodes, add nodes on existing or fresh arcs, and splice
// arc ends together; finish() rebuilds a compact, validated diagram.

class Surgery {
 public:
  explicit Surgery(const ColoredDiagram& base);

  void remove_node(int n);
  /// Fresh arc carrying the given color label.
  int new_arc(int label);
  void add_node(const Node& n);
  /// The head of arc x continues as arc y (the two become one arc).
  void join(int x, int y);
  void merge_colors(int arc_a, int arc_b);
  ColoredDiagram finish() const;

 private:
  const ColoredDiagram& base_;
  std::vector<bool> removed_;
  std::vector<Node> added_;
  std::vector<int> extra_labels_;
  std::vector<std::pair<int, int>> joins_;
  ColorPartition partition_;
};

// ---------------------------------------------------------------------------
// Local operations used by the skein calculus. All return new values.

/// Replaces node n by its oriented smoothing (slot 0 joins slot 3, slot 1
/// joins slot 2). The smoothing always fuses the two strands, so their color
/// classes are merged. Circles created become free loops.
ColoredDiagram oriented_smoothing(const ColoredDiagram& d, int n);
/// Positive <-> Negative.
ColoredDiagram switch_crossing(const ColoredDiagram& d, int n);
/// Classical -> Singular at the same position.
ColoredDiagram make_singular(const ColoredDiagram& d, int n);
/// Singular -> classical of the given sign.
ColoredDiagram make_classical(const ColoredDiagram& d, int n, NodeKind sign);
/// Merges the color classes of node n's two strands.
ColoredDiagram merge_strand_colors(const ColoredDiagram& d, int n);
/// Adds a free loop with the given label (fresh label when nullopt).
ColoredDiagram add_free_loop(const ColoredDiagram& d, std::optional<int> label);
/// Removes a node whose two strands go straight through (strand 0 continues
/// as itself, strand 1 as itself).
ColoredDiagram remove_straight(const ColoredDiagram& d, const std::vector<int>& nodes);

// ---------------------------------------------------------------------------
// Text and JSON formats.

struct ParsedDiagram {
  Diagram diagram;
  Coloration coloration;
  std::vector<std::string> color_names;  // label -> name from the input
};

/// Lines: `X+ a b c d`, `X- a b c d`, `V a b c d`, `O k`,
/// `color <component-index> <label>`; `#` starts a comment.
ParsedDiagram parse_diagram(std::string_view text);
ParsedDiagram parse_diagram_json(std::string_view text);
/// Dispatches on the first non-blank character (`{` selects JSON).
ParsedDiagram parse_diagram_any(std::string_view text);

std::string print_diagram(const Diagram& d, const Coloration& c);
std::string print_diagram_json(const Diagram& d, const Coloration& c);
std::string print_colored(const ColoredDiagram& d);

}  // namespace tangle
