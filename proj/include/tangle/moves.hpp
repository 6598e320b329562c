#pragma once

// Extended Reidemeister moves R1-R5 on colored diagrams, applied at explicit
// sites, plus the triangle slide shared by R3, R4 and the graph calculus.

#include <array>
#include <string>
#include <vector>

#include "tangle/diagram.hpp"

namespace tangle {

/// A triangular face a -> b -> c (darts in face order). The strand along
/// edge ab is the one that moves; u runs through c and a, v through b and c.
struct TriangleSite {
  int a = -1, b = -1, c = -1;
  Dart ab, bc, ca;
};

/// Every triangular face with three distinct nodes, once per choice of
/// moving edge.
std::vector<TriangleSite> triangle_sites(const Diagram& d);

/// Strand index (0 or 1) of the moving strand at a and at b.
int moving_strand_at_a(const Diagram& d, const TriangleSite& t);
int moving_strand_at_b(const Diagram& d, const TriangleSite& t);

/// Pushes the ab strand across node c. The three replacement nodes are
/// appended in the order a', b', c'; all other nodes keep their order.
/// If `moving` is given it receives the moving strand's index at a' and b'.
ColoredDiagram slide_triangle(const ColoredDiagram& d, const TriangleSite& t, std::array<int, 2>* moving = nullptr);

/// Bigon faces: two distinct nodes joined by two arcs bounding a face.
struct BigonSite {
  int a = -1, b = -1;
  int e1 = -1, e2 = -1;  // parallel: both a -> b; antiparallel: e1 a -> b, e2 b -> a
  bool parallel = false;
};
std::vector<BigonSite> bigon_sites(const Diagram& d);

/// Node with a one-arc face (slot 2 -> slot 1 or slot 3 -> slot 0).
std::vector<int> curl_nodes(const Diagram& d);

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3, R4, R5 };
const char* move_name(MoveKind k);

struct Move {
  MoveKind kind = MoveKind::R1Add;
  // R1Add
  int arc = -1;
  NodeKind sign = NodeKind::Positive;
  bool side_b = false;
  // R1Remove
  int node = -1;
  // R2Add: push dart d1 across dart d2
  Dart d1, d2;
  bool over = true;
  // R2Remove / R5
  BigonSite bigon;
  // R3 / R4
  TriangleSite triangle;

  /// Orientation/crossing-type class, used for coverage accounting.
  std::string variant;
  std::string describe() const;
};

/// All sites at which a move applies (deterministic order).
std::vector<Move> enumerate_moves(const Diagram& d);

/// Applies the move; throws DiagramError if the pattern is absent.
ColoredDiagram apply_move(const ColoredDiagram& d, const Move& m);

}  // namespace tangle
