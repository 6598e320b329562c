#include "tangle/moves.hpp"

#include <algorithm>
#include <sstream>

namespace tangle {

namespace {

struct Slot {
  int arc;
  bool incoming;
};

int strand_of(int slot) { return slot % 2; }

int over_strand(const Node& n) { return n.kind == NodeKind::Positive ? 0 : 1; }

std::vector<int> arc_labels_with(const ColoredDiagram& d, int extra, int label) {
  std::vector<int> labels = d.arc_label;
  labels.insert(labels.end(), static_cast<std::size_t>(extra), label);
  return labels;
}

Node rebuild(const Node& old, const std::array<Slot, 4>& pos) {
  std::array<int, 4> ccw{};
  std::array<bool, 4> in{};
  for (int k = 0; k < 4; ++k) {
    ccw[static_cast<std::size_t>(k)] = pos[static_cast<std::size_t>(k)].arc;
    in[static_cast<std::size_t>(k)] = pos[static_cast<std::size_t>(k)].incoming;
  }
  return make_node(!old.classical(), ccw, in, old.classical() ? old.over_in_slot() : 0);
}

std::array<Slot, 4> slots_of(const Node& n) {
  return {Slot{n.arcs[0], true}, Slot{n.arcs[1], true}, Slot{n.arcs[2], false}, Slot{n.arcs[3], false}};
}

}  // namespace

std::vector<TriangleSite> triangle_sites(const Diagram& d) {
  std::vector<TriangleSite> out;
  for (const auto& f : d.faces()) {
    if (f.size() != 3 || d.is_loop_arc(f[0].arc)) continue;
    const int n0 = d.departure(f[0]).node, n1 = d.departure(f[1]).node, n2 = d.departure(f[2]).node;
    if (n0 == n1 || n1 == n2 || n0 == n2) continue;
    for (int k = 0; k < 3; ++k) {
      TriangleSite t;
      t.ab = f[static_cast<std::size_t>(k)];
      t.bc = f[static_cast<std::size_t>((k + 1) % 3)];
      t.ca = f[static_cast<std::size_t>((k + 2) % 3)];
      t.a = d.departure(t.ab).node;
      t.b = d.departure(t.bc).node;
      t.c = d.departure(t.ca).node;
      out.push_back(t);
    }
  }
  return out;
}

int moving_strand_at_a(const Diagram& d, const TriangleSite& t) { return strand_of(d.departure(t.ab).slot); }
int moving_strand_at_b(const Diagram& d, const TriangleSite& t) { return strand_of(d.arrival(t.ab).slot); }

ColoredDiagram slide_triangle(const ColoredDiagram& cd, const TriangleSite& t, std::array<int, 2>* moving) {
  const Diagram& d = cd.diagram;
  const Node& A = d.node(t.a);
  const Node& B = d.node(t.b);
  const Node& C = d.node(t.c);
  if (d.departure(t.ab).node != t.a || d.arrival(t.ab).node != t.b || d.departure(t.bc).node != t.b ||
      d.arrival(t.bc).node != t.c || d.departure(t.ca).node != t.c || d.arrival(t.ca).node != t.a)
    throw DiagramError("stale triangle site");

  // Inner slots face the triangle; outer slots are opposite them.
  const int sa = d.departure(t.ab).slot, ua = d.arrival(t.ca).slot;
  const int sb = d.arrival(t.ab).slot, vb = d.departure(t.bc).slot;
  const int vc = d.arrival(t.bc).slot, uc = d.departure(t.ca).slot;
  auto out = [](int inner) { return (inner + 2) % 4; };

  Surgery s(cd);
  const int es = s.new_arc(cd.arc_label[static_cast<std::size_t>(A.arcs[static_cast<std::size_t>(out(sa))])]);
  const int eu = s.new_arc(cd.arc_label[static_cast<std::size_t>(A.arcs[static_cast<std::size_t>(out(ua))])]);
  const int ev = s.new_arc(cd.arc_label[static_cast<std::size_t>(B.arcs[static_cast<std::size_t>(out(vb))])]);

  auto at = [](const Node& n, int slot) { return Slot{n.arcs[static_cast<std::size_t>(slot)], slot < 2}; };
  auto place = [&](std::array<Slot, 4>& pos, int outer, Slot moved, int inner, int fresh) {
    pos[static_cast<std::size_t>(outer)] = moved;
    pos[static_cast<std::size_t>(inner)] = Slot{fresh, !moved.incoming};
  };

  auto pa = slots_of(A), pb = slots_of(B), pc = slots_of(C);
  place(pa, out(sa), at(B, out(sb)), sa, es);
  place(pa, out(ua), at(C, out(uc)), ua, eu);
  place(pb, out(sb), at(A, out(sa)), sb, es);
  place(pb, out(vb), at(C, out(vc)), vb, ev);
  place(pc, out(uc), at(A, out(ua)), uc, eu);
  place(pc, out(vc), at(B, out(vb)), vc, ev);

  s.remove_node(t.a);
  s.remove_node(t.b);
  s.remove_node(t.c);
  const Node na = rebuild(A, pa), nb = rebuild(B, pb);
  if (moving) {
    auto slot_of = [](const Node& n, int arc) {
      return static_cast<int>(std::find(n.arcs.begin(), n.arcs.end(), arc) - n.arcs.begin());
    };
    *moving = {strand_of(slot_of(na, es)), strand_of(slot_of(nb, es))};
  }
  s.add_node(na);
  s.add_node(nb);
  s.add_node(rebuild(C, pc));
  return s.finish();
}

std::vector<BigonSite> bigon_sites(const Diagram& d) {
  std::vector<BigonSite> out;
  for (const auto& f : d.faces()) {
    if (f.size() != 2 || d.is_loop_arc(f[0].arc)) continue;
    const int p = d.departure(f[0]).node, q = d.arrival(f[0]).node;
    if (p == q) continue;
    BigonSite b;
    b.parallel = f[0].forward != f[1].forward;
    if (b.parallel) {
      b.a = f[0].forward ? p : q;
      b.b = f[0].forward ? q : p;
      const Node& A = d.node(b.a);
      b.e1 = A.arcs[3];
      b.e2 = A.arcs[2];
      if (d.head(b.e1) != Endpoint{b.b, 0} || d.head(b.e2) != Endpoint{b.b, 1})
        throw DiagramError("parallel bigon with a non-planar rotation");
    } else {
      b.a = p;
      b.b = q;
      b.e1 = f[0].forward ? f[0].arc : f[1].arc;
      b.e2 = f[0].forward ? f[1].arc : f[0].arc;
    }
    out.push_back(b);
  }
  return out;
}

std::vector<int> curl_nodes(const Diagram& d) {
  std::vector<int> out;
  for (int n = 0; n < d.node_count(); ++n) {
    const Node& node = d.node(n);
    if (node.arcs[2] == node.arcs[1] || node.arcs[3] == node.arcs[0]) out.push_back(n);
  }
  return out;
}

const char* move_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1Add: return "R1+";
    case MoveKind::R1Remove: return "R1-";
    case MoveKind::R2Add: return "R2+";
    case MoveKind::R2Remove: return "R2-";
    case MoveKind::R3: return "R3";
    case MoveKind::R4: return "R4";
    default: return "R5";
  }
}

std::string Move::describe() const {
  std::ostringstream o;
  o << move_name(kind) << '[' << variant << "] ";
  switch (kind) {
    case MoveKind::R1Add: o << "arc " << arc; break;
    case MoveKind::R1Remove: o << "node " << node; break;
    case MoveKind::R2Add:
      o << "dart " << d1.arc << (d1.forward ? "+" : "-") << (over ? " over " : " under ") << "dart " << d2.arc
        << (d2.forward ? "+" : "-");
      break;
    case MoveKind::R2Remove:
    case MoveKind::R5: o << "nodes " << bigon.a << ',' << bigon.b; break;
    default: o << "triangle " << triangle.a << ',' << triangle.b << ',' << triangle.c;
  }
  return o.str();
}

namespace {

bool same_strand_over(const Diagram& d, const BigonSite& b) {
  const Node& A = d.node(b.a);
  const Node& B = d.node(b.b);
  const bool over_a = strand_of(d.tail(b.e1).slot) == over_strand(A);
  const bool over_b = strand_of(d.head(b.e1).slot) == over_strand(B);
  return over_a == over_b;
}

// Over at both a and b, or under at both.
std::optional<bool> triangle_layer(const Diagram& d, const TriangleSite& t) {
  const Node& A = d.node(t.a);
  const Node& B = d.node(t.b);
  if (!A.classical() || !B.classical()) return std::nullopt;
  const bool over_a = moving_strand_at_a(d, t) == over_strand(A);
  const bool over_b = moving_strand_at_b(d, t) == over_strand(B);
  if (over_a != over_b) return std::nullopt;
  return over_a;
}

std::string orientation_bits(const TriangleSite& t) {
  std::string s;
  for (const Dart& x : {t.ab, t.bc, t.ca}) s += x.forward ? 'f' : 'b';
  return s;
}

// Connected piece id per arc (loops are their own pieces).
std::vector<int> arc_pieces(const Diagram& d) {
  std::vector<int> piece(static_cast<std::size_t>(d.arc_count()), -1);
  auto pieces = d.connected_pieces();
  for (std::size_t p = 0; p < pieces.size(); ++p)
    for (int n : pieces[p])
      for (int a : d.node(n).arcs) piece[static_cast<std::size_t>(a)] = static_cast<int>(p);
  int next = static_cast<int>(pieces.size());
  for (int a : d.loops()) piece[static_cast<std::size_t>(a)] = next++;
  return piece;
}

}  // namespace

std::vector<Move> enumerate_moves(const Diagram& d) {
  std::vector<Move> out;
  for (int a = 0; a < d.arc_count(); ++a) {
    for (NodeKind sign : {NodeKind::Positive, NodeKind::Negative}) {
      for (bool side_b : {false, true}) {
        Move m;
        m.kind = MoveKind::R1Add;
        m.arc = a;
        m.sign = sign;
        m.side_b = side_b;
        m.variant = std::string(sign == NodeKind::Positive ? "pos" : "neg") + (side_b ? "/B" : "/A");
        out.push_back(m);
      }
    }
  }
  for (int n : curl_nodes(d)) {
    const Node& node = d.node(n);
    if (!node.classical()) continue;
    Move m;
    m.kind = MoveKind::R1Remove;
    m.node = n;
    m.variant = std::string(node.kind == NodeKind::Positive ? "pos" : "neg") + (node.arcs[2] == node.arcs[1] ? "/A" : "/B");
    out.push_back(m);
  }

  // R2 insertions: darts sharing a face, or darts on different pieces.
  const auto faces = d.faces();
  const auto piece = arc_pieces(d);
  auto add_r2 = [&](const Dart& x, const Dart& y) {
    if (x.arc == y.arc) return;
    for (bool over : {true, false}) {
      Move m;
      m.kind = MoveKind::R2Add;
      m.d1 = x;
      m.d2 = y;
      m.over = over;
      m.variant = std::string(x.forward == y.forward ? "anti" : "par") + (over ? "/over" : "/under");
      out.push_back(m);
    }
  };
  for (const auto& f : faces)
    for (const Dart& x : f)
      for (const Dart& y : f) add_r2(x, y);
  for (const auto& f : faces)
    for (const auto& g : faces)
      if (piece[static_cast<std::size_t>(f[0].arc)] < piece[static_cast<std::size_t>(g[0].arc)]) {
        add_r2(f[0], g[0]);
        add_r2(g[0], f[0]);
      }

  for (const auto& b : bigon_sites(d)) {
    const Node& A = d.node(b.a);
    const Node& B = d.node(b.b);
    if (A.classical() && B.classical() && same_strand_over(d, b)) {
      Move m;
      m.kind = MoveKind::R2Remove;
      m.bigon = b;
      m.variant = b.parallel ? "par" : "anti";
      out.push_back(m);
    }
    if (A.classical() != B.classical()) {
      Move m;
      m.kind = MoveKind::R5;
      m.bigon = b;
      const Node& X = A.classical() ? A : B;
      m.variant = std::string(b.parallel ? "par" : "anti") + (X.kind == NodeKind::Positive ? "/pos" : "/neg") +
                  (A.classical() ? "/down" : "/up");
      out.push_back(m);
    }
  }
  for (const auto& t : triangle_sites(d)) {
    auto layer = triangle_layer(d, t);
    if (!layer) continue;
    Move m;
    m.kind = d.node(t.c).classical() ? MoveKind::R3 : MoveKind::R4;
    m.triangle = t;
    m.variant = orientation_bits(t) + (*layer ? "/over" : "/under");
    out.push_back(m);
  }
  return out;
}

namespace {

ColoredDiagram r1_add(const ColoredDiagram& cd, const Move& m) {
  const Diagram& d = cd.diagram;
  if (m.arc < 0 || m.arc >= d.arc_count()) throw DiagramError("R1: no arc " + std::to_string(m.arc));
  if (m.sign == NodeKind::Singular) throw DiagramError("R1: curl must be classical");
  const bool loop = d.is_loop_arc(m.arc);
  auto nodes = d.nodes();
  auto loops = d.loops();
  const int label = cd.arc_label[static_cast<std::size_t>(m.arc)];
  int next = d.arc_count();
  const int e1 = m.arc;
  int e2 = e1;
  if (loop) {
    loops.erase(std::find(loops.begin(), loops.end(), m.arc));
  } else {
    e2 = next++;
    const Endpoint h = d.head(m.arc);
    nodes[static_cast<std::size_t>(h.node)].arcs[static_cast<std::size_t>(h.slot)] = e2;
  }
  const int c = next++;
  Node n;
  n.kind = m.sign;
  n.arcs = m.side_b ? std::array<int, 4>{c, e1, e2, c} : std::array<int, 4>{e1, c, c, e2};
  nodes.push_back(n);
  return ColoredDiagram(Diagram(std::move(nodes), std::move(loops)),
                        arc_labels_with(cd, next - d.arc_count(), label), cd.partition);
}

ColoredDiagram r2_add(const ColoredDiagram& cd, const Move& m) {
  const Diagram& d = cd.diagram;
  const Dart d1 = m.d1, d2 = m.d2;
  if (d1.arc < 0 || d2.arc < 0 || d1.arc >= d.arc_count() || d2.arc >= d.arc_count() || d1.arc == d2.arc)
    throw DiagramError("R2: invalid darts");
  bool shared_face = false;
  for (Dart x = d.next_in_face(d1);; x = d.next_in_face(x)) {
    if (x == d2) shared_face = true;
    if (x == d1 || shared_face) break;
  }
  if (!shared_face) {
    const auto piece = arc_pieces(d);
    if (piece[static_cast<std::size_t>(d1.arc)] == piece[static_cast<std::size_t>(d2.arc)])
      throw DiagramError("R2: darts do not bound a common face");
  }

  auto nodes = d.nodes();
  auto loops = d.loops();
  std::vector<int> labels = cd.arc_label;
  int next = d.arc_count();
  auto fresh = [&](int like) {
    labels.push_back(cd.arc_label[static_cast<std::size_t>(like)]);
    return next++;
  };
  auto split = [&](const Dart& x, int& mid, int& second) {
    mid = fresh(x.arc);
    if (d.is_loop_arc(x.arc)) {
      second = x.arc;
      loops.erase(std::find(loops.begin(), loops.end(), x.arc));
    } else {
      second = fresh(x.arc);
      const Endpoint end = d.arrival(x);
      nodes[static_cast<std::size_t>(end.node)].arcs[static_cast<std::size_t>(end.slot)] = second;
    }
  };
  int e_mid = -1, e2 = -1, f_mid = -1, f2 = -1;
  split(d1, e_mid, e2);
  split(d2, f_mid, f2);
  const int e1 = d1.arc, f1 = d2.arc;
  // "in" and "out" below are along the darts; backward darts flip them.
  const bool d1_in = d1.forward, d2_in = d2.forward;
  const int over_pos = m.over ? 1 : 0;
  nodes.push_back(make_node(false, {f_mid, e1, f2, e_mid}, {d2_in, d1_in, !d2_in, !d1_in}, over_pos));
  nodes.push_back(make_node(false, {f1, e2, f_mid, e_mid}, {d2_in, !d1_in, !d2_in, d1_in}, over_pos));
  return ColoredDiagram(Diagram(std::move(nodes), std::move(loops)), std::move(labels), cd.partition);
}

bool bigon_present(const Diagram& d, const BigonSite& b) {
  for (const auto& x : bigon_sites(d))
    if (x.a == b.a && x.b == b.b && x.e1 == b.e1 && x.e2 == b.e2 && x.parallel == b.parallel) return true;
  return false;
}

bool triangle_present(const Diagram& d, const TriangleSite& t) {
  for (const auto& x : triangle_sites(d))
    if (x.a == t.a && x.b == t.b && x.c == t.c && x.ab == t.ab && x.bc == t.bc && x.ca == t.ca) return true;
  return false;
}

}  // namespace

ColoredDiagram apply_move(const ColoredDiagram& cd, const Move& m) {
  const Diagram& d = cd.diagram;
  switch (m.kind) {
    case MoveKind::R1Add: return r1_add(cd, m);
    case MoveKind::R1Remove: {
      if (m.node < 0 || m.node >= d.node_count()) throw DiagramError("R1: no node " + std::to_string(m.node));
      auto curls = curl_nodes(d);
      if (!d.node(m.node).classical() || std::find(curls.begin(), curls.end(), m.node) == curls.end())
        throw DiagramError("R1: node " + std::to_string(m.node) + " is not a classical curl");
      return remove_straight(cd, {m.node});
    }
    case MoveKind::R2Add: return r2_add(cd, m);
    case MoveKind::R2Remove: {
      if (!bigon_present(d, m.bigon)) throw DiagramError("R2: no bigon at the given site");
      if (!d.node(m.bigon.a).classical() || !d.node(m.bigon.b).classical() || !same_strand_over(d, m.bigon))
        throw DiagramError("R2: bigon is not removable (needs one strand over at both crossings)");
      return remove_straight(cd, {m.bigon.a, m.bigon.b});
    }
    case MoveKind::R3:
    case MoveKind::R4: {
      if (!triangle_present(d, m.triangle)) throw DiagramError("R3/R4: no triangle at the given site");
      if (!triangle_layer(d, m.triangle)) throw DiagramError("R3/R4: moving strand is not on one level");
      const bool c_singular = !d.node(m.triangle.c).classical();
      if (c_singular != (m.kind == MoveKind::R4))
        throw DiagramError(m.kind == MoveKind::R4 ? "R4: third node is not singular" : "R3: third node is singular");
      return slide_triangle(cd, m.triangle);
    }
    case MoveKind::R5: {
      if (!bigon_present(d, m.bigon)) throw DiagramError("R5: no bigon at the given site");
      const Node& A = d.node(m.bigon.a);
      const Node& B = d.node(m.bigon.b);
      if (A.classical() == B.classical()) throw DiagramError("R5: needs one singular and one classical node");
      auto nodes = d.nodes();
      std::swap(nodes[static_cast<std::size_t>(m.bigon.a)].kind, nodes[static_cast<std::size_t>(m.bigon.b)].kind);
      return ColoredDiagram(Diagram(std::move(nodes), d.loops()), cd.arc_label, cd.partition);
    }
  }
  throw DiagramError("unknown move");
}

}  // namespace tangle
