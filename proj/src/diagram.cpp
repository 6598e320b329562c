#include "tangle/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace tangle {

InputError::InputError(const std::string& msg, std::size_t line, std::size_t column)
    : DiagramError(line ? "line " + std::to_string(line) + (column ? ", column " + std::to_string(column) : "") +
                              ": " + msg
                        : msg),
      detail_(msg),
      line_(line),
      column_(column) {}

const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Positive: return "X+";
    case NodeKind::Negative: return "X-";
    default: return "V";
  }
}

Node make_node(bool singular, const std::array<int, 4>& ccw, const std::array<bool, 4>& incoming, int over_pos) {
  for (int r = 0; r < 4; ++r) {
    if (incoming[r] && incoming[(r + 1) % 4] && !incoming[(r + 2) % 4] && !incoming[(r + 3) % 4]) {
      Node n;
      for (int i = 0; i < 4; ++i) n.arcs[i] = ccw[(r + i) % 4];
      if (singular) {
        n.kind = NodeKind::Singular;
      } else {
        int strand = ((over_pos - r + 4) % 4) % 2;
        n.kind = strand == 0 ? NodeKind::Positive : NodeKind::Negative;
      }
      return n;
    }
  }
  throw DiagramError("node slots are not two adjacent incoming arcs followed by two outgoing arcs");
}

// ---------------------------------------------------------------------------

Diagram::Diagram(std::vector<Node> nodes, std::vector<int> loops) : nodes_(std::move(nodes)), loops_(std::move(loops)) {
  build();
}

void Diagram::build() {
  int max_arc = -1;
  for (const auto& n : nodes_) {
    for (int a : n.arcs) {
      if (a < 0) throw DiagramError("negative arc id");
      max_arc = std::max(max_arc, a);
    }
  }
  for (int a : loops_) {
    if (a < 0) throw DiagramError("negative arc id");
    max_arc = std::max(max_arc, a);
  }
  const auto count = static_cast<std::size_t>(max_arc + 1);
  head_.assign(count, Endpoint{});
  tail_.assign(count, Endpoint{});
  std::vector<int> heads(count, 0), tails(count, 0), loop_uses(count, 0);
  for (int ni = 0; ni < node_count(); ++ni) {
    for (int s = 0; s < 4; ++s) {
      auto a = static_cast<std::size_t>(nodes_[ni].arcs[s]);
      if (s < 2) {
        ++heads[a];
        head_[a] = {ni, s};
      } else {
        ++tails[a];
        tail_[a] = {ni, s};
      }
    }
  }
  for (int a : loops_) ++loop_uses[static_cast<std::size_t>(a)];
  for (std::size_t a = 0; a < count; ++a) {
    const int uses = heads[a] + tails[a] + 2 * loop_uses[a];
    if (uses == 0) throw DiagramError("arc " + std::to_string(a) + " is never used (arc ids must be contiguous)");
    if (loop_uses[a] > 0 && (loop_uses[a] > 1 || heads[a] + tails[a] > 0))
      throw DiagramError("free loop arc " + std::to_string(a) + " is also used elsewhere");
    if (loop_uses[a] == 0 && (heads[a] != 1 || tails[a] != 1)) {
      if (heads[a] + tails[a] != 2)
        throw DiagramError("arc " + std::to_string(a) + " is used " + std::to_string(heads[a] + tails[a]) +
                           " times (expected 2)");
      throw DiagramError("arc " + std::to_string(a) + " has inconsistent orientation (" +
                         (heads[a] == 2 ? "two heads" : "two tails") + ")");
    }
  }

  component_of_.assign(count, -1);
  components_.clear();
  for (std::size_t a0 = 0; a0 < count; ++a0) {
    if (component_of_[a0] >= 0) continue;
    const int id = static_cast<int>(components_.size());
    std::vector<int> comp;
    int a = static_cast<int>(a0);
    do {
      component_of_[static_cast<std::size_t>(a)] = id;
      comp.push_back(a);
      a = next_arc(a);
    } while (a != static_cast<int>(a0));
    components_.push_back(std::move(comp));
  }
}

int Diagram::classical_count() const {
  return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.classical(); }));
}

int Diagram::singular_count() const { return node_count() - classical_count(); }

int Diagram::next_arc(int arc) const {
  Endpoint h = head(arc);
  if (h.node < 0) return arc;
  return nodes_[static_cast<std::size_t>(h.node)].arcs[static_cast<std::size_t>(h.slot + 2)];
}

int Diagram::prev_arc(int arc) const {
  Endpoint t = tail(arc);
  if (t.node < 0) return arc;
  return nodes_[static_cast<std::size_t>(t.node)].arcs[static_cast<std::size_t>(t.slot - 2)];
}

std::vector<std::vector<int>> Diagram::connected_pieces() const {
  std::vector<int> parent(nodes_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < arc_count(); ++a) {
    if (is_loop_arc(a)) continue;
    int x = find(head(a).node), y = find(tail(a).node);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::map<int, std::vector<int>> groups;
  for (int n = 0; n < node_count(); ++n) groups[find(n)].push_back(n);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

Dart Diagram::next_in_face(const Dart& d) const {
  Endpoint p = arrival(d);
  if (p.node < 0) return d;
  const int q = (p.slot + 1) % 4;
  const int a = nodes_[static_cast<std::size_t>(p.node)].arcs[static_cast<std::size_t>(q)];
  return Dart{a, q >= 2};
}

std::vector<std::vector<Dart>> Diagram::faces() const {
  std::vector<std::vector<Dart>> out;
  std::vector<std::array<bool, 2>> seen(static_cast<std::size_t>(arc_count()), {false, false});
  for (int a = 0; a < arc_count(); ++a) {
    for (bool fwd : {true, false}) {
      if (seen[static_cast<std::size_t>(a)][fwd]) continue;
      std::vector<Dart> face;
      Dart d{a, fwd};
      do {
        seen[static_cast<std::size_t>(d.arc)][d.forward] = true;
        face.push_back(d);
        d = next_in_face(d);
      } while (!(d == Dart{a, fwd}));
      out.push_back(std::move(face));
    }
  }
  return out;
}

bool Diagram::is_planar() const {
  auto pieces = connected_pieces();
  std::vector<int> piece_of(nodes_.size(), -1);
  for (std::size_t p = 0; p < pieces.size(); ++p)
    for (int n : pieces[p]) piece_of[static_cast<std::size_t>(n)] = static_cast<int>(p);
  std::vector<int> face_count(pieces.size(), 0);
  for (const auto& f : faces()) {
    if (is_loop_arc(f.front().arc)) continue;
    ++face_count[static_cast<std::size_t>(piece_of[static_cast<std::size_t>(head(f.front().arc).node)])];
  }
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    const int v = static_cast<int>(pieces[p].size());
    if (v - 2 * v + face_count[p] != 2) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

ColorPartition::ColorPartition(int labels) : parent_(static_cast<std::size_t>(labels)) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int ColorPartition::add_label() {
  parent_.push_back(size());
  return size() - 1;
}

int ColorPartition::find(int label) const {
  if (label < 0 || label >= size()) throw DiagramError("unknown color label " + std::to_string(label));
  while (parent_[static_cast<std::size_t>(label)] != label) label = parent_[static_cast<std::size_t>(label)];
  return label;
}

int ColorPartition::merge(int a, int b) {
  int ra = find(a), rb = find(b);
  if (ra == rb) return ra;
  // smaller root survives so the result is independent of argument order
  if (rb < ra) std::swap(ra, rb);
  parent_[static_cast<std::size_t>(rb)] = ra;
  return ra;
}

bool operator==(const ColorPartition& a, const ColorPartition& b) {
  if (a.size() != b.size()) return false;
  for (int k = 0; k < a.size(); ++k)
    if (a.find(k) != b.find(k)) return false;
  return true;
}

ColoredDiagram::ColoredDiagram(Diagram d, const Coloration& c) : diagram(std::move(d)) {
  const auto& comps = diagram.components();
  if (c.size() != comps.size())
    throw DiagramError("coloration has " + std::to_string(c.size()) + " entries for " +
                       std::to_string(comps.size()) + " components");
  int max_label = -1;
  for (int l : c) {
    if (l < 0) throw DiagramError("negative color label");
    max_label = std::max(max_label, l);
  }
  arc_label.assign(static_cast<std::size_t>(diagram.arc_count()), 0);
  for (int a = 0; a < diagram.arc_count(); ++a)
    arc_label[static_cast<std::size_t>(a)] = c[static_cast<std::size_t>(diagram.component_of(a))];
  partition = ColorPartition(max_label + 1);
}

ColoredDiagram::ColoredDiagram(Diagram d, std::vector<int> labels, ColorPartition p)
    : diagram(std::move(d)), arc_label(std::move(labels)), partition(std::move(p)) {
  if (arc_label.size() != static_cast<std::size_t>(diagram.arc_count()))
    throw DiagramError("arc label table size mismatch");
  for (const auto& comp : diagram.components()) {
    for (int a : comp)
      if (!partition.same(arc_label[static_cast<std::size_t>(a)], arc_label[static_cast<std::size_t>(comp[0])]))
        throw DiagramError("a component carries two unmerged colors");
  }
}

std::vector<int> ColoredDiagram::component_classes() const {
  std::vector<int> out;
  for (const auto& comp : diagram.components()) out.push_back(color_class(comp[0]));
  return out;
}

std::vector<int> ColoredDiagram::class_multiset() const {
  std::map<int, int> counts;
  for (int c : component_classes()) ++counts[c];
  std::vector<int> out;
  for (auto& [c, n] : counts) out.push_back(n);
  std::sort(out.begin(), out.end());
  return out;
}

Coloration ColoredDiagram::coloration() const {
  std::map<int, int> relabel;
  Coloration out;
  for (int c : component_classes()) {
    auto [it, inserted] = relabel.try_emplace(c, static_cast<int>(relabel.size()));
    out.push_back(it->second);
  }
  return out;
}

ColoredDiagram ColoredDiagram::compacted() const { return ColoredDiagram(diagram, coloration()); }

// ---------------------------------------------------------------------------

Surgery::Surgery(const ColoredDiagram& base)
    : base_(base), removed_(static_cast<std::size_t>(base.diagram.node_count()), false), partition_(base.partition) {}

void Surgery::remove_node(int n) {
  if (n < 0 || n >= base_.diagram.node_count()) throw DiagramError("no node " + std::to_string(n));
  removed_[static_cast<std::size_t>(n)] = true;
}

int Surgery::new_arc(int label) {
  extra_labels_.push_back(label);
  return base_.diagram.arc_count() + static_cast<int>(extra_labels_.size()) - 1;
}

void Surgery::add_node(const Node& n) { added_.push_back(n); }

void Surgery::join(int x, int y) { joins_.emplace_back(x, y); }

void Surgery::merge_colors(int arc_a, int arc_b) {
  auto label = [&](int a) {
    const int n = base_.diagram.arc_count();
    return a < n ? base_.arc_label[static_cast<std::size_t>(a)] : extra_labels_.at(static_cast<std::size_t>(a - n));
  };
  partition_.merge(label(arc_a), label(arc_b));
}

ColoredDiagram Surgery::finish() const {
  const int old_count = base_.diagram.arc_count();
  const int total = old_count + static_cast<int>(extra_labels_.size());
  auto label = [&](int a) {
    return a < old_count ? base_.arc_label[static_cast<std::size_t>(a)]
                         : extra_labels_[static_cast<std::size_t>(a - old_count)];
  };

  std::vector<int> parent(static_cast<std::size_t>(total));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  std::vector<bool> joined(static_cast<std::size_t>(total), false);
  for (auto [x, y] : joins_) {
    if (x < 0 || y < 0 || x >= total || y >= total) throw DiagramError("surgery joins an unknown arc");
    joined[static_cast<std::size_t>(x)] = joined[static_cast<std::size_t>(y)] = true;
    int rx = find(x), ry = find(y);
    if (rx != ry) parent[static_cast<std::size_t>(std::max(rx, ry))] = std::min(rx, ry);
  }

  std::vector<Node> nodes;
  for (int n = 0; n < base_.diagram.node_count(); ++n)
    if (!removed_[static_cast<std::size_t>(n)]) nodes.push_back(base_.diagram.node(n));
  for (const auto& n : added_) nodes.push_back(n);

  std::vector<int> heads(static_cast<std::size_t>(total), 0), tails(static_cast<std::size_t>(total), 0);
  std::vector<bool> loop_class(static_cast<std::size_t>(total), false), joined_class(static_cast<std::size_t>(total), false);
  for (const auto& n : nodes) {
    for (int s = 0; s < 4; ++s) {
      const int a = n.arcs[static_cast<std::size_t>(s)];
      if (a < 0 || a >= total) throw DiagramError("surgery node uses an unknown arc");
      (s < 2 ? heads : tails)[static_cast<std::size_t>(find(a))]++;
    }
  }
  for (int a : base_.diagram.loops()) loop_class[static_cast<std::size_t>(find(a))] = true;
  for (int a = 0; a < total; ++a)
    if (joined[static_cast<std::size_t>(a)]) joined_class[static_cast<std::size_t>(find(a))] = true;

  // Surviving classes, numbered by smallest member.
  std::vector<int> new_id(static_cast<std::size_t>(total), -1);
  std::vector<int> labels;
  std::vector<int> loops;
  for (int a = 0; a < total; ++a) {
    const int r = find(a);
    if (r != a) continue;
    const auto ri = static_cast<std::size_t>(r);
    const bool strand = heads[ri] > 0 || tails[ri] > 0;
    if (strand && (heads[ri] != 1 || tails[ri] != 1))
      throw DiagramError("surgery left arc class " + std::to_string(r) + " with " + std::to_string(heads[ri]) +
                         " heads and " + std::to_string(tails[ri]) + " tails");
    if (!strand && !loop_class[ri] && !joined_class[ri]) continue;  // internal arc dropped
    new_id[ri] = static_cast<int>(labels.size());
    labels.push_back(label(r));
    if (!strand) loops.push_back(new_id[ri]);
  }
  for (int a = 0; a < total; ++a) {
    const int r = find(a);
    if (new_id[static_cast<std::size_t>(r)] < 0) continue;
    if (!partition_.same(label(a), label(r))) throw DiagramError("surgery joins arcs of unmerged colors");
  }
  for (auto& n : nodes)
    for (int& a : n.arcs) a = new_id[static_cast<std::size_t>(find(a))];
  return ColoredDiagram(Diagram(std::move(nodes), std::move(loops)), std::move(labels), partition_);
}

// ---------------------------------------------------------------------------

namespace {
void check_node(const ColoredDiagram& d, int n) {
  if (n < 0 || n >= d.diagram.node_count()) throw DiagramError("no node " + std::to_string(n));
}
}  // namespace

ColoredDiagram oriented_smoothing(const ColoredDiagram& d, int n) {
  check_node(d, n);
  const Node& node = d.diagram.node(n);
  Surgery s(d);
  s.remove_node(n);
  s.merge_colors(node.arcs[0], node.arcs[1]);
  s.join(node.arcs[0], node.arcs[3]);
  s.join(node.arcs[1], node.arcs[2]);
  return s.finish();
}

ColoredDiagram switch_crossing(const ColoredDiagram& d, int n) {
  check_node(d, n);
  const Node& node = d.diagram.node(n);
  if (!node.classical()) throw DiagramError("cannot switch a singular node");
  auto nodes = d.diagram.nodes();
  nodes[static_cast<std::size_t>(n)].kind =
      node.kind == NodeKind::Positive ? NodeKind::Negative : NodeKind::Positive;
  return ColoredDiagram(Diagram(std::move(nodes), d.diagram.loops()), d.arc_label, d.partition);
}

ColoredDiagram make_singular(const ColoredDiagram& d, int n) {
  check_node(d, n);
  if (!d.diagram.node(n).classical()) throw DiagramError("node is already singular");
  auto nodes = d.diagram.nodes();
  nodes[static_cast<std::size_t>(n)].kind = NodeKind::Singular;
  return ColoredDiagram(Diagram(std::move(nodes), d.diagram.loops()), d.arc_label, d.partition);
}

ColoredDiagram make_classical(const ColoredDiagram& d, int n, NodeKind sign) {
  check_node(d, n);
  if (d.diagram.node(n).classical()) throw DiagramError("node is not singular");
  if (sign == NodeKind::Singular) throw DiagramError("make_classical needs a sign");
  auto nodes = d.diagram.nodes();
  nodes[static_cast<std::size_t>(n)].kind = sign;
  return ColoredDiagram(Diagram(std::move(nodes), d.diagram.loops()), d.arc_label, d.partition);
}

ColoredDiagram merge_strand_colors(const ColoredDiagram& d, int n) {
  check_node(d, n);
  ColoredDiagram out = d;
  out.merge_colors(d.diagram.node(n).arcs[0], d.diagram.node(n).arcs[1]);
  return out;
}

ColoredDiagram add_free_loop(const ColoredDiagram& d, std::optional<int> label) {
  ColoredDiagram out = d;
  int l = label ? *label : out.partition.add_label();
  if (l >= out.partition.size()) throw DiagramError("unknown color label");
  auto loops = d.diagram.loops();
  loops.push_back(d.diagram.arc_count());
  out.arc_label.push_back(l);
  out.diagram = Diagram(d.diagram.nodes(), std::move(loops));
  return out;
}

ColoredDiagram remove_straight(const ColoredDiagram& d, const std::vector<int>& nodes) {
  Surgery s(d);
  for (int n : nodes) {
    check_node(d, n);
    const Node& node = d.diagram.node(n);
    s.remove_node(n);
    s.join(node.arcs[0], node.arcs[2]);
    s.join(node.arcs[1], node.arcs[3]);
  }
  return s.finish();
}

}  // namespace tangle
