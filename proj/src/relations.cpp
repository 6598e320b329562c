#include "tangle/relations.hpp"

#include "tangle/canonical.hpp"

namespace tangle {

Terms expand_crossing(const ColoredDiagram& d, int n) {
  const Node& node = d.diagram.node(n);
  if (!node.classical()) throw DiagramError("expand_crossing: node " + std::to_string(n) + " is singular");
  const bool pos = node.kind == NodeKind::Positive;
  const Rational& smooth = named_constant(pos ? "POS_SMOOTH" : "NEG_SMOOTH");
  const Rational& merged = named_constant(pos ? "POS_VERTEX_MERGED" : "NEG_VERTEX_MERGED");
  const Rational& kept = named_constant(pos ? "POS_VERTEX_KEPT" : "NEG_VERTEX_KEPT");
  ColoredDiagram vertex = make_singular(d, n);
  ColoredDiagram vertex_merged = merge_strand_colors(vertex, n);
  return {{smooth, oriented_smoothing(d, n)}, {merged, std::move(vertex_merged)}, {kept, std::move(vertex)}};
}

ResolutionCoefficients resolution_coefficients(Resolution r) {
  const Rational t = vars::t(), w = vars::w();
  if (r == Resolution::Rel1) return {w.inverse(), t.inverse(), (t * w).inverse(), NodeKind::Positive};
  return {w, t, t * w, NodeKind::Negative};
}

Terms resolve_singular(const ColoredDiagram& d, int n, Resolution r) {
  if (d.diagram.node(n).classical())
    throw DiagramError("resolve_singular: node " + std::to_string(n) + " is classical");
  const auto c = resolution_coefficients(r);
  ColoredDiagram crossing = make_classical(d, n, c.sign);
  ColoredDiagram crossing_merged = merge_strand_colors(crossing, n);
  return {{c.kept, std::move(crossing)}, {c.smooth, oriented_smoothing(d, n)}, {c.merged, std::move(crossing_merged)}};
}

void LinearCombination::add(const Rational& weight, ColoredDiagram d) {
  if (weight.is_zero()) return;
  std::string key = canonical_form(d);
  auto it = index_.find(key);
  if (it != index_.end()) {
    terms_[it->second].weight += weight;
    return;
  }
  index_.emplace(std::move(key), terms_.size());
  terms_.push_back({weight, std::move(d)});
}

void LinearCombination::add(const Terms& terms, const Rational& scale) {
  for (const auto& t : terms) add(scale * t.weight, t.diagram);
}

Terms LinearCombination::collected() const {
  Terms out;
  for (const auto& t : terms_)
    if (!t.weight.is_zero()) out.push_back(t);
  return out;
}

}  // namespace tangle
