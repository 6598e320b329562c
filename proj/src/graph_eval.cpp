#include "tangle/graph_eval.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <unordered_set>

#include "tangle/canonical.hpp"

namespace tangle {

Rational unlink_value(const std::vector<int>& circles_per_class) {
  if (circles_per_class.empty()) throw DiagramError("unlink_value: empty diagram");
  int n = 0;
  for (int k : circles_per_class) {
    if (k <= 0) throw DiagramError("unlink_value: class sizes must be positive");
    n += k;
  }
  const int c = static_cast<int>(circles_per_class.size());
  return named_constant("DELTA_DIFF").pow(c - 1) * named_constant("DELTA_SAME").pow(n - c);
}

const char* site_name(SiteKind k) {
  switch (k) {
    case SiteKind::Loop: return "loop";
    case SiteKind::BigonParallel: return "bigon-parallel";
    case SiteKind::BigonAntiparallel: return "bigon-antiparallel";
    case SiteKind::Triangle: return "triangle";
    default: return "none";
  }
}

std::vector<ReducibleSite> local_sites(const ColoredDiagram& g) {
  const Diagram& d = g.diagram;
  std::vector<ReducibleSite> out;
  for (int n : curl_nodes(d)) {
    if (d.node(n).classical()) continue;
    ReducibleSite s;
    s.kind = SiteKind::Loop;
    s.node = n;
    out.push_back(s);
  }
  for (const auto& b : bigon_sites(d)) {
    if (d.node(b.a).classical() || d.node(b.b).classical()) continue;
    ReducibleSite s;
    s.kind = b.parallel ? SiteKind::BigonParallel : SiteKind::BigonAntiparallel;
    s.bigon = b;
    out.push_back(s);
  }
  return out;
}

namespace {

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[static_cast<std::size_t>(rng.below(static_cast<int>(i)))]);
}

constexpr std::size_t kMaxSearchStates = 200000;

// Shortest sequence of triangle slides reaching a curl or bigon; returns its
// first slide.
TriangleSite search_triangle(const ColoredDiagram& g, Rng* rng) {
  const int bound = 4 * (g.diagram.node_count() + static_cast<int>(g.diagram.faces().size()));
  struct Item {
    ColoredDiagram d;
    std::size_t first;
    int depth;
  };
  auto firsts = triangle_sites(g.diagram);
  if (rng) shuffle(firsts, *rng);
  std::unordered_set<std::string> seen{canonical_form(g)};
  std::deque<Item> queue;
  auto push = [&](const ColoredDiagram& from, const TriangleSite& t, std::size_t first, int depth) {
    ColoredDiagram next = slide_triangle(from, t);
    if (!local_sites(next).empty()) return true;
    if (seen.insert(canonical_form(next)).second) queue.push_back({std::move(next), first, depth});
    return false;
  };
  for (std::size_t k = 0; k < firsts.size(); ++k)
    if (push(g, firsts[k], k, 1)) return firsts[k];
  while (!queue.empty()) {
    Item item = std::move(queue.front());
    queue.pop_front();
    if (item.depth >= bound || seen.size() > kMaxSearchStates) break;
    for (const auto& t : triangle_sites(item.d.diagram))
      if (push(item.d, t, item.first, item.depth + 1)) return firsts[item.first];
  }
  throw SearchBoundError("triangle search found no curl or bigon within bound " + std::to_string(bound),
                         print_colored(g));
}

ColoredDiagram merged_at(const ColoredDiagram& g, std::initializer_list<int> nodes) {
  ColoredDiagram out = g;
  int first = -1;
  for (int n : nodes)
    for (int a : g.diagram.node(n).arcs) {
      if (first < 0) first = a;
      out.merge_colors(first, a);
    }
  return out;
}

// Terms of resolving vertex a (then b) with the moving strand on top, minus
// the crossing-crossing terms: those are identical before and after the slide.
Terms triangle_rest(const ColoredDiagram& d, int a, int b, int sa, int sb) {
  const auto ca = resolution_coefficients(sa == 0 ? Resolution::Rel1 : Resolution::Rel2);
  const auto cb = resolution_coefficients(sb == 0 ? Resolution::Rel1 : Resolution::Rel2);
  Terms out;
  out.push_back({ca.smooth, oriented_smoothing(d, a)});
  ColoredDiagram b0 = oriented_smoothing(d, b);
  const int a_after = a > b ? a - 1 : a;
  ColoredDiagram ax = make_classical(b0, a_after, ca.sign);
  out.push_back({ca.merged * cb.smooth, merge_strand_colors(ax, a_after)});
  out.push_back({ca.kept * cb.smooth, std::move(ax)});
  return out;
}

}  // namespace

ReducibleSite find_reducible(const ColoredDiagram& g, Rng* rng) {
  ReducibleSite none;
  if (g.diagram.node_count() == 0) return none;
  auto sites = local_sites(g);
  if (!sites.empty()) return rng ? sites[static_cast<std::size_t>(rng->below(static_cast<int>(sites.size())))] : sites[0];
  ReducibleSite s;
  s.kind = SiteKind::Triangle;
  s.triangle = search_triangle(g, rng);
  return s;
}

Terms reduce_once(const ColoredDiagram& g, const ReducibleSite& site) {
  const Diagram& d = g.diagram;
  const Rational t = vars::t();
  const Rational t_sum = t + t.inverse();
  switch (site.kind) {
    case SiteKind::Loop: {
      if (site.node < 0 || site.node >= d.node_count() || d.node(site.node).classical())
        throw DiagramError("reduce_once: stale loop site");
      auto curls = curl_nodes(d);
      if (std::find(curls.begin(), curls.end(), site.node) == curls.end())
        throw DiagramError("reduce_once: stale loop site");
      return {{named_constant("C_LOOP"), remove_straight(g, {site.node})}};
    }
    case SiteKind::BigonParallel:
    case SiteKind::BigonAntiparallel: {
      const BigonSite& b = site.bigon;
      bool present = false;
      for (const auto& x : bigon_sites(d))
        present = present || (x.a == b.a && x.b == b.b && x.e1 == b.e1 && x.e2 == b.e2 && x.parallel == b.parallel);
      if (!present || d.node(b.a).classical() || d.node(b.b).classical())
        throw DiagramError("reduce_once: stale bigon site");
      const Node& A = d.node(b.a);
      const Node& B = d.node(b.b);
      ColoredDiagram merged = merged_at(g, {b.a, b.b});
      Terms out;
      out.push_back({Rational(1), remove_straight(g, {b.a, b.b})});
      if (b.parallel) {
        out.push_back({t_sum, remove_straight(merged, {b.a, b.b})});
        // Single vertex in place of the bigon (read from the relation's figure).
        Surgery s(merged);
        s.remove_node(b.a);
        s.remove_node(b.b);
        s.add_node(make_node(true, {A.arcs[0], A.arcs[1], B.arcs[2], B.arcs[3]}, {true, true, false, false}, 0));
        out.push_back({t_sum, s.finish()});
      } else {
        out.push_back({t_sum + Rational(1), remove_straight(merged, {b.a, b.b})});
        // Turnback: caps on the outer sides of a and b (figure-derived).
        const int a_in = A.arcs[static_cast<std::size_t>(1 - d.head(b.e2).slot)];
        const int a_out = A.arcs[static_cast<std::size_t>(5 - d.tail(b.e1).slot)];
        const int b_in = B.arcs[static_cast<std::size_t>(1 - d.head(b.e1).slot)];
        const int b_out = B.arcs[static_cast<std::size_t>(5 - d.tail(b.e2).slot)];
        Surgery s(merged);
        s.remove_node(b.a);
        s.remove_node(b.b);
        s.join(a_in, a_out);
        s.join(b_in, b_out);
        out.push_back({named_constant("C_BIGON_ANTIPAR"), s.finish()});
      }
      return out;
    }
    case SiteKind::Triangle: {
      const TriangleSite& tr = site.triangle;
      std::array<int, 2> moved{};
      ColoredDiagram slid = slide_triangle(g, tr, &moved);
      const int n = slid.diagram.node_count();
      const int a2 = n - 3, b2 = n - 2;
      const int sa = moving_strand_at_a(d, tr), sb = moving_strand_at_b(d, tr);
      // Orientations survive the slide, so the moving strand keeps its index.
      const int sa2 = moved[0], sb2 = moved[1];
      if (sa2 != sa || sb2 != sb) throw DiagramError("triangle slide changed the moving strand's index");
      Terms out;
      out.push_back({Rational(1), slid});
      for (auto& x : triangle_rest(g, tr.a, tr.b, sa, sb)) out.push_back(std::move(x));
      for (auto& x : triangle_rest(slid, a2, b2, sa2, sb2)) out.push_back({-x.weight, std::move(x.diagram)});
      return out;
    }
    default: throw DiagramError("reduce_once: no site");
  }
}

bool EvalMemo::lookup(const std::string& key, Rational& out) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return false;
  out = it->second;
  return true;
}

Rational EvalMemo::insert(const std::string& key, const Rational& value) {
  std::unique_lock lock(mutex_);
  return table_.try_emplace(key, value).first->second;
}

std::size_t EvalMemo::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

GraphEvaluator::GraphEvaluator(EvalOptions options, std::shared_ptr<EvalMemo> memo)
    : options_(options), memo_(memo ? std::move(memo) : std::make_shared<EvalMemo>()) {
  if (options_.random_seed != 0) rng_ = std::make_unique<Rng>(options_.random_seed);
}

namespace {

// Drops free loop `arc`, renumbering the arcs above it.
ColoredDiagram without_loop(const ColoredDiagram& g, int arc) {
  auto shift = [arc](int a) { return a > arc ? a - 1 : a; };
  auto nodes = g.diagram.nodes();
  for (auto& n : nodes)
    for (auto& a : n.arcs) a = shift(a);
  std::vector<int> loops;
  for (int l : g.diagram.loops())
    if (l != arc) loops.push_back(shift(l));
  std::vector<int> labels = g.arc_label;
  labels.erase(labels.begin() + arc);
  return ColoredDiagram(Diagram(std::move(nodes), std::move(loops)), std::move(labels), g.partition);
}

}  // namespace

Rational GraphEvaluator::evaluate(const ColoredDiagram& d) {
  if (d.diagram.node_count() == 0) return unlink_value(d.class_multiset());
  const std::string key = canonical_form(d);
  Rational cached;
  if (memo_->lookup(key, cached)) return cached;
  return memo_->insert(key, evaluate_uncached(d));
}

Rational GraphEvaluator::evaluate_uncached(const ColoredDiagram& d) {
  const Diagram& g = d.diagram;
  auto log = [&](const char* rule, const Terms& terms) {
    if (!options_.trace) return;
    *options_.trace << canonical_digest(d) << ' ' << rule;
    for (const auto& t : terms) *options_.trace << " [" << t.weight.to_string() << ']';
    *options_.trace << '\n';
  };
  auto sum = [&](const Terms& terms) {
    Rational total;
    for (const auto& t : terms)
      if (!t.weight.is_zero()) total += t.weight * evaluate(t.diagram);
    return total;
  };

  // Free loops are split unknots: peel them off first.
  if (!g.loops().empty()) {
    const auto& loops = g.loops();
    const int loop = rng_ ? loops[static_cast<std::size_t>(rng_->below(static_cast<int>(loops.size())))] : loops[0];
    const int cls = d.color_class(loop);
    bool shared = false;
    for (int a = 0; a < g.arc_count() && !shared; ++a) shared = a != loop && d.color_class(a) == cls;
    Terms terms{{named_constant(shared ? "DELTA_SAME" : "DELTA_DIFF"), without_loop(d, loop)}};
    log(shared ? "circle-same" : "circle-new", terms);
    return sum(terms);
  }

  std::vector<int> classical;
  for (int n = 0; n < g.node_count(); ++n)
    if (g.node(n).classical()) classical.push_back(n);
  if (!classical.empty()) {
    const int n = rng_ ? classical[static_cast<std::size_t>(rng_->below(static_cast<int>(classical.size())))]
                       : classical[0];
    Terms terms = expand_crossing(d, n);
    log("crossing", terms);
    return sum(terms);
  }

  ReducibleSite site = find_reducible(d, rng_.get());
  Terms terms = reduce_once(d, site);
  log(site_name(site.kind), terms);
  return sum(terms);
}

Rational evaluate_graph(const ColoredDiagram& g) {
  // Deterministic evaluators only touch the (locked) memo.
  static GraphEvaluator evaluator(EvalOptions{}, std::make_shared<EvalMemo>());
  return evaluator.evaluate(g);
}

}  // namespace tangle
