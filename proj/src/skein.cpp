#include "tangle/skein.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <thread>

#include "tangle/canonical.hpp"
#include "tangle/graph_eval.hpp"

namespace tangle {

EngineDisagreement::EngineDisagreement(const std::string& diagram, const Rational& state_sum,
                                       const Rational& recursive)
    : std::runtime_error("engines disagree: state-sum " + state_sum.to_string() + " vs recursive " +
                         recursive.to_string()),
      diagram_(diagram) {}

int first_bad_crossing(const Diagram& d) {
  std::vector<bool> seen(static_cast<std::size_t>(d.node_count()), false);
  for (const auto& comp : d.components()) {
    const int start = *std::min_element(comp.begin(), comp.end());
    if (d.is_loop_arc(start)) continue;
    int a = start;
    do {
      const Endpoint h = d.head(a);
      const Node& n = d.node(h.node);
      if (!n.classical()) throw DiagramError("first_bad_crossing: singular vertex present");
      if (!seen[static_cast<std::size_t>(h.node)]) {
        seen[static_cast<std::size_t>(h.node)] = true;
        const int over = n.kind == NodeKind::Positive ? 0 : 1;
        if (h.slot != over) return h.node;
      }
      a = d.next_arc(a);
    } while (a != start);
  }
  return -1;
}

Terms expand_states(const ColoredDiagram& d) {
  Terms current{{Rational(1), d}};
  while (true) {
    LinearCombination next;
    bool expanded = false;
    for (const auto& term : current) {
      int n = -1;
      for (int k = 0; k < term.diagram.diagram.node_count() && n < 0; ++k)
        if (term.diagram.diagram.node(k).classical()) n = k;
      if (n < 0) {
        next.add(term.weight, term.diagram);
        continue;
      }
      expanded = true;
      next.add(expand_crossing(term.diagram, n), term.weight);
    }
    current = next.collected();
    if (!expanded) return current;
  }
}

namespace {

std::shared_ptr<EvalMemo> shared_graph_memo() {
  static auto memo = std::make_shared<EvalMemo>();
  return memo;
}

}  // namespace

Rational state_sum(const ColoredDiagram& d, const EngineOptions& options) {
  const Terms states = expand_states(d);
  // Randomized strategies get a private memo so that they cannot reuse
  // values found by another strategy.
  auto memo = options.random_seed ? std::make_shared<EvalMemo>() : shared_graph_memo();
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(states.size())));
  if (threads == 1 || options.random_seed || options.trace) {
    GraphEvaluator ev(EvalOptions{options.random_seed, options.trace}, memo);
    Rational total;
    for (const auto& s : states) total += s.weight * ev.evaluate(s.diagram);
    return total;
  }
  std::vector<Rational> parts(states.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned k = 0; k < threads; ++k)
    pool.emplace_back([&] {
      GraphEvaluator ev(EvalOptions{}, memo);
      try {
        for (std::size_t i = next++; i < states.size(); i = next++) parts[i] = states[i].weight * ev.evaluate(states[i].diagram);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  Rational total;
  for (const auto& p : parts) total += p;  // fixed order: scheduling-independent
  return total;
}

namespace {

class Recursion {
 public:
  Recursion(Resolution r, std::shared_ptr<EvalMemo> memo) : resolution_(r), memo_(std::move(memo)) {}

  Rational value(const ColoredDiagram& d) {
    if (d.diagram.node_count() == 0) return unlink_value(d.class_multiset());
    const std::string key = canonical_form(d);
    Rational cached;
    if (memo_->lookup(key, cached)) return cached;
    return memo_->insert(key, compute(d));
  }

 private:
  Rational sum(const Terms& terms) {
    Rational total;
    for (const auto& t : terms)
      if (!t.weight.is_zero()) total += t.weight * value(t.diagram);
    return total;
  }

  Rational compute(const ColoredDiagram& d) {
    const Diagram& g = d.diagram;
    for (int n = 0; n < g.node_count(); ++n)
      if (!g.node(n).classical()) return sum(resolve_singular(d, n, resolution_));

    const int n = first_bad_crossing(g);
    if (n < 0) return unlink_value(d.class_multiset());  // descending: an unlink

    const Rational t = vars::t(), w = vars::w();
    const Node& node = g.node(n);
    const bool same = d.color_class(node.arcs[0]) == d.color_class(node.arcs[1]);
    const bool pos = node.kind == NodeKind::Positive;
    ColoredDiagram switched = switch_crossing(d, n);
    ColoredDiagram smoothed = oriented_smoothing(d, n);
    if (same) {
      // (1/(tw)) F+ - w F- = (1 - 1/t) F0
      if (pos) return sum({{t * w * w, switched}, {w * (t - 1), smoothed}});
      return sum({{(t * w * w).inverse(), switched}, {(Rational(1) - t) / (t * w), smoothed}});
    }
    // (1/w) F+ - w F- = (1 - 1/t) F0 + (1/w - 1/(tw)) F+merged
    const Rational one_minus = Rational(1) - t.inverse();
    if (pos) {
      ColoredDiagram merged = merge_strand_colors(d, n);
      return sum({{w * w, switched}, {w * one_minus, smoothed}, {one_minus, merged}});
    }
    ColoredDiagram merged = merge_strand_colors(switched, n);
    return sum({{(w * w).inverse(), switched}, {-(one_minus / w), smoothed}, {-(one_minus / (w * w)), merged}});
  }

  Resolution resolution_;
  std::shared_ptr<EvalMemo> memo_;
};

}  // namespace

Rational skein_recursive(const ColoredDiagram& d, const EngineOptions& options) {
  static auto rel1 = std::make_shared<EvalMemo>();
  static auto rel2 = std::make_shared<EvalMemo>();
  Recursion r(options.resolution, options.resolution == Resolution::Rel1 ? rel1 : rel2);
  return r.value(d);
}

Rational invariant(const ColoredDiagram& d, Engine engine, const EngineOptions& options) {
  switch (engine) {
    case Engine::StateSum: return state_sum(d, options);
    case Engine::Recursive: return skein_recursive(d, options);
    default: {
      Rational a = state_sum(d, options);
      Rational b = skein_recursive(d, options);
      if (!rf_equals(a, b)) throw EngineDisagreement(print_colored(d), a, b);
      return a;
    }
  }
}

}  // namespace tangle
