#include "tangle/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "tangle/canonical.hpp"
#include "tangle/corpus.hpp"
#include "tangle/graph_eval.hpp"
#include "tangle/homfly.hpp"
#include "tangle/moves.hpp"
#include "tangle/skein.hpp"

namespace tangle {

void SuiteResult::check(bool ok, const std::string& what, const std::string& diagram) {
  if (ok) {
    ++passed;
    return;
  }
  ++failed;
  if (failures.size() < 20) failures.push_back({what, diagram});
}

void SuiteResult::note_value(const Rational& v, const std::string& diagram) {
  ++values_checked;
  if (rf_is_t_expressible(v)) return;
  ++values_outside;
  if (failures.size() < 20) failures.push_back({"value outside Q(x,t,w): " + v.to_string(), diagram});
}

namespace {

class Timer {
 public:
  explicit Timer(SuiteResult& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  SuiteResult& r_;
  std::chrono::steady_clock::time_point start_;
};

ColoredDiagram monochrome(const Diagram& d) { return ColoredDiagram(d, Coloration(d.components().size(), 0)); }

Coloration distinct_colors(const Diagram& d) {
  Coloration c;
  for (std::size_t k = 0; k < d.components().size(); ++k) c.push_back(static_cast<int>(k));
  return c;
}

// Independent spellings of the constants, not via named_constant.
Rational delta_diff() { return parse_swx("1/(w*x)"); }
Rational delta_same() { return parse_swx("(t*w^2 - 1)/(w*(1 - t))"); }
Rational c_loop() { return parse_swx("w/(1-t) + w^-1/(1-t^-1)"); }
Rational c_bigon_antipar() { return parse_swx("w*t^-1/(1-t) + w^-1*t/(1-t^-1)"); }

Rational value_of(SuiteResult& r, const ColoredDiagram& d) {
  Rational v = state_sum(d);
  r.note_value(v, print_colored(d));
  return v;
}

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[static_cast<std::size_t>(rng.below(static_cast<int>(i)))]);
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteResult verify_axioms(const VerifyOptions&) {
  SuiteResult r;
  r.name = "axioms";
  Timer timer(r);
  for (const char* name : {"unknot", "kink+", "kink-"}) {
    auto d = monochrome(named_link(name).diagram());
    r.check(rf_equals(value_of(r, d), Rational(1)), std::string(name) + " evaluates to 1", print_colored(d));
    r.check(rf_equals(skein_recursive(d), Rational(1)), std::string(name) + " recursion gives 1", print_colored(d));
    ++r.coverage["unknot"];
  }
  for (int n = 1; n <= 5; ++n) {
    Diagram u = braid_closure(n, {});
    for (const auto& c : all_colorations(n)) {
      ColoredDiagram d(u, c);
      const int classes = *std::max_element(c.begin(), c.end()) + 1;
      const Rational expect = delta_diff().pow(classes - 1) * delta_same().pow(n - classes);
      r.check(rf_equals(value_of(r, d), expect), "unlink of " + std::to_string(n) + " circles", print_colored(d));
      r.check(rf_equals(unlink_value(d.class_multiset()), expect), "unlink_value", print_colored(d));
      ++r.coverage[classes == n ? "unlink-distinct" : "unlink-shared"];
    }
  }
  // Adding a circle: fresh color multiplies by 1/(wx), a present color by DELTA_SAME.
  for (const auto& e : classical_corpus(4)) {
    const Rational base = value_of(r, e.diagram);
    auto fresh = add_free_loop(e.diagram, std::nullopt);
    auto same = add_free_loop(e.diagram, e.diagram.arc_label[0]);
    r.check(rf_equals(value_of(r, fresh), base * delta_diff()), "fresh circle factor", print_colored(fresh));
    r.check(rf_equals(skein_recursive(fresh), base * delta_diff()), "fresh circle factor (recursion)", print_colored(fresh));
    r.check(rf_equals(value_of(r, same), base * delta_same()), "same-color circle factor", print_colored(same));
    r.check(rf_equals(skein_recursive(same), base * delta_same()), "same-color circle factor (recursion)",
            print_colored(same));
    r.coverage["circle-factor"] += 4;
  }
  return r;
}

// ---------------------------------------------------------------------------

SuiteResult verify_relations(const VerifyOptions& o) {
  SuiteResult r;
  r.name = "relations";
  Timer timer(r);
  std::vector<CorpusEntry> pool;
  for (auto& e : classical_corpus(o.max_crossings))
    if (e.classical > 0) pool.push_back(std::move(e));
  for (auto& e : singular_corpus(3, std::max(0, o.max_crossings - 1)))
    if (e.classical + e.singular <= o.max_crossings) pool.push_back(std::move(e));
  Rng rng(o.seed ^ 0x1e1a7105ull);
  const Rational t = vars::t(), w = vars::w(), one(1);
  for (int site = 0; site < o.relation_sites; ++site) {
    const CorpusEntry& e = pool[static_cast<std::size_t>(rng.below(static_cast<int>(pool.size())))];
    const ColoredDiagram& d = e.diagram;
    const int n = rng.below(d.diagram.node_count());
    const Node& node = d.diagram.node(n);
    const std::string where = print_colored(d) + "# site: node " + std::to_string(n) + "\n";

    ColoredDiagram pos, neg;
    if (node.classical()) {
      pos = node.kind == NodeKind::Positive ? d : switch_crossing(d, n);
      neg = node.kind == NodeKind::Negative ? d : switch_crossing(d, n);
    } else {
      pos = make_classical(d, n, NodeKind::Positive);
      neg = make_classical(d, n, NodeKind::Negative);
    }
    const ColoredDiagram vtx = node.classical() ? make_singular(d, n) : d;
    const Rational P = value_of(r, pos), N = value_of(r, neg), V = value_of(r, vtx);
    const Rational F0 = value_of(r, oriented_smoothing(d, n));
    const Rational Pm = value_of(r, merge_strand_colors(pos, n)), Nm = value_of(r, merge_strand_colors(neg, n));

    r.check(rf_equals(P / w - w * N, (one - t.inverse()) * F0 + (w.inverse() - (t * w).inverse()) * Pm), "mixed-color skein", where);
    r.check(rf_equals(Pm / (t * w) - w * Nm, (one - t.inverse()) * F0), "merged skein", where);
    r.check(rf_equals(P / w - w * N, (t - t.inverse()) * F0 + t * w * Nm - Pm / (t * w)), "switch identity", where);
    const Rational rel1 = P / w + F0 / t + Pm / (t * w);
    const Rational rel2 = w * N + t * F0 + t * w * Nm;
    r.check(rf_equals(V, rel1), "vertex = Rel1", where);
    r.check(rf_equals(V, rel2), "vertex = Rel2", where);
    r.check(rf_equals(rel1, rel2), "Rel1 = Rel2", where);
    for (const char* rel : {"mixed-color skein", "merged skein", "switch identity", "vertex = Rel1", "vertex = Rel2", "Rel1 = Rel2"})
      ++r.coverage[std::string("relation: ") + rel];
    ++r.coverage[node.classical() ? "site: crossing" : "site: vertex"];
    ++r.coverage[d.color_class(node.arcs[0]) == d.color_class(node.arcs[1]) ? "strands: one color" : "strands: two colors"];
  }
  r.notes.push_back(std::to_string(o.relation_sites) + " sites over " + std::to_string(pool.size()) + " diagrams");
  return r;
}

// ---------------------------------------------------------------------------

std::vector<std::string> required_move_variants() {
  std::vector<std::string> out;
  for (const char* k : {"R1+", "R1-"})
    for (const char* s : {"pos", "neg"})
      for (const char* side : {"A", "B"}) out.push_back(std::string(k) + "/" + s + "/" + side);
  for (const char* p : {"par", "anti"})
    for (const char* l : {"over", "under"}) out.push_back(std::string("R2+/") + p + "/" + l);
  out.push_back("R2-/par");
  out.push_back("R2-/anti");
  for (const char* k : {"R3", "R4"})
    for (const char* bits : {"fff", "ffb", "fbf", "fbb", "bff", "bfb", "bbf", "bbb"})
      for (const char* l : {"over", "under"}) out.push_back(std::string(k) + "/" + bits + "/" + l);
  for (const char* p : {"par", "anti"})
    for (const char* s : {"pos", "neg"})
      for (const char* side : {"down", "up"}) out.push_back(std::string("R5/") + p + "/" + s + "/" + side);
  return out;
}

SuiteResult verify_moves(const VerifyOptions& o) {
  SuiteResult r;
  r.name = "moves";
  Timer timer(r);
  Rng rng(o.seed ^ 0x40e5ull);
  const int small = std::min(4, o.max_crossings);

  // Named links in every orientation, colored one way and all-distinct,
  // plus singular variants; then seeded random braids.
  std::vector<ColoredDiagram> pool;
  for (const auto& l : named_links()) {
    if (static_cast<int>(l.word.size()) > small) continue;
    for (const Diagram& d : all_orientations(l.diagram())) {
      std::vector<Coloration> colorings{Coloration(d.components().size(), 0)};
      if (d.components().size() > 1) colorings.push_back(distinct_colors(d));
      for (const auto& c : colorings) {
        ColoredDiagram cd(d, c);
        pool.push_back(cd);
        for (int n = 0; n < cd.diagram.node_count(); ++n) pool.push_back(make_singular(cd, n));
      }
    }
  }
  for (int k = 0; k < 60; ++k) {
    CorpusEntry e = random_diagram(rng, 3 + rng.below(2), 2 + rng.below(std::max(1, small)), 30);
    Diagram d = e.diagram.diagram;
    for (std::size_t c = 0; c < d.components().size(); ++c)
      if (rng.chance(1, 2) && !d.is_loop_arc(d.components()[c].front())) d = reverse_component(d, static_cast<int>(c));
    pool.emplace_back(d, e.diagram.coloration());
  }
  shuffle(pool, rng);
  // Full twist on three strands: three components, so every orientation
  // pattern of an R3/R4 triangle shows up somewhere. Goes first.
  {
    std::vector<ColoredDiagram> twist;
    for (const Diagram& d : all_orientations(braid_closure(3, {1, 2, 1, 2, 1, 2}))) {
      ColoredDiagram cd(d, Coloration(d.components().size(), 0));
      twist.push_back(cd);
      for (int n = 0; n < cd.diagram.node_count(); ++n) twist.push_back(make_singular(cd, n));
    }
    pool.insert(pool.begin(), twist.begin(), twist.end());
  }

  const auto required = required_move_variants();
  std::set<std::string> missing(required.begin(), required.end());
  int triples = 0;
  for (int round = 0; round < 2; ++round) {
    for (const auto& d : pool) {
      if (round == 0 && triples >= o.move_triples) break;
      if (round == 1 && missing.empty()) break;
      std::map<std::string, std::vector<Move>> groups;
      for (auto& m : enumerate_moves(d.diagram)) groups[std::string(move_name(m.kind)) + "/" + m.variant].push_back(m);
      if (round == 1 && std::none_of(groups.begin(), groups.end(), [&](const auto& g) { return missing.count(g.first) > 0; }))
        continue;
      const Rational before = value_of(r, d);
      const bool classical = d.diagram.singular_count() == 0;
      const HomflyValue hbefore = classical ? homfly_polynomial(d.diagram) : HomflyValue();
      for (auto& [key, moves] : groups) {
        // Second round only chases uncovered variants.
        if (round == 1 && !missing.count(key)) continue;
        const Move& m = moves[static_cast<std::size_t>(rng.below(static_cast<int>(moves.size())))];
        const std::string where = print_colored(d) + "# move: " + m.describe() + "\n";
        ColoredDiagram after = apply_move(d, m);
        r.check(after.class_multiset() == d.class_multiset(), "move preserves colored components", where);
        r.check(rf_equals(value_of(r, after), before), "invariant unchanged by " + key, where);
        if (classical && (m.kind != MoveKind::R4 && m.kind != MoveKind::R5)) {
          r.check(rf_equals(homfly_polynomial(after.diagram), hbefore), "HOMFLY-PT unchanged by " + key, where);
          ++r.coverage["homfly/" + std::string(move_name(m.kind))];
        }
        ++r.coverage[key];
        missing.erase(key);
        ++triples;
      }
    }
  }
  for (const auto& v : missing) r.check(false, "move variant never exercised: " + v);
  r.notes.push_back(std::to_string(triples) + " (diagram, move, site) triples");
  return r;
}

// ---------------------------------------------------------------------------

SuiteResult verify_engines(const VerifyOptions& o) {
  SuiteResult r;
  r.name = "engines";
  Timer timer(r);
  int diagrams = 0, multi = 0;
  for (const auto& l : named_links()) {
    if (static_cast<int>(l.word.size()) > o.max_crossings) continue;
    for (const Diagram& d : all_orientations(l.diagram())) {
      for (const auto& c : all_colorations(static_cast<int>(d.components().size()))) {
        ColoredDiagram cd(d, c);
        const Rational a = value_of(r, cd);
        const Rational b = skein_recursive(cd);
        r.note_value(b, print_colored(cd));
        r.check(rf_equals(a, b), "state sum = recursion for " + l.name, print_colored(cd));
        ++diagrams;
        if (*std::max_element(c.begin(), c.end()) > 0) ++multi;
        ++r.coverage["classes=" + std::to_string(*std::max_element(c.begin(), c.end()) + 1)];
      }
    }
  }
  r.coverage["diagrams"] = diagrams;
  r.coverage["multi-colored"] = multi;
  return r;
}

// ---------------------------------------------------------------------------

SuiteResult verify_confluence(const VerifyOptions& o) {
  SuiteResult r;
  r.name = "confluence";
  Timer timer(r);
  std::vector<CorpusEntry> graphs = graph_corpus(5);
  // Ambient graphs where only triangle slides apply.
  Diagram borromean = named_link("borromean").diagram();
  for (const Diagram& d : all_orientations(borromean)) {
    std::vector<int> all;
    Diagram g = d;
    auto nodes = g.nodes();
    for (auto& n : nodes) n.kind = NodeKind::Singular;
    g = Diagram(std::move(nodes), d.loops());
    for (const auto& c : all_colorations(3)) graphs.push_back({"borromean-graph", ColoredDiagram(g, c), 0, 6});
  }
  std::uint64_t seed = o.seed * 0x9e3779b97f4a7c15ull + 1;
  for (const auto& e : graphs) {
    const std::string where = print_colored(e.diagram);
    const Rational base = GraphEvaluator().evaluate(e.diagram);
    r.note_value(base, where);
    for (int k = 0; k < 3; ++k) {
      GraphEvaluator ev(EvalOptions{++seed, nullptr});
      r.check(rf_equals(ev.evaluate(e.diagram), base), "strategy " + std::to_string(k) + " agrees", where);
    }
    if (e.singular <= 5) ++r.coverage["graphs<=5 vertices"];
    // Close each local relation in this ambient graph.
    std::vector<ReducibleSite> sites = local_sites(e.diagram);
    if (sites.empty() && e.diagram.diagram.node_count() > 0) sites.push_back(find_reducible(e.diagram));
    std::set<SiteKind> done;
    for (const auto& s : sites) {
      if (!done.insert(s.kind).second) continue;
      GraphEvaluator ev(EvalOptions{++seed, nullptr});
      Rational rhs;
      for (const auto& t : reduce_once(e.diagram, s)) rhs += t.weight * ev.evaluate(t.diagram);
      r.check(rf_equals(rhs, base), std::string("relation closes: ") + site_name(s.kind), where);
      ++r.coverage[std::string("closed ") + site_name(s.kind)];
    }
  }

  // Closed forms.
  const Rational t = vars::t();
  const Rational ts = t + t.inverse();
  auto kink = make_singular(monochrome(named_link("kink+").diagram()), 0);
  r.check(rf_equals(evaluate_graph(kink), c_loop()), "curl = C_LOOP", print_colored(kink));
  auto par = ColoredDiagram(named_link("hopf+").diagram(), Coloration{0, 1});
  par = make_singular(make_singular(par, 0), 1);
  r.check(rf_equals(evaluate_graph(par), delta_diff() + ts * delta_same() + ts * c_loop()),
          "closed parallel bigon, two colors", print_colored(par));
  auto par1 = ColoredDiagram(named_link("hopf+").diagram(), Coloration{0, 0});
  par1 = make_singular(make_singular(par1, 0), 1);
  r.check(rf_equals(evaluate_graph(par1), delta_same() + ts * delta_same() + ts * c_loop()),
          "closed parallel bigon, one color", print_colored(par1));
  // Two circles crossing twice, read through an anti-parallel bigon: the
  // turnback closes to a single circle.
  r.check(rf_equals(evaluate_graph(par), delta_diff() + (ts + Rational(1)) * delta_same() + c_bigon_antipar()),
          "closed anti-parallel bigon, two colors", print_colored(par));
  r.coverage["closed forms"] = 4;
  return r;
}

// ---------------------------------------------------------------------------

SuiteResult verify_homfly(const VerifyOptions& o) {
  SuiteResult r;
  r.name = "homfly";
  Timer timer(r);
  const HomflyValue l = vars::l(), m = vars::m();
  auto hand = [&](const char* name, const char* expect) {
    const Diagram d = named_link(name).diagram();
    r.check(rf_equals(homfly_polynomial(d), parse_homfly(expect)), std::string("HOMFLY-PT of ") + name + " = " + expect,
            print_colored(monochrome(d)));
  };
  hand("unknot", "1");
  hand("unlink2", "-(l + l^-1)/m");
  hand("hopf+", "(l^-1 + l^-3)/m - l^-1*m");
  hand("trefoil", "-2*l^-2 - l^-4 + l^-2*m^2");
  r.coverage["hand values"] = 4;

  const int limit = std::max(7, o.max_crossings);
  for (const auto& link : named_links()) {
    if (static_cast<int>(link.word.size()) > limit) continue;
    for (const Diagram& d : all_orientations(link.diagram())) {
      const HomflyValue p = homfly_polynomial(d);
      const std::string where = print_colored(monochrome(d));
      r.check(is_laurent_in_l(p), "HOMFLY-PT is Laurent for " + link.name, where);
      const Rational specialized = homfly_specialize(p);
      r.note_value(specialized, where);
      r.check(substitution_check(d, Coloration(d.components().size(), 0)), "specialization matches for " + link.name, where);
      ++r.coverage["substitution"];
    }
  }

  Rng rng(o.seed ^ 0x40f1ull);
  auto pool = classical_corpus(o.max_crossings);
  for (int k = 0; k < 100; ++k) {
    const auto& e = pool[static_cast<std::size_t>(rng.below(static_cast<int>(pool.size())))];
    if (e.classical == 0) continue;
    const ColoredDiagram& d = e.diagram;
    const int n = rng.below(d.diagram.node_count());
    const NodeKind kind = d.diagram.node(n).kind;
    const ColoredDiagram pos = kind == NodeKind::Positive ? d : switch_crossing(d, n);
    const ColoredDiagram neg = kind == NodeKind::Negative ? d : switch_crossing(d, n);
    const HomflyValue sum = l * homfly_polynomial(pos.diagram) + l.inverse() * homfly_polynomial(neg.diagram) +
                            m * homfly_polynomial(oriented_smoothing(d, n).diagram);
    r.check(sum.is_zero(), "l P+ + l^-1 P- + m P0 = 0", print_colored(d) + "# site: node " + std::to_string(n) + "\n");
    ++r.coverage["skein sites"];
  }
  return r;
}

// ---------------------------------------------------------------------------

SuiteResult verify_singular(const VerifyOptions& o) {
  SuiteResult r;
  r.name = "singular";
  Timer timer(r);
  const int classical = std::min(5, std::max(0, o.max_crossings - 1));
  for (const auto& e : singular_corpus(3, classical)) {
    const std::string where = print_colored(e.diagram);
    EngineOptions o1, o2;
    o1.resolution = Resolution::Rel1;
    o2.resolution = Resolution::Rel2;
    const Rational a = skein_recursive(e.diagram, o1);
    const Rational b = skein_recursive(e.diagram, o2);
    r.note_value(a, where);
    r.note_value(b, where);
    r.check(rf_equals(a, b), "Rel1 = Rel2 for " + e.name, where);
    r.check(rf_equals(a, value_of(r, e.diagram)), "recursion = state sum for " + e.name, where);
    ++r.coverage["vertices=" + std::to_string(e.singular)];
  }
  return r;
}

std::vector<SuiteResult> run_suites(const std::string& which, const VerifyOptions& o) {
  std::vector<SuiteResult> out;
  const bool all = which == "all";
  if (!all && which != "moves" && which != "relations" && which != "oracles")
    throw std::invalid_argument("unknown suite '" + which + "' (expected moves, relations, oracles or all)");
  if (all || which == "relations") {
    out.push_back(verify_axioms(o));
    out.push_back(verify_relations(o));
    out.push_back(verify_confluence(o));
  }
  if (all || which == "moves") out.push_back(verify_moves(o));
  if (all || which == "oracles") {
    out.push_back(verify_engines(o));
    out.push_back(verify_homfly(o));
    out.push_back(verify_singular(o));
  }
  return out;
}

}  // namespace tangle
