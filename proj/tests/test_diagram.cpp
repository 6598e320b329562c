#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "tangle/canonical.hpp"
#include "tangle/corpus.hpp"
#include "tangle/moves.hpp"

using namespace tangle;

namespace {

ColoredDiagram one_color(const Diagram& d) {
  return ColoredDiagram(d, Coloration(d.components().size(), 0));
}

// Same diagram with arcs renamed and nodes shuffled.
ColoredDiagram scramble(const ColoredDiagram& cd, Rng& rng) {
  const Diagram& d = cd.diagram;
  std::vector<int> perm(static_cast<std::size_t>(d.arc_count()));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.below(static_cast<int>(i)))]);
  std::vector<Node> nodes = d.nodes();
  for (auto& n : nodes)
    for (auto& a : n.arcs) a = perm[static_cast<std::size_t>(a)];
  for (std::size_t i = nodes.size(); i > 1; --i) std::swap(nodes[i - 1], nodes[static_cast<std::size_t>(rng.below(static_cast<int>(i)))]);
  std::vector<int> loops;
  for (int l : d.loops()) loops.push_back(perm[static_cast<std::size_t>(l)]);
  std::vector<int> labels(cd.arc_label.size());
  for (std::size_t a = 0; a < labels.size(); ++a) labels[static_cast<std::size_t>(perm[a])] = cd.arc_label[a];
  return ColoredDiagram(Diagram(std::move(nodes), std::move(loops)), labels, cd.partition);
}

// Two circles joined by an anti-parallel pair of vertices.
ColoredDiagram antiparallel_pair() {
  auto d = one_color(named_link("unlink2").diagram());
  for (const auto& m : enumerate_moves(d.diagram))
    if (m.kind == MoveKind::R2Add && m.variant == "anti/over") {
      auto r = apply_move(d, m);
      return make_singular(make_singular(r, 0), 1);
    }
  throw std::logic_error("no anti-parallel R2 site");
}

}  // namespace

TEST_CASE("parse: unknot and Hopf link") {
  auto u = parse_diagram("O 0\ncolor 0 red\n");
  CHECK(u.diagram.components().size() == 1);
  CHECK(u.color_names == std::vector<std::string>{"red"});

  auto h = parse_diagram("X+ 1 3 2 4\nX+ 3 1 4 2\ncolor 0 a\ncolor 1 b\n");
  CHECK(h.diagram.components().size() == 2);
  CHECK(h.diagram.is_planar());
  CHECK(h.coloration == Coloration{0, 1});
}

TEST_CASE("parse: errors carry positions") {
  CHECK_THROWS_AS(parse_diagram("X+ 1 2 3 4\ncolor 0 a\n"), InputError);
  CHECK_THROWS_AS(parse_diagram("O 0\n"), InputError);
  CHECK_THROWS_AS(parse_diagram("Q 1 2\n"), InputError);
  try {
    parse_diagram("O 0\ncolor 0 a\nX+ 1 2 x 4\n");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 8);
  }
}

TEST_CASE("braid closures: components and planarity") {
  CHECK(named_link("unknot").diagram().components().size() == 1);
  CHECK(named_link("trefoil").diagram().components().size() == 1);
  CHECK(named_link("figure-eight").diagram().components().size() == 1);
  CHECK(named_link("hopf+").diagram().components().size() == 2);
  CHECK(named_link("borromean").diagram().components().size() == 3);
  CHECK(named_link("chain3").diagram().components().size() == 3);
  CHECK(named_link("hopf+-loop").diagram().components().size() == 3);
  CHECK(named_link("stevedore").diagram().components().size() == 1);
  for (const auto& l : named_links()) {
    INFO(l.name);
    CHECK(l.diagram().is_planar());
  }
}

TEST_CASE("colorations are set partitions") {
  CHECK(all_colorations(1).size() == 1);
  CHECK(all_colorations(3).size() == 5);
  CHECK(all_colorations(4).size() == 15);
}

TEST_CASE("smoothing changes the component count by one") {
  for (const auto& e : classical_corpus(6)) {
    const auto k = e.diagram.diagram.components().size();
    for (int n = 0; n < e.diagram.diagram.node_count(); ++n) {
      auto s = oriented_smoothing(e.diagram, n);
      const auto k2 = s.diagram.components().size();
      CHECK((k2 == k + 1 || k2 + 1 == k));
      CHECK(s.diagram.is_planar());
    }
  }
  auto hopf = one_color(named_link("hopf+").diagram());
  CHECK(oriented_smoothing(hopf, 0).diagram.components().size() == 1);
  auto kink = one_color(named_link("kink+").diagram());
  auto split = oriented_smoothing(kink, 0);
  CHECK(split.diagram.components().size() == 2);
  CHECK(split.diagram.loops().size() == 2);
}

TEST_CASE("switching crossings") {
  auto hp = one_color(named_link("hopf+").diagram());
  auto hm = one_color(named_link("hopf-").diagram());
  auto both = switch_crossing(switch_crossing(hp, 0), 1);
  CHECK(canonical_form(both) == canonical_form(hm));
  CHECK(canonical_form(switch_crossing(switch_crossing(hp, 0), 0)) == canonical_form(hp));
  auto v = make_singular(hp, 0);
  CHECK(v.diagram.singular_count() == 1);
  CHECK_THROWS_AS(make_singular(v, 0), DiagramError);
  CHECK_THROWS_AS(switch_crossing(v, 0), DiagramError);
}

TEST_CASE("print/parse round trip preserves the canonical form") {
  for (const auto& e : classical_corpus(6)) {
    const auto text = print_colored(e.diagram);
    auto back = parse_diagram(text);
    CHECK(canonical_form(ColoredDiagram(back.diagram, back.coloration)) == canonical_form(e.diagram));
    auto json = parse_diagram_any(print_diagram_json(e.diagram.diagram, e.diagram.coloration()));
    CHECK(canonical_form(ColoredDiagram(json.diagram, json.coloration)) == canonical_form(e.diagram));
  }
}

TEST_CASE("canonical form: relabeling invariance and discrimination") {
  Rng rng(11);
  for (const auto& e : singular_corpus(2, 3)) {
    for (int k = 0; k < 3; ++k) CHECK(canonical_form(scramble(e.diagram, rng)) == canonical_form(e.diagram));
  }
  auto a = ColoredDiagram(named_link("hopf+").diagram(), Coloration{0, 1});
  auto b = ColoredDiagram(named_link("hopf+").diagram(), Coloration{1, 0});
  CHECK(canonical_form(a) == canonical_form(b));
  auto same = ColoredDiagram(named_link("hopf+").diagram(), Coloration{0, 0});
  CHECK(canonical_form(a) != canonical_form(same));
  // Two circles meeting twice: reversing one circle is a rotation of the
  // sphere, so the parallel and anti-parallel pictures coincide.
  auto par = one_color(named_link("hopf+").diagram());
  par = make_singular(make_singular(par, 0), 1);
  auto anti = antiparallel_pair();
  CHECK(canonical_form(par) == canonical_form(anti));
  CHECK(canonical_form(par) != canonical_form(make_singular(one_color(named_link("hopf+").diagram()), 0)));
}

TEST_CASE("moves keep diagrams planar and preserve colored components") {
  std::vector<ColoredDiagram> samples;
  for (const auto& name : {"unknot", "kink+", "hopf+", "trefoil", "figure-eight", "chain3-mixed", "braid3[1,2,1]"})
    samples.push_back(one_color(named_link(name).diagram()));
  for (const auto& e : singular_corpus(2, 2)) samples.push_back(e.diagram);
  std::map<std::string, int> seen;
  for (const auto& d : samples) {
    const auto before = d.class_multiset();
    for (const auto& m : enumerate_moves(d.diagram)) {
      INFO(print_colored(d), m.describe());
      auto r = apply_move(d, m);
      CHECK(r.diagram.is_planar());
      CHECK(r.class_multiset() == before);
      ++seen[std::string(move_name(m.kind)) + "/" + m.variant];
    }
  }
  for (const char* kind : {"R1+", "R1-", "R2+", "R2-", "R3", "R4", "R5"}) {
    bool any = false;
    for (const auto& [k, n] : seen) any = any || k.rfind(std::string(kind) + "/", 0) == 0;
    CHECK_MESSAGE(any, std::string(kind));
  }
}

TEST_CASE("R1 insertion then removal is the identity") {
  auto d = one_color(named_link("trefoil").diagram());
  for (const auto& m : enumerate_moves(d.diagram)) {
    if (m.kind != MoveKind::R1Add) continue;
    auto r = apply_move(d, m);
    const int n = r.diagram.node_count() - 1;
    Move back;
    back.kind = MoveKind::R1Remove;
    back.node = n;
    CHECK(canonical_form(apply_move(r, back)) == canonical_form(d));
  }
}

TEST_CASE("moves at absent sites fail") {
  auto d = one_color(named_link("unknot").diagram());
  Move m;
  m.kind = MoveKind::R2Remove;
  m.bigon = BigonSite{0, 1, 0, 1, true};
  CHECK_THROWS_AS(apply_move(d, m), DiagramError);
  m.kind = MoveKind::R1Remove;
  m.node = 0;
  CHECK_THROWS_AS(apply_move(d, m), DiagramError);
}

TEST_CASE("non-planar codes are rejected") {
  // Two loops at one vertex, interleaved in the cyclic order: needs a torus.
  CHECK_THROWS_AS(parse_diagram("V 0 1 0 1\ncolor 0 a\n"), InputError);
  CHECK_NOTHROW(parse_diagram("V 0 1 1 0\ncolor 0 a\n"));
}
