#include <doctest.h>

#include <sstream>

#include "tangle/canonical.hpp"
#include "tangle/corpus.hpp"
#include "tangle/graph_eval.hpp"
#include "tangle/homfly.hpp"
#include "tangle/relations.hpp"
#include "tangle/skein.hpp"

using namespace tangle;

namespace {

ColoredDiagram colored(const std::string& name, Coloration c = {}) {
  Diagram d = named_link(name).diagram();
  if (c.empty()) c.assign(d.components().size(), 0);
  return ColoredDiagram(d, c);
}

ColoredDiagram all_vertices(const ColoredDiagram& cd) {
  auto nodes = cd.diagram.nodes();
  for (auto& n : nodes) n.kind = NodeKind::Singular;
  return ColoredDiagram(Diagram(std::move(nodes), cd.diagram.loops()), cd.coloration());
}

Rational P(const char* s) { return parse_swx(s); }

}  // namespace

TEST_CASE("unlink values") {
  CHECK(rf_equals(unlink_value({1}), Rational(1)));
  CHECK(rf_equals(unlink_value({1, 1}), P("1/(w*x)")));
  CHECK(rf_equals(unlink_value({1, 1, 1}), P("1/(w*x)^2")));
  CHECK(rf_equals(unlink_value({2}), named_constant("DELTA_SAME")));
  CHECK(rf_equals(unlink_value({2, 1}), named_constant("DELTA_SAME") * P("1/(w*x)")));
  CHECK_THROWS(unlink_value({}));
}

TEST_CASE("crossing expansion and resolutions") {
  ColoredDiagram k = colored("kink+");
  Terms t = expand_crossing(k, 0);
  REQUIRE(t.size() == 3);
  CHECK(rf_equals(t[0].weight, named_constant("POS_SMOOTH")));
  CHECK(rf_equals(t[2].weight, named_constant("POS_VERTEX_KEPT")));
  for (const auto& term : t) CHECK(term.diagram.diagram.classical_count() == 0);

  ColoredDiagram v = all_vertices(k);
  CHECK_THROWS_AS(expand_crossing(v, 0), DiagramError);
  CHECK_THROWS_AS(resolve_singular(k, 0, Resolution::Rel1), DiagramError);
  for (Resolution r : {Resolution::Rel1, Resolution::Rel2}) {
    Terms s = resolve_singular(v, 0, r);
    REQUIRE(s.size() == 3);
    CHECK(s[0].diagram.diagram.nodes()[0].kind == resolution_coefficients(r).sign);
  }
}

TEST_CASE("linear combinations merge isomorphic terms") {
  LinearCombination lc;
  ColoredDiagram h = colored("hopf+");
  lc.add(Rational(2), h);
  lc.add(Rational(3), colored("hopf+"));
  lc.add(Rational(1), colored("unknot"));
  lc.add(Rational(-1), colored("unknot"));
  CHECK(lc.size() == 2);
  Terms c = lc.collected();
  REQUIRE(c.size() == 1);
  CHECK(rf_equals(c[0].weight, Rational(5)));
}

TEST_CASE("reducible sites") {
  ColoredDiagram curl = all_vertices(colored("kink+"));
  CHECK(find_reducible(curl).kind == SiteKind::Loop);
  CHECK(rf_equals(evaluate_graph(curl), named_constant("C_LOOP")));

  ColoredDiagram bigon = all_vertices(colored("hopf+", {0, 1}));
  CHECK(find_reducible(bigon).kind == SiteKind::BigonParallel);

  // Only triangles in the all-vertex Borromean graph.
  ColoredDiagram borr = all_vertices(colored("borromean", {0, 1, 2}));
  CHECK(local_sites(borr).empty());
  CHECK(find_reducible(borr).kind == SiteKind::Triangle);
  CHECK(find_reducible(ColoredDiagram(Diagram({}, {0}), Coloration{0})).kind == SiteKind::None);
}

TEST_CASE("graph evaluation: strategies, memo, trace") {
  ColoredDiagram g = all_vertices(colored("borromean", {0, 1, 0}));
  const Rational base = evaluate_graph(g);
  CHECK(rf_is_t_expressible(base));
  for (std::uint64_t seed : {3ull, 17ull, 99ull}) CHECK(rf_equals(GraphEvaluator(EvalOptions{seed, nullptr}).evaluate(g), base));

  auto memo = std::make_shared<EvalMemo>();
  GraphEvaluator a({}, memo);
  a.evaluate(g);
  const std::size_t filled = memo->size();
  CHECK(filled > 0);
  GraphEvaluator({}, memo).evaluate(g);
  CHECK(memo->size() == filled);

  std::ostringstream log;
  GraphEvaluator(EvalOptions{0, &log}).evaluate(g);
  CHECK(log.str().find("triangle") != std::string::npos);
}

TEST_CASE("hand values of the invariant") {
  CHECK(rf_equals(invariant(colored("unknot")), Rational(1)));
  CHECK(rf_equals(invariant(colored("kink+")), Rational(1)));
  CHECK(rf_equals(invariant(colored("kink-")), Rational(1)));
  CHECK(rf_equals(invariant(colored("unlink2", {0, 1})), P("1/(w*x)")));
  CHECK(rf_equals(invariant(colored("unlink2-r2", {0, 1})), P("1/(w*x)")));
  CHECK(rf_equals(invariant(colored("hopf+")), P("w*(t^2*w^2 + t - 1 - t^2)/(1 - t)")));
}

TEST_CASE("engines agree; threads do not change the value") {
  for (const char* name : {"trefoil", "figure-eight", "chain3-mixed", "whitehead-like[1,1,-2,1,-2]"}) {
    Diagram d = named_link(name).diagram();
    for (const auto& c : all_colorations(static_cast<int>(d.components().size()))) {
      ColoredDiagram cd(d, c);
      const Rational ss = state_sum(cd);
      CHECK(rf_equals(ss, skein_recursive(cd)));
      EngineOptions four;
      four.threads = 4;
      CHECK(rf_equals(ss, state_sum(cd, four)));
      CHECK_NOTHROW(invariant(cd, Engine::Both));
    }
  }
}

TEST_CASE("singular resolutions agree") {
  ColoredDiagram cd = colored("trefoil");
  auto nodes = cd.diagram.nodes();
  nodes[1].kind = NodeKind::Singular;
  ColoredDiagram s(Diagram(nodes, cd.diagram.loops()), cd.coloration());
  EngineOptions r2;
  r2.resolution = Resolution::Rel2;
  const Rational a = skein_recursive(s), b = skein_recursive(s, r2);
  CHECK(rf_equals(a, b));
  CHECK(rf_equals(a, state_sum(s)));
}

TEST_CASE("descending diagrams") {
  CHECK(first_bad_crossing(named_link("unknot").diagram()) == -1);
  CHECK(first_bad_crossing(named_link("kink+").diagram()) == -1);
  CHECK(first_bad_crossing(named_link("trefoil").diagram()) >= 0);
}

TEST_CASE("HOMFLY-PT") {
  CHECK(homfly_polynomial(named_link("unknot").diagram()) == parse_homfly("1"));
  CHECK(homfly_polynomial(named_link("unlink2").diagram()) == parse_homfly("-(l + l^-1)/m"));
  CHECK(homfly_polynomial(named_link("hopf+").diagram()) == parse_homfly("(l^-1 + l^-3)/m - l^-1*m"));
  CHECK(homfly_polynomial(named_link("trefoil").diagram()) == parse_homfly("-2*l^-2 - l^-4 + l^-2*m^2"));
  // Mirror image: l -> l^-1.
  CHECK(homfly_polynomial(named_link("trefoil-left").diagram()) == parse_homfly("-2*l^2 - l^4 + l^2*m^2"));
  for (const char* name : {"trefoil", "figure-eight", "hopf+", "torus-2-4"}) {
    const Diagram d = named_link(name).diagram();
    CHECK(is_laurent_in_l(homfly_polynomial(d)));
    CHECK(substitution_check(d, Coloration(d.components().size(), 0)));
  }
  CHECK(rf_equals(homfly_specialize(parse_homfly("-(l + l^-1)/m")), named_constant("DELTA_SAME")));
  CHECK_THROWS_AS(substitution_check(named_link("hopf+").diagram(), {0, 1}), DiagramError);
  Diagram v = all_vertices(colored("kink+")).diagram;
  CHECK_THROWS_AS(homfly_polynomial(v), DiagramError);
}

TEST_CASE("corpus generation is seeded") {
  Rng a(42), b(42);
  for (int k = 0; k < 5; ++k) {
    CorpusEntry x = random_diagram(a, 3, 5, 30), y = random_diagram(b, 3, 5, 30);
    CHECK(canonical_form(x.diagram) == canonical_form(y.diagram));
  }
  CHECK(classical_corpus(6).size() >= 50);
  CHECK(singular_corpus(3, 5).size() >= 30);
  for (const auto& e : graph_corpus(5)) CHECK(e.diagram.diagram.classical_count() == 0);
  CHECK(all_orientations(named_link("chain3").diagram()).size() == 8);
  CHECK_THROWS_AS(named_link("no-such-link"), std::out_of_range);
}
