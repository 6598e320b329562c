#include "tangle/corpus.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "tangle/canonical.hpp"

namespace tangle {

Rng::Rng(std::uint64_t seed) : state_(seed) {}

// splitmix64
std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int Rng::below(int n) {
  if (n <= 0) throw std::invalid_argument("Rng::below: empty range");
  return static_cast<int>(next() % static_cast<std::uint64_t>(n));
}

Diagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw DiagramError("braid needs at least one strand");
  std::vector<int> cur(static_cast<std::size_t>(strands));
  for (int p = 0; p < strands; ++p) cur[static_cast<std::size_t>(p)] = p;
  int next = strands;
  std::vector<Node> nodes;
  std::vector<bool> touched(static_cast<std::size_t>(strands), false);
  for (int letter : word) {
    const int k = letter > 0 ? letter : -letter;
    if (k < 1 || k >= strands) throw DiagramError("braid letter " + std::to_string(letter) + " out of range");
    const auto p = static_cast<std::size_t>(k - 1);
    const int np = next++, np1 = next++;
    // Left strand moves right, right strand moves left; ccw from the
    // incoming left strand.
    Node n;
    n.kind = letter > 0 ? NodeKind::Positive : NodeKind::Negative;
    n.arcs = {cur[p], cur[p + 1], np1, np};
    nodes.push_back(n);
    touched[p] = touched[p + 1] = true;
    cur[p] = np;
    cur[p + 1] = np1;
  }
  // Close up: the final arc at each position is the initial one.
  std::map<int, int> close;
  for (int p = 0; p < strands; ++p) close[cur[static_cast<std::size_t>(p)]] = p;
  // Renumber so ids stay contiguous.
  std::map<int, int> id;
  auto canon = [&](int a) {
    auto c = close.find(a);
    if (c != close.end()) a = c->second;
    auto [it, inserted] = id.try_emplace(a, static_cast<int>(id.size()));
    return it->second;
  };
  for (auto& n : nodes)
    for (auto& a : n.arcs) a = canon(a);
  std::vector<int> loops;
  for (int p = 0; p < strands; ++p)
    if (!touched[static_cast<std::size_t>(p)]) loops.push_back(canon(p));
  return Diagram(std::move(nodes), std::move(loops));
}

Diagram reverse_component(const Diagram& d, int component) {
  std::vector<Node> nodes;
  for (const Node& n : d.nodes()) {
    std::array<bool, 4> in{true, true, false, false};
    for (int k = 0; k < 4; ++k)
      if (d.component_of(n.arcs[static_cast<std::size_t>(k)]) == component) in[static_cast<std::size_t>(k)] = !in[static_cast<std::size_t>(k)];
    nodes.push_back(make_node(!n.classical(), n.arcs, in, n.classical() ? n.over_in_slot() : 0));
  }
  return Diagram(std::move(nodes), d.loops());
}

std::vector<Diagram> all_orientations(const Diagram& d) {
  std::vector<int> comps;
  for (std::size_t c = 0; c < d.components().size(); ++c)
    if (!d.is_loop_arc(d.components()[c].front())) comps.push_back(static_cast<int>(c));
  std::vector<Diagram> out;
  for (unsigned mask = 0; mask < (1u << comps.size()); ++mask) {
    Diagram r = d;
    for (std::size_t k = 0; k < comps.size(); ++k)
      if (mask & (1u << k)) r = reverse_component(r, comps[k]);
    out.push_back(std::move(r));
  }
  return out;
}

const std::vector<NamedLink>& named_links() {
  static const std::vector<NamedLink> links = {
      {"unknot", 1, {}},
      {"unlink2", 2, {}},
      {"unlink3", 3, {}},
      {"kink+", 2, {1}},
      {"kink-", 2, {-1}},
      {"unlink2-r2", 2, {1, -1}},
      {"hopf+", 2, {1, 1}},
      {"hopf-", 2, {-1, -1}},
      {"hopf+-loop", 3, {1, 1}},
      {"trefoil", 2, {1, 1, 1}},
      {"trefoil-left", 2, {-1, -1, -1}},
      {"figure-eight", 3, {1, -2, 1, -2}},
      {"torus-2-4", 2, {1, 1, 1, 1}},
      {"chain3", 3, {1, 1, 2, 2}},
      {"chain3-mixed", 3, {1, 1, -2, -2}},
      {"braid3[1,2,1]", 3, {1, 2, 1}},
      {"braid3[1,2,-1,2]", 3, {1, 2, -1, 2}},
      {"cinquefoil", 2, {1, 1, 1, 1, 1}},
      {"three-twist", 3, {1, 1, 1, 2, -1, 2}},
      {"whitehead-like[1,1,-2,1,-2]", 3, {1, 1, -2, 1, -2}},
      {"borromean", 3, {1, -2, 1, -2, 1, -2}},
      {"torus-2-6", 2, {1, 1, 1, 1, 1, 1}},
      {"stevedore", 4, {1, 1, 2, -1, -3, 2, -3}},
      {"knot-6-2", 3, {1, 1, 1, -2, 1, -2}},
      {"knot-6-3", 3, {1, 1, -2, 1, -2, -2}},
      {"torus-2-7", 2, {1, 1, 1, 1, 1, 1, 1}},
  };
  return links;
}

const NamedLink& named_link(const std::string& name) {
  for (const auto& l : named_links())
    if (l.name == name) return l;
  throw std::out_of_range("unknown corpus link '" + name + "'");
}

std::vector<Coloration> all_colorations(int k) {
  std::vector<Coloration> out;
  if (k <= 0) return {Coloration{}};
  Coloration c(static_cast<std::size_t>(k), 0);
  while (true) {
    out.push_back(c);
    // Next restricted growth string.
    int i = k - 1;
    for (; i > 0; --i) {
      int mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, c[static_cast<std::size_t>(j)]);
      if (c[static_cast<std::size_t>(i)] <= mx) {
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = 0;
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

namespace {

std::string coloring_tag(const Coloration& c) {
  std::string s = "{";
  for (int v : c) s += static_cast<char>('a' + v);
  return s + "}";
}

int count_kind(const Diagram& d, bool singular) { return singular ? d.singular_count() : d.classical_count(); }

CorpusEntry entry(const std::string& name, const Diagram& d, const Coloration& c) {
  CorpusEntry e;
  e.name = name + coloring_tag(c);
  e.diagram = ColoredDiagram(d, c);
  e.classical = count_kind(d, false);
  e.singular = count_kind(d, true);
  return e;
}

Diagram singularize(const Diagram& d, const std::vector<int>& which) {
  auto nodes = d.nodes();
  for (int n : which) nodes[static_cast<std::size_t>(n)].kind = NodeKind::Singular;
  return Diagram(std::move(nodes), d.loops());
}

}  // namespace

std::vector<CorpusEntry> classical_corpus(int max_crossings) {
  std::vector<CorpusEntry> out;
  for (const auto& l : named_links()) {
    if (static_cast<int>(l.word.size()) > max_crossings) continue;
    Diagram d = l.diagram();
    for (const auto& c : all_colorations(static_cast<int>(d.components().size()))) out.push_back(entry(l.name, d, c));
  }
  return out;
}

std::vector<CorpusEntry> singular_corpus(int max_vertices, int max_classical) {
  std::vector<CorpusEntry> out;
  for (const auto& l : named_links()) {
    const int n = static_cast<int>(l.word.size());
    if (n == 0 || n > max_vertices + max_classical) continue;
    Diagram d = l.diagram();
    const int k = static_cast<int>(d.components().size());
    std::vector<Coloration> colorings{Coloration(static_cast<std::size_t>(k), 0)};
    if (k > 1) {
      Coloration distinct;
      for (int i = 0; i < k; ++i) distinct.push_back(i);
      colorings.push_back(distinct);
    }
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> which;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) which.push_back(i);
      const int v = static_cast<int>(which.size());
      if (v > max_vertices || n - v > max_classical) continue;
      Diagram s = singularize(d, which);
      std::string name = l.name + "/V";
      for (int i : which) name += std::to_string(i);
      for (const auto& c : colorings) out.push_back(entry(name, s, c));
    }
  }
  return out;
}

std::vector<CorpusEntry> graph_corpus(int max_vertices) {
  std::vector<CorpusEntry> out;
  std::set<std::string> seen;
  auto add = [&](const std::string& name, const Diagram& d) {
    for (const auto& c : all_colorations(static_cast<int>(d.components().size()))) {
      CorpusEntry e = entry(name, d, c);
      if (seen.insert(canonical_form(e.diagram)).second) out.push_back(std::move(e));
    }
  };
  for (const auto& l : named_links()) {
    const int n = static_cast<int>(l.word.size());
    if (n > max_vertices) continue;
    std::vector<int> all;
    for (int i = 0; i < n; ++i) all.push_back(i);
    add(l.name + "/all-V", singularize(l.diagram(), all));
  }
  // A few extra braid shapes with every letter singular.
  Rng rng(0x5eed);
  for (int k = 0; k < 24; ++k) {
    const int strands = 2 + rng.below(3);
    const int len = 1 + rng.below(max_vertices);
    std::vector<int> word;
    std::string name = "graph-braid" + std::to_string(strands) + "[";
    for (int j = 0; j < len; ++j) {
      word.push_back(1 + rng.below(strands - 1));
      name += (j ? "," : "") + std::to_string(word.back());
    }
    Diagram d = braid_closure(strands, word);
    std::vector<int> all;
    for (int i = 0; i < d.node_count(); ++i) all.push_back(i);
    add(name + "]", singularize(d, all));
  }
  return out;
}

CorpusEntry random_diagram(Rng& rng, int strands, int length, int singular_percent) {
  std::vector<int> word;
  std::vector<int> singular;
  std::string name = "random" + std::to_string(strands) + "[";
  for (int j = 0; j < length; ++j) {
    const int k = 1 + rng.below(strands - 1);
    const bool singular_letter = rng.below(100) < singular_percent;
    const int letter = rng.chance(1, 2) ? k : -k;
    word.push_back(letter);
    if (singular_letter) singular.push_back(j);
    name += (j ? "," : "") + std::string(singular_letter ? "v" : "") + std::to_string(letter);
  }
  Diagram d = singularize(braid_closure(strands, word), singular);
  const int comps = static_cast<int>(d.components().size());
  Coloration c;
  for (int i = 0; i < comps; ++i) c.push_back(rng.below(comps));
  // Relabel to first-appearance order.
  std::map<int, int> relabel;
  for (int& v : c) v = relabel.try_emplace(v, static_cast<int>(relabel.size())).first->second;
  return entry(name + "]", d, c);
}

}  // namespace tangle
