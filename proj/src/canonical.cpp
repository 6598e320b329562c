#include "tangle/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace tangle {

namespace {

constexpr std::size_t kCombinationCap = 2048;

void put(std::string& out, int v) {
  if (v >= 0 && v < 250) {
    out.push_back(static_cast<char>(v));
    return;
  }
  out.push_back(static_cast<char>(250));
  auto u = static_cast<std::uint32_t>(v);
  for (int k = 0; k < 4; ++k) out.push_back(static_cast<char>((u >> (8 * k)) & 0xff));
}

class Encoder {
 public:
  explicit Encoder(const ColoredDiagram& d) : d_(d), index_(static_cast<std::size_t>(d.diagram.node_count()), -1) {}

  // Breadth-first numbering from `start`; slots are intrinsic, so the start
  // node fixes the whole numbering of its piece.
  void encode(const std::vector<int>& piece, int start, std::map<int, int>& relabel, std::string& out) {
    const Diagram& g = d_.diagram;
    for (int n : piece) index_[static_cast<std::size_t>(n)] = -1;
    std::vector<int> order{start};
    index_[static_cast<std::size_t>(start)] = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const Node& node = g.node(order[k]);
      for (int s = 0; s < 4; ++s) {
        const int a = node.arcs[static_cast<std::size_t>(s)];
        const Endpoint other = s < 2 ? g.tail(a) : g.head(a);
        if (index_[static_cast<std::size_t>(other.node)] < 0) {
          index_[static_cast<std::size_t>(other.node)] = static_cast<int>(order.size());
          order.push_back(other.node);
        }
      }
    }
    put(out, static_cast<int>(order.size()));
    for (int v : order) {
      const Node& node = g.node(v);
      out.push_back(static_cast<char>(node.kind));
      for (int s = 0; s < 4; ++s) {
        const int a = node.arcs[static_cast<std::size_t>(s)];
        const Endpoint other = s < 2 ? g.tail(a) : g.head(a);
        put(out, index_[static_cast<std::size_t>(other.node)]);
        out.push_back(static_cast<char>(other.slot));
        const int cls = d_.color_class(a);
        auto [it, inserted] = relabel.try_emplace(cls, static_cast<int>(relabel.size()));
        put(out, it->second);
      }
    }
  }

 private:
  const ColoredDiagram& d_;
  std::vector<int> index_;
};

struct PieceInfo {
  std::vector<int> nodes;
  std::string shape;
  std::vector<int> best_starts;
};

void encode_loops(const ColoredDiagram& d, const std::map<int, int>& relabel, std::string& out) {
  std::map<int, int> per_class;
  for (int a : d.diagram.loops()) ++per_class[d.color_class(a)];
  std::vector<int> known(relabel.size(), 0);
  std::vector<int> fresh;
  for (auto [cls, count] : per_class) {
    auto it = relabel.find(cls);
    if (it != relabel.end()) {
      known[static_cast<std::size_t>(it->second)] = count;
    } else {
      fresh.push_back(count);
    }
  }
  std::sort(fresh.begin(), fresh.end());
  out.push_back('|');
  for (int c : known) put(out, c);
  out.push_back('|');
  for (int c : fresh) put(out, c);
}

}  // namespace

std::string canonical_form(const ColoredDiagram& d) {
  Encoder enc(d);
  std::vector<PieceInfo> pieces;
  for (auto& nodes : d.diagram.connected_pieces()) {
    PieceInfo p;
    p.nodes = std::move(nodes);
    for (int start : p.nodes) {
      std::map<int, int> local;
      std::string code;
      enc.encode(p.nodes, start, local, code);
      if (p.best_starts.empty() || code < p.shape) {
        p.shape = std::move(code);
        p.best_starts = {start};
      } else if (code == p.shape) {
        p.best_starts.push_back(start);
      }
    }
    pieces.push_back(std::move(p));
  }
  std::sort(pieces.begin(), pieces.end(), [](const PieceInfo& a, const PieceInfo& b) { return a.shape < b.shape; });

  // Combinations: orderings within runs of equal shapes, times start choices.
  std::size_t combos = 1;
  bool capped = false;
  for (std::size_t i = 0; i < pieces.size() && !capped; ++i) {
    combos *= pieces[i].best_starts.size();
    std::size_t run = 1;
    while (i + run < pieces.size() && pieces[i + run].shape == pieces[i].shape) ++run;
    for (std::size_t k = 2; k <= run && !capped; ++k) {
      combos *= k;
      capped = combos > kCombinationCap;
    }
    capped = capped || combos > kCombinationCap;
  }

  std::vector<std::size_t> order(pieces.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  std::string best;
  bool have_best = false;
  auto emit = [&](const std::vector<std::size_t>& ord, const std::vector<std::size_t>& choice) {
    std::map<int, int> relabel;
    std::string out;
    put(out, static_cast<int>(ord.size()));
    for (std::size_t k = 0; k < ord.size(); ++k) {
      const PieceInfo& p = pieces[ord[k]];
      enc.encode(p.nodes, p.best_starts[choice[k]], relabel, out);
    }
    encode_loops(d, relabel, out);
    if (!have_best || out < best) {
      best = std::move(out);
      have_best = true;
    }
  };

  if (capped) {
    emit(order, std::vector<std::size_t>(pieces.size(), 0));
    return best;
  }

  // Outer loop: permutations that keep the shape order (permute within runs).
  auto next_within_runs = [&](std::vector<std::size_t>& ord) {
    // Advance the rightmost run that has a next permutation; reset runs to its right.
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    for (std::size_t i = 0; i < ord.size();) {
      std::size_t j = i + 1;
      while (j < ord.size() && pieces[j].shape == pieces[i].shape) ++j;
      runs.emplace_back(i, j);
      i = j;
    }
    for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
      if (std::next_permutation(ord.begin() + static_cast<std::ptrdiff_t>(it->first),
                                ord.begin() + static_cast<std::ptrdiff_t>(it->second)))
        return true;
      // next_permutation already wrapped this run back to sorted order
    }
    return false;
  };

  do {
    std::vector<std::size_t> choice(pieces.size(), 0);
    while (true) {
      emit(order, choice);
      std::size_t k = 0;
      for (; k < choice.size(); ++k) {
        if (++choice[k] < pieces[order[k]].best_starts.size()) break;
        choice[k] = 0;
      }
      if (k == choice.size()) break;
    }
  } while (next_within_runs(order));
  return best;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string canonical_digest(const ColoredDiagram& d) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canonical_form(d))));
  return buf;
}

}  // namespace tangle
