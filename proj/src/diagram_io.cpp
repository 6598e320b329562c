#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "tangle/diagram.hpp"

namespace tangle {

namespace {

struct RawNode {
  NodeKind kind;
  std::array<long, 4> labels;  // as written
  std::size_t line;
};

struct RawInput {
  std::vector<RawNode> nodes;
  std::vector<std::pair<long, std::size_t>> loops;                      // label, line
  std::vector<std::tuple<long, std::string, std::size_t>> colors;       // component, name, line
  std::size_t last_line = 0;
};

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

long parse_label(const Token& t, std::size_t line) {
  if (t.text.empty() || t.text.size() > 9 ||
      !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InputError("expected a non-negative integer, got '" + t.text + "'", line, t.column);
  return std::stol(t.text);
}

// Node slots from the written tuple: X+ (i j k l) has incoming i, l;
// X- has incoming i, j; V a b c d is (in, in, out, out).
std::array<long, 4> normalized_labels(const RawNode& n) {
  const auto& v = n.labels;
  if (n.kind == NodeKind::Positive) return {v[3], v[0], v[1], v[2]};
  return v;
}

ParsedDiagram build(const RawInput& in) {
  // Usage and orientation checks on the written labels.
  struct Use {
    int heads = 0, tails = 0, loops = 0;
    std::size_t first_line = 0, last_line = 0;
  };
  std::map<long, Use> uses;
  auto touch = [&](long label, std::size_t line) -> Use& {
    Use& u = uses[label];
    if (u.first_line == 0) u.first_line = line;
    u.last_line = line;
    return u;
  };
  for (const auto& n : in.nodes) {
    auto slots = normalized_labels(n);
    for (int s = 0; s < 4; ++s) {
      Use& u = touch(slots[static_cast<std::size_t>(s)], n.line);
      (s < 2 ? u.heads : u.tails)++;
    }
  }
  for (auto [label, line] : in.loops) touch(label, line).loops++;
  for (const auto& [label, u] : uses) {
    const int count = u.heads + u.tails + 2 * u.loops;
    if (count != 2 || (u.loops == 0 && (u.heads != 1 || u.tails != 1))) {
      if (count != 2)
        throw InputError("arc " + std::to_string(label) + " is used " + std::to_string(u.heads + u.tails + u.loops) +
                             " time(s); every arc must occur exactly twice",
                         u.first_line);
      throw InputError("arc " + std::to_string(label) + " has inconsistent orientation (" +
                           (u.heads == 2 ? "entered twice" : "left twice") + ")",
                       u.last_line);
    }
  }

  // Compact labels, order preserved.
  std::map<long, int> id;
  for (const auto& [label, u] : uses) id.emplace(label, static_cast<int>(id.size()));
  std::vector<Node> nodes;
  for (const auto& n : in.nodes) {
    Node node;
    node.kind = n.kind;
    auto slots = normalized_labels(n);
    for (int s = 0; s < 4; ++s) node.arcs[static_cast<std::size_t>(s)] = id.at(slots[static_cast<std::size_t>(s)]);
    nodes.push_back(node);
  }
  std::vector<int> loops;
  for (auto [label, line] : in.loops) loops.push_back(id.at(label));

  ParsedDiagram out;
  try {
    out.diagram = Diagram(std::move(nodes), std::move(loops));
  } catch (const InputError&) {
    throw;
  } catch (const DiagramError& e) {
    throw InputError(e.what(), in.last_line);
  }
  if (out.diagram.arc_count() == 0) throw InputError("empty diagram", in.last_line);

  // Every evaluator walks faces, so a code with no planar embedding is useless.
  if (!out.diagram.is_planar())
    throw InputError("not a planar diagram (ccw arc order gives the wrong Euler characteristic)", in.last_line);
  const auto ncomp = out.diagram.components().size();
  std::vector<std::optional<std::string>> names(ncomp);
  for (const auto& [comp, name, line] : in.colors) {
    if (comp < 0 || static_cast<std::size_t>(comp) >= ncomp)
      throw InputError("color for component " + std::to_string(comp) + ", but the diagram has " +
                           std::to_string(ncomp) + " component(s)",
                       line);
    if (names[static_cast<std::size_t>(comp)])
      throw InputError("component " + std::to_string(comp) + " colored twice", line);
    names[static_cast<std::size_t>(comp)] = name;
  }
  std::map<std::string, int> label_of;
  for (std::size_t c = 0; c < ncomp; ++c) {
    if (!names[c]) throw InputError("missing color for component " + std::to_string(c), in.last_line);
    auto [it, inserted] = label_of.try_emplace(*names[c], static_cast<int>(out.color_names.size()));
    if (inserted) out.color_names.push_back(*names[c]);
    out.coloration.push_back(it->second);
  }
  return out;
}

}  // namespace

ParsedDiagram parse_diagram(std::string_view text) {
  RawInput in;
  std::istringstream stream{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(stream, line)) {
    ++lineno;
    in.last_line = lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0].text;
    auto expect_args = [&](std::size_t n) {
      if (tokens.size() != n + 1)
        throw InputError("'" + head + "' takes " + std::to_string(n) + " argument(s), got " +
                             std::to_string(tokens.size() - 1),
                         lineno, tokens.size() > n + 1 ? tokens[n + 1].column : line.size() + 1);
    };
    if (head == "X+" || head == "X-" || head == "V") {
      expect_args(4);
      RawNode n{head == "X+" ? NodeKind::Positive : head == "X-" ? NodeKind::Negative : NodeKind::Singular, {}, lineno};
      for (int k = 0; k < 4; ++k) n.labels[static_cast<std::size_t>(k)] = parse_label(tokens[static_cast<std::size_t>(k + 1)], lineno);
      in.nodes.push_back(n);
    } else if (head == "O") {
      expect_args(1);
      in.loops.emplace_back(parse_label(tokens[1], lineno), lineno);
    } else if (head == "color") {
      expect_args(2);
      in.colors.emplace_back(parse_label(tokens[1], lineno), tokens[2].text, lineno);
    } else {
      throw InputError("unknown directive '" + head + "'", lineno, tokens[0].column);
    }
  }
  return build(in);
}

ParsedDiagram parse_diagram_json(std::string_view text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset -> line/column
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(std::string("invalid JSON: ") + e.what(), line, col);
  }
  RawInput in;
  in.last_line = 1;
  try {
    if (!j.is_object()) throw InputError("top-level JSON value must be an object", 1);
    for (const auto& n : j.value("nodes", json::array())) {
      std::string kind = n.at("kind").get<std::string>();
      RawNode r{};
      r.line = 1;
      if (kind == "X+") r.kind = NodeKind::Positive;
      else if (kind == "X-") r.kind = NodeKind::Negative;
      else if (kind == "V") r.kind = NodeKind::Singular;
      else throw InputError("unknown node kind '" + kind + "'", 1);
      const auto& arcs = n.at("arcs");
      if (!arcs.is_array() || arcs.size() != 4) throw InputError("node needs 4 arcs", 1);
      for (int k = 0; k < 4; ++k) {
        long v = arcs[static_cast<std::size_t>(k)].get<long>();
        if (v < 0) throw InputError("negative arc label", 1);
        r.labels[static_cast<std::size_t>(k)] = v;
      }
      in.nodes.push_back(r);
    }
    for (const auto& l : j.value("loops", json::array())) {
      long v = l.get<long>();
      if (v < 0) throw InputError("negative arc label", 1);
      in.loops.emplace_back(v, 1);
    }
    for (const auto& c : j.value("colors", json::array())) {
      const auto& label = c.at("label");
      std::string name = label.is_string() ? label.get<std::string>() : label.dump();
      in.colors.emplace_back(c.at("component").get<long>(), name, 1);
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed diagram JSON: ") + e.what(), 1);
  }
  return build(in);
}

ParsedDiagram parse_diagram_any(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return parse_diagram_json(text);
  return parse_diagram(text);
}

namespace {
std::array<int, 4> written_tuple(const Node& n) {
  if (n.kind == NodeKind::Positive) return {n.arcs[1], n.arcs[2], n.arcs[3], n.arcs[0]};
  return n.arcs;
}
}  // namespace

std::string print_diagram(const Diagram& d, const Coloration& c) {
  std::ostringstream out;
  for (const auto& n : d.nodes()) {
    auto t = written_tuple(n);
    out << kind_name(n.kind) << ' ' << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << t[3] << '\n';
  }
  for (int l : d.loops()) out << "O " << l << '\n';
  for (std::size_t k = 0; k < c.size(); ++k) out << "color " << k << ' ' << c[k] << '\n';
  return out.str();
}

std::string print_diagram_json(const Diagram& d, const Coloration& c) {
  using nlohmann::json;
  json j;
  j["nodes"] = json::array();
  for (const auto& n : d.nodes()) {
    auto t = written_tuple(n);
    j["nodes"].push_back({{"kind", kind_name(n.kind)}, {"arcs", t}});
  }
  j["loops"] = d.loops();
  j["colors"] = json::array();
  for (std::size_t k = 0; k < c.size(); ++k) j["colors"].push_back({{"component", k}, {"label", c[k]}});
  return j.dump();
}

std::string print_colored(const ColoredDiagram& d) { return print_diagram(d.diagram, d.coloration()); }

}  // namespace tangle
