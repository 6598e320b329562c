// Command-line front end.
//
// Exit codes: 0 success, 1 bad input or usage, 2 engine disagreement,
// 3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tangle/canonical.hpp"
#include "tangle/corpus.hpp"
#include "tangle/homfly.hpp"
#include "tangle/skein.hpp"
#include "tangle/verify.hpp"

using namespace tangle;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kBadInput = 1, kDisagree = 2, kVerifyFailed = 3;

struct Input {
  ParsedDiagram parsed;
  ColoredDiagram diagram;
};

Input load(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    text = s.str();
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open '" + path + "'", 0);
    std::ostringstream s;
    s << f.rdbuf();
    text = s.str();
  }
  Input in;
  in.parsed = parse_diagram_any(text);
  in.diagram = ColoredDiagram(in.parsed.diagram, in.parsed.coloration);
  return in;
}

void report_input_error(const std::string& path, const InputError& e) {
  std::cerr << path;
  if (e.line()) std::cerr << ':' << e.line();
  if (e.column()) std::cerr << ':' << e.column();
  std::cerr << ": error: " << e.detail() << '\n';
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("TANGLE_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::cerr << "warning: ignoring non-numeric TANGLE_SEED\n";
    }
  }
  return 1;
}

// Output objects carry the diagram itself, so they parse back as input.
json with_diagram(const Input& in) {
  return json::parse(print_diagram_json(in.parsed.diagram, in.parsed.coloration));
}

json suite_json(const SuiteResult& r, bool timings) {
  json j{{"suite", r.name},     {"passed", r.passed},   {"failed", r.failed},
         {"values_checked", r.values_checked}, {"values_outside", r.values_outside},
         {"coverage", r.coverage}, {"notes", r.notes}};
  j["failures"] = json::array();
  for (const auto& f : r.failures) j["failures"].push_back({{"what", f.what}, {"diagram", f.diagram}});
  if (timings) j["seconds"] = r.seconds;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant of colored classical and singular links"};
  app.require_subcommand(1);

  std::string file, engine = "state-sum", format = "text", resolution = "rel1", trace_path;
  unsigned threads = 1;
  auto* compute = app.add_subcommand("compute", "Evaluate the invariant of a diagram file ('-' for stdin)");
  compute->add_option("file", file, "Diagram file")->required();
  compute->add_option("--engine", engine, "state-sum, recursive or both")
      ->check(CLI::IsMember({"state-sum", "recursive", "both"}));
  compute->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  compute->add_option("--resolution", resolution, "Singular vertices in the recursion: rel1 or rel2")
      ->check(CLI::IsMember({"rel1", "rel2"}));
  compute->add_option("--threads", threads, "Worker threads for the state sum")->check(CLI::Range(1u, 256u));
  compute->add_option("--trace", trace_path, "Write the graph reduction log to this file");

  auto* homfly = app.add_subcommand("homfly", "HOMFLY-PT polynomial (l P+ + l^-1 P- + m P0 = 0)");
  homfly->add_option("file", file, "Diagram file")->required();
  homfly->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check-homfly", "Compare the invariant with specialized HOMFLY-PT");
  check->add_option("file", file, "Diagram file (one color)")->required();
  check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string suite = "all";
  VerifyOptions vo;
  vo.seed = default_seed();
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--suite", suite, "moves, relations, oracles or all")
      ->check(CLI::IsMember({"moves", "relations", "oracles", "all"}));
  verify->add_option("--max-crossings", vo.max_crossings, "Largest corpus diagram")->check(CLI::Range(1, 7));
  verify->add_option("--seed", vo.seed, "Seed (default: $TANGLE_SEED or 1)");
  verify->add_option("--sites", vo.relation_sites, "Random relation sites")->check(CLI::PositiveNumber);
  verify->add_option("--triples", vo.move_triples, "Move triples")->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--timings", timings, "Include wall-clock times (output no longer reproducible)");

  auto* corpus = app.add_subcommand("corpus", "Bundled knots and links");
  corpus->require_subcommand(1);
  auto* list = corpus->add_subcommand("list", "List corpus links");
  std::string name;
  auto* show = corpus->add_subcommand("show", "Print a corpus link as a diagram file");
  show->add_option("name", name, "Link name")->required();
  show->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*compute) {
      Input in = load(file);
      EngineOptions opt;
      opt.resolution = resolution == "rel2" ? Resolution::Rel2 : Resolution::Rel1;
      opt.threads = threads;
      std::ofstream trace;
      if (!trace_path.empty()) {
        trace.open(trace_path);
        if (!trace) throw InputError("cannot write '" + trace_path + "'", 0);
        opt.trace = &trace;
      }
      const Engine e = engine == "recursive" ? Engine::Recursive : engine == "both" ? Engine::Both : Engine::StateSum;
      const Rational v = invariant(in.diagram, e, opt);
      if (format == "json") {
        json j = with_diagram(in);
        j["input_digest"] = canonical_digest(in.diagram);
        j["engine"] = engine;
        j["value"] = v.to_string();
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << v.to_string() << '\n';
      }
      return kOk;
    }
    if (*homfly) {
      Input in = load(file);
      if (in.diagram.diagram.singular_count() > 0) throw InputError("homfly: singular vertices are not supported", 0);
      const HomflyValue p = homfly_polynomial(in.diagram.diagram);
      if (format == "json") {
        json j = with_diagram(in);
        j["input_digest"] = canonical_digest(in.diagram);
        j["homfly"] = p.to_string();
        std::cout << j.dump(2) << '\n';
      } else
        std::cout << p.to_string() << '\n';
      return kOk;
    }
    if (*check) {
      Input in = load(file);
      const Diagram& d = in.diagram.diagram;
      if (d.singular_count() > 0) throw InputError("check-homfly: singular vertices are not supported", 0);
      for (int c : in.parsed.coloration)
        if (c != in.parsed.coloration.front()) throw InputError("check-homfly: every component must have the same color", 0);
      const HomflyValue p = homfly_polynomial(d);
      const Rational specialized = homfly_specialize(p);
      const Rational v = invariant(in.diagram);
      const bool ok = rf_equals(specialized, v);
      if (format == "json") {
        std::cout << json{{"homfly", p.to_string()}, {"specialized", specialized.to_string()}, {"invariant", v.to_string()},
                          {"match", ok}}.dump(2)
                  << '\n';
      } else {
        std::cout << "homfly:      " << p.to_string() << "\nspecialized: " << specialized.to_string()
                  << "\ninvariant:   " << v.to_string() << '\n'
                  << (ok ? "match" : "MISMATCH") << '\n';
      }
      return ok ? kOk : kVerifyFailed;
    }
    if (*verify) {
      const auto results = run_suites(suite, vo);
      bool ok = true;
      for (const auto& r : results) ok = ok && r.ok();
      if (format == "json") {
        json j{{"seed", vo.seed}, {"max_crossings", vo.max_crossings}, {"suite", suite}, {"passed", ok}};
        j["suites"] = json::array();
        for (const auto& r : results) j["suites"].push_back(suite_json(r, timings));
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "seed " << vo.seed << ", max crossings " << vo.max_crossings << '\n';
        for (const auto& r : results) {
          std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.passed << " passed, " << r.failed
                    << " failed, " << r.values_checked << " values range-checked";
          if (timings) std::cout << " (" << r.seconds << " s)";
          std::cout << '\n';
          for (const auto& n : r.notes) std::cout << "  " << n << '\n';
          for (const auto& f : r.failures) {
            std::cout << "  failure: " << f.what << '\n';
            if (!f.diagram.empty()) std::cout << "  --- replay input ---\n" << f.diagram << "  ---\n";
          }
        }
      }
      return ok ? kOk : kVerifyFailed;
    }
    if (*list) {
      for (const auto& l : named_links()) {
        const Diagram d = l.diagram();
        std::cout << l.name << "\tcrossings=" << d.classical_count() << "\tcomponents=" << d.components().size()
                  << "\tbraid=" << l.strands << ":[";
        for (std::size_t k = 0; k < l.word.size(); ++k) std::cout << (k ? "," : "") << l.word[k];
        std::cout << "]\n";
      }
      return kOk;
    }
    if (*show) {
      const NamedLink* link = nullptr;
      try {
        link = &named_link(name);
      } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
      }
      const Diagram d = link->diagram();
      const Coloration c(d.components().size(), 0);
      if (format == "json")
        std::cout << print_diagram_json(d, c) << '\n';
      else
        std::cout << "# " << link->name << '\n' << print_diagram(d, c);
      return kOk;
    }
  } catch (const InputError& e) {
    report_input_error(file.empty() ? "<input>" : file, e);
    return kBadInput;
  } catch (const EngineDisagreement& e) {
    std::cerr << "error: " << e.what() << "\n--- diagram ---\n" << e.diagram();
    return kDisagree;
  } catch (const DiagramError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kOk;
}
