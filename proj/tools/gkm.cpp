#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gkm/corpus.hpp"
#include "gkm/document.hpp"
#include "gkm/error.hpp"
#include "gkm/report.hpp"
#include "gkm/svg.hpp"

namespace {

// 0: success, 1: a check failed, 2: usage or input that could not be read.
constexpr int kFailed = 1;
constexpr int kUsage = 2;

int diagnose(const gkm::Error& e) {
  std::cerr << "gkm: " << e.what() << "\n";
  switch (e.kind()) {
    case gkm::ErrorKind::ParseError:
    case gkm::ErrorKind::InvalidArgument:
    case gkm::ErrorKind::UnknownInstance:
      return kUsage;
    default:
      return kFailed;
  }
}

gkm::OrientedGkmGraph oriented(const gkm::LoadedGraph& loaded, const std::string& xi_flag) {
  std::optional<gkm::WeightVector> xi;
  if (!xi_flag.empty()) {
    xi = gkm::parse_weight_list(xi_flag);
  } else if (loaded.xi) {
    xi = loaded.xi;
  } else {
    xi = gkm::default_xi(loaded.graph);
    if (!xi) throw gkm::Error(gkm::ErrorKind::NotGeneric, "no generic index-increasing xi among the default candidates");
  }
  if (xi->rank() != loaded.graph->rank()) throw gkm::Error(gkm::ErrorKind::ParseError, "--xi has the wrong rank");
  return gkm::orient(loaded.graph, *xi);
}

int cmd_validate(const std::string& path) {
  const auto doc = gkm::parse_document([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gkm::Error(gkm::ErrorKind::InvalidArgument, "cannot read " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }());
  try {
    const auto loaded = gkm::build_graph(doc);
    std::cout << "valid: " << loaded.graph->vertex_count() << " vertices, " << loaded.graph->edge_count()
              << " edges\n";
    return 0;
  } catch (const gkm::Error& e) {
    std::cout << e.what() << "\n";
    return kFailed;
  }
}

int cmd_report(const std::string& path, const std::string& xi, bool as_json) {
  const auto og = oriented(gkm::load_graph(path), xi);
  const auto report = gkm::hard_lefschetz_report(og);
  std::cout << (as_json ? gkm::report_json(og, report) : gkm::report_text(og, report));
  return 0;
}

int cmd_render(const std::string& path, const std::string& xi, const std::string& out_path) {
  const auto og = oriented(gkm::load_graph(path), xi);
  const std::string svg = gkm::render_svg(og);
  if (out_path.empty() || out_path == "-") {
    std::cout << svg;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw gkm::Error(gkm::ErrorKind::InvalidArgument, "cannot write " + out_path);
  out << svg;
  return 0;
}

int cmd_corpus(const std::string& name) {
  if (name.empty()) {
    for (const auto& c : gkm::corpus()) std::cout << c.name << "  (" << c.expected_type << ")  " << c.description << "\n";
    return 0;
  }
  std::cout << gkm::serialize(gkm::corpus_instance(name).document);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on GKM graphs with planar moment images"};
  app.require_subcommand(1);

  std::string path, xi, out_path, name;
  bool as_json = false;

  auto* validate = app.add_subcommand("validate", "check the GKM axioms of a graph file");
  validate->add_option("file", path, "graph JSON")->required();

  auto* report = app.add_subcommand("report", "Morse data, Hodge-Riemann determinants and the hard Lefschetz verdict");
  report->add_option("file", path, "graph JSON")->required();
  report->add_option("--xi", xi, "generic covector, e.g. 1/1,3/1");
  report->add_flag("--json", as_json, "emit JSON");

  auto* render = app.add_subcommand("render", "draw the moment graph as SVG");
  render->add_option("file", path, "graph JSON")->required();
  render->add_option("--xi", xi, "generic covector");
  render->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* corpus = app.add_subcommand("corpus", "list built-in instances or print one as JSON");
  corpus->add_option("name", name, "instance name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(path);
    if (*report) return cmd_report(path, xi, as_json);
    if (*render) return cmd_render(path, xi, out_path);
    if (*corpus) return cmd_corpus(name);
  } catch (const gkm::Error& e) {
    return diagnose(e);
  }
  return kUsage;
}
