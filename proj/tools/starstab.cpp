// starstab: construct, verify and certify minimum (K_{1,r}; k)-vertex stable
// graphs. JSON goes to stdout, diagnostics to stderr. Vertex labels on the
// command line and in output are 1-based.
//
// Exit status: 0 success / verified, 1 refuted certificate, 2 usage,
// input or capacity error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "starstab/bch.hpp"
#include "starstab/certify.hpp"
#include "starstab/error.hpp"
#include "starstab/iso.hpp"
#include "starstab/stability.hpp"
#include "starstab/theorem.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace starstab;

namespace {

constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_label_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      fail(ErrorCode::invalid_parameter, std::string(what) + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

Graph read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io_error, "cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line != "\r") return decode_graph6(line);
  }
  fail(ErrorCode::parse_error, path + ": no graph6 line found");
}

json one_based(VertexSet set) {
  json out = json::array();
  for (int v : set.members()) out.push_back(v + 1);
  return out;
}

VertexSet faults_from_labels(const std::vector<int>& labels, int order) {
  Row bits = 0;
  for (int label : labels) {
    if (label < 1 || label > order) {
      fail(ErrorCode::invalid_parameter,
           "fault label " + std::to_string(label) + " outside 1.." + std::to_string(order));
    }
    bits |= bit(label - 1);
  }
  return VertexSet(bits);
}

json verdict_json(const StabilityVerdict& v) {
  return json{{"stable", v.stable},
              {"witness", v.witness ? one_based(*v.witness) : json(nullptr)},
              {"checked_fault_sets", v.checked_fault_sets}};
}

json stab_json(int r, int k) {
  const StabResult s = stab_result(r, k);
  json descriptors = json::array();
  for (ExtremalKind kind : s.extremal) descriptors.push_back(std::string(to_string(kind)));
  json extremal = nullptr;
  if (r + k + 1 <= kMaxGraph6Order) {
    extremal = json::array();
    for (const Graph& g : extremal_family(r, k)) extremal.push_back(canonical_form(g).graph6);
  }
  return json{{"r", r},
              {"k", k},
              {"case", std::string(to_string(s.stab_case.id))},
              {"value", s.value},
              {"k0", s.stab_case.k0 ? json(*s.stab_case.k0) : json(nullptr)},
              {"k1", s.stab_case.k1 ? json(*s.stab_case.k1) : json(nullptr)},
              {"extremal", extremal},
              {"extremal_descriptors", descriptors}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum (K_{1,r}; k)-vertex stable graphs on r+k+1 vertices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "starstab 0.1.0");

  int r = 0;
  int k = 0;
  std::string labelling_text;
  std::string pattern_path;
  std::string graph_path;
  std::string out_path;
  std::string faults_text;
  bool emit_dot = false;
  unsigned threads = 0;
  bool cross_check = false;
  int edges = 0;
  int max_vertices = 0;

  auto* construct = app.add_subcommand("construct", "Spare-vertex construction; prints graph6");
  auto* construct_r = construct->add_option("--r", r, "Star size (pattern K_{1,r})");
  construct->add_option("--k", k, "Fault budget")->required();
  construct->add_option("--labelling", labelling_text, "Comma-separated 1-based labels in pattern-vertex order");
  auto* construct_pattern = construct->add_option("--pattern", pattern_path, "Pattern graph (graph6 file)")
                                ->check(CLI::ExistingFile);
  construct_r->excludes(construct_pattern);
  construct->add_flag("--dot", emit_dot, "Also print the graph in DOT format");

  auto* verify = app.add_subcommand("verify", "Decide vertex stability of a graph; prints JSON");
  verify->add_option("--graph", graph_path, "Graph to check (graph6 file)")->required()->check(CLI::ExistingFile);
  auto* verify_r = verify->add_option("--r", r, "Star size (pattern K_{1,r})");
  verify->add_option("--k", k, "Fault budget")->required();
  auto* verify_pattern = verify->add_option("--pattern", pattern_path, "General pattern graph (graph6 file)")
                             ->check(CLI::ExistingFile);
  verify_r->excludes(verify_pattern);

  auto* stab = app.add_subcommand("stab", "Minimum size and extremal family; prints JSON");
  stab->add_option("--r", r)->required();
  stab->add_option("--k", k)->required();

  auto* extremal = app.add_subcommand("extremal", "Write each extremal graph to a .g6 file");
  extremal->add_option("--r", r)->required();
  extremal->add_option("--k", k)->required();
  extremal->add_option("--out", out_path, "Output directory")->required();

  auto* cert = app.add_subcommand("certify", "Exhaustively certify the minimum size and extremal graphs");
  cert->add_option("--r", r)->required();
  cert->add_option("--k", k)->required();
  cert->add_option("--out", out_path, "Certificate JSON path")->required();
  cert->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
  cert->add_flag("--cross-check", cross_check, "Decide every candidate by both stability paths");

  auto* recover = app.add_subcommand("recover", "Greedy recovery map for a fault set; prints JSON");
  recover->add_option("--r", r)->required();
  recover->add_option("--k", k)->required();
  recover->add_option("--faults", faults_text, "Comma-separated 1-based fault labels");

  auto* enumerate = app.add_subcommand("enumerate", "Isomorphism classes with a given edge count");
  enumerate->add_option("--edges", edges)->required();
  enumerate->add_option("--max-vertices", max_vertices)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (construct->parsed()) {
      if (construct_r->count() == 0 && construct_pattern->count() == 0) {
        fail(ErrorCode::invalid_parameter, "construct needs --r or --pattern");
      }
      const Graph pattern = construct_pattern->count() ? read_graph6_file(pattern_path) : star(r);
      Labelling labelling = construct_pattern->count() ? Labelling::identity(pattern.order())
                                                       : default_star_labelling(r);
      if (!labelling_text.empty()) {
        labelling = Labelling::from_labels(parse_label_list(labelling_text, "--labelling"));
      }
      const auto instance = bch_construct(pattern, k, labelling);
      for (const auto& w : instance.warnings) std::cerr << "warning: " << w << "\n";
      std::cout << encode_graph6(instance.result) << "\n";
      if (emit_dot) std::cout << export_dot(instance.result, 1);
      return 0;
    }

    if (verify->parsed()) {
      if (verify_r->count() == 0 && verify_pattern->count() == 0) {
        fail(ErrorCode::invalid_parameter, "verify needs --r or --pattern");
      }
      const Graph g = read_graph6_file(graph_path);
      const StabilityVerdict v = verify_pattern->count()
                                     ? is_stable_general(g, read_graph6_file(pattern_path), k)
                                     : is_star_stable(g, r, k);
      std::cout << verdict_json(v).dump(2) << "\n";
      return 0;
    }

    if (stab->parsed()) {
      std::cout << stab_json(r, k).dump(2) << "\n";
      return 0;
    }

    if (extremal->parsed()) {
      const StabResult s = stab_result(r, k);
      const auto family = extremal_family(r, k);
      std::error_code ec;
      fs::create_directories(out_path, ec);
      if (ec) fail(ErrorCode::io_error, "cannot create " + out_path + ": " + ec.message());
      json written = json::array();
      for (std::size_t i = 0; i < family.size(); ++i) {
        const fs::path file = fs::path(out_path) / ("r" + std::to_string(r) + "_k" + std::to_string(k) +
                                                    "_" + std::to_string(i + 1) + "_" +
                                                    std::string(to_string(s.extremal[i])) + ".g6");
        std::ofstream out(file);
        out << encode_graph6(family[i]) << "\n";
        if (!out) fail(ErrorCode::io_error, "failed writing " + file.string());
        written.push_back(file.string());
      }
      std::cout << written.dump(2) << "\n";
      return 0;
    }

    if (cert->parsed()) {
      const Certificate c = certify(r, k, {threads, cross_check});
      write_certificate(c, out_path);
      std::cout << to_json(c).dump(2) << "\n";
      std::cerr << "certify(" << r << "," << k << "): " << (c.verified() ? "verified" : "REFUTED")
                << " (" << c.candidates_below << " classes below, " << c.candidates_at_value
                << " at value, " << c.extremal_found.size() << " extremal)\n";
      return c.verified() ? 0 : kExitRefuted;
    }

    if (recover->parsed()) {
      const auto instance = bch_construct(star(r), k, default_star_labelling(r));
      const VertexSet faults =
          faults_from_labels(parse_label_list(faults_text, "--faults"), instance.result.order());
      const Embedding psi = recovery_embedding(instance, faults);
      json mapping = json::object();
      for (std::size_t slot = 0; slot < psi.image.size(); ++slot) {
        mapping[std::to_string(slot + 1)] = psi.image[slot] + 1;
      }
      const json out{{"r", r},
                     {"k", k},
                     {"faults", one_based(faults)},
                     {"mapping", mapping},
                     {"valid", embedding_is_valid(instance, faults, psi)}};
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (enumerate->parsed()) {
      for (const Graph& g : enumerate_graphs_by_edges(edges, max_vertices)) {
        std::cout << encode_graph6(g) << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
