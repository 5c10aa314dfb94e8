#include "starstab/certify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "starstab/error.hpp"
#include "starstab/iso.hpp"
#include "starstab/stability.hpp"
#include "starstab/theorem.hpp"

namespace starstab {

namespace {

long pair_count(int n) { return static_cast<long>(n) * (n - 1) / 2; }

void sort_by_code(std::vector<Graph>& graphs) {
  std::vector<std::pair<CanonicalCode, Graph>> keyed;
  keyed.reserve(graphs.size());
  for (auto& g : graphs) keyed.emplace_back(canonical_form(g), std::move(g));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  graphs.clear();
  for (auto& [code, g] : keyed) graphs.push_back(std::move(g));
}

// Evaluates `decide` on every graph, possibly on several threads. The result
// is indexed like the input, so the thread count never changes the outcome.
template <class Decide>
std::vector<char> evaluate_all(const std::vector<Graph>& graphs, unsigned threads,
                               Decide decide) {
  std::vector<char> results(graphs.size(), 0);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, graphs.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) results[i] = decide(graphs[i]) ? 1 : 0;
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < graphs.size(); i = next++) {
          try {
            results[i] = decide(graphs[i]) ? 1 : 0;
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace

std::vector<Graph> enumerate_graphs_by_edges(int edges, int max_vertices) {
  if (edges < 0) fail(ErrorCode::invalid_parameter, "edge count must be non-negative");
  if (max_vertices < 0 || max_vertices > kMaxEnumerationOrder) {
    fail(ErrorCode::capacity_exceeded, "enumeration supports at most " +
                                           std::to_string(kMaxEnumerationOrder) + " vertices");
  }

  // Each level holds canonical graphs without isolated vertices. Every graph
  // with e edges arises from one with e-1 edges by adding an edge, and adding
  // edges never shrinks the support, so pruning by support size is safe.
  std::vector<Graph> level{Graph(0)};
  for (int e = 1; e <= edges && !level.empty(); ++e) {
    std::map<std::string, Graph> next;
    auto consider = [&](const Graph& base, int u, int v) {
      Graph grown = base.with_edge(u, v);
      grown = induced_subgraph(grown, support(grown));
      Graph canon = grown.permuted(canonical_labelling(grown));
      std::string code = encode_graph6(canon);
      next.try_emplace(std::move(code), std::move(canon));
    };
    for (const Graph& g : level) {
      const int s = g.order();
      const int room = max_vertices - s;
      if (room <= 0) {
        for (int v = 1; v < s; ++v) {
          for (int u = 0; u < v; ++u) {
            if (!g.adjacent(u, v)) consider(g, u, v);
          }
        }
        continue;
      }
      // Fresh vertices are interchangeable, so one or two of them suffice.
      const Graph base = pad_isolated(g, s + std::min(room, 2));
      for (int v = 1; v < s; ++v) {
        for (int u = 0; u < v; ++u) {
          if (!g.adjacent(u, v)) consider(base, u, v);
        }
      }
      for (int u = 0; u < s; ++u) consider(base, u, s);
      if (room >= 2) consider(base, s, s + 1);
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }

  std::vector<Graph> out;
  out.reserve(level.size());
  for (const Graph& g : level) out.push_back(pad_isolated(g, max_vertices));
  sort_by_code(out);
  return out;
}

std::vector<Graph> graphs_of_order_and_size(int n, int m) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    fail(ErrorCode::capacity_exceeded, "enumeration supports at most " +
                                           std::to_string(kMaxEnumerationOrder) + " vertices");
  }
  if (m < 0 || m > pair_count(n)) {
    fail(ErrorCode::invalid_parameter, "size " + std::to_string(m) + " impossible on " +
                                           std::to_string(n) + " vertices");
  }
  std::vector<Graph> out;
  for (const Graph& sparse : enumerate_graphs_by_edges(static_cast<int>(pair_count(n) - m), n)) {
    out.push_back(complement(sparse));
  }
  sort_by_code(out);
  return out;
}

void check_certify_envelope(int r, int k) {
  if (r < 3) fail(ErrorCode::invalid_parameter, "star K_{1,r} requires r >= 3");
  if (k < 0) fail(ErrorCode::invalid_parameter, "fault budget k must be non-negative");
  const int n = r + k + 1;
  if (n > kMaxEnumerationOrder) {
    fail(ErrorCode::capacity_exceeded, "order budget: r+k+1 = " + std::to_string(n) +
                                           " exceeds " + std::to_string(kMaxEnumerationOrder));
  }
  const long needed = pair_count(n) - stab_value(r, k) + 1;
  if (needed > kComplementEdgeBudget && n > kFullEnumerationOrder) {
    fail(ErrorCode::capacity_exceeded,
         "complement-edge budget: C(n,2) - stab + 1 = " + std::to_string(needed) + " exceeds " +
             std::to_string(kComplementEdgeBudget) + " at order " + std::to_string(n) + " > " +
             std::to_string(kFullEnumerationOrder));
  }
}

Certificate certify(int r, int k, const CertifyOptions& options) {
  check_certify_envelope(r, k);
  const auto started = std::chrono::steady_clock::now();

  const int n = r + k + 1;
  const StabResult expected = stab_result(r, k);

  Certificate c;
  c.r = r;
  c.k = k;
  c.order = n;
  c.stab_case = std::string(to_string(expected.stab_case.id));
  c.claimed_value = expected.value;

  auto decide = [&](const Graph& g) {
    const bool fast = sparse_complement_proves_stable(g, r, k);
    if (fast && !options.cross_check) return true;
    const bool exhaustive = is_star_stable(g, r, k).stable;
    if (fast && !exhaustive) {
      throw std::logic_error("sparse-complement shortcut disagrees with fault-set scan on " +
                             encode_graph6(g));
    }
    return exhaustive;
  };

  const auto below = graphs_of_order_and_size(n, static_cast<int>(expected.value - 1));
  const auto below_stable = evaluate_all(below, options.threads, decide);
  c.candidates_below = below.size();
  for (std::size_t i = 0; i < below.size(); ++i) {
    if (below_stable[i]) c.stable_below.push_back(canonical_form(below[i]).graph6);
  }
  c.minimality_ok = c.stable_below.empty();

  const auto at_value = graphs_of_order_and_size(n, static_cast<int>(expected.value));
  const auto at_stable = evaluate_all(at_value, options.threads, decide);
  c.candidates_at_value = at_value.size();
  for (std::size_t i = 0; i < at_value.size(); ++i) {
    if (at_stable[i]) c.extremal_found.push_back(canonical_form(at_value[i]).graph6);
  }
  for (const Graph& g : extremal_family(r, k)) {
    c.extremal_expected.push_back(canonical_form(g).graph6);
  }
  std::sort(c.extremal_found.begin(), c.extremal_found.end());
  std::sort(c.extremal_expected.begin(), c.extremal_expected.end());
  c.match = c.extremal_found == c.extremal_expected;

  c.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return c;
}

nlohmann::json to_json(const Certificate& c) {
  return nlohmann::json{
      {"schema_version", c.schema_version},
      {"r", c.r},
      {"k", c.k},
      {"order", c.order},
      {"case", c.stab_case},
      {"claimed_value", c.claimed_value},
      {"minimality_ok", c.minimality_ok},
      {"candidates_below", c.candidates_below},
      {"stable_below", c.stable_below},
      {"candidates_at_value", c.candidates_at_value},
      {"extremal_found", c.extremal_found},
      {"extremal_expected", c.extremal_expected},
      {"match", c.match},
      {"elapsed_seconds", c.elapsed_seconds},
  };
}

Certificate certificate_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("schema_version")) {
    fail(ErrorCode::schema_mismatch, "certificate: missing schema_version");
  }
  const auto& version = j.at("schema_version");
  if (!version.is_string() || version.get<std::string>() != kCertificateSchemaVersion) {
    fail(ErrorCode::schema_mismatch, "certificate: unsupported schema_version " + version.dump());
  }
  try {
    Certificate c;
    c.schema_version = version.get<std::string>();
    c.r = j.at("r").get<int>();
    c.k = j.at("k").get<int>();
    c.order = j.at("order").get<int>();
    c.stab_case = j.at("case").get<std::string>();
    c.claimed_value = j.at("claimed_value").get<std::int64_t>();
    c.minimality_ok = j.at("minimality_ok").get<bool>();
    c.candidates_below = j.at("candidates_below").get<std::uint64_t>();
    c.stable_below = j.at("stable_below").get<std::vector<std::string>>();
    c.candidates_at_value = j.at("candidates_at_value").get<std::uint64_t>();
    c.extremal_found = j.at("extremal_found").get<std::vector<std::string>>();
    c.extremal_expected = j.at("extremal_expected").get<std::vector<std::string>>();
    c.match = j.at("match").get<bool>();
    c.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse_error, std::string("certificate: ") + e.what());
  }
}

void write_certificate(const Certificate& c, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::io_error, "cannot open " + path.string() + " for writing");
  out << to_json(c).dump(2) << '\n';
  if (!out) fail(ErrorCode::io_error, "failed writing " + path.string());
}

Certificate read_certificate(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io_error, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::parse_error, path.string() + ": " + e.what());
  }
  return certificate_from_json(j);
}

}  // namespace starstab
