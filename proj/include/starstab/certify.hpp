#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "starstab/graph.hpp"

namespace starstab {

inline constexpr const char* kCertificateSchemaVersion = "1";
inline constexpr int kMaxEnumerationOrder = 16;
/// Instances whose complement needs more edges than this are only certified
/// when the order is small enough to enumerate every graph on it.
inline constexpr int kComplementEdgeBudget = 8;
inline constexpr int kFullEnumerationOrder = 8;

/// One representative per isomorphism class of graphs with `edges` edges
/// whose non-isolated vertices number at most `max_vertices`, padded with
/// isolated vertices to order `max_vertices` and sorted by canonical code.
std::vector<Graph> enumerate_graphs_by_edges(int edges, int max_vertices);

/// One representative per isomorphism class of graphs of order n and size m,
/// generated as complements of the sparse classes and sorted by canonical
/// code.
std::vector<Graph> graphs_of_order_and_size(int n, int m);

struct Certificate {
  std::string schema_version = kCertificateSchemaVersion;
  int r = 0;
  int k = 0;
  int order = 0;
  std::string stab_case;
  std::int64_t claimed_value = 0;
  bool minimality_ok = false;
  /// Isomorphism classes examined at size claimed_value - 1.
  std::uint64_t candidates_below = 0;
  /// Canonical codes of stable graphs found below the claimed value; empty
  /// whenever minimality_ok holds.
  std::vector<std::string> stable_below;
  std::uint64_t candidates_at_value = 0;
  std::vector<std::string> extremal_found;
  std::vector<std::string> extremal_expected;
  bool match = false;
  double elapsed_seconds = 0.0;

  bool verified() const noexcept { return minimality_ok && match; }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CertifyOptions {
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Decide every candidate by both the sparse-complement shortcut and the
  /// exhaustive fault-set scan, and throw std::logic_error on disagreement.
  bool cross_check = false;
};

/// Throws capacity_exceeded naming the violated budget when (r, k) lies
/// outside what exhaustive certification can enumerate.
void check_certify_envelope(int r, int k);

/// Exhaustively checks that no graph of order r+k+1 with one edge fewer than
/// stab_value(r, k) is stable, and that the stable graphs at stab_value(r, k)
/// are exactly extremal_family(r, k) up to isomorphism.
Certificate certify(int r, int k, const CertifyOptions& options = {});

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

void write_certificate(const Certificate& c, const std::filesystem::path& path);
Certificate read_certificate(const std::filesystem::path& path);

}  // namespace starstab
