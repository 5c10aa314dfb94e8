#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "starstab/graph.hpp"

namespace starstab {

enum class StabCaseId {
  odd_r,
  even_r_small_k,
  boundary_a,
  boundary_b,
  case_3,
  case_4,
};

enum class ExtremalKind {
  construction_g_rk,
  regular_survivor,
  regular_plus_total,
};

std::string_view to_string(StabCaseId id) noexcept;
std::string_view to_string(ExtremalKind kind) noexcept;

/// Which regime (r, k) falls into. The boundary constants are only defined
/// for even r.
struct StabCase {
  StabCaseId id = StabCaseId::odd_r;
  std::optional<std::int64_t> k0;
  std::optional<std::int64_t> k1;

  friend bool operator==(const StabCase&, const StabCase&) = default;
};

struct StabResult {
  int r = 0;
  int k = 0;
  StabCase stab_case;
  std::int64_t value = 0;
  std::vector<ExtremalKind> extremal;
};

/// (r-1)^2 - 2 for even r >= 4.
std::int64_t k1(int r);
/// (r-1)^2, the smallest odd k above k1(r), for even r >= 4.
std::int64_t k0(int r);

StabCase stab_case(int r, int k);

/// Minimum size of a (K_{1,r}; k)-vertex stable graph of order r+k+1.
std::int64_t stab_value(int r, int k);

StabResult stab_result(int r, int k);

Graph extremal_graph(ExtremalKind kind, int r, int k);

/// All extremal graphs of order r+k+1, in the order of stab_result().extremal.
std::vector<Graph> extremal_family(int r, int k);

}  // namespace starstab
