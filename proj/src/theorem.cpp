#include "starstab/theorem.hpp"

#include "starstab/bch.hpp"
#include "starstab/error.hpp"

namespace starstab {

namespace {

void check_params(int r, int k) {
  if (r < 3) fail(ErrorCode::invalid_parameter, "star K_{1,r} requires r >= 3");
  if (k < 0) fail(ErrorCode::invalid_parameter, "fault budget k must be non-negative");
}

void check_even_r(int r) {
  if (r < 4 || r % 2 != 0) {
    fail(ErrorCode::invalid_parameter,
         "boundary constants are defined for even r >= 4, got r = " + std::to_string(r));
  }
}

}  // namespace

std::string_view to_string(StabCaseId id) noexcept {
  switch (id) {
    case StabCaseId::odd_r:
      return "ODD_R";
    case StabCaseId::even_r_small_k:
      return "EVEN_R_SMALL_K";
    case StabCaseId::boundary_a:
      return "BOUNDARY_A";
    case StabCaseId::boundary_b:
      return "BOUNDARY_B";
    case StabCaseId::case_3:
      return "CASE_3";
    case StabCaseId::case_4:
      return "CASE_4";
  }
  return "UNKNOWN";
}

std::string_view to_string(ExtremalKind kind) noexcept {
  switch (kind) {
    case ExtremalKind::construction_g_rk:
      return "CONSTRUCTION_G_RK";
    case ExtremalKind::regular_survivor:
      return "REGULAR_SURVIVOR";
    case ExtremalKind::regular_plus_total:
      return "REGULAR_PLUS_TOTAL";
  }
  return "UNKNOWN";
}

std::int64_t k1(int r) {
  check_even_r(r);
  const std::int64_t d = r - 1;
  return d * d - 2;
}

std::int64_t k0(int r) {
  check_even_r(r);
  const std::int64_t d = r - 1;
  return d * d;
}

StabCase stab_case(int r, int k) {
  check_params(r, k);
  if (r % 2 != 0) return {StabCaseId::odd_r, std::nullopt, std::nullopt};

  StabCase c{StabCaseId::odd_r, k0(r), k1(r)};
  const std::int64_t low = *c.k1;
  const std::int64_t high = *c.k0;
  int matches = 0;
  if (k < low) {
    c.id = StabCaseId::even_r_small_k;
    ++matches;
  }
  if (k == low) {
    c.id = StabCaseId::boundary_a;
    ++matches;
  }
  if (k == low + 1) {
    c.id = StabCaseId::boundary_b;
    ++matches;
  }
  if (k % 2 == 1 && k >= high) {
    c.id = StabCaseId::case_3;
    ++matches;
  }
  if (k % 2 == 0 && k > high) {
    c.id = StabCaseId::case_4;
    ++matches;
  }
  if (matches != 1) {
    throw std::logic_error("stab_case: " + std::to_string(matches) + " regimes match r = " +
                           std::to_string(r) + ", k = " + std::to_string(k));
  }
  return c;
}

std::int64_t stab_value(int r, int k) {
  const StabCase c = stab_case(r, k);
  const std::int64_t rr = r;
  const std::int64_t kk = k;
  switch (c.id) {
    case StabCaseId::case_3:
      return ((rr + kk) * (rr + kk) - 1) / 2;
    case StabCaseId::case_4:
      return (rr + kk) * (rr + kk) / 2;
    default:
      return (kk + 1) * (2 * rr + kk) / 2;
  }
}

StabResult stab_result(int r, int k) {
  StabResult result{r, k, stab_case(r, k), stab_value(r, k), {}};
  switch (result.stab_case.id) {
    case StabCaseId::odd_r:
    case StabCaseId::even_r_small_k:
      result.extremal = {ExtremalKind::construction_g_rk};
      break;
    case StabCaseId::boundary_a:
      result.extremal = {ExtremalKind::construction_g_rk, ExtremalKind::regular_survivor};
      break;
    case StabCaseId::boundary_b:
      result.extremal = {ExtremalKind::construction_g_rk, ExtremalKind::regular_plus_total};
      break;
    case StabCaseId::case_3:
      result.extremal = {ExtremalKind::regular_survivor};
      break;
    case StabCaseId::case_4:
      result.extremal = {ExtremalKind::regular_plus_total};
      break;
  }
  return result;
}

Graph extremal_graph(ExtremalKind kind, int r, int k) {
  check_params(r, k);
  const int n = r + k + 1;
  if (n > kMaxOrder) {
    fail(ErrorCode::capacity_exceeded,
         "extremal graphs of order " + std::to_string(n) + " exceed " + std::to_string(kMaxOrder));
  }
  switch (kind) {
    case ExtremalKind::construction_g_rk:
      return star_stable(r, k);
    case ExtremalKind::regular_survivor:
      if (n % 2 != 0) throw std::logic_error("regular survivor requested for odd order");
      return near_complete_regular(n);
    case ExtremalKind::regular_plus_total:
      if ((n - 1) % 2 != 0) throw std::logic_error("regular-plus-total requested for odd r+k");
      return conjunction(near_complete_regular(n - 1), complete_graph(1));
  }
  throw std::logic_error("unknown extremal kind");
}

std::vector<Graph> extremal_family(int r, int k) {
  std::vector<Graph> out;
  for (ExtremalKind kind : stab_result(r, k).extremal) out.push_back(extremal_graph(kind, r, k));
  return out;
}

}  // namespace starstab
