#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "oracles.hpp"
#include "starstab/bch.hpp"
#include "starstab/certify.hpp"
#include "starstab/error.hpp"
#include "starstab/iso.hpp"
#include "starstab/theorem.hpp"

using namespace starstab;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("starstab_test_" + name);
}

}  // namespace

TEST_CASE("enumerate_graphs_by_edges small counts") {
  const auto none = enumerate_graphs_by_edges(0, 5);
  REQUIRE(none.size() == 1);
  CHECK(none[0] == empty_graph(5));

  // Counts frozen from an independent VF2-based enumeration.
  CHECK(enumerate_graphs_by_edges(3, 4).size() == 3);
  CHECK(enumerate_graphs_by_edges(6, 12).size() == 68);
  CHECK(enumerate_graphs_by_edges(7, 12).size() == 175);
  CHECK(enumerate_graphs_by_edges(8, 12).size() == 485);
  CHECK(enumerate_graphs_by_edges(8, 16).size() == 497);
  CHECK(enumerate_graphs_by_edges(2, 1).empty());
}

TEST_CASE("e = 3 on at most 4 vertices matches labelled brute force") {
  // Labelled 3-edge graphs on 6 vertices, restricted to support <= 4 and
  // deduplicated by exhaustive permutation search.
  std::set<std::vector<Row>> classes;
  for (const Graph& g : testing::all_labelled_graphs(6)) {
    if (g.size() != 3 || support(g).size() > 4) continue;
    classes.insert(
        testing::brute_force_canonical_rows(pad_isolated(induced_subgraph(g, support(g)), 4)));
  }
  CHECK(classes.size() == 3);
  const auto listed = enumerate_graphs_by_edges(3, 4);
  std::set<std::vector<Row>> mine;
  for (const Graph& g : listed) mine.insert(testing::brute_force_canonical_rows(g));
  CHECK(mine == classes);
}

TEST_CASE("enumeration output is sorted by canonical code and duplicate free") {
  const auto graphs = enumerate_graphs_by_edges(5, 8);
  std::vector<CanonicalCode> codes;
  for (const Graph& g : graphs) {
    CHECK(g.order() == 8);
    CHECK(g.size() == 5);
    codes.push_back(canonical_form(g));
  }
  CHECK(std::is_sorted(codes.begin(), codes.end()));
  CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
}

TEST_CASE("graphs_of_order_and_size examples") {
  const auto k4 = graphs_of_order_and_size(4, 6);
  REQUIRE(k4.size() == 1);
  CHECK(k4[0] == complete_graph(4));

  CHECK(graphs_of_order_and_size(12, 60).size() == enumerate_graphs_by_edges(6, 12).size());

  bool found = false;
  for (const Graph& g : graphs_of_order_and_size(5, 7)) found = found || is_isomorphic(g, star_stable(3, 1));
  CHECK(found);

  CHECK_THROWS_AS(graphs_of_order_and_size(4, 7), Error);
  CHECK_THROWS_AS(graphs_of_order_and_size(17, 0), Error);
}

TEST_CASE("graphs_of_order_and_size matches labelled enumeration for n <= 6") {
  for (int n = 0; n <= 6; ++n) {
    std::map<int, std::set<CanonicalCode>> by_size;
    for (const Graph& g : testing::all_labelled_graphs(n)) by_size[g.size()].insert(canonical_form(g));
    for (int m = 0; m <= n * (n - 1) / 2; ++m) {
      const auto listed = graphs_of_order_and_size(n, m);
      std::set<CanonicalCode> codes;
      for (const Graph& g : listed) codes.insert(canonical_form(g));
      CHECK(listed.size() == by_size[m].size());
      CHECK(codes == by_size[m]);
    }
  }
}

TEST_CASE("certify small instances") {
  const Certificate c31 = certify(3, 1, {.threads = 1, .cross_check = true});
  CHECK(c31.minimality_ok);
  CHECK(c31.match);
  CHECK(c31.claimed_value == 7);
  REQUIRE(c31.extremal_found.size() == 1);
  CHECK(c31.extremal_found[0] == canonical_form(star_stable(3, 1)).graph6);

  const Certificate c40 = certify(4, 0, {.threads = 2, .cross_check = true});
  CHECK(c40.verified());
  CHECK(c40.claimed_value == 4);
}

TEST_CASE("certify rejects instances outside the envelope") {
  auto code = [](int r, int k) {
    try {
      certify(r, k);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::io_error;
  };
  CHECK(code(8, 8) == ErrorCode::capacity_exceeded);
  CHECK(code(5, 4) == ErrorCode::capacity_exceeded);
  CHECK(code(5, 3) == ErrorCode::capacity_exceeded);
  CHECK(code(2, 0) == ErrorCode::invalid_parameter);
}

TEST_CASE("certify is deterministic modulo elapsed time and thread count") {
  Certificate a = certify(3, 2, {.threads = 1});
  Certificate b = certify(3, 2, {.threads = 3});
  a.elapsed_seconds = 0;
  b.elapsed_seconds = 0;
  CHECK(a == b);
  CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("certificate persistence") {
  const Certificate c = certify(3, 1);
  const auto path = temp_file("cert.json");
  write_certificate(c, path);
  CHECK(read_certificate(path) == c);

  Certificate refuted = c;
  refuted.match = false;
  refuted.extremal_found.clear();
  write_certificate(refuted, path);
  const Certificate back = read_certificate(path);
  CHECK_FALSE(back.match);
  CHECK_FALSE(back.verified());

  auto j = to_json(c);
  j["schema_version"] = "0";
  {
    std::ofstream out(path);
    out << j.dump();
  }
  try {
    read_certificate(path);
    FAIL("expected schema mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::schema_mismatch);
  }

  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK_THROWS_AS(read_certificate(path), Error);
  CHECK_THROWS_AS(read_certificate(temp_file("missing/none.json")), Error);
  std::filesystem::remove(path);
}
