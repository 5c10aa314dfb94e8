// Acceptance suite: each criterion runs independently, prints one PASS/FAIL
// line with its wall time, and fails if it exceeds its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "starstab/bch.hpp"
#include "starstab/certify.hpp"
#include "starstab/iso.hpp"
#include "starstab/stability.hpp"
#include "starstab/theorem.hpp"

using namespace starstab;

namespace {

class Findings {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && messages_.size() < 8) messages_.push_back(what);
    if (!ok) ++failures_;
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << failures_ << " failed check(s)";
    for (const auto& m : messages_) out << "\n      - " << m;
    return out.str();
  }

 private:
  int failures_ = 0;
  std::vector<std::string> messages_;
};

struct Criterion {
  std::string id;
  std::string title;
  double time_limit_seconds;
  std::function<void(Findings&)> body;
};

std::string str(const Graph& g) { return encode_graph6(g); }

Graph example_pattern() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {2, 3}}); }

void paw_pattern_reproduction(Findings& f) {
  const Graph h = example_pattern();
  const Graph g1 = bch_construct(h, 2, Labelling::from_labels({3, 4, 1, 2})).result;
  const Graph g2 = bch_construct(h, 2, Labelling::from_labels({1, 2, 3, 4})).result;
  const std::set<std::pair<int, int>> listed{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                                             {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}};
  std::set<std::pair<int, int>> got;
  for (auto [u, v] : g1.edges()) got.emplace(u + 1, v + 1);
  f.expect(g1.order() == 6 && got == listed, "labelling (3,4,1,2) edge set differs from the expected 13 edges");
  f.expect(g2 == complete_graph(6) && g2.size() == 15, "identity-labelling output is not K6");
  f.expect(!is_isomorphic(g1, g2), "the two outputs are isomorphic");
}

void star_construction_shape(Findings& f) {
  std::mt19937_64 rng(1001);
  for (int r = 3; r <= 8; ++r) {
    for (int k = 0; k <= 5; ++k) {
      const Graph expected = conjunction(complete_graph(k + 1), empty_graph(r));
      std::vector<int> degrees(static_cast<std::size_t>(k + 1), r + k);
      degrees.insert(degrees.end(), static_cast<std::size_t>(r), k + 1);
      std::sort(degrees.begin(), degrees.end(), std::greater<>());
      for (int trial = 0; trial < 50; ++trial) {
        const Labelling eta{testing::random_permutation(rng, r + 1)};
        const Graph g = bch_construct(star(r), k, eta).result;
        const std::string at = "r=" + std::to_string(r) + " k=" + std::to_string(k);
        f.expect(is_isomorphic(g, expected), at + ": not isomorphic to K_{k+1} * co-K_r");
        f.expect(2 * g.size() == (k + 1) * (2 * r + k), at + ": size formula violated");
        f.expect(g.degree_sequence() == degrees, at + ": degree multiset differs");
      }
    }
  }
}

void construction_stability(Findings& f) {
  std::mt19937_64 rng(2002);
  std::uniform_int_distribution<int> order(2, 5);
  std::uniform_int_distribution<int> budget(0, 2);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph h = testing::random_graph(rng, order(rng), 0.5);
    const int k = budget(rng);
    const Labelling eta{testing::random_permutation(rng, h.order())};
    const Graph g = bch_construct(h, k, eta).result;
    f.expect(is_stable_general(g, h, k).stable,
             "pattern " + str(h) + " k=" + std::to_string(k) + " produced unstable " + str(g));
  }
}

void recovery_correctness(Findings& f) {
  for (int r = 3; r <= 5; ++r) {
    for (int k = 1; k <= 3; ++k) {
      const auto inst = bch_construct(star(r), k, default_star_labelling(r));
      const int n = inst.result.order();
      for (Row mask = 0; mask < bit(n); ++mask) {
        const VertexSet faults(mask);
        if (faults.size() > k) continue;
        const Embedding psi = recovery_embedding(inst, faults);
        f.expect(embedding_is_valid(inst, faults, psi),
                 "r=" + std::to_string(r) + " k=" + std::to_string(k) + " faults mask " +
                     std::to_string(mask));
        for (int slot = 0; slot <= r; ++slot) {
          f.expect(psi.image[slot] >= slot && psi.image[slot] <= slot + k, "shift bound violated");
        }
      }
    }
  }
}

void low_degree_classification(Findings& f) {
  for (int r = 3; r <= 6; ++r) {
    for (int k = 0; k <= 5; ++k) {
      if ((r + k + 1) % 2 != 0) continue;
      const bool stable = is_star_stable(near_complete_regular(r + k + 1), r, k).stable;
      f.expect(stable == (r % 2 == 0 && k % 2 == 1),
               "K_n^{n-2} stability wrong at r=" + std::to_string(r) + " k=" + std::to_string(k));
    }
  }

  int classes = 0;
  std::vector<std::string> survivors;
  for (int m = 0; m <= 15; ++m) {
    for (const Graph& g : graphs_of_order_and_size(6, m)) {
      ++classes;
      if (g.max_degree() < 5 && is_star_stable(g, 4, 1).stable) survivors.push_back(str(g));
    }
  }
  f.expect(classes == 156, "order-6 census has " + std::to_string(classes) + " classes");
  f.expect(survivors.size() == 1, std::to_string(survivors.size()) + " low-degree survivors");
  f.expect(survivors.size() == 1 &&
               is_isomorphic(decode_graph6(survivors[0]), near_complete_regular(6)),
           "the low-degree survivor is not K_6^4");
}

struct GridPoint {
  int r;
  int k;
  std::int64_t value;
  std::size_t extremal_classes;
  std::vector<Graph> must_contain;
};

void certification_grid(Findings& f) {
  std::vector<GridPoint> grid;
  const std::int64_t r3[] = {3, 7, 12, 18};
  for (int k = 0; k <= 3; ++k) grid.push_back({3, k, r3[k], 1, {star_stable(3, k)}});
  const std::int64_t r4[] = {4, 9, 15};
  for (int k = 0; k <= 2; ++k) grid.push_back({4, k, r4[k], 1, {star_stable(4, k)}});
  grid.push_back({4, 7, 60, 2, {star_stable(4, 7), near_complete_regular(12)}});
  grid.push_back({4, 8, 72, 2,
                  {star_stable(4, 8), conjunction(near_complete_regular(12), complete_graph(1))}});
  grid.push_back({4, 9, 84, 1, {near_complete_regular(14)}});
  grid.push_back({4, 10, 98, 1, {conjunction(near_complete_regular(14), complete_graph(1))}});
  for (int k = 0; k <= 2; ++k) grid.push_back({5, k, (k + 1) * (10 + k) / 2, 1, {star_stable(5, k)}});

  for (const auto& point : grid) {
    const std::string at = "(" + std::to_string(point.r) + "," + std::to_string(point.k) + ")";
    const auto started = std::chrono::steady_clock::now();
    const Certificate c = certify(point.r, point.k);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::printf("      certify%-7s value=%-3lld below=%-4llu at=%-4llu extremal=%zu %s %.2fs\n",
                at.c_str(), static_cast<long long>(c.claimed_value),
                static_cast<unsigned long long>(c.candidates_below),
                static_cast<unsigned long long>(c.candidates_at_value), c.extremal_found.size(),
                c.verified() ? "verified" : "REFUTED", seconds);
    f.expect(c.claimed_value == point.value, at + ": stab value " + std::to_string(c.claimed_value));
    f.expect(c.minimality_ok, at + ": a stable graph exists below the claimed value");
    f.expect(c.match, at + ": extremal classes differ from the predicted family");
    f.expect(c.extremal_found.size() == point.extremal_classes,
             at + ": " + std::to_string(c.extremal_found.size()) + " extremal classes");
    for (const Graph& g : point.must_contain) {
      const std::string code = canonical_form(g).graph6;
      f.expect(std::find(c.extremal_found.begin(), c.extremal_found.end(), code) !=
                   c.extremal_found.end(),
               at + ": missing extremal " + code);
    }
    f.expect(seconds < 60.0, at + ": exceeded 60 s");
  }
}

void oracle_equivalences(Findings& f) {
  std::vector<Graph> order6;
  for (int m = 0; m <= 15; ++m) {
    for (Graph& g : graphs_of_order_and_size(6, m)) order6.push_back(std::move(g));
  }
  f.expect(order6.size() == 156, "order-6 census size " + std::to_string(order6.size()));
  for (auto [r, k] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{4, 1}}) {
    for (const Graph& g : order6) {
      const auto fast = is_star_stable(g, r, k);
      const auto general = is_stable_general(g, star(r), k);
      f.expect(fast.stable == general.stable && fast.witness == general.witness,
               "disagreement on " + str(g) + " at r=" + std::to_string(r) + " k=" + std::to_string(k));
    }
  }

  for (int n = 0; n <= 6; ++n) {
    std::map<int, std::set<CanonicalCode>> direct;
    for (const Graph& g : testing::all_labelled_graphs(n)) direct[g.size()].insert(canonical_form(g));
    for (int m = 0; m <= n * (n - 1) / 2; ++m) {
      f.expect(graphs_of_order_and_size(n, m).size() == direct[m].size(),
               "class count differs at n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  }
}

void serialization(Findings& f) {
  std::mt19937_64 rng(8008);
  std::uniform_int_distribution<int> order(0, 16);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = testing::random_graph(rng, order(rng), density(rng));
    f.expect(decode_graph6(encode_graph6(g)) == g, "round trip failed for " + encode_graph6(g));
  }
  f.expect(encode_graph6(complete_graph(4)) == "C~", "K4 does not encode to C~");
  f.expect(encode_graph6(empty_graph(4)) == "C?", "empty K4 complement does not encode to C?");
  f.expect(encode_graph6(star(3)) == "Cs", "star(3) does not encode to Cs");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "Paw pattern reproduction", 1.0, paw_pattern_reproduction},
      {"AC2", "Construction for stars is K_{k+1} * co-K_r", 10.0, star_construction_shape},
      {"AC3", "Construction output is (H;k)-stable", 60.0, construction_stability},
      {"AC4", "Recovery embedding correctness", 10.0, recovery_correctness},
      {"AC5", "Low-degree classification", 30.0, low_degree_classification},
      {"AC6", "Minimum size certification grid", 600.0, certification_grid},
      {"AC7", "Oracle equivalences", 60.0, oracle_equivalences},
      {"AC8", "graph6 serialization", 5.0, serialization},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Findings findings;
    const auto started = std::chrono::steady_clock::now();
    try {
      c.body(findings);
    } catch (const std::exception& e) {
      findings.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    findings.expect(seconds <= c.time_limit_seconds,
                    "took " + std::to_string(seconds) + " s, limit " +
                        std::to_string(c.time_limit_seconds) + " s");
    std::printf("[%s] %s %s (%.3f s, limit %.0f s)\n", findings.ok() ? "PASS" : "FAIL",
                c.id.c_str(), c.title.c_str(), seconds, c.time_limit_seconds);
    if (!findings.ok()) {
      std::printf("      %s\n", findings.summary().c_str());
      ++failed;
    }
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
