#include <doctest.h>

#include <random>

#include "cladder/interval_approx.hpp"
#include "support/oracles.hpp"

using namespace cladder;
namespace oracle = cladder::testing;

TEST_CASE("interval approximation recovers construction multiplicities") {
  std::mt19937_64 rng(101);
  int cases = 0;
  while (cases < 210) {
    int n = 2 + static_cast<int>(rng() % 7);
    auto [m, multiset] = oracle::random_interval_decomposable(n, 5, 2, rng);
    IntervalPoset poset(n, 2);
    SignedMultiplicityMap delta = interval_approximation(m, poset);
    SignedMultiplicityMap expected(multiset.begin(), multiset.end());
    CHECK(delta == expected);
    ++cases;
  }
}

TEST_CASE("interval approximation of an interval module is its indicator") {
  IntervalPoset poset(4, 2);
  for (const auto& j : poset.intervals()) {
    SignedMultiplicityMap delta = interval_approximation(interval_module(j, 4, 2, 2), poset);
    CHECK(delta == SignedMultiplicityMap{{j, 1}});
  }
}

TEST_CASE("Möbius formula agrees with the trace-down recurrence") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    auto [m, multiset] = oracle::random_interval_decomposable(n, 5, 2, rng);
    IntervalPoset poset(n, 2);
    CHECK(interval_approximation(m, poset) == interval_approximation_trace_down(m, poset));
  }
}

TEST_CASE("defining identity holds after every computation") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    auto [m, multiset] = oracle::random_interval_decomposable(n, 5, 2, rng);
    IntervalPoset poset(n, 2);
    SignedMultiplicityMap delta = interval_approximation(m, poset);
    for (int probe = 0; probe < 10; ++probe) {
      const auto& i = poset[rng() % poset.size()];
      int rhs = 0;
      for (const auto& [j, v] : delta)
        if (leq(i, j)) rhs += v;
      CHECK(compressed_multiplicity(m, i, Assignment::ss) == rhs);
    }
  }
}

TEST_CASE("dimension vectors reconcile on interval-decomposable input") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    auto [m, multiset] = oracle::random_interval_decomposable(n, 5, 2, rng);
    IntervalPoset poset(n, 2);
    SignedMultiplicityMap delta = interval_approximation(m, poset);
    for (const auto& [i, v] : delta) CHECK(v >= 0);
    for (int y = 1; y <= 2; ++y)
      for (int x = 1; x <= n; ++x) {
        int acc = 0;
        for (const auto& [i, v] : delta)
          if (i.contains({x, y})) acc += v;
        CHECK(acc == m.dim({x, y}));
      }
  }
}

TEST_CASE("partial approximation over the vertex stratum is the dimension vector") {
  std::mt19937_64 rng(113);
  auto [m, multiset] = oracle::random_interval_decomposable(4, 5, 2, rng);
  IntervalPoset poset(4, 2);
  auto pia = partial_interval_approximation(m, poset.stratify_k_essential(1));
  for (int y = 1; y <= 2; ++y)
    for (int x = 1; x <= 4; ++x) {
      auto it = pia.find(StaircaseInterval::single({x, y}));
      int v = it == pia.end() ? 0 : it->second;
      CHECK(v == m.dim({x, y}));
    }
}

TEST_CASE("partial approximation over the full poset equals the interval approximation") {
  std::mt19937_64 rng(127);
  auto [m, multiset] = oracle::random_interval_decomposable(4, 4, 2, rng);
  IntervalPoset poset(4, 2);
  CHECK(partial_interval_approximation(m, poset.intervals()) == interval_approximation(m, poset));
}

TEST_CASE("rank reconstruction equals the direct path rank") {
  std::mt19937_64 rng(131);
  int cases = 0;
  while (cases < 210) {
    int n = 2 + static_cast<int>(rng() % 6);
    auto [m, multiset] = oracle::random_interval_decomposable(n, 5, 2, rng);
    IntervalPoset poset(n, 2);
    SignedMultiplicityMap delta = interval_approximation(m, poset);
    for (int y1 = 1; y1 <= 2; ++y1)
      for (int x1 = 1; x1 <= n; ++x1)
        for (int y2 = y1; y2 <= 2; ++y2)
          for (int x2 = x1; x2 <= n; ++x2)
            CHECK(reconstruct_rank(delta, {x1, y1}, {x2, y2}) ==
                  rank(evaluate_path(m, {x1, y1}, {x2, y2})));
    // no path gives rank zero
    CHECK(reconstruct_rank(delta, {2, 2}, {1, 1}) == 0);
    ++cases;
  }
}

TEST_CASE("rank invariance of the rectangle approximation") {
  std::mt19937_64 rng(137);
  for (int trial = 0; trial < 10; ++trial) {
    auto [m, multiset] = oracle::random_interval_decomposable(4, 4, 2, rng);
    IntervalPoset poset(4, 2);
    std::vector<StaircaseInterval> e_le_2;
    for (int k = 1; k <= 2; ++k)
      for (const auto& i : poset.stratify_k_essential(k)) e_le_2.push_back(i);
    auto pia = partial_interval_approximation(m, e_le_2);
    CHECK(check_k_rank_invariant(pia, m, 1, poset));
    // rank reconstruction through the partial approximation
    for (int x1 = 1; x1 <= 4; ++x1)
      for (int x2 = x1; x2 <= 4; ++x2)
        CHECK(reconstruct_rank(pia, {x1, 1}, {x2, 2}) == rank(evaluate_path(m, {x1, 1}, {x2, 2})));
  }
}

TEST_CASE("k-rank invariance ladder") {
  std::mt19937_64 rng(139);
  auto [m, multiset] = oracle::random_interval_decomposable(4, 4, 2, rng);
  IntervalPoset poset(4, 2);
  // E_{<=1} is 0-rank invariant (dimension vectors)
  auto pia1 = partial_interval_approximation(m, poset.stratify_k_essential(1));
  CHECK(check_k_rank_invariant(pia1, m, 0, poset));
  // the full approximation is k-rank invariant for all k <= 3
  auto delta = interval_approximation(m, poset);
  for (int k = 0; k <= 3; ++k) CHECK(check_k_rank_invariant(delta, m, k, poset));
  // nested strata never lose invariance
  std::vector<StaircaseInterval> acc;
  for (int k = 1; k <= 4; ++k) {
    for (const auto& i : poset.stratify_k_essential(k)) acc.push_back(i);
    auto pia = partial_interval_approximation(m, acc);
    CHECK(check_k_rank_invariant(pia, m, k - 1, poset));
  }
}

TEST_CASE("slice persistence diagrams") {
  std::mt19937_64 rng(149);
  // a horizontal slice of the lower row is that row's barcode
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + static_cast<int>(rng() % 3);
    auto [m, multiset] = oracle::random_interval_decomposable(n, 4, 2, rng);
    std::vector<GridPoint> slice;
    for (int x = 1; x <= n; ++x) slice.push_back({x, 1});
    auto bars = slice_pd(m, slice);
    auto expected = decompose_an(row_module(m, 1));
    CHECK(bars == expected);
  }
  // a slice fully covered by a rectangle module yields one full bar
  GridRep rect = interval_module(StaircaseInterval::ladder(1, 3, 1, 3), 3, 2, 2);
  std::vector<GridPoint> diag = {{1, 1}, {2, 1}, {2, 2}, {3, 2}};
  auto bars = slice_pd(rect, diag);
  CHECK(bars == std::map<std::pair<int, int>, int>{{{1, 4}, 1}});
  CHECK_THROWS_AS(slice_pd(rect, {{2, 2}, {1, 1}}), error);
}

TEST_CASE("slice equals restricting and decomposing the slice module") {
  std::mt19937_64 rng(151);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + static_cast<int>(rng() % 3);
    auto [m, multiset] = oracle::random_interval_decomposable(n, 4, 2, rng);
    // monotone staircase slice through the grid
    std::vector<GridPoint> slice;
    int x = 1, y = 1;
    slice.push_back({1, 1});
    while (x < n || y < 2) {
      if (x < n && (y == 2 || rng() % 2)) ++x;
      else ++y;
      slice.push_back({x, y});
    }
    // oracle: evaluate the slice as a zigzag module and decompose it
    std::string tau(slice.size() - 1, 'f');
    std::vector<int> dims;
    std::vector<Matrix> maps;
    for (size_t k = 0; k < slice.size(); ++k) {
      dims.push_back(m.dim(slice[k]));
      if (k + 1 < slice.size()) maps.push_back(evaluate_path(m, slice[k], slice[k + 1]));
    }
    ZigzagRep slice_module(tau, std::move(dims), std::move(maps), 2);
    CHECK(slice_pd(m, slice) == decompose_an(slice_module));
  }
}
