#include "cladder/interval_approx.hpp"

#include <algorithm>
#include <bit>

namespace cladder {

namespace {

class CompressedMultiplicityCache {
 public:
  CompressedMultiplicityCache(const GridRep& m, const IntervalPoset& poset, Assignment assignment)
      : m_(m), poset_(poset), assignment_(assignment), values_(poset.size(), kUnset) {}

  int at(const StaircaseInterval& i) {
    int idx = poset_.index_of(i);
    if (idx < 0) throw error(errc::internal, "interval outside the poset");
    if (values_[idx] == kUnset) values_[idx] = compressed_multiplicity(m_, i, assignment_);
    return values_[idx];
  }

 private:
  static constexpr int kUnset = INT32_MIN;
  const GridRep& m_;
  const IntervalPoset& poset_;
  Assignment assignment_;
  std::vector<int> values_;
};

}  // namespace

SignedMultiplicityMap interval_approximation(const GridRep& m, const IntervalPoset& poset,
                                             Assignment assignment) {
  CompressedMultiplicityCache c(m, poset, assignment);
  SignedMultiplicityMap delta;
  for (const auto& i : poset.intervals()) {
    auto cov = poset.cover(i);
    const size_t k = cov.size();
    long long acc = 0;
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
      std::vector<StaircaseInterval> s;
      for (size_t b = 0; b < k; ++b)
        if (mask & (size_t{1} << b)) s.push_back(cov[b]);
      int sign = (std::popcount(mask) % 2 == 0) ? 1 : -1;
      acc += sign * c.at(poset.join(i, s));
    }
    if (acc != 0) delta[i] = static_cast<int>(acc);
  }
  return delta;
}

namespace {

// subset sorted so every strict superset precedes its subsets
std::vector<StaircaseInterval> reverse_linear_extension(std::vector<StaircaseInterval> subset) {
  std::stable_sort(subset.begin(), subset.end(), [](const StaircaseInterval& a, const StaircaseInterval& b) {
    if (a.num_vertices() != b.num_vertices()) return a.num_vertices() > b.num_vertices();
    return a < b;
  });
  return subset;
}

SignedMultiplicityMap trace_down(const GridRep& m, const std::vector<StaircaseInterval>& subset,
                                 Assignment assignment) {
  auto order = reverse_linear_extension(subset);
  order.erase(std::unique(order.begin(), order.end()), order.end());
  SignedMultiplicityMap delta;
  std::vector<std::pair<StaircaseInterval, int>> done;  // (interval, value) with value possibly 0
  for (const auto& i : order) {
    long long v = compressed_multiplicity(m, i, assignment);
    for (const auto& [j, dj] : done)
      if (i != j && leq(i, j)) v -= dj;
    done.emplace_back(i, static_cast<int>(v));
    if (v != 0) delta[i] = static_cast<int>(v);
  }
  return delta;
}

}  // namespace

SignedMultiplicityMap interval_approximation_trace_down(const GridRep& m, const IntervalPoset& poset,
                                                        Assignment assignment) {
  return trace_down(m, poset.intervals(), assignment);
}

SignedMultiplicityMap partial_interval_approximation(const GridRep& m,
                                                     const std::vector<StaircaseInterval>& subset,
                                                     Assignment assignment) {
  return trace_down(m, subset, assignment);
}

int reconstruct_rank(const SignedMultiplicityMap& delta, GridPoint from, GridPoint to) {
  if (!pointwise_leq(from, to)) return 0;
  int acc = 0;
  for (const auto& [i, v] : delta)
    if (i.contains(from) && i.contains(to)) acc += v;
  return acc;
}

std::map<std::pair<int, int>, int> slice_pd(const GridRep& m, const std::vector<GridPoint>& slice) {
  if (slice.empty()) throw error(errc::usage, "empty slice");
  for (size_t i = 0; i + 1 < slice.size(); ++i)
    if (!pointwise_leq(slice[i], slice[i + 1])) throw error(errc::domain, "slice is not monotone");
  const int n = static_cast<int>(slice.size());
  auto rect_rank = [&](int a, int b) -> int {
    if (a < 1 || b > n) return 0;
    return rank(evaluate_path(m, slice[a - 1], slice[b - 1]));
  };
  std::map<std::pair<int, int>, int> out;
  for (int b = 1; b <= n; ++b)
    for (int d = b; d <= n; ++d) {
      int v = rect_rank(b, d) - rect_rank(b - 1, d) - rect_rank(b, d + 1) + rect_rank(b - 1, d + 1);
      if (v != 0) out[{b, d}] = v;
    }
  return out;
}

bool check_k_rank_invariant(const SignedMultiplicityMap& pia, const GridRep& m, int k,
                            const IntervalPoset& poset, Assignment assignment) {
  for (const auto& i : poset.intervals()) {
    if (static_cast<int>(essential_vertices(i).size()) > k + 1) continue;
    int lhs = compressed_multiplicity(m, i, assignment);
    int rhs = 0;
    for (const auto& [j, v] : pia)
      if (leq(i, j)) rhs += v;
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace cladder
