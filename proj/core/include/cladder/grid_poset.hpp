#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cladder/errors.hpp"

namespace cladder {

using BigInt = boost::multiprecision::cpp_int;

// 1-based grid vertex of an equi-oriented commutative grid.
struct GridPoint {
  int x = 0;
  int y = 0;
  auto operator<=>(const GridPoint&) const = default;
};

inline bool pointwise_leq(GridPoint a, GridPoint b) { return a.x <= b.x && a.y <= b.y; }

// Staircase interval: contiguous rows [row_lo, row_hi], one span [b,d] per
// row, with b and d non-increasing when going up and overlapping spans:
//   b(r+1) <= b(r) <= d(r+1) <= d(r).
class StaircaseInterval {
 public:
  StaircaseInterval(int row_lo, std::vector<std::array<int, 2>> spans);

  static StaircaseInterval single(GridPoint v) { return StaircaseInterval(v.y, {{v.x, v.x}}); }
  // [b,d] in row y.
  static StaircaseInterval row_span(int b, int d, int y) { return StaircaseInterval(y, {{b, d}}); }
  // [b2,d2]_2 ⊔ [b1,d1]_1 on a ladder.
  static StaircaseInterval ladder(int b2, int d2, int b1, int d1) {
    return StaircaseInterval(1, {{b1, d1}, {b2, d2}});
  }

  int row_lo() const { return row_lo_; }
  int row_hi() const { return row_lo_ + static_cast<int>(spans_.size()) - 1; }
  int num_rows() const { return static_cast<int>(spans_.size()); }
  int b(int row) const { return spans_[row - row_lo_][0]; }
  int d(int row) const { return spans_[row - row_lo_][1]; }
  const std::vector<std::array<int, 2>>& spans() const { return spans_; }

  bool contains(GridPoint v) const {
    return v.y >= row_lo() && v.y <= row_hi() && v.x >= b(v.y) && v.x <= d(v.y);
  }
  int num_vertices() const;
  std::vector<GridPoint> vertices() const;  // sorted by (y, x)
  bool in_grid(int p, int q) const { return row_lo() >= 1 && row_hi() <= q && b(row_hi()) >= 1 && d(row_lo()) <= p; }

  // lexicographic on (row_lo, row_hi, spans)
  std::strong_ordering operator<=>(const StaircaseInterval& rhs) const {
    if (auto c = row_lo_ <=> rhs.row_lo_; c != 0) return c;
    if (auto c = spans_.size() <=> rhs.spans_.size(); c != 0) return c;
    return spans_ <=> rhs.spans_;
  }
  bool operator==(const StaircaseInterval&) const = default;

 private:
  int row_lo_;
  std::vector<std::array<int, 2>> spans_;  // spans_[i] is row row_lo_+i
};

struct IntervalHash {
  size_t operator()(const StaircaseInterval& i) const;
};

// Finite quiver with grid labels; vertices are 0..labels.size()-1.
struct Quiver {
  std::vector<GridPoint> labels;
  std::vector<std::pair<int, int>> arrows;  // (src, dst)
};

// Closed-form interval count of the p x q equi-oriented grid.
BigInt count_intervals(int p, int q);

// All intervals of the p x q grid, deterministic lexicographic order on
// (row_lo, row_hi, spans). Throws a capacity error beyond `limit` intervals.
std::vector<StaircaseInterval> enumerate_intervals(int p, int q, uint64_t limit = 5'000'000);

// Containment order.
bool leq(const StaircaseInterval& i, const StaircaseInterval& j);

// Sources and sinks of the full subquiver on I, computed from arrow adjacency.
std::vector<GridPoint> essential_vertices(const StaircaseInterval& i);

// Smallest connected convex staircase containing the points; throws a domain
// error ("disconnected") when the monotone-path closure is not connected.
StaircaseInterval convex_hull(int p, int q, const std::vector<GridPoint>& points);

// Corner-complete vertices: members of I sharing both a row and a column with
// essential vertices.
std::vector<GridPoint> corner_complete_vertices(const StaircaseInterval& i);

// Hasse quiver on `subset` within I: arrow u -> v iff a path u -> v exists in
// I and no other subset member lies on any such path.
Quiver hasse_quiver(const std::vector<GridPoint>& subset, const StaircaseInterval& i);

class IntervalPoset {
 public:
  IntervalPoset(int p, int q, uint64_t limit = 5'000'000);

  int p() const { return p_; }
  int q() const { return q_; }
  const std::vector<StaircaseInterval>& intervals() const { return intervals_; }
  size_t size() const { return intervals_.size(); }
  const StaircaseInterval& operator[](size_t i) const { return intervals_[i]; }
  // -1 if absent.
  int index_of(const StaircaseInterval& i) const;

  // Cover of I: ladder (q == 2) uses the explicit endpoint rules, general
  // grids scan for minimal strict supersets.
  std::vector<StaircaseInterval> cover(const StaircaseInterval& i) const;

  // Join of S ⊆ Cov(I) with the convention join(I, {}) = I. Ladder uses the
  // per-row min/max with the forced b2/d1 repairs; general grids take the
  // convex hull of the union. Throws "not-cover-subset" if some member does
  // not strictly contain I.
  StaircaseInterval join(const StaircaseInterval& i, const std::vector<StaircaseInterval>& s) const;

  std::vector<StaircaseInterval> stratify_k_essential(int k) const;

 private:
  int p_, q_;
  std::vector<StaircaseInterval> intervals_;
  std::unordered_map<StaircaseInterval, int, IntervalHash> index_;
};

}  // namespace cladder
