#include "cladder/grid_poset.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cladder {

StaircaseInterval::StaircaseInterval(int row_lo, std::vector<std::array<int, 2>> spans)
    : row_lo_(row_lo), spans_(std::move(spans)) {
  if (spans_.empty()) throw error(errc::internal, "interval needs at least one row");
  for (size_t i = 0; i < spans_.size(); ++i) {
    if (spans_[i][0] > spans_[i][1]) throw error(errc::internal, "interval span with b > d");
    if (i + 1 < spans_.size()) {
      // row above starts and ends no later, and overlaps
      if (!(spans_[i + 1][0] <= spans_[i][0] && spans_[i][0] <= spans_[i + 1][1] &&
            spans_[i + 1][1] <= spans_[i][1]))
        throw error(errc::internal, "staircase condition violated");
    }
  }
}

int StaircaseInterval::num_vertices() const {
  int n = 0;
  for (const auto& s : spans_) n += s[1] - s[0] + 1;
  return n;
}

std::vector<GridPoint> StaircaseInterval::vertices() const {
  std::vector<GridPoint> out;
  out.reserve(num_vertices());
  for (int y = row_lo(); y <= row_hi(); ++y)
    for (int x = b(y); x <= d(y); ++x) out.push_back({x, y});
  return out;
}

size_t IntervalHash::operator()(const StaircaseInterval& i) const {
  size_t h = static_cast<size_t>(i.row_lo());
  for (const auto& s : i.spans()) {
    h = h * 1000003u + static_cast<size_t>(s[0]);
    h = h * 1000003u + static_cast<size_t>(s[1]);
  }
  return h;
}

BigInt count_intervals(int p, int q) {
  if (p < 1 || q < 1) throw error(errc::usage, "grid dimensions must be positive");
  auto binom = [](int n, int k) {
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
      r *= n - k + i;
      r /= i;
    }
    return r;
  };
  BigInt total = 0;
  for (int h = 1; h <= q; ++h) {
    for (int w = 1; w <= p; ++w) {
      BigInt term = binom(h + w - 1, h - 1) * binom(h + w - 1, w - 1);
      term *= (q - h + 1);
      term *= (p - w + 1);
      BigInt den = h + w - 1;
      if (term % den != 0) throw error(errc::internal, "interval count term not integral");
      total += term / den;
    }
  }
  return total;
}

std::vector<StaircaseInterval> enumerate_intervals(int p, int q, uint64_t limit) {
  BigInt n = count_intervals(p, q);
  if (n > limit) throw error(errc::capacity, "interval poset larger than the configured limit");
  std::vector<StaircaseInterval> out;
  out.reserve(static_cast<size_t>(n));
  std::vector<std::array<int, 2>> spans;
  for (int s = 1; s <= q; ++s) {
    for (int t = s; t <= q; ++t) {
      // build spans for rows s..t, bottom-up, lexicographic
      auto rec = [&](auto&& self, int row) -> void {
        if (row > t) {
          out.emplace_back(s, spans);
          return;
        }
        if (row == s) {
          for (int b = 1; b <= p; ++b)
            for (int d = b; d <= p; ++d) {
              spans.push_back({b, d});
              self(self, row + 1);
              spans.pop_back();
            }
        } else {
          auto [pb, pd] = std::pair(spans.back()[0], spans.back()[1]);
          for (int b = 1; b <= pb; ++b)
            for (int d = pb; d <= pd; ++d) {
              spans.push_back({b, d});
              self(self, row + 1);
              spans.pop_back();
            }
        }
      };
      rec(rec, s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool leq(const StaircaseInterval& i, const StaircaseInterval& j) {
  if (i.row_lo() < j.row_lo() || i.row_hi() > j.row_hi()) return false;
  for (int y = i.row_lo(); y <= i.row_hi(); ++y)
    if (i.b(y) < j.b(y) || i.d(y) > j.d(y)) return false;
  return true;
}

std::vector<GridPoint> essential_vertices(const StaircaseInterval& i) {
  std::vector<GridPoint> out;
  for (GridPoint v : i.vertices()) {
    bool has_in = i.contains({v.x - 1, v.y}) || i.contains({v.x, v.y - 1});
    bool has_out = i.contains({v.x + 1, v.y}) || i.contains({v.x, v.y + 1});
    if (!has_in || !has_out) out.push_back(v);
  }
  return out;
}

StaircaseInterval convex_hull(int p, int q, const std::vector<GridPoint>& points) {
  if (points.empty()) throw error(errc::usage, "convex hull of an empty set");
  std::set<GridPoint> s(points.begin(), points.end());
  for (GridPoint v : s)
    if (v.x < 1 || v.x > p || v.y < 1 || v.y > q) throw error(errc::usage, "point outside the grid");
  // close under all intermediate vertices of monotone paths between members
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<GridPoint> cur(s.begin(), s.end());
    for (size_t a = 0; a < cur.size(); ++a)
      for (size_t b = 0; b < cur.size(); ++b) {
        if (a == b || !pointwise_leq(cur[a], cur[b])) continue;
        for (int x = cur[a].x; x <= cur[b].x; ++x)
          for (int y = cur[a].y; y <= cur[b].y; ++y)
            if (s.insert({x, y}).second) grew = true;
      }
  }
  // connectivity
  std::vector<GridPoint> all(s.begin(), s.end());
  std::vector<bool> seen(all.size(), false);
  std::vector<size_t> stack = {0};
  seen[0] = true;
  auto find = [&](GridPoint v) -> int {
    auto it = std::lower_bound(all.begin(), all.end(), v);
    if (it == all.end() || *it != v) return -1;
    return static_cast<int>(it - all.begin());
  };
  while (!stack.empty()) {
    GridPoint v = all[stack.back()];
    stack.pop_back();
    for (GridPoint w : {GridPoint{v.x + 1, v.y}, GridPoint{v.x - 1, v.y}, GridPoint{v.x, v.y + 1},
                        GridPoint{v.x, v.y - 1}}) {
      int k = find(w);
      if (k >= 0 && !seen[k]) {
        seen[k] = true;
        stack.push_back(static_cast<size_t>(k));
      }
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw error(errc::domain, "disconnected");
  // read off spans
  std::map<int, std::array<int, 2>> rows;
  for (GridPoint v : all) {
    auto it = rows.find(v.y);
    if (it == rows.end())
      rows[v.y] = {v.x, v.x};
    else {
      it->second[0] = std::min(it->second[0], v.x);
      it->second[1] = std::max(it->second[1], v.x);
    }
  }
  int row_lo = rows.begin()->first;
  std::vector<std::array<int, 2>> spans;
  int expect = row_lo;
  for (auto& [y, sp] : rows) {
    if (y != expect++) throw error(errc::domain, "disconnected");
    spans.push_back(sp);
  }
  return StaircaseInterval(row_lo, std::move(spans));
}

std::vector<GridPoint> corner_complete_vertices(const StaircaseInterval& i) {
  auto ess = essential_vertices(i);
  std::set<int> rows, cols;
  for (GridPoint v : ess) {
    rows.insert(v.y);
    cols.insert(v.x);
  }
  std::vector<GridPoint> out;
  for (GridPoint v : i.vertices())
    if (rows.count(v.y) && cols.count(v.x)) out.push_back(v);
  return out;
}

Quiver hasse_quiver(const std::vector<GridPoint>& subset, const StaircaseInterval& i) {
  std::vector<GridPoint> verts = subset;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (GridPoint v : verts)
    if (!i.contains(v)) throw error(errc::usage, "hasse quiver vertex outside the interval");
  Quiver h;
  h.labels = verts;
  const int m = static_cast<int>(verts.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b || !pointwise_leq(verts[a], verts[b])) continue;
      // inside a staircase interval a path u -> v exists iff u <= v pointwise
      bool blocked = false;
      for (int w = 0; w < m && !blocked; ++w)
        if (w != a && w != b && pointwise_leq(verts[a], verts[w]) && pointwise_leq(verts[w], verts[b]))
          blocked = true;
      if (!blocked) h.arrows.emplace_back(a, b);
    }
  return h;
}

IntervalPoset::IntervalPoset(int p, int q, uint64_t limit)
    : p_(p), q_(q), intervals_(enumerate_intervals(p, q, limit)) {
  index_.reserve(intervals_.size());
  for (size_t k = 0; k < intervals_.size(); ++k) index_.emplace(intervals_[k], static_cast<int>(k));
}

int IntervalPoset::index_of(const StaircaseInterval& i) const {
  auto it = index_.find(i);
  return it == index_.end() ? -1 : it->second;
}

std::vector<StaircaseInterval> IntervalPoset::cover(const StaircaseInterval& i) const {
  if (index_of(i) < 0) throw error(errc::usage, "interval not in the poset");
  std::vector<StaircaseInterval> out;
  if (q_ == 2) {
    if (i.num_rows() == 2) {
      int b2 = i.b(2), d2 = i.d(2), b1 = i.b(1), d1 = i.d(1);
      if (b2 > 1) out.push_back(StaircaseInterval::ladder(b2 - 1, d2, b1, d1));
      if (b1 > b2) out.push_back(StaircaseInterval::ladder(b2, d2, b1 - 1, d1));
      if (d2 < d1) out.push_back(StaircaseInterval::ladder(b2, d2 + 1, b1, d1));
      if (d1 < p_) out.push_back(StaircaseInterval::ladder(b2, d2, b1, d1 + 1));
    } else if (i.row_lo() == 1) {
      int b = i.b(1), d = i.d(1);
      if (b > 1) out.push_back(StaircaseInterval::row_span(b - 1, d, 1));
      if (d < p_) out.push_back(StaircaseInterval::row_span(b, d + 1, 1));
      out.push_back(StaircaseInterval::ladder(b, b, b, d));
    } else {
      int b = i.b(2), d = i.d(2);
      if (b > 1) out.push_back(StaircaseInterval::row_span(b - 1, d, 2));
      if (d < p_) out.push_back(StaircaseInterval::row_span(b, d + 1, 2));
      out.push_back(StaircaseInterval::ladder(b, d, d, d));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  // general grid: minimal strict supersets
  std::vector<const StaircaseInterval*> supersets;
  for (const auto& j : intervals_)
    if (j != i && leq(i, j)) supersets.push_back(&j);
  for (const auto* j : supersets) {
    bool minimal = true;
    for (const auto* l : supersets)
      if (l != j && leq(*l, *j)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(*j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

StaircaseInterval IntervalPoset::join(const StaircaseInterval& i,
                                      const std::vector<StaircaseInterval>& s) const {
  if (s.empty()) return i;
  for (const auto& j : s)
    if (!(leq(i, j) && i != j)) throw error(errc::domain, "not-cover-subset");
  if (q_ == 2) {
    int row_lo = i.row_lo(), row_hi = i.row_hi();
    for (const auto& j : s) {
      row_lo = std::min(row_lo, j.row_lo());
      row_hi = std::max(row_hi, j.row_hi());
    }
    auto acc_b = std::vector<int>(static_cast<size_t>(row_hi - row_lo + 1), p_ + 1);
    auto acc_d = std::vector<int>(static_cast<size_t>(row_hi - row_lo + 1), 0);
    auto fold = [&](const StaircaseInterval& j) {
      for (int y = j.row_lo(); y <= j.row_hi(); ++y) {
        acc_b[y - row_lo] = std::min(acc_b[y - row_lo], j.b(y));
        acc_d[y - row_lo] = std::max(acc_d[y - row_lo], j.d(y));
      }
    };
    fold(i);
    for (const auto& j : s) fold(j);
    if (row_hi > row_lo) {
      // forced minimal repairs for cover subsets
      acc_b[1] = std::min(acc_b[1], acc_b[0]);
      acc_d[0] = std::max(acc_d[0], acc_d[1]);
    }
    std::vector<std::array<int, 2>> spans;
    for (size_t k = 0; k < acc_b.size(); ++k) spans.push_back({acc_b[k], acc_d[k]});
    try {
      StaircaseInterval out(row_lo, std::move(spans));
      if (index_of(out) < 0) throw error(errc::domain, "join outside the poset");
      return out;
    } catch (const error&) {
      throw error(errc::domain, "join is not a valid staircase interval");
    }
  }
  std::vector<GridPoint> pts = i.vertices();
  for (const auto& j : s)
    for (GridPoint v : j.vertices()) pts.push_back(v);
  return convex_hull(p_, q_, pts);
}

std::vector<StaircaseInterval> IntervalPoset::stratify_k_essential(int k) const {
  if (k < 1) throw error(errc::usage, "k must be >= 1");
  std::vector<StaircaseInterval> out;
  for (const auto& i : intervals_)
    if (static_cast<int>(essential_vertices(i).size()) == k) out.push_back(i);
  return out;
}

}  // namespace cladder
