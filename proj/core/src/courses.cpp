#include "cladder/courses.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace cladder {

std::optional<ZigzagCourse> linearize(const Quiver& course) {
  const int m = static_cast<int>(course.labels.size());
  if (m == 0) return std::nullopt;
  if (m == 1) return ZigzagCourse{"", course.labels};
  std::vector<std::vector<int>> adj(static_cast<size_t>(m));
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : course.arrows) {
    auto key = std::minmax(a, b);
    if (!seen.insert({key.first, key.second}).second) return std::nullopt;  // multi-edge
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (static_cast<int>(course.arrows.size()) != m - 1) return std::nullopt;
  std::vector<int> ends;
  for (int v = 0; v < m; ++v) {
    if (adj[v].size() > 2 || adj[v].empty()) return std::nullopt;
    if (adj[v].size() == 1) ends.push_back(v);
  }
  if (ends.size() != 2) return std::nullopt;
  std::set<std::pair<int, int>> forward(course.arrows.begin(), course.arrows.end());
  auto walk = [&](int start) -> std::optional<ZigzagCourse> {
    ZigzagCourse out;
    std::vector<bool> used(static_cast<size_t>(m), false);
    int cur = start, prev = -1;
    for (int step = 0; step < m; ++step) {
      if (used[cur]) return std::nullopt;  // cycle
      used[cur] = true;
      out.labels.push_back(course.labels[cur]);
      if (step + 1 < m) {
        int next = -1;
        for (int w : adj[cur])
          if (w != prev) next = w;
        if (next < 0) return std::nullopt;
        out.orientation.push_back(forward.count({cur, next}) ? 'f' : 'b');
        prev = cur;
        cur = next;
      }
    }
    return out;
  };
  auto a = walk(ends[0]);
  auto b = walk(ends[1]);
  if (!a || !b) return std::nullopt;
  // prefer a leading 'f', then the smaller (orientation, labels)
  auto better = [](const ZigzagCourse& x, const ZigzagCourse& y) {
    auto lead = [](const ZigzagCourse& c) { return !c.orientation.empty() && c.orientation[0] == 'f' ? 0 : 1; };
    if (lead(x) != lead(y)) return lead(x) < lead(y);
    return std::tie(x.orientation, x.labels) < std::tie(y.orientation, y.labels);
  };
  return better(*a, *b) ? *a : *b;
}

bool is_valid_course(const ZigzagCourse& c) {
  if (c.labels.empty() || c.orientation.size() + 1 != c.labels.size()) return false;
  for (size_t i = 0; i < c.orientation.size(); ++i) {
    GridPoint s = c.labels[i], t = c.labels[i + 1];
    if (c.orientation[i] == 'f' && !pointwise_leq(s, t)) return false;
    if (c.orientation[i] == 'b' && !pointwise_leq(t, s)) return false;
    if (c.orientation[i] != 'f' && c.orientation[i] != 'b') return false;
  }
  return true;
}

Quiver assignment_ss(const StaircaseInterval& i) { return hasse_quiver(essential_vertices(i), i); }
Quiver assignment_cc(const StaircaseInterval& i) { return hasse_quiver(corner_complete_vertices(i), i); }
Quiver assignment_tot(const StaircaseInterval& i) { return hasse_quiver(i.vertices(), i); }

Quiver assign(Assignment a, const StaircaseInterval& i) {
  switch (a) {
    case Assignment::ss:
      return assignment_ss(i);
    case Assignment::cc:
      return assignment_cc(i);
    default:
      return assignment_tot(i);
  }
}

bool is_essential_course(const Quiver& course, const StaircaseInterval& i) {
  for (GridPoint v : course.labels)
    if (!i.contains(v)) return false;
  for (GridPoint e : essential_vertices(i))
    if (std::find(course.labels.begin(), course.labels.end(), e) == course.labels.end()) return false;
  return true;
}

ZigzagRep tour(const GridRep& m, const ZigzagCourse& course) {
  if (!is_valid_course(course)) throw error(errc::usage, "invalid course");
  std::vector<int> dims;
  std::vector<Matrix> maps;
  for (GridPoint v : course.labels) dims.push_back(m.dim(v));
  for (size_t i = 0; i < course.orientation.size(); ++i) {
    GridPoint s = course.labels[i], t = course.labels[i + 1];
    maps.push_back(course.orientation[i] == 'f' ? evaluate_path(m, s, t) : evaluate_path(m, t, s));
  }
  return ZigzagRep(course.orientation, std::move(dims), std::move(maps), m.prime());
}

int compressed_multiplicity(const GridRep& m, const StaircaseInterval& i, Assignment assignment) {
  auto lin = linearize(assign(assignment, i));
  if (!lin) throw error(errc::domain, "non-linear-course");
  ZigzagRep t = tour(m, *lin);
  return generalized_rank(t, 1, t.length());
}

std::vector<ZigzagCourse> enumerate_azc_bfs(int p, int q, int n_max) {
  if (n_max < 1) throw error(errc::usage, "course length limit must be >= 1");
  std::vector<GridPoint> verts;
  for (int y = 1; y <= q; ++y)
    for (int x = 1; x <= p; ++x) verts.push_back({x, y});
  std::sort(verts.begin(), verts.end());
  std::vector<ZigzagCourse> out;
  std::deque<ZigzagCourse> queue;
  for (GridPoint v : verts) {
    ZigzagCourse c{"", {v}};
    out.push_back(c);
    queue.push_back(std::move(c));
  }
  while (!queue.empty()) {
    ZigzagCourse cur = std::move(queue.front());
    queue.pop_front();
    int n = cur.length();
    if (n + 1 > n_max) break;
    GridPoint last = cur.labels.back();
    bool forward = n % 2 == 1;  // arrows alternate fbfb...
    for (GridPoint w : verts) {
      if (w == last) continue;  // paths are non-trivial
      if (forward ? !pointwise_leq(last, w) : !pointwise_leq(w, last)) continue;
      ZigzagCourse next = cur;
      next.orientation.push_back(forward ? 'f' : 'b');
      next.labels.push_back(w);
      out.push_back(next);
      queue.push_back(std::move(next));
    }
  }
  return out;
}

int course_function(const GridRep& m, const ZigzagCourse& course) {
  ZigzagRep t = tour(m, course);
  return generalized_rank(t, 1, t.length());
}

ZigzagCourse normalize_forward(const ZigzagCourse& c) {
  if (!is_valid_course(c)) throw error(errc::usage, "invalid course");
  if (c.orientation.empty() || c.orientation[0] == 'f') return c;
  ZigzagCourse out;
  out.labels.push_back(c.labels[1]);
  out.labels.push_back(c.labels[0]);
  out.labels.insert(out.labels.end(), c.labels.begin() + 1, c.labels.end());
  out.orientation = "fb" + c.orientation.substr(1);
  if (!is_valid_course(out)) throw error(errc::usage, "course cannot be normalized");
  return out;
}

}  // namespace cladder
