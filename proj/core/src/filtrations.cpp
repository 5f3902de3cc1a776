#include "cladder/filtrations.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <unordered_map>

namespace cladder {

namespace {

bool simplex_dim_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<Simplex> simplices) {
  for (auto& s : simplices) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw error(errc::schema, "simplex with repeated vertices");
  }
  std::sort(simplices.begin(), simplices.end(), simplex_dim_less);
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  for (auto& s : simplices) {
    int k = static_cast<int>(s.size()) - 1;
    if (k >= static_cast<int>(by_dim_.size())) by_dim_.resize(static_cast<size_t>(k) + 1);
    by_dim_[k].push_back(std::move(s));
  }
}

const std::vector<Simplex>& SimplicialComplex::dim_simplices(int k) const {
  static const std::vector<Simplex> empty;
  if (k < 0 || k > max_dim()) return empty;
  return by_dim_[k];
}

size_t SimplicialComplex::total() const {
  size_t n = 0;
  for (const auto& v : by_dim_) n += v.size();
  return n;
}

int SimplicialComplex::index_of(int k, const Simplex& s) const {
  if (k < 0 || k > max_dim()) return -1;
  const auto& v = by_dim_[k];
  auto it = std::lower_bound(v.begin(), v.end(), s);
  if (it == v.end() || *it != s) return -1;
  return static_cast<int>(it - v.begin());
}

bool SimplicialComplex::closed_under_faces() const {
  for (int k = 1; k <= max_dim(); ++k)
    for (const auto& s : by_dim_[k]) {
      Simplex face(s.size() - 1);
      for (size_t drop = 0; drop < s.size(); ++drop) {
        size_t w = 0;
        for (size_t i = 0; i < s.size(); ++i)
          if (i != drop) face[w++] = s[i];
        if (index_of(k - 1, face) < 0) return false;
      }
    }
  return true;
}

Matrix SimplicialComplex::boundary(int k, uint32_t prime) const {
  const auto& rows = dim_simplices(k - 1);
  const auto& cols = dim_simplices(k);
  Matrix b(static_cast<int>(rows.size()), static_cast<int>(cols.size()), prime);
  if (k <= 0) return b;
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    const Simplex& s = cols[j];
    Simplex face(s.size() - 1);
    for (size_t drop = 0; drop < s.size(); ++drop) {
      size_t w = 0;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) face[w++] = s[i];
      int r = index_of(k - 1, face);
      if (r < 0) throw error(errc::schema, "complex not closed under faces");
      b.set(r, j, drop % 2 == 0 ? 1 : -1);
    }
  }
  return b;
}

void LadderTriplet::validate() const {
  if (simplices.size() != f1.size() || simplices.size() != f2.size())
    throw error(errc::schema, "filter arrays do not match the simplex list");
  if (!std::is_sorted(simplices.begin(), simplices.end(), simplex_dim_less))
    throw error(errc::schema, "triplet simplices must be sorted by (dim, lex)");
  std::map<Simplex, size_t> index;
  for (size_t i = 0; i < simplices.size(); ++i) index[simplices[i]] = i;
  for (size_t i = 0; i < simplices.size(); ++i) {
    if (f1[i] < f2[i]) throw error(errc::schema, "triplet violates f1 >= f2");
    const Simplex& s = simplices[i];
    if (s.size() <= 1) continue;
    Simplex face(s.size() - 1);
    for (size_t drop = 0; drop < s.size(); ++drop) {
      size_t w = 0;
      for (size_t t = 0; t < s.size(); ++t)
        if (t != drop) face[w++] = s[t];
      auto it = index.find(face);
      if (it == index.end()) throw error(errc::schema, "triplet not closed under faces");
      if (f1[it->second] > f1[i] || f2[it->second] > f2[i])
        throw error(errc::schema, "triplet filters not face-monotone");
    }
  }
}

int LadderTriplet::vertex_count() const {
  int m = 0;
  for (const auto& s : simplices)
    for (int v : s) m = std::max(m, v + 1);
  return m;
}

SimplicialComplex sublevel(const std::vector<Simplex>& simplices, const std::vector<double>& f,
                           double r) {
  std::vector<Simplex> keep;
  for (size_t i = 0; i < simplices.size(); ++i)
    if (f[i] <= r) keep.push_back(simplices[i]);
  return SimplicialComplex(std::move(keep));
}

SimplicialComplex LadderFiltration::complex_at(int i, int y) const {
  if (i < 1 || i > n() || (y != 1 && y != 2)) throw error(errc::usage, "filtration cell out of range");
  // tolerance matches the critical-value deduplication, so a threshold equal
  // to a filter value up to rounding admits the simplex
  return sublevel(triplet.simplices, y == 1 ? triplet.f1 : triplet.f2, thresholds[i - 1] + 1e-9);
}

LadderFiltration ladder_filtration(LadderTriplet triplet, std::vector<double> thresholds) {
  triplet.validate();
  if (thresholds.empty()) throw error(errc::usage, "at least one threshold is required");
  for (size_t i = 0; i + 1 < thresholds.size(); ++i)
    if (!(thresholds[i] < thresholds[i + 1]))
      throw error(errc::usage, "thresholds must be strictly increasing");
  return LadderFiltration{std::move(triplet), std::move(thresholds)};
}

namespace {

Point3 sub(Point3 a, Point3 b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(Point3 a, Point3 b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double dist(Point3 a, Point3 b) { return std::sqrt(dot(sub(a, b), sub(a, b))); }

// circumcenter of 2, 3 or 4 affinely independent points; false if degenerate
bool circumcenter(const std::vector<Point3>& pts, Point3& center) {
  const size_t k = pts.size();
  if (k == 1) {
    center = pts[0];
    return true;
  }
  // solve 2 (p_i - p_0) . c = |p_i|^2 - |p_0|^2 in the affine hull
  std::vector<Point3> u;
  std::vector<double> rhs;
  for (size_t i = 1; i < k; ++i) {
    u.push_back(sub(pts[i], pts[0]));
    rhs.push_back(dot(u.back(), u.back()) / 2.0);
  }
  // Gram system: sum_j alpha_j (u_j . u_i) = rhs_i
  const size_t m = u.size();
  std::vector<std::vector<double>> g(m, std::vector<double>(m + 1, 0.0));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) g[i][j] = dot(u[i], u[j]);
    g[i][m] = rhs[i];
  }
  for (size_t col = 0; col < m; ++col) {
    size_t piv = col;
    for (size_t i = col + 1; i < m; ++i)
      if (std::fabs(g[i][col]) > std::fabs(g[piv][col])) piv = i;
    if (std::fabs(g[piv][col]) < 1e-12) return false;
    std::swap(g[piv], g[col]);
    for (size_t i = 0; i < m; ++i) {
      if (i == col) continue;
      double f = g[i][col] / g[col][col];
      for (size_t j = col; j <= m; ++j) g[i][j] -= f * g[col][j];
    }
  }
  center = pts[0];
  for (size_t j = 0; j < m; ++j) {
    double a = g[j][m] / g[j][j];
    center[0] += a * u[j][0];
    center[1] += a * u[j][1];
    center[2] += a * u[j][2];
  }
  return true;
}

}  // namespace

double min_enclosing_ball_radius(const std::vector<Point3>& pts) {
  if (pts.empty()) throw error(errc::usage, "minimum enclosing ball of an empty set");
  if (pts.size() > 4) throw error(errc::usage, "minimum enclosing ball supports up to 4 points");
  const double tol = 1e-9;
  double best = kInf;
  const size_t n = pts.size();
  for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
    std::vector<Point3> support;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << i)) support.push_back(pts[i]);
    Point3 c;
    if (!circumcenter(support, c)) continue;
    double r = 0.0;
    for (const auto& p : support) r = std::max(r, dist(c, p));
    bool contains_all = true;
    for (const auto& p : pts)
      if (dist(c, p) > r + tol) {
        contains_all = false;
        break;
      }
    if (contains_all) best = std::min(best, r);
  }
  return best;
}

FilteredComplex cech_filtration(const std::vector<Point3>& points, int max_dim, double r_max,
                                int point_cap) {
  if (static_cast<int>(points.size()) > point_cap)
    throw error(errc::capacity, "point cloud larger than the configured cap");
  if (max_dim > 3) throw error(errc::usage, "Čech complexes are supported up to dimension 3");
  const int n = static_cast<int>(points.size());
  const double tol = 1e-9;
  FilteredComplex out;
  // enumerate subsets by size; prune by the edge filter when possible
  std::vector<std::vector<double>> edge_r(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edge_r[i][j] = edge_r[j][i] = dist(points[i], points[j]) / 2.0;
  for (int i = 0; i < n; ++i) {
    out.simplices.push_back({i});
    out.values.push_back(0.0);
  }
  auto consider = [&](const Simplex& s) {
    std::vector<Point3> pts;
    for (int v : s) pts.push_back(points[v]);
    double r = min_enclosing_ball_radius(pts);
    if (r <= r_max + tol) {
      out.simplices.push_back(s);
      out.values.push_back(r);
    }
  };
  for (int i = 0; i < n && max_dim >= 1; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge_r[i][j] <= r_max + tol) consider({i, j});
  for (int i = 0; i < n && max_dim >= 2; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (edge_r[i][j] > r_max + tol) continue;
      for (int k = j + 1; k < n; ++k) {
        if (edge_r[i][k] > r_max + tol || edge_r[j][k] > r_max + tol) continue;
        consider({i, j, k});
      }
    }
  for (int i = 0; i < n && max_dim >= 3; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (edge_r[i][j] > r_max + tol) continue;
      for (int k = j + 1; k < n; ++k) {
        if (edge_r[i][k] > r_max + tol || edge_r[j][k] > r_max + tol) continue;
        for (int l = k + 1; l < n; ++l) {
          if (edge_r[i][l] > r_max + tol || edge_r[j][l] > r_max + tol || edge_r[k][l] > r_max + tol)
            continue;
          consider({i, j, k, l});
        }
      }
    }
  // sort into (dim, lex) order with parallel values
  std::vector<size_t> order(out.simplices.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return simplex_dim_less(out.simplices[a], out.simplices[b]);
  });
  FilteredComplex sorted;
  for (size_t i : order) {
    sorted.simplices.push_back(std::move(out.simplices[i]));
    sorted.values.push_back(out.values[i]);
  }
  // enforce exact face-monotonicity (support enumeration can undershoot a
  // facet's radius by the containment tolerance)
  std::map<Simplex, size_t> pos;
  for (size_t i = 0; i < sorted.simplices.size(); ++i) pos[sorted.simplices[i]] = i;
  for (size_t i = 0; i < sorted.simplices.size(); ++i) {
    const Simplex& s = sorted.simplices[i];
    if (s.size() <= 1) continue;
    Simplex face(s.size() - 1);
    for (size_t drop = 0; drop < s.size(); ++drop) {
      size_t w = 0;
      for (size_t v = 0; v < s.size(); ++v)
        if (v != drop) face[w++] = s[v];
      auto it = pos.find(face);
      if (it != pos.end()) sorted.values[i] = std::max(sorted.values[i], sorted.values[it->second]);
    }
  }
  return sorted;
}

SimplicialComplex cech_complex(const std::vector<Point3>& points, double r, int max_dim,
                               int point_cap) {
  FilteredComplex f = cech_filtration(points, max_dim, r, point_cap);
  return sublevel(f.simplices, f.values, r + 1e-9);
}

LadderTriplet thinning_triplet(const std::vector<Point3>& points, const std::vector<int>& subset,
                               int max_dim, double r_max, int point_cap) {
  if (subset.empty() || subset.size() >= points.size())
    throw error(errc::usage, "thinning needs a nonempty proper subset");
  std::vector<bool> in_subset(points.size(), false);
  for (int v : subset) {
    if (v < 0 || v >= static_cast<int>(points.size())) throw error(errc::usage, "subset index out of range");
    in_subset[static_cast<size_t>(v)] = true;
  }
  FilteredComplex f = cech_filtration(points, max_dim, r_max, point_cap);
  LadderTriplet t;
  t.simplices = std::move(f.simplices);
  t.f2 = std::move(f.values);
  t.f1.reserve(t.f2.size());
  for (size_t i = 0; i < t.simplices.size(); ++i) {
    bool inside = std::all_of(t.simplices[i].begin(), t.simplices[i].end(),
                              [&](int v) { return in_subset[static_cast<size_t>(v)]; });
    t.f1.push_back(inside ? t.f2[i] : kInf);
  }
  t.validate();
  return t;
}

namespace {

std::vector<Simplex> all_subsets_up_to(int m, int max_card) {
  std::vector<Simplex> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_card) return;
    for (int v = start; v < m; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), simplex_dim_less);
  return out;
}

}  // namespace

LadderTriplet clique_model(int m, uint64_t seed, int max_dim) {
  if (m < 3) throw error(errc::usage, "clique model needs m >= 3");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<std::vector<double>> t(static_cast<size_t>(m), std::vector<double>(static_cast<size_t>(m), 0.0));
  std::vector<std::vector<double>> tt = t;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      t[i][j] = t[j][i] = unif(rng);
      tt[i][j] = tt[j][i] = unif(rng);
    }
  LadderTriplet out;
  out.simplices = all_subsets_up_to(m, max_dim + 1);
  for (const auto& s : out.simplices) {
    double v1 = 0.0, v2 = 0.0;
    for (size_t a = 0; a < s.size(); ++a)
      for (size_t b = a + 1; b < s.size(); ++b) {
        v1 = std::max(v1, t[s[a]][s[b]]);
        v2 = std::max(v2, t[s[a]][s[b]] * tt[s[a]][s[b]]);
      }
    out.f1.push_back(v1);
    out.f2.push_back(v2);
  }
  out.validate();
  return out;
}

LadderTriplet linial_meshulam_model(int m, int d, uint64_t seed) {
  if (d < 1 || d > m - 1) throw error(errc::usage, "Linial-Meshulam dimension out of range");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  LadderTriplet out;
  out.simplices = all_subsets_up_to(m, d + 1);
  for (const auto& s : out.simplices) {
    if (static_cast<int>(s.size()) == d + 1) {
      double t = unif(rng), tt = unif(rng);
      out.f1.push_back(t);
      out.f2.push_back(t * tt);
    } else {
      out.f1.push_back(0.0);
      out.f2.push_back(0.0);
    }
  }
  out.validate();
  return out;
}

LadderTriplet random_thinning_model(int npts, int ambient_dim, uint64_t seed, int max_dim,
                                    double r_max) {
  if (npts < 3) throw error(errc::usage, "thinning model needs at least 3 points");
  if (ambient_dim != 2 && ambient_dim != 3) throw error(errc::usage, "points must live in R^2 or R^3");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Point3> pts;
  for (int i = 0; i < npts; ++i)
    pts.push_back({unif(rng), unif(rng), ambient_dim == 3 ? unif(rng) : 0.0});
  std::uniform_int_distribution<int> size_dist(1, npts - 1);
  int subset_size = size_dist(rng);
  std::vector<int> all(static_cast<size_t>(npts));
  for (int i = 0; i < npts; ++i) all[static_cast<size_t>(i)] = i;
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<int> subset(all.begin(), all.begin() + subset_size);
  std::sort(subset.begin(), subset.end());
  return thinning_triplet(pts, subset, max_dim, r_max, std::max(npts, 64));
}

namespace {

// sparse F_p column: (row, coefficient) sorted by row ascending
using SparseCol = std::vector<std::pair<int, uint32_t>>;

void add_scaled(SparseCol& a, const SparseCol& b, uint32_t factor, const Field& f) {
  SparseCol out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, f.mul(b[j].second, factor));
      ++j;
    } else {
      uint32_t v = f.add(a[i].second, f.mul(b[j].second, factor));
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

}  // namespace

std::vector<Bar> one_param_persistence(const std::vector<Simplex>& simplices,
                                       const std::vector<double>& values, uint32_t prime,
                                       int max_hom_dim) {
  if (simplices.size() != values.size()) throw error(errc::usage, "value array size mismatch");
  const Field field(prime);
  // filtration order over the finite-valued simplices
  std::vector<int> order;
  for (int i = 0; i < static_cast<int>(simplices.size()); ++i)
    if (std::isfinite(values[i])) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (values[a] != values[b]) return values[a] < values[b];
    return simplex_dim_less(simplices[a], simplices[b]);
  });
  std::vector<int> pos(simplices.size(), -1);
  for (int k = 0; k < static_cast<int>(order.size()); ++k) pos[order[k]] = k;
  std::map<Simplex, int> simplex_pos;
  for (int k = 0; k < static_cast<int>(order.size()); ++k) simplex_pos[simplices[order[k]]] = k;

  const int n = static_cast<int>(order.size());
  std::vector<SparseCol> reduced(static_cast<size_t>(n));
  std::vector<int> pivot_owner(static_cast<size_t>(n), -1);
  std::vector<bool> paired(static_cast<size_t>(n), false);
  std::vector<Bar> bars;
  for (int k = 0; k < n; ++k) {
    const Simplex& s = simplices[order[k]];
    const int dim = static_cast<int>(s.size()) - 1;
    if (dim == 0 || dim - 1 > max_hom_dim) continue;
    SparseCol col;
    Simplex face(s.size() - 1);
    for (size_t drop = 0; drop < s.size(); ++drop) {
      size_t w = 0;
      for (size_t i = 0; i < s.size(); ++i)
        if (i != drop) face[w++] = s[i];
      auto it = simplex_pos.find(face);
      if (it == simplex_pos.end()) throw error(errc::schema, "filtration not closed under faces");
      col.emplace_back(it->second, field.reduce(drop % 2 == 0 ? 1 : -1));
    }
    std::sort(col.begin(), col.end());
    while (!col.empty()) {
      int piv = col.back().first;
      int owner = pivot_owner[static_cast<size_t>(piv)];
      if (owner < 0) break;
      uint32_t factor = field.neg(field.mul(col.back().second, field.inv(reduced[owner].back().second)));
      add_scaled(col, reduced[owner], factor, field);
    }
    if (!col.empty()) {
      int piv = col.back().first;
      pivot_owner[static_cast<size_t>(piv)] = k;
      paired[static_cast<size_t>(piv)] = true;
      paired[static_cast<size_t>(k)] = true;
      double birth = values[order[piv]], death = values[order[k]];
      if (birth < death && dim - 1 <= max_hom_dim) bars.push_back({dim - 1, birth, death});
      reduced[static_cast<size_t>(k)] = std::move(col);
    }
  }
  for (int k = 0; k < n; ++k) {
    if (paired[static_cast<size_t>(k)]) continue;
    const int dim = static_cast<int>(simplices[order[k]].size()) - 1;
    if (dim <= max_hom_dim) bars.push_back({dim, values[order[k]], kInf});
  }
  std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
    return std::tie(a.dim, a.birth, a.death) < std::tie(b.dim, b.birth, b.death);
  });
  return bars;
}

std::vector<double> critical_values(const LadderTriplet& t, int k, uint32_t prime) {
  std::vector<double> vals;
  for (const auto* f : {&t.f1, &t.f2})
    for (const Bar& bar : one_param_persistence(t.simplices, *f, prime, k)) {
      if (bar.dim != k) continue;
      vals.push_back(bar.birth);
      if (std::isfinite(bar.death)) vals.push_back(bar.death);
    }
  std::sort(vals.begin(), vals.end());
  std::vector<double> out;
  for (double v : vals)
    if (out.empty() || v - out.back() > 1e-9) out.push_back(v);
  return out;
}

namespace {

// homology data of one complex: representative cycles and the solver basis
struct HomologyCell {
  SimplicialComplex complex;
  Matrix image;   // basis of im boundary_{k+1}
  Matrix cycles;  // representative cycles; [image | cycles] spans ker boundary_k
  int h() const { return cycles.cols(); }
};

HomologyCell homology_cell(SimplicialComplex complex, int k, uint32_t prime) {
  Matrix bk = complex.boundary(k, prime);
  Matrix bk1 = complex.boundary(k + 1, prime);
  Matrix z = kernel_basis(bk);           // n_k x z
  Matrix img = column_space_basis(bk1);  // n_k x r
  // pick kernel columns completing the image to a basis of the cycle space
  std::vector<int> piv;
  rref(hstack(img, z), &piv);
  std::vector<int> chosen;
  for (int c : piv)
    if (c >= img.cols()) chosen.push_back(c - img.cols());
  return {std::move(complex), std::move(img), z.columns(chosen)};
}

// express the image of src cycles (mapped by inclusion) in the target
// homology basis
Matrix induced_on_homology(const HomologyCell& src, const HomologyCell& tgt, int k, uint32_t prime) {
  const auto& src_simplices = src.complex.dim_simplices(k);
  Matrix mapped(static_cast<int>(tgt.complex.dim_simplices(k).size()), src.h(), prime);
  for (int j = 0; j < src.h(); ++j)
    for (int i = 0; i < static_cast<int>(src_simplices.size()); ++i) {
      uint32_t v = src.cycles(i, j);
      if (v == 0) continue;
      int r = tgt.complex.index_of(k, src_simplices[static_cast<size_t>(i)]);
      if (r < 0) throw error(errc::internal, "inclusion does not map the complex inside the target");
      mapped.set(r, j, v);
    }
  auto sol = solve(hstack(tgt.image, tgt.cycles), mapped);
  if (!sol) throw error(errc::internal, "cycle failed to reduce in the target complex");
  Matrix out(tgt.h(), src.h(), prime);
  for (int i = 0; i < tgt.h(); ++i)
    for (int j = 0; j < src.h(); ++j) out.set(i, j, (*sol)(tgt.image.cols() + i, j));
  return out;
}

}  // namespace

GridRep homology_rep(const LadderFiltration& filt, int k, uint32_t prime) {
  const int n = filt.n();
  std::vector<HomologyCell> cells;
  cells.reserve(static_cast<size_t>(2 * n));
  for (int y = 1; y <= 2; ++y)
    for (int i = 1; i <= n; ++i) cells.push_back(homology_cell(filt.complex_at(i, y), k, prime));
  auto cell = [&](int i, int y) -> const HomologyCell& {
    return cells[static_cast<size_t>(y - 1) * n + (i - 1)];
  };
  GridRep m(n, 2, prime);
  for (int y = 1; y <= 2; ++y)
    for (int i = 1; i <= n; ++i) m.set_dim({i, y}, cell(i, y).h());
  for (int y = 1; y <= 2; ++y)
    for (int i = 1; i <= n; ++i) {
      if (i < n) m.set_horiz({i, y}, induced_on_homology(cell(i, y), cell(i + 1, y), k, prime));
      if (y == 1) m.set_vert({i, 1}, induced_on_homology(cell(i, 1), cell(i, 2), k, prime));
    }
  if (!check_commutativity(m)) throw error(errc::internal, "homology module squares do not commute");
  return m;
}

ZigzagRep zigzag_along_course(const LadderFiltration& filt, const ZigzagCourse& course, int k,
                              uint32_t prime) {
  if (!is_valid_course(course)) throw error(errc::usage, "invalid course");
  std::vector<HomologyCell> cells;
  for (GridPoint v : course.labels) {
    if (v.x < 1 || v.x > filt.n() || (v.y != 1 && v.y != 2))
      throw error(errc::usage, "course label outside the filtration grid");
    cells.push_back(homology_cell(filt.complex_at(v.x, v.y), k, prime));
  }
  std::vector<int> dims;
  std::vector<Matrix> maps;
  for (const auto& c : cells) dims.push_back(c.h());
  for (size_t i = 0; i < course.orientation.size(); ++i) {
    if (course.orientation[i] == 'f')
      maps.push_back(induced_on_homology(cells[i], cells[i + 1], k, prime));
    else
      maps.push_back(induced_on_homology(cells[i + 1], cells[i], k, prime));
  }
  return ZigzagRep(course.orientation, std::move(dims), std::move(maps), prime);
}

}  // namespace cladder
