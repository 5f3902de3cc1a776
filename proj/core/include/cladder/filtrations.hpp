#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "cladder/courses.hpp"
#include "cladder/quiver_rep.hpp"

namespace cladder {

using Simplex = std::vector<int>;  // sorted 0-based vertex ids
using Point3 = std::array<double, 3>;

constexpr double kInf = std::numeric_limits<double>::infinity();

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(std::vector<Simplex> simplices);  // sorts and dedups

  int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<Simplex>& dim_simplices(int k) const;
  size_t total() const;
  int index_of(int k, const Simplex& s) const;  // -1 if absent
  bool contains(const Simplex& s) const { return index_of(static_cast<int>(s.size()) - 1, s) >= 0; }
  bool closed_under_faces() const;

  // boundary matrix C_k -> C_{k-1} over F_p
  Matrix boundary(int k, uint32_t prime) const;

 private:
  std::vector<std::vector<Simplex>> by_dim_;
};

// Simplicial complex with the two filters of a ladder filtration; f1 >= f2
// pointwise and both face-monotone. +infinity marks simplices that never
// enter the corresponding row.
struct LadderTriplet {
  std::vector<Simplex> simplices;  // sorted by (dim, lex)
  std::vector<double> f1, f2;

  void validate() const;
  int vertex_count() const;
};

SimplicialComplex sublevel(const std::vector<Simplex>& simplices, const std::vector<double>& f,
                           double r);

struct LadderFiltration {
  LadderTriplet triplet;
  std::vector<double> thresholds;  // strictly increasing

  int n() const { return static_cast<int>(thresholds.size()); }
  // row 1 cuts f1, row 2 cuts f2
  SimplicialComplex complex_at(int i, int y) const;
};

LadderFiltration ladder_filtration(LadderTriplet triplet, std::vector<double> thresholds);

// minimum enclosing ball radius of up to 4 points (exact support enumeration)
double min_enclosing_ball_radius(const std::vector<Point3>& pts);

struct FilteredComplex {
  std::vector<Simplex> simplices;
  std::vector<double> values;
};

// All simplices of dimension <= max_dim whose minimum-enclosing-ball radius
// is <= r_max; values carry the radii.
FilteredComplex cech_filtration(const std::vector<Point3>& points, int max_dim, double r_max = kInf,
                                int point_cap = 64);
// The complex at a fixed radius (tolerance 1e-9).
SimplicialComplex cech_complex(const std::vector<Point3>& points, double r, int max_dim,
                               int point_cap = 64);

// Point-cloud thinning model: K = Čech on P, f2 = Čech radius, f1 = f2 on
// simplices inside the subset and +infinity otherwise. The subset must be a
// nonempty proper subset of the points.
LadderTriplet thinning_triplet(const std::vector<Point3>& points, const std::vector<int>& subset,
                               int max_dim, double r_max = kInf, int point_cap = 64);

// Clique complex over the Erdős–Rényi edge process: per-edge T_e and
// T~_e ~ U(0,1); f1 = max T_e, f2 = max T_e T~_e over the edges of a simplex.
LadderTriplet clique_model(int m, uint64_t seed, int max_dim = 3);

// d-Linial–Meshulam process: the (d-1)-skeleton enters at 0, d-simplices at
// T_sigma (f1) and T_sigma T~_sigma (f2).
LadderTriplet linial_meshulam_model(int m, int d, uint64_t seed);

// Uniform points in the unit square/cube with a random nonempty proper
// subset; the thinning triplet of that pair.
LadderTriplet random_thinning_model(int npts, int ambient_dim, uint64_t seed, int max_dim,
                                    double r_max = kInf);

struct Bar {
  int dim;
  double birth;
  double death;  // kInf for essential classes
};

// One-parameter persistence barcode of (simplices, values) by sparse column
// reduction; simplices with value +infinity are dropped.
std::vector<Bar> one_param_persistence(const std::vector<Simplex>& simplices,
                                       const std::vector<double>& values, uint32_t prime,
                                       int max_hom_dim = INT32_MAX);

// Union of the finite critical values of both rows at homology dimension k,
// sorted and deduplicated with tolerance 1e-9.
std::vector<double> critical_values(const LadderTriplet& t, int k, uint32_t prime);

// H_k of every grid cell with induced maps along the inclusions.
GridRep homology_rep(const LadderFiltration& filt, int k, uint32_t prime);

// Homology of only the complexes visited by the course, with maps induced by
// the inclusions along grid paths.
ZigzagRep zigzag_along_course(const LadderFiltration& filt, const ZigzagCourse& course, int k,
                              uint32_t prime);

}  // namespace cladder
