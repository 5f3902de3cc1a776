#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "cladder/courses.hpp"
#include "cladder/quiver_rep.hpp"

namespace cladder {

using Rational = boost::multiprecision::cpp_rational;

struct Indecomposable {
  std::string label;
  bool is_interval = true;
  GridRep rep;
};

struct IndecomposableSet {
  int n = 0;           // ladder length
  uint32_t prime = 2;  // base field of the representative matrices
  std::vector<Indecomposable> members;
};

// Complete representative sets for the interval-finite ladders: all interval
// modules, plus the two non-interval CL(3) classes with explicit matrices.
// Pairwise distinctness is certified by the course-function fingerprint.
IndecomposableSet builtin_indecomposables(int n, uint32_t prime = 2);

// Load a representative set from JSON (the CL(4) classes ship as a data
// asset, not generated code).
IndecomposableSet load_indecomposables(const std::string& path);
void save_indecomposables(const IndecomposableSet& set, const std::string& path);

struct CoefficientMatrix {
  std::vector<std::vector<Rational>> rows;  // |L| x |L| once complete
  std::vector<ZigzagCourse> row_courses;    // provenance, one per row
  std::vector<std::vector<Rational>> inverse;
};

// Greedy rank-raising row selection over the course functions evaluated on
// every member of L; throws "insufficient courses" when the supply runs out
// before reaching rank |L|.
CoefficientMatrix build_coefficient_matrix(const IndecomposableSet& set,
                                           const std::vector<ZigzagCourse>& courses);

// Exact rank of an integer/rational matrix (used for the rank-trajectory
// diagnostics as families of courses grow).
int rational_rank(const std::vector<std::vector<Rational>>& rows);

// Evaluate the coefficient rows on a target module and solve for the
// multiplicity vector; entries must come out integral and >= 0.
std::vector<int> decompose(const GridRep& target, const IndecomposableSet& set,
                           const CoefficientMatrix& c);

// Solve from externally evaluated course-function values (e.g. zigzag
// homology along each row course of a filtration, without materializing the
// module).
std::vector<int> decompose_from_values(const std::vector<int>& fvals, const IndecomposableSet& set,
                                       const CoefficientMatrix& c);

// Course-function fingerprint: values over `courses` plus the dimension
// vector; separates members whenever the coefficient matrix reaches full
// rank.
std::vector<int> fingerprint(const GridRep& m, const std::vector<ZigzagCourse>& courses);

}  // namespace cladder
