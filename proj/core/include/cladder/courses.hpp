#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cladder/grid_poset.hpp"
#include "cladder/quiver_rep.hpp"

namespace cladder {

// A type A_m course laid out on a line: labels[i] carries vertex i+1,
// orientation[i] gives the arrow between vertices i+1 and i+2 ('f': a grid
// path labels[i] -> labels[i+1] exists; 'b': labels[i+1] -> labels[i]).
struct ZigzagCourse {
  std::string orientation;
  std::vector<GridPoint> labels;

  int length() const { return static_cast<int>(labels.size()); }
  auto operator<=>(const ZigzagCourse&) const = default;
};

// Lay a course quiver out as a line; nullopt when the underlying graph is not
// a simple path. Of the two walks the one with the lexicographically larger
// orientation ('f' < 'b' reversed: prefer leading 'f') and then smaller label
// sequence is returned, so the result is deterministic.
std::optional<ZigzagCourse> linearize(const Quiver& course);

bool is_valid_course(const ZigzagCourse& c);

// Essential assignments. ss is always a line on ladders; cc/tot may be
// non-linear on two-row intervals, in which case compressed_multiplicity
// fails with "non-linear-course".
Quiver assignment_ss(const StaircaseInterval& i);
Quiver assignment_cc(const StaircaseInterval& i);
Quiver assignment_tot(const StaircaseInterval& i);

enum class Assignment { ss, cc, tot };
Quiver assign(Assignment a, const StaircaseInterval& i);

bool is_essential_course(const Quiver& course, const StaircaseInterval& i);

// Evaluate m along the course: vertex spaces at the labels, arrows evaluated
// over grid paths (well-defined by commutativity).
ZigzagRep tour(const GridRep& m, const ZigzagCourse& course);

// c^ξ_M(I): the multiplicity of the longest interval of the compressed A_m
// module; equals the generalized rank over the whole course.
int compressed_multiplicity(const GridRep& m, const StaircaseInterval& i, Assignment assignment);

// All alternating zigzag courses (orientation fbfb...) of type A_m, m <= n_max
// on the p x q grid, via BFS. Deterministic: by level, then parent order, then
// lexicographic label order.
std::vector<ZigzagCourse> enumerate_azc_bfs(int p, int q, int n_max);

// Multiplicity of the longest interval of tour(m, course); additive over
// direct sums and isomorphism-invariant.
int course_function(const GridRep& m, const ZigzagCourse& course);

// Prepend a duplicated first step so a backward-initial alternating course
// starts forward; course functions are unchanged.
ZigzagCourse normalize_forward(const ZigzagCourse& c);

}  // namespace cladder
