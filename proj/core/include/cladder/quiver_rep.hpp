#pragma once

#include <map>
#include <string>
#include <vector>

#include "cladder/field_linalg.hpp"
#include "cladder/grid_poset.hpp"

namespace cladder {

// Representation of a type A_n quiver with orientation string tau ('f'/'b',
// length n-1). maps[i] sits on the arrow between vertices i+1 and i+2:
// 'f' means dims[i] -> dims[i+1], 'b' means dims[i+1] -> dims[i].
class ZigzagRep {
 public:
  ZigzagRep(std::string tau, std::vector<int> dims, std::vector<Matrix> maps, uint32_t prime);
  static ZigzagRep zero(const std::string& tau, uint32_t prime);

  int length() const { return static_cast<int>(dims_.size()); }
  const std::string& orientation() const { return tau_; }
  uint32_t prime() const { return prime_; }
  int dim(int v) const { return dims_[v - 1]; }  // 1-based vertex
  const std::vector<int>& dims() const { return dims_; }
  const Matrix& map(int arrow) const { return maps_[arrow - 1]; }  // 1-based arrow

  bool operator==(const ZigzagRep&) const = default;

 private:
  std::string tau_;
  uint32_t prime_;
  std::vector<int> dims_;
  std::vector<Matrix> maps_;
};

ZigzagRep zz_interval_module(const std::string& tau, int b, int d, uint32_t prime);
ZigzagRep zz_direct_sum(const std::vector<ZigzagRep>& parts);

// Rank of the canonical map lim -> colim of the restriction of z to [b, d].
int generalized_rank(const ZigzagRep& z, int b, int d);

// Interval multiplicities d([b,d]) of a zigzag module, via inclusion-exclusion
// over the covers [b-1,d], [b,d+1] of the A_n interval poset.
std::map<std::pair<int, int>, int> decompose_an(const ZigzagRep& z);

// Representation of the equi-oriented grid with columns x_lo..x_lo+p-1
// (logical coordinates; x_lo is 1 unless the module was dislocated) and rows
// 1..q. Vertices outside the window are zero.
class GridRep {
 public:
  GridRep() : p_(0), q_(0), x_lo_(1), prime_(2) {}
  GridRep(int p, int q, uint32_t prime, int x_lo = 1);

  int p() const { return p_; }
  int q() const { return q_; }
  int x_lo() const { return x_lo_; }
  int x_hi() const { return x_lo_ + p_ - 1; }
  uint32_t prime() const { return prime_; }
  bool in_window(GridPoint v) const { return v.x >= x_lo() && v.x <= x_hi() && v.y >= 1 && v.y <= q_; }

  int dim(GridPoint v) const { return in_window(v) ? dims_[idx(v)] : 0; }
  std::vector<std::vector<int>> dim_rows() const;  // [row-1][col] over the window
  int total_dim() const;

  // structure maps (x,y)->(x+1,y) and (x,y)->(x,y+1); zero-shaped outside the
  // window, and zero-shaped where no matrix was stored
  Matrix horiz(GridPoint v) const;
  Matrix vert(GridPoint v) const;

  void set_dim(GridPoint v, int d);
  void set_horiz(GridPoint v, Matrix m);
  void set_vert(GridPoint v, Matrix m);

  bool operator==(const GridRep& rhs) const;

 private:
  size_t idx(GridPoint v) const { return static_cast<size_t>(v.y - 1) * p_ + (v.x - x_lo_); }
  int p_, q_, x_lo_;
  uint32_t prime_;
  std::vector<int> dims_;
  std::vector<Matrix> horiz_;  // per vertex with x < x_hi
  std::vector<Matrix> vert_;   // per vertex with y < q
};

GridRep interval_module(const StaircaseInterval& i, int p, int q, uint32_t prime);
GridRep direct_sum(const std::vector<GridRep>& parts);

// Composite along the canonical monotone path: all horizontal steps first,
// then vertical. Throws "no-path" when from is not <= to.
Matrix evaluate_path(const GridRep& m, GridPoint from, GridPoint to);

bool check_commutativity(const GridRep& m);

// Induced subquiver on columns [x1,x2] and rows [y1,y2].
GridRep restrict(const GridRep& m, int x1, int x2, int y1, int y2);
// Row y as an equi-oriented zigzag module.
ZigzagRep row_module(const GridRep& m, int y);
// Re-embed into the window [x_lo, x_lo+p-1], zero-padding; throws if support
// would be cut.
GridRep embed(const GridRep& m, int x_lo, int p);

struct Morphism {
  GridRep src;
  GridRep tgt;
  std::vector<Matrix> comps;  // per vertex, row-major over the common window

  const Matrix& at(GridPoint v) const;
  Matrix& at(GridPoint v);
};

Morphism zero_morphism(const GridRep& src, const GridRep& tgt);
Morphism identity_morphism(const GridRep& m);
bool is_natural(const Morphism& f);
bool is_zero(const Morphism& f);
Morphism compose(const Morphism& g, const Morphism& f);  // g ∘ f

struct ImageFactorization {
  GridRep image;
  Morphism inclusion;   // image -> tgt, injective
  Morphism projection;  // src -> image, surjective
};

// Vertexwise column-space subrepresentation with the induced maps;
// inclusion ∘ projection == f.
ImageFactorization image_subrep(const Morphism& f);
// Vertexwise kernel subrepresentation; *inclusion (optional) gets ker -> src.
GridRep kernel_subrep(const Morphism& f, Morphism* inclusion = nullptr);
// Vertexwise cokernel; *projection (optional) gets tgt -> coker.
GridRep cokernel_rep(const Morphism& f, Morphism* projection = nullptr);

}  // namespace cladder
