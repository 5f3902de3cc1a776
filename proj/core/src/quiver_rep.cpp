#include "cladder/quiver_rep.hpp"

#include <algorithm>
#include <numeric>

namespace cladder {

namespace {

void check_tau(const std::string& tau) {
  for (char c : tau)
    if (c != 'f' && c != 'b') throw error(errc::usage, "orientation string must consist of 'f'/'b'");
}

}  // namespace

ZigzagRep::ZigzagRep(std::string tau, std::vector<int> dims, std::vector<Matrix> maps, uint32_t prime)
    : tau_(std::move(tau)), prime_(prime), dims_(std::move(dims)), maps_(std::move(maps)) {
  check_tau(tau_);
  if (dims_.empty() || dims_.size() != tau_.size() + 1 || maps_.size() != tau_.size())
    throw error(errc::usage, "zigzag shape mismatch");
  for (size_t i = 0; i < maps_.size(); ++i) {
    int src = tau_[i] == 'f' ? dims_[i] : dims_[i + 1];
    int dst = tau_[i] == 'f' ? dims_[i + 1] : dims_[i];
    if (maps_[i].cols() != src || maps_[i].rows() != dst || maps_[i].prime() != prime_)
      throw error(errc::usage, "zigzag arrow matrix shape mismatch");
  }
}

ZigzagRep ZigzagRep::zero(const std::string& tau, uint32_t prime) {
  std::vector<int> dims(tau.size() + 1, 0);
  std::vector<Matrix> maps(tau.size(), Matrix(0, 0, prime));
  return ZigzagRep(tau, std::move(dims), std::move(maps), prime);
}

ZigzagRep zz_interval_module(const std::string& tau, int b, int d, uint32_t prime) {
  int n = static_cast<int>(tau.size()) + 1;
  if (b < 1 || d > n || b > d) throw error(errc::usage, "interval out of range");
  std::vector<int> dims(n, 0);
  for (int v = b; v <= d; ++v) dims[v - 1] = 1;
  std::vector<Matrix> maps;
  for (int i = 1; i < n; ++i) {
    bool inside = i >= b && i + 1 <= d;
    int ls = dims[i - 1], rs = dims[i];
    int src = tau[i - 1] == 'f' ? ls : rs;
    int dst = tau[i - 1] == 'f' ? rs : ls;
    Matrix m(dst, src, prime);
    if (inside) m.set(0, 0, 1);
    maps.push_back(std::move(m));
  }
  return ZigzagRep(tau, std::move(dims), std::move(maps), prime);
}

ZigzagRep zz_direct_sum(const std::vector<ZigzagRep>& parts) {
  if (parts.empty()) throw error(errc::usage, "empty direct sum");
  const std::string& tau = parts[0].orientation();
  uint32_t prime = parts[0].prime();
  int n = parts[0].length();
  std::vector<int> dims(n, 0);
  std::vector<Matrix> maps;
  for (const auto& z : parts)
    if (z.orientation() != tau || z.prime() != prime) throw error(errc::usage, "direct sum shape mismatch");
  for (int v = 1; v <= n; ++v)
    dims[v - 1] = std::accumulate(parts.begin(), parts.end(), 0,
                                  [&](int acc, const ZigzagRep& z) { return acc + z.dim(v); });
  for (int a = 1; a < n; ++a) {
    Matrix m(0, 0, prime);
    for (const auto& z : parts) m = dsum(m, z.map(a));
    maps.push_back(std::move(m));
  }
  return ZigzagRep(tau, std::move(dims), std::move(maps), prime);
}

int generalized_rank(const ZigzagRep& z, int b, int d) {
  if (b < 1 || d > z.length() || b > d) throw error(errc::usage, "generalized rank span out of range");
  const uint32_t p = z.prime();
  int total = 0;
  std::vector<int> offset(static_cast<size_t>(d - b + 1), 0);
  for (int v = b; v <= d; ++v) {
    offset[v - b] = total;
    total += z.dim(v);
  }
  if (total == 0) return 0;
  // limit: kernel of the stacked per-arrow constraints on the direct sum
  int constraint_rows = 0;
  for (int a = b; a < d; ++a) {
    int tgt_dim = z.orientation()[a - 1] == 'f' ? z.dim(a + 1) : z.dim(a);
    constraint_rows += tgt_dim;
  }
  Matrix k(constraint_rows, total, p);
  int row0 = 0;
  for (int a = b; a < d; ++a) {
    const Matrix& f = z.map(a);
    if (z.orientation()[a - 1] == 'f') {
      // f: V_a -> V_{a+1}; constraint f x_a - x_{a+1} = 0
      for (int i = 0; i < f.rows(); ++i) {
        for (int j = 0; j < f.cols(); ++j) k.set(row0 + i, offset[a - b] + j, f(i, j));
        k.set(row0 + i, offset[a + 1 - b] + i, -1);
      }
      row0 += f.rows();
    } else {
      // f: V_{a+1} -> V_a; constraint f x_{a+1} - x_a = 0
      for (int i = 0; i < f.rows(); ++i) {
        for (int j = 0; j < f.cols(); ++j) k.set(row0 + i, offset[a + 1 - b] + j, f(i, j));
        k.set(row0 + i, offset[a - b] + i, -1);
      }
      row0 += f.rows();
    }
  }
  Matrix lim = kernel_basis(k);  // total x l
  // colimit: cokernel of the relation matrix whose columns are
  // (e_src ⊗ v) - (e_tgt ⊗ f v) over source basis vectors
  int rel_cols = 0;
  for (int a = b; a < d; ++a) rel_cols += z.orientation()[a - 1] == 'f' ? z.dim(a) : z.dim(a + 1);
  Matrix rel(total, rel_cols, p);
  int col0 = 0;
  for (int a = b; a < d; ++a) {
    const Matrix& f = z.map(a);
    int src = a, tgt = a + 1;
    if (z.orientation()[a - 1] == 'b') std::swap(src, tgt);
    for (int j = 0; j < f.cols(); ++j) {
      rel.set(offset[src - b] + j, col0 + j, 1);
      for (int i = 0; i < f.rows(); ++i) rel.set(offset[tgt - b] + i, col0 + j, -static_cast<int64_t>(f(i, j)));
    }
    col0 += f.cols();
  }
  Matrix q = cokernel_projection(rel);  // coker_dim x total
  // canonical map: include any single component (they all agree); use b.
  Matrix comp(q.rows(), lim.cols(), p);
  {
    // q restricted to block b, times the block-b rows of lim
    for (int i = 0; i < q.rows(); ++i)
      for (int j = 0; j < lim.cols(); ++j) {
        int64_t acc = 0;
        for (int t = 0; t < z.dim(b); ++t)
          acc += static_cast<int64_t>(q(i, offset[0] + t)) * lim(offset[0] + t, j) % p;
        comp.set(i, j, acc);
      }
  }
  return rank(comp);
}

std::map<std::pair<int, int>, int> decompose_an(const ZigzagRep& z) {
  const int n = z.length();
  std::vector<std::vector<int>> g(static_cast<size_t>(n) + 1, std::vector<int>(static_cast<size_t>(n) + 1, 0));
  for (int b = 1; b <= n; ++b)
    for (int d = b; d <= n; ++d) g[b][d] = generalized_rank(z, b, d);
  std::map<std::pair<int, int>, int> out;
  for (int b = 1; b <= n; ++b)
    for (int d = b; d <= n; ++d) {
      int v = g[b][d];
      if (b > 1) v -= g[b - 1][d];
      if (d < n) v -= g[b][d + 1];
      if (b > 1 && d < n) v += g[b - 1][d + 1];
      if (v < 0) throw error(errc::internal, "negative multiplicity in zigzag decomposition");
      if (v != 0) out[{b, d}] = v;
    }
  // dimension reconciliation
  for (int v = 1; v <= n; ++v) {
    int acc = 0;
    for (const auto& [bd, m] : out)
      if (bd.first <= v && v <= bd.second) acc += m;
    if (acc != z.dim(v)) throw error(errc::internal, "zigzag decomposition does not reconcile dimensions");
  }
  return out;
}

GridRep::GridRep(int p, int q, uint32_t prime, int x_lo)
    : p_(p), q_(q), x_lo_(x_lo), prime_(prime), dims_(static_cast<size_t>(p) * q, 0) {
  if (p < 1 || q < 1) throw error(errc::usage, "grid dimensions must be positive");
  horiz_.assign(static_cast<size_t>(p) * q, Matrix(0, 0, prime));
  vert_.assign(static_cast<size_t>(p) * q, Matrix(0, 0, prime));
}

std::vector<std::vector<int>> GridRep::dim_rows() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(q_));
  for (int y = 1; y <= q_; ++y)
    for (int x = x_lo(); x <= x_hi(); ++x) out[y - 1].push_back(dim({x, y}));
  return out;
}

int GridRep::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

Matrix GridRep::horiz(GridPoint v) const {
  GridPoint w{v.x + 1, v.y};
  if (!in_window(v) || !in_window(w)) return Matrix(dim(w), dim(v), prime_);
  const Matrix& st = horiz_[idx(v)];
  if (st.rows() == dim(w) && st.cols() == dim(v)) return st;
  if (st.rows() == 0 && st.cols() == 0) return Matrix(dim(w), dim(v), prime_);
  throw error(errc::internal, "stored horizontal matrix out of shape");
}

Matrix GridRep::vert(GridPoint v) const {
  GridPoint w{v.x, v.y + 1};
  if (!in_window(v) || !in_window(w)) return Matrix(dim(w), dim(v), prime_);
  const Matrix& st = vert_[idx(v)];
  if (st.rows() == dim(w) && st.cols() == dim(v)) return st;
  if (st.rows() == 0 && st.cols() == 0) return Matrix(dim(w), dim(v), prime_);
  throw error(errc::internal, "stored vertical matrix out of shape");
}

bool GridRep::operator==(const GridRep& rhs) const {
  if (p_ != rhs.p_ || q_ != rhs.q_ || x_lo_ != rhs.x_lo_ || prime_ != rhs.prime_ ||
      dims_ != rhs.dims_)
    return false;
  for (int y = 1; y <= q_; ++y)
    for (int x = x_lo(); x <= x_hi(); ++x) {
      if (x < x_hi() && !(horiz({x, y}) == rhs.horiz({x, y}))) return false;
      if (y < q_ && !(vert({x, y}) == rhs.vert({x, y}))) return false;
    }
  return true;
}

void GridRep::set_dim(GridPoint v, int d) {
  if (!in_window(v)) throw error(errc::usage, "vertex outside the window");
  dims_[idx(v)] = d;
}

void GridRep::set_horiz(GridPoint v, Matrix m) {
  GridPoint w{v.x + 1, v.y};
  if (!in_window(v) || !in_window(w)) throw error(errc::usage, "horizontal arrow outside the window");
  if (m.rows() != dim(w) || m.cols() != dim(v)) throw error(errc::usage, "horizontal matrix shape mismatch");
  horiz_[idx(v)] = std::move(m);
}

void GridRep::set_vert(GridPoint v, Matrix m) {
  GridPoint w{v.x, v.y + 1};
  if (!in_window(v) || !in_window(w)) throw error(errc::usage, "vertical arrow outside the window");
  if (m.rows() != dim(w) || m.cols() != dim(v)) throw error(errc::usage, "vertical matrix shape mismatch");
  vert_[idx(v)] = std::move(m);
}

GridRep interval_module(const StaircaseInterval& i, int p, int q, uint32_t prime) {
  if (!i.in_grid(p, q)) throw error(errc::usage, "interval outside the grid");
  GridRep m(p, q, prime);
  for (GridPoint v : i.vertices()) m.set_dim(v, 1);
  Matrix one(1, 1, prime);
  one.set(0, 0, 1);
  for (GridPoint v : i.vertices()) {
    if (i.contains({v.x + 1, v.y})) m.set_horiz(v, one);
    if (i.contains({v.x, v.y + 1})) m.set_vert(v, one);
  }
  return m;
}

GridRep direct_sum(const std::vector<GridRep>& parts) {
  if (parts.empty()) throw error(errc::usage, "empty direct sum");
  const GridRep& first = parts[0];
  GridRep out(first.p(), first.q(), first.prime(), first.x_lo());
  for (const auto& m : parts)
    if (m.p() != first.p() || m.q() != first.q() || m.x_lo() != first.x_lo() || m.prime() != first.prime())
      throw error(errc::usage, "direct sum shape mismatch");
  for (int y = 1; y <= out.q(); ++y)
    for (int x = out.x_lo(); x <= out.x_hi(); ++x) {
      GridPoint v{x, y};
      int d = 0;
      for (const auto& m : parts) d += m.dim(v);
      out.set_dim(v, d);
    }
  for (int y = 1; y <= out.q(); ++y)
    for (int x = out.x_lo(); x <= out.x_hi(); ++x) {
      GridPoint v{x, y};
      if (x < out.x_hi()) {
        Matrix m(0, 0, out.prime());
        for (const auto& part : parts) m = dsum(m, part.horiz(v));
        out.set_horiz(v, std::move(m));
      }
      if (y < out.q()) {
        Matrix m(0, 0, out.prime());
        for (const auto& part : parts) m = dsum(m, part.vert(v));
        out.set_vert(v, std::move(m));
      }
    }
  return out;
}

Matrix evaluate_path(const GridRep& m, GridPoint from, GridPoint to) {
  if (!pointwise_leq(from, to)) throw error(errc::domain, "no-path");
  Matrix acc = Matrix::identity(m.dim(from), m.prime());
  GridPoint pos = from;
  while (pos.x < to.x) {
    acc = m.horiz(pos) * acc;
    ++pos.x;
  }
  while (pos.y < to.y) {
    acc = m.vert(pos) * acc;
    ++pos.y;
  }
  return acc;
}

bool check_commutativity(const GridRep& m) {
  for (int y = 1; y < m.q(); ++y)
    for (int x = m.x_lo(); x < m.x_hi(); ++x) {
      GridPoint v{x, y};
      Matrix up_right = m.horiz({x, y + 1}) * m.vert(v);
      Matrix right_up = m.vert({x + 1, y}) * m.horiz(v);
      if (!(up_right == right_up)) return false;
    }
  return true;
}

GridRep restrict(const GridRep& m, int x1, int x2, int y1, int y2) {
  if (x1 > x2 || y1 > y2 || x1 < m.x_lo() || x2 > m.x_hi() || y1 < 1 || y2 > m.q())
    throw error(errc::usage, "restriction window out of range");
  GridRep out(x2 - x1 + 1, y2 - y1 + 1, m.prime());
  for (int y = y1; y <= y2; ++y)
    for (int x = x1; x <= x2; ++x) out.set_dim({x - x1 + 1, y - y1 + 1}, m.dim({x, y}));
  for (int y = y1; y <= y2; ++y)
    for (int x = x1; x <= x2; ++x) {
      if (x < x2) out.set_horiz({x - x1 + 1, y - y1 + 1}, m.horiz({x, y}));
      if (y < y2) out.set_vert({x - x1 + 1, y - y1 + 1}, m.vert({x, y}));
    }
  return out;
}

ZigzagRep row_module(const GridRep& m, int y) {
  std::string tau(static_cast<size_t>(m.p() - 1), 'f');
  std::vector<int> dims;
  std::vector<Matrix> maps;
  for (int x = m.x_lo(); x <= m.x_hi(); ++x) {
    dims.push_back(m.dim({x, y}));
    if (x < m.x_hi()) maps.push_back(m.horiz({x, y}));
  }
  return ZigzagRep(tau, std::move(dims), std::move(maps), m.prime());
}

GridRep embed(const GridRep& m, int x_lo, int p) {
  int x_hi = x_lo + p - 1;
  for (int y = 1; y <= m.q(); ++y)
    for (int x = m.x_lo(); x <= m.x_hi(); ++x)
      if ((x < x_lo || x > x_hi) && m.dim({x, y}) != 0)
        throw error(errc::usage, "embedding window cuts the support");
  GridRep out(p, m.q(), m.prime(), x_lo);
  for (int y = 1; y <= m.q(); ++y)
    for (int x = x_lo; x <= x_hi; ++x) out.set_dim({x, y}, m.dim({x, y}));
  for (int y = 1; y <= m.q(); ++y)
    for (int x = x_lo; x <= x_hi; ++x) {
      if (x < x_hi) out.set_horiz({x, y}, m.horiz({x, y}));
      if (y < m.q()) out.set_vert({x, y}, m.vert({x, y}));
    }
  return out;
}

const Matrix& Morphism::at(GridPoint v) const {
  return comps[static_cast<size_t>(v.y - 1) * src.p() + (v.x - src.x_lo())];
}

Matrix& Morphism::at(GridPoint v) {
  return comps[static_cast<size_t>(v.y - 1) * src.p() + (v.x - src.x_lo())];
}

namespace {

void check_same_window(const GridRep& a, const GridRep& b) {
  if (a.p() != b.p() || a.q() != b.q() || a.x_lo() != b.x_lo() || a.prime() != b.prime())
    throw error(errc::usage, "representations live on different windows");
}

}  // namespace

Morphism zero_morphism(const GridRep& src, const GridRep& tgt) {
  check_same_window(src, tgt);
  Morphism f{src, tgt, {}};
  for (int y = 1; y <= src.q(); ++y)
    for (int x = src.x_lo(); x <= src.x_hi(); ++x)
      f.comps.push_back(Matrix(tgt.dim({x, y}), src.dim({x, y}), src.prime()));
  return f;
}

Morphism identity_morphism(const GridRep& m) {
  Morphism f = zero_morphism(m, m);
  for (int y = 1; y <= m.q(); ++y)
    for (int x = m.x_lo(); x <= m.x_hi(); ++x) f.at({x, y}) = Matrix::identity(m.dim({x, y}), m.prime());
  return f;
}

bool is_natural(const Morphism& f) {
  check_same_window(f.src, f.tgt);
  for (int y = 1; y <= f.src.q(); ++y)
    for (int x = f.src.x_lo(); x <= f.src.x_hi(); ++x) {
      GridPoint v{x, y};
      if (f.at(v).rows() != f.tgt.dim(v) || f.at(v).cols() != f.src.dim(v)) return false;
      if (x < f.src.x_hi()) {
        GridPoint w{x + 1, y};
        if (!(f.at(w) * f.src.horiz(v) == f.tgt.horiz(v) * f.at(v))) return false;
      }
      if (y < f.src.q()) {
        GridPoint w{x, y + 1};
        if (!(f.at(w) * f.src.vert(v) == f.tgt.vert(v) * f.at(v))) return false;
      }
    }
  return true;
}

bool is_zero(const Morphism& f) {
  return std::all_of(f.comps.begin(), f.comps.end(), [](const Matrix& m) { return m.is_zero(); });
}

Morphism compose(const Morphism& g, const Morphism& f) {
  check_same_window(f.tgt, g.src);
  Morphism out{f.src, g.tgt, {}};
  for (size_t k = 0; k < f.comps.size(); ++k) out.comps.push_back(g.comps[k] * f.comps[k]);
  return out;
}

ImageFactorization image_subrep(const Morphism& f) {
  if (!is_natural(f)) throw error(errc::domain, "morphism is not natural");
  const GridRep& src = f.src;
  const GridRep& tgt = f.tgt;
  GridRep image(src.p(), src.q(), src.prime(), src.x_lo());
  std::vector<Matrix> bases;
  for (int y = 1; y <= src.q(); ++y)
    for (int x = src.x_lo(); x <= src.x_hi(); ++x) {
      Matrix b = column_space_basis(f.at({x, y}));
      image.set_dim({x, y}, b.cols());
      bases.push_back(std::move(b));
    }
  auto basis_at = [&](GridPoint v) -> const Matrix& {
    return bases[static_cast<size_t>(v.y - 1) * src.p() + (v.x - src.x_lo())];
  };
  for (int y = 1; y <= src.q(); ++y)
    for (int x = src.x_lo(); x <= src.x_hi(); ++x) {
      GridPoint v{x, y};
      if (x < src.x_hi()) {
        auto sol = solve(basis_at({x + 1, y}), tgt.horiz(v) * basis_at(v));
        if (!sol) throw error(errc::internal, "image structure map failed to factor");
        image.set_horiz(v, std::move(*sol));
      }
      if (y < src.q()) {
        auto sol = solve(basis_at({x, y + 1}), tgt.vert(v) * basis_at(v));
        if (!sol) throw error(errc::internal, "image structure map failed to factor");
        image.set_vert(v, std::move(*sol));
      }
    }
  Morphism inclusion{image, tgt, bases};
  Morphism projection{src, image, {}};
  for (int y = 1; y <= src.q(); ++y)
    for (int x = src.x_lo(); x <= src.x_hi(); ++x) {
      auto sol = solve(basis_at({x, y}), f.at({x, y}));
      if (!sol) throw error(errc::internal, "image projection failed to factor");
      projection.comps.push_back(std::move(*sol));
    }
  return {std::move(image), std::move(inclusion), std::move(projection)};
}

GridRep kernel_subrep(const Morphism& f, Morphism* inclusion) {
  if (!is_natural(f)) throw error(errc::domain, "morphism is not natural");
  const GridRep& src = f.src;
  GridRep ker(src.p(), src.q(), src.prime(), src.x_lo());
  std::vector<Matrix> bases;
  for (int y = 1; y <= src.q(); ++y)
    for (int x = src.x_lo(); x <= src.x_hi(); ++x) {
      Matrix b = kernel_basis(f.at({x, y}));
      ker.set_dim({x, y}, b.cols());
      bases.push_back(std::move(b));
    }
  auto basis_at = [&](GridPoint v) -> const Matrix& {
    return bases[static_cast<size_t>(v.y - 1) * src.p() + (v.x - src.x_lo())];
  };
  for (int y = 1; y <= src.q(); ++y)
    for (int x = src.x_lo(); x <= src.x_hi(); ++x) {
      GridPoint v{x, y};
      if (x < src.x_hi()) {
        auto sol = solve(basis_at({x + 1, y}), src.horiz(v) * basis_at(v));
        if (!sol) throw error(errc::internal, "kernel structure map failed to factor");
        ker.set_horiz(v, std::move(*sol));
      }
      if (y < src.q()) {
        auto sol = solve(basis_at({x, y + 1}), src.vert(v) * basis_at(v));
        if (!sol) throw error(errc::internal, "kernel structure map failed to factor");
        ker.set_vert(v, std::move(*sol));
      }
    }
  if (inclusion) *inclusion = Morphism{ker, src, bases};
  return ker;
}

GridRep cokernel_rep(const Morphism& f, Morphism* projection) {
  if (!is_natural(f)) throw error(errc::domain, "morphism is not natural");
  const GridRep& tgt = f.tgt;
  GridRep coker(tgt.p(), tgt.q(), tgt.prime(), tgt.x_lo());
  std::vector<Matrix> projs;
  for (int y = 1; y <= tgt.q(); ++y)
    for (int x = tgt.x_lo(); x <= tgt.x_hi(); ++x) {
      Matrix qm = cokernel_projection(f.at({x, y}));
      coker.set_dim({x, y}, qm.rows());
      projs.push_back(std::move(qm));
    }
  auto proj_at = [&](GridPoint v) -> const Matrix& {
    return projs[static_cast<size_t>(v.y - 1) * tgt.p() + (v.x - tgt.x_lo())];
  };
  // induced map on cokernels: X with X q_src = q_tgt ∘ arrow
  auto induced = [&](const Matrix& q_src, const Matrix& q_tgt_arrow) -> Matrix {
    auto rinv = solve(q_src, Matrix::identity(q_src.rows(), q_src.prime()));
    if (!rinv) throw error(errc::internal, "cokernel projection has no right inverse");
    Matrix x = q_tgt_arrow * *rinv;
    if (!(x * q_src == q_tgt_arrow)) throw error(errc::internal, "cokernel map is not well-defined");
    return x;
  };
  for (int y = 1; y <= tgt.q(); ++y)
    for (int x = tgt.x_lo(); x <= tgt.x_hi(); ++x) {
      GridPoint v{x, y};
      if (x < tgt.x_hi())
        coker.set_horiz(v, induced(proj_at(v), proj_at({x + 1, y}) * tgt.horiz(v)));
      if (y < tgt.q()) coker.set_vert(v, induced(proj_at(v), proj_at({x, y + 1}) * tgt.vert(v)));
    }
  if (projection) *projection = Morphism{tgt, coker, projs};
  return coker;
}

}  // namespace cladder
