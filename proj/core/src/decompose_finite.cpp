#include "cladder/decompose_finite.hpp"

#include <algorithm>

#include "cladder/json_io.hpp"

namespace cladder {

namespace {

GridRep cl3_non_interval_a(uint32_t prime) {
  // dimension vector (1 2 1 / 0 1 1); upper row carries bars [1,3] and [2,2],
  // the lower bar [2,3] maps diagonally into both. End ring = k.
  GridRep m(3, 2, prime);
  m.set_dim({2, 1}, 1);
  m.set_dim({3, 1}, 1);
  m.set_dim({1, 2}, 1);
  m.set_dim({2, 2}, 2);
  m.set_dim({3, 2}, 1);
  Matrix a(2, 1, prime);
  a.set(0, 0, 1);
  Matrix b(1, 2, prime);
  b.set(0, 0, 1);
  Matrix one(1, 1, prime);
  one.set(0, 0, 1);
  Matrix v2(2, 1, prime);
  v2.set(0, 0, 1);
  v2.set(1, 0, 1);
  m.set_horiz({2, 1}, one);
  m.set_horiz({1, 2}, a);
  m.set_horiz({2, 2}, b);
  m.set_vert({2, 1}, v2);
  m.set_vert({3, 1}, one);
  m.set_horiz({1, 1}, Matrix(1, 0, prime));
  m.set_vert({1, 1}, Matrix(1, 0, prime));
  return m;
}

GridRep cl3_non_interval_b(uint32_t prime) {
  // the dual class, dimension vector (1 1 0 / 1 2 1)
  GridRep m(3, 2, prime);
  m.set_dim({1, 1}, 1);
  m.set_dim({2, 1}, 2);
  m.set_dim({3, 1}, 1);
  m.set_dim({1, 2}, 1);
  m.set_dim({2, 2}, 1);
  Matrix bt(2, 1, prime);
  bt.set(0, 0, 1);
  Matrix at(1, 2, prime);
  at.set(0, 0, 1);
  Matrix one(1, 1, prime);
  one.set(0, 0, 1);
  Matrix v2t(1, 2, prime);
  v2t.set(0, 0, 1);
  v2t.set(0, 1, 1);
  m.set_horiz({1, 1}, bt);
  m.set_horiz({2, 1}, at);
  m.set_horiz({1, 2}, one);
  m.set_horiz({2, 2}, Matrix(0, 1, prime));
  m.set_vert({1, 1}, one);
  m.set_vert({2, 1}, v2t);
  m.set_vert({3, 1}, Matrix(0, 1, prime));
  return m;
}

}  // namespace

IndecomposableSet builtin_indecomposables(int n, uint32_t prime) {
  if (n != 2 && n != 3) throw error(errc::usage, "built-in representative sets exist for n = 2, 3 only");
  IndecomposableSet set;
  set.n = n;
  set.prime = prime;
  int k = 0;
  for (const auto& i : enumerate_intervals(n, 2))
    set.members.push_back({"I" + std::to_string(++k), true, interval_module(i, n, 2, prime)});
  if (n == 3) {
    set.members.push_back({"N1", false, cl3_non_interval_a(prime)});
    set.members.push_back({"N2", false, cl3_non_interval_b(prime)});
  }
  for (const auto& m : set.members)
    if (!check_commutativity(m.rep)) throw error(errc::internal, "non-commutative representative");
  return set;
}

IndecomposableSet load_indecomposables(const std::string& path) {
  Json j = load_json_file(path);
  require_schema(j, "cladder/indecomposables/1");
  IndecomposableSet set;
  try {
    set.n = j.at("n").get<int>();
    set.prime = j.at("field").get<uint32_t>();
    for (const auto& e : j.at("members")) {
      Indecomposable m;
      m.label = e.at("label").get<std::string>();
      m.is_interval = e.at("interval").get<bool>();
      m.rep = gridrep_from_json(e.at("rep"));
      if (m.rep.p() != set.n || m.rep.q() != 2 || m.rep.prime() != set.prime)
        throw_schema("representative shape mismatch");
      set.members.push_back(std::move(m));
    }
  } catch (const Json::exception& e) {
    throw_schema(std::string("bad representative set: ") + e.what());
  }
  return set;
}

void save_indecomposables(const IndecomposableSet& set, const std::string& path) {
  Json members = Json::array();
  for (const auto& m : set.members)
    members.push_back({{"label", m.label}, {"interval", m.is_interval}, {"rep", gridrep_to_json(m.rep)}});
  save_json_file(Json{{"schema", "cladder/indecomposables/1"},
                      {"n", set.n},
                      {"field", set.prime},
                      {"members", members}},
                 path);
}

namespace {

// Gaussian elimination helper keeping reduced copies for rank tracking.
class RationalBasis {
 public:
  // returns true (and absorbs the row) when it raises the rank
  bool absorb(std::vector<Rational> row) {
    for (const auto& [lead, vec] : reduced_) {
      if (row[lead] == 0) continue;
      Rational f = row[lead];
      for (size_t j = 0; j < row.size(); ++j) row[j] -= f * vec[j];
    }
    size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    if (lead == row.size()) return false;
    Rational f = row[lead];
    for (auto& v : row) v /= f;
    reduced_.emplace_back(lead, std::move(row));
    std::sort(reduced_.begin(), reduced_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return true;
  }
  int rank() const { return static_cast<int>(reduced_.size()); }

 private:
  std::vector<std::pair<size_t, std::vector<Rational>>> reduced_;
};

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<Rational>>& a) {
  const size_t n = a.size();
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  for (size_t col = 0, lead = 0; col < n && lead < n; ++col) {
    size_t piv = lead;
    while (piv < n && aug[piv][col] == 0) ++piv;
    if (piv == n) throw error(errc::internal, "coefficient matrix is singular");
    std::swap(aug[piv], aug[lead]);
    Rational f = aug[lead][col];
    for (auto& v : aug[lead]) v /= f;
    for (size_t i = 0; i < n; ++i) {
      if (i == lead || aug[i][col] == 0) continue;
      Rational g = aug[i][col];
      for (size_t j = 0; j < 2 * n; ++j) aug[i][j] -= g * aug[lead][j];
    }
    ++lead;
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace

int rational_rank(const std::vector<std::vector<Rational>>& rows) {
  RationalBasis basis;
  for (const auto& r : rows) basis.absorb(r);
  return basis.rank();
}

CoefficientMatrix build_coefficient_matrix(const IndecomposableSet& set,
                                           const std::vector<ZigzagCourse>& courses) {
  const size_t target_rank = set.members.size();
  CoefficientMatrix c;
  RationalBasis basis;
  for (const auto& course : courses) {
    std::vector<Rational> row;
    row.reserve(target_rank);
    for (const auto& m : set.members) row.emplace_back(course_function(m.rep, course));
    if (basis.absorb(row)) {
      c.rows.push_back(std::move(row));
      c.row_courses.push_back(course);
      if (c.rows.size() == target_rank) break;
    }
  }
  if (c.rows.size() != target_rank)
    throw error(errc::domain, "insufficient courses in the input to solve a general decomposition");
  c.inverse = invert(c.rows);
  return c;
}

std::vector<int> decompose_from_values(const std::vector<int>& fvals, const IndecomposableSet& set,
                                       const CoefficientMatrix& c) {
  const size_t n = set.members.size();
  if (fvals.size() != n || c.inverse.size() != n)
    throw error(errc::usage, "coefficient matrix and value vector sizes do not match");
  std::vector<int> out(n, 0);
  for (size_t i = 0; i < n; ++i) {
    Rational acc = 0;
    for (size_t j = 0; j < n; ++j) acc += c.inverse[i][j] * fvals[j];
    if (denominator(acc) != 1 || acc < 0)
      throw error(errc::domain, "multiplicity vector is not a nonnegative integer vector");
    out[i] = static_cast<int>(numerator(acc));
  }
  return out;
}

std::vector<int> decompose(const GridRep& target, const IndecomposableSet& set,
                           const CoefficientMatrix& c) {
  if (target.p() != set.n || target.q() != 2 || target.prime() != set.prime)
    throw error(errc::usage, "target shape does not match the representative set");
  std::vector<int> fvals;
  fvals.reserve(c.row_courses.size());
  for (const auto& course : c.row_courses) fvals.push_back(course_function(target, course));
  std::vector<int> d = decompose_from_values(fvals, set, c);
  // dimension vectors must reconcile
  for (int y = 1; y <= 2; ++y)
    for (int x = 1; x <= set.n; ++x) {
      int acc = 0;
      for (size_t k = 0; k < set.members.size(); ++k) acc += d[k] * set.members[k].rep.dim({x, y});
      if (acc != target.dim({x, y}))
        throw error(errc::domain, "decomposition does not reconcile the dimension vector");
    }
  return d;
}

std::vector<int> fingerprint(const GridRep& m, const std::vector<ZigzagCourse>& courses) {
  std::vector<int> out;
  for (const auto& c : courses) out.push_back(course_function(m, c));
  for (const auto& row : m.dim_rows())
    for (int d : row) out.push_back(d);
  return out;
}

}  // namespace cladder
