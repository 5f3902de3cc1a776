#include "cladder/json_io.hpp"

#include <cmath>
#include <fstream>

namespace cladder {

namespace {

const Json& need(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw_schema(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

void require_schema(const Json& j, const std::string& expected) {
  if (!j.is_object() || need(j, "schema").get<std::string>() != expected)
    throw_schema("expected schema '" + expected + "'");
}

Json interval_to_json(const StaircaseInterval& i) {
  Json spans = Json::array();
  for (auto s : i.spans()) spans.push_back({s[0], s[1]});
  return Json{{"rows", {i.row_lo(), i.row_hi()}}, {"spans", spans}};
}

StaircaseInterval interval_from_json(const Json& j) {
  try {
    auto rows = need(j, "rows");
    std::vector<std::array<int, 2>> spans;
    for (const auto& s : need(j, "spans")) spans.push_back({s.at(0).get<int>(), s.at(1).get<int>()});
    int row_lo = rows.at(0).get<int>();
    if (rows.at(1).get<int>() - row_lo + 1 != static_cast<int>(spans.size()))
      throw_schema("interval row range does not match span count");
    return StaircaseInterval(row_lo, std::move(spans));
  } catch (const Json::exception& e) {
    throw_schema(std::string("bad interval: ") + e.what());
  } catch (const error& e) {
    if (e.code() == errc::schema) throw;
    throw_schema(std::string("bad interval: ") + e.what());
  }
}

namespace {

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Matrix matrix_from_json(const Json& j, uint32_t prime) {
  int rows = need(j, "rows").get<int>(), cols = need(j, "cols").get<int>();
  Matrix m(rows, cols, prime);
  const Json& e = need(j, "entries");
  if (static_cast<int>(e.size()) != rows) throw_schema("matrix row count mismatch");
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(e[i].size()) != cols) throw_schema("matrix column count mismatch");
    for (int c = 0; c < cols; ++c) m.set(i, c, e[i][c].get<int64_t>());
  }
  return m;
}

}  // namespace

Json gridrep_to_json(const GridRep& m) {
  Json dims = Json::array();
  for (const auto& row : m.dim_rows()) dims.push_back(row);
  Json arrows = Json::array();
  for (int y = 1; y <= m.q(); ++y)
    for (int x = m.x_lo(); x <= m.x_hi(); ++x) {
      if (x < m.x_hi() && !(m.horiz({x, y}).rows() == 0 && m.horiz({x, y}).cols() == 0))
        arrows.push_back(
            {{"from", {x, y}}, {"to", {x + 1, y}}, {"matrix", matrix_to_json(m.horiz({x, y}))}});
      if (y < m.q() && !(m.vert({x, y}).rows() == 0 && m.vert({x, y}).cols() == 0))
        arrows.push_back({{"from", {x, y}}, {"to", {x, y + 1}}, {"matrix", matrix_to_json(m.vert({x, y}))}});
    }
  return Json{{"schema", "cladder/module/1"},
              {"shape", {{"kind", m.q() == 2 ? "cl" : "grid"}, {"p", m.p()}, {"q", m.q()}}},
              {"field", m.prime()},
              {"x_lo", m.x_lo()},
              {"dims", dims},
              {"arrows", arrows}};
}

GridRep gridrep_from_json(const Json& j) {
  require_schema(j, "cladder/module/1");
  try {
    const Json& shape = need(j, "shape");
    int p = need(shape, "p").get<int>(), q = need(shape, "q").get<int>();
    uint32_t prime = need(j, "field").get<uint32_t>();
    int x_lo = j.value("x_lo", 1);
    GridRep m(p, q, prime, x_lo);
    const Json& dims = need(j, "dims");
    if (static_cast<int>(dims.size()) != q) throw_schema("dims row count mismatch");
    for (int y = 1; y <= q; ++y) {
      if (static_cast<int>(dims[y - 1].size()) != p) throw_schema("dims column count mismatch");
      for (int x = 0; x < p; ++x) m.set_dim({x_lo + x, y}, dims[y - 1][x].get<int>());
    }
    for (const auto& a : need(j, "arrows")) {
      GridPoint from{need(a, "from").at(0).get<int>(), need(a, "from").at(1).get<int>()};
      GridPoint to{need(a, "to").at(0).get<int>(), need(a, "to").at(1).get<int>()};
      Matrix mat = matrix_from_json(need(a, "matrix"), prime);
      if (to.x == from.x + 1 && to.y == from.y)
        m.set_horiz(from, std::move(mat));
      else if (to.x == from.x && to.y == from.y + 1)
        m.set_vert(from, std::move(mat));
      else
        throw_schema("arrow is not a unit grid step");
    }
    if (!check_commutativity(m)) throw_schema("module squares do not commute");
    return m;
  } catch (const Json::exception& e) {
    throw_schema(std::string("bad module: ") + e.what());
  }
}

Json zigzag_to_json(const ZigzagRep& z) {
  Json arrows = Json::array();
  for (int a = 1; a < z.length(); ++a) {
    bool fwd = z.orientation()[a - 1] == 'f';
    arrows.push_back({{"from", fwd ? a : a + 1}, {"to", fwd ? a + 1 : a},
                      {"matrix", matrix_to_json(z.map(a))}});
  }
  return Json{{"schema", "cladder/module/1"},
              {"shape", {{"kind", "an"}, {"n", z.length()}}},
              {"orientation", z.orientation()},
              {"field", z.prime()},
              {"dims", z.dims()},
              {"arrows", arrows}};
}

ZigzagRep zigzag_from_json(const Json& j) {
  require_schema(j, "cladder/module/1");
  try {
    const Json& shape = need(j, "shape");
    if (need(shape, "kind").get<std::string>() != "an") throw_schema("expected a zigzag module");
    int n = need(shape, "n").get<int>();
    std::string tau = need(j, "orientation").get<std::string>();
    uint32_t prime = need(j, "field").get<uint32_t>();
    std::vector<int> dims = need(j, "dims").get<std::vector<int>>();
    std::vector<Matrix> maps(static_cast<size_t>(std::max(0, n - 1)), Matrix(0, 0, prime));
    for (const auto& a : need(j, "arrows")) {
      int from = need(a, "from").get<int>(), to = need(a, "to").get<int>();
      int arrow = std::min(from, to);
      if (std::abs(from - to) != 1 || arrow < 1 || arrow >= n) throw_schema("arrow is not a unit step");
      bool fwd = to == from + 1;
      if ((tau[static_cast<size_t>(arrow - 1)] == 'f') != fwd)
        throw_schema("arrow direction does not match the orientation");
      maps[static_cast<size_t>(arrow - 1)] = matrix_from_json(need(a, "matrix"), prime);
    }
    for (int a = 1; a < n; ++a) {
      Matrix& m = maps[static_cast<size_t>(a - 1)];
      int src = tau[static_cast<size_t>(a - 1)] == 'f' ? dims[static_cast<size_t>(a - 1)]
                                                       : dims[static_cast<size_t>(a)];
      int dst = tau[static_cast<size_t>(a - 1)] == 'f' ? dims[static_cast<size_t>(a)]
                                                       : dims[static_cast<size_t>(a - 1)];
      if (m.rows() == 0 && m.cols() == 0) m = Matrix(dst, src, prime);
    }
    return ZigzagRep(tau, std::move(dims), std::move(maps), prime);
  } catch (const Json::exception& e) {
    throw_schema(std::string("bad zigzag module: ") + e.what());
  }
}

Json course_to_json(const ZigzagCourse& c) {
  Json labels = Json::array();
  for (GridPoint v : c.labels) labels.push_back({v.x, v.y});
  return Json{{"orientation", c.orientation}, {"labels", labels}};
}

ZigzagCourse course_from_json(const Json& j) {
  try {
    ZigzagCourse c;
    c.orientation = need(j, "orientation").get<std::string>();
    for (const auto& l : need(j, "labels")) c.labels.push_back({l.at(0).get<int>(), l.at(1).get<int>()});
    if (!is_valid_course(c)) throw_schema("labels do not form a course");
    return c;
  } catch (const Json::exception& e) {
    throw_schema(std::string("bad course: ") + e.what());
  }
}

Json cpd_to_json(const ConnectedPD& cpd) {
  Json lower = Json::array(), upper = Json::array(), connecting = Json::array();
  for (const auto& [k, v] : cpd.lower) lower.push_back({{"b", k.first}, {"d", k.second + 1}, {"m", v}});
  for (const auto& [k, v] : cpd.upper) upper.push_back({{"b", k.first}, {"d", k.second + 1}, {"m", v}});
  for (const auto& [k, v] : cpd.connecting)
    connecting.push_back(
        {{"b2", k[0]}, {"d2", k[1] + 1}, {"b1", k[2]}, {"d1", k[3] + 1}, {"m", v}});
  Json out{{"schema", "cladder/cpd/1"},
          {"n", cpd.n},
          {"x_lo", cpd.x_lo},
          {"field", cpd.field},
          {"death", "exclusive"},
          {"lower", lower},
          {"upper", upper},
          {"connecting", connecting}};
  if (!cpd.axis_labels.empty()) {
    Json labels = Json::object();
    for (const auto& [k, v] : cpd.axis_labels) labels[std::to_string(k)] = v;
    out["axis_labels"] = labels;
  }
  return out;
}

ConnectedPD cpd_from_json(const Json& j) {
  require_schema(j, "cladder/cpd/1");
  try {
    ConnectedPD cpd;
    cpd.n = need(j, "n").get<int>();
    cpd.x_lo = j.value("x_lo", 1);
    cpd.field = need(j, "field").get<uint32_t>();
    if (j.value("death", "exclusive") != std::string("exclusive")) throw_schema("unknown death convention");
    for (const auto& e : need(j, "lower"))
      cpd.lower[{need(e, "b").get<int>(), need(e, "d").get<int>() - 1}] = need(e, "m").get<int>();
    for (const auto& e : need(j, "upper"))
      cpd.upper[{need(e, "b").get<int>(), need(e, "d").get<int>() - 1}] = need(e, "m").get<int>();
    for (const auto& e : need(j, "connecting"))
      cpd.connecting[{need(e, "b2").get<int>(), need(e, "d2").get<int>() - 1, need(e, "b1").get<int>(),
                      need(e, "d1").get<int>() - 1}] = need(e, "m").get<int>();
    if (j.contains("axis_labels"))
      for (const auto& [k, v] : j["axis_labels"].items()) cpd.axis_labels[std::stoi(k)] = v.get<double>();
    return cpd;
  } catch (const Json::exception& e) {
    throw_schema(std::string("bad cpd: ") + e.what());
  }
}

Json delta_to_json(const SignedMultiplicityMap& delta) {
  Json out = Json::array();
  for (const auto& [i, v] : delta) out.push_back({{"interval", interval_to_json(i)}, {"value", v}});
  return out;
}

SignedMultiplicityMap delta_from_json(const Json& j) {
  SignedMultiplicityMap out;
  for (const auto& e : j) out[interval_from_json(need(e, "interval"))] = need(e, "value").get<int>();
  return out;
}

Json matching_to_json(const MatchingTuple& t) {
  const char* names[3] = {"upper", "lower", "overlap"};
  Json comps = Json::object();
  for (int c = 0; c < 3; ++c) {
    Json pairs = Json::array();
    for (const auto& [a, b] : t.comp[c].pairs)
      pairs.push_back({{"src", {a.bd.b, a.bd.d}}, {"dst", {b.bd.b, b.bd.d}}});
    comps[names[c]] = pairs;
  }
  return Json{{"schema", "cladder/matching/1"}, {"death", "inclusive"}, {"components", comps}};
}

namespace {

Json filter_to_json(const std::vector<double>& f) {
  Json out = Json::array();
  for (double v : f) {
    if (std::isinf(v))
      out.push_back(nullptr);
    else
      out.push_back(v);
  }
  return out;
}

std::vector<double> filter_from_json(const Json& j) {
  std::vector<double> out;
  for (const auto& v : j) out.push_back(v.is_null() ? kInf : v.get<double>());
  return out;
}

}  // namespace

Json triplet_to_json(const LadderTriplet& t) {
  Json simplices = Json::array();
  for (const auto& s : t.simplices) simplices.push_back(s);
  return Json{{"schema", "cladder/triplet/1"},
              {"vertices", t.vertex_count()},
              {"simplices", simplices},
              {"filters", {{"f1", filter_to_json(t.f1)}, {"f2", filter_to_json(t.f2)}}}};
}

LadderTriplet triplet_from_json(const Json& j) {
  require_schema(j, "cladder/triplet/1");
  try {
    LadderTriplet t;
    for (const auto& s : need(j, "simplices")) t.simplices.push_back(s.get<Simplex>());
    const Json& filters = need(j, "filters");
    t.f1 = filter_from_json(need(filters, "f1"));
    t.f2 = filter_from_json(need(filters, "f2"));
    t.validate();
    return t;
  } catch (const Json::exception& e) {
    throw_schema(std::string("bad triplet: ") + e.what());
  }
}

Json filtration_to_json(const LadderFiltration& f) {
  Json j = triplet_to_json(f.triplet);
  j["schema"] = "cladder/filtration/1";
  j["thresholds"] = f.thresholds;
  return j;
}

LadderFiltration filtration_from_json(const Json& j) {
  require_schema(j, "cladder/filtration/1");
  try {
    Json t = j;
    t["schema"] = "cladder/triplet/1";
    std::vector<double> thresholds = need(j, "thresholds").get<std::vector<double>>();
    return ladder_filtration(triplet_from_json(t), std::move(thresholds));
  } catch (const Json::exception& e) {
    throw_schema(std::string("bad filtration: ") + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_schema("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw_schema(std::string("malformed JSON in '") + path + "': " + e.what());
  }
  return j;
}

void save_json_file(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error(errc::usage, "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace cladder
