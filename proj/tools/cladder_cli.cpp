// Command line surface for the commutative-ladder persistence toolkit:
// filtration generators, connected persistence diagrams, finite-type
// decomposition, bottleneck distances and batch statistics.

#include <CLI11.hpp>
#include <atomic>
#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

#include "cladder/cpd.hpp"
#include "cladder/decompose_finite.hpp"
#include "cladder/filtrations.hpp"
#include "cladder/json_io.hpp"
#include "cladder/stability.hpp"

namespace {

using namespace cladder;

constexpr const char* kVersion = "0.1.0";

Json manifest(const std::string& command, const Json& config, uint64_t seed, uint32_t prime) {
  auto now = std::chrono::system_clock::now();
  auto t = std::chrono::system_clock::to_time_t(now);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return Json{{"command", command}, {"config", config},       {"seed", seed},
              {"prime", prime},     {"version", kVersion},    {"generator", "mt19937_64"},
              {"timestamp", stamp}};
}

std::vector<Point3> load_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_schema("cannot open '" + path + "'");
  std::vector<Point3> pts;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double x, y, z = 0.0;
    if (!(row >> x >> y)) throw_schema("bad point row '" + line + "'");
    row >> z;
    pts.push_back({x, y, z});
  }
  if (pts.empty()) throw_schema("no points in '" + path + "'");
  return pts;
}

// pick n thresholds among the critical values of both rows, random without
// replacement, sorted
std::vector<double> pick_thresholds(const LadderTriplet& t, int n, int k, uint32_t prime,
                                    std::mt19937_64& rng) {
  std::vector<double> vals = critical_values(t, k, prime);
  if (static_cast<int>(vals.size()) < n)
    throw error(errc::domain, "only " + std::to_string(vals.size()) +
                                  " critical values available for a length-" + std::to_string(n) +
                                  " ladder");
  std::vector<size_t> idx(vals.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(static_cast<size_t>(n));
  std::sort(idx.begin(), idx.end());
  std::vector<double> out;
  for (size_t i : idx) out.push_back(vals[i]);
  return out;
}

struct GenerateArgs {
  std::string model;
  std::string out;
  std::string points_csv;
  std::string subset_spec;
  int m = 8;
  int d = 2;
  int n = 4;
  int k = 1;
  int max_dim = 3;
  int cap = 64;
  uint64_t seed = 1;
  uint32_t prime = 2;
};

int cmd_generate(const GenerateArgs& a) {
  std::mt19937_64 rng(a.seed);
  LadderTriplet t;
  if (a.model == "clique") {
    t = clique_model(a.m, a.seed, a.max_dim);
  } else if (a.model == "dlm") {
    t = linial_meshulam_model(a.m, a.d, a.seed);
  } else if (a.model == "thinning") {
    if (!a.points_csv.empty()) {
      std::vector<Point3> pts = load_points_csv(a.points_csv);
      std::vector<int> subset;
      std::stringstream ss(a.subset_spec);
      for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) subset.push_back(std::stoi(tok));
      if (subset.empty()) throw_usage("--subset is required with --points");
      t = thinning_triplet(pts, subset, a.max_dim, kInf, a.cap);
    } else {
      t = random_thinning_model(a.m, a.d == 3 ? 3 : 2, a.seed, a.max_dim);
    }
  } else {
    throw_usage("unknown model '" + a.model + "'");
  }
  LadderFiltration filt = ladder_filtration(t, pick_thresholds(t, a.n, a.k, a.prime, rng));
  Json j = filtration_to_json(filt);
  j["manifest"] = manifest("generate " + a.model,
                           Json{{"m", a.m},
                                {"d", a.d},
                                {"n", a.n},
                                {"k", a.k},
                                {"max_dim", a.max_dim},
                                {"cap", a.cap},
                                {"points", a.points_csv},
                                {"subset", a.subset_spec}},
                           a.seed, a.prime);
  save_json_file(j, a.out);
  std::cout << "wrote " << a.out << " (n = " << filt.n() << ", " << t.simplices.size()
            << " simplices)\n";
  return 0;
}

struct CpdArgs {
  std::string input;
  std::string out;
  std::string svg;
  std::string style = "triangles";
  int k = 1;
  uint32_t prime = 2;
};

GridRep module_from_input(const Json& j, int k, uint32_t prime, std::map<int, double>* labels) {
  std::string schema = j.value("schema", "");
  if (schema == "cladder/module/1") return gridrep_from_json(j);
  if (schema == "cladder/filtration/1") {
    LadderFiltration filt = filtration_from_json(j);
    if (labels)
      for (int i = 0; i < filt.n(); ++i) (*labels)[i + 1] = filt.thresholds[static_cast<size_t>(i)];
    return homology_rep(filt, k, prime);
  }
  throw_schema("expected a module or filtration input");
}

int cmd_cpd(const CpdArgs& a) {
  Json in = load_json_file(a.input);
  std::map<int, double> labels;
  GridRep m = module_from_input(in, a.k, a.prime, &labels);
  if (m.q() != 2) throw_usage("connected persistence diagrams need a ladder (q = 2) module");
  ConnectedPD cpd = connected_pd(m);
  cpd.axis_labels = labels;
  Json j = cpd_to_json(cpd);
  j["manifest"] =
      manifest("cpd", Json{{"input", a.input}, {"k", a.k}, {"style", a.style}}, 0, a.prime);
  save_json_file(j, a.out);
  if (!a.svg.empty()) {
    std::ofstream svg(a.svg);
    if (!svg) throw_usage("cannot write '" + a.svg + "'");
    svg << render_cpd(cpd, a.style == "layered" ? CpdStyle::layered : CpdStyle::triangles);
  }
  std::cout << "wrote " << a.out << " (" << cpd.lower.size() << " lower, " << cpd.upper.size()
            << " upper, " << cpd.connecting.size() << " connecting)\n";
  if (has_negative(cpd)) std::cout << "note: negative connecting multiplicity present\n";
  return 0;
}

struct DecomposeArgs {
  std::string input;
  std::string out;
  std::string reps;
  int n = 3;
  int k = 1;
  uint32_t prime = 2;
};

int cmd_decompose(const DecomposeArgs& a) {
  IndecomposableSet set;
  if (a.n == 2 || a.n == 3) {
    set = builtin_indecomposables(a.n, a.prime);
  } else if (a.n == 4) {
    if (a.reps.empty())
      throw error(errc::usage,
                  "--reps <cl4.json> is required for n = 4 (the representative matrices ship as a "
                  "data asset)");
    set = load_indecomposables(a.reps);
    if (set.n != 4) throw_schema("representative set is not for n = 4");
  } else {
    throw_usage("decomposition needs n in {2, 3, 4}");
  }
  CoefficientMatrix coeff = build_coefficient_matrix(set, enumerate_azc_bfs(set.n, 2, a.n <= 3 ? 4 : 6));
  Json in = load_json_file(a.input);
  std::vector<int> d;
  if (in.value("schema", "") == "cladder/filtration/1") {
    // course functions straight from zigzag homology along each row course
    LadderFiltration filt = filtration_from_json(in);
    if (filt.n() != set.n) throw_usage("filtration length does not match n");
    std::vector<int> fvals;
    for (const auto& course : coeff.row_courses) {
      ZigzagRep z = zigzag_along_course(filt, course, a.k, a.prime);
      fvals.push_back(generalized_rank(z, 1, z.length()));
    }
    d = decompose_from_values(fvals, set, coeff);
  } else {
    GridRep m = gridrep_from_json(in);
    d = decompose(m, set, coeff);
  }
  Json rows = Json::array();
  for (size_t i = 0; i < set.members.size(); ++i)
    if (d[i] != 0)
      rows.push_back({{"label", set.members[i].label},
                      {"interval", set.members[i].is_interval},
                      {"multiplicity", d[i]}});
  Json j{{"schema", "cladder/multiplicities/1"}, {"n", set.n}, {"members", rows}};
  j["manifest"] =
      manifest("decompose", Json{{"input", a.input}, {"n", a.n}, {"k", a.k}}, 0, a.prime);
  save_json_file(j, a.out);
  bool non_interval = false;
  for (size_t i = 0; i < set.members.size(); ++i)
    if (d[i] != 0 && !set.members[i].is_interval) non_interval = true;
  std::cout << "wrote " << a.out << (non_interval ? " (non-interval summands present)\n" : "\n");
  return 0;
}

int cmd_bottleneck(const std::string& path_a, const std::string& path_b, const std::string& out) {
  ConnectedPD a = cpd_from_json(load_json_file(path_a));
  ConnectedPD b = cpd_from_json(load_json_file(path_b));
  int db = bottleneck_distance(a, b);
  auto cert = bottleneck_matching(a, b, db);
  if (!cert) throw error(errc::internal, "no matching at the computed distance");
  Json j{{"schema", "cladder/bottleneck/1"}, {"distance", db},
         {"interleaving_lower_bound", (db + 1) / 2}, {"matching", matching_to_json(*cert)}};
  j["manifest"] = manifest("bottleneck", Json{{"a", path_a}, {"b", path_b}}, 0, a.field);
  if (!out.empty()) save_json_file(j, out);
  std::cout << "bottleneck distance: " << db << "\n";
  return 0;
}

struct StatsArgs {
  std::string model = "clique";
  std::string out;
  int trials = 100;
  int m = 8;
  int d = 2;
  int n_max = 8;
  int k = 1;
  int jobs = 4;
  uint64_t seed = 1;
  uint32_t prime = 2;
};

struct TrialRow {
  int trial;
  uint64_t seed;
  int n;
  bool negative;
  bool ok;
};

TrialRow run_stats_trial(const StatsArgs& a, int trial) {
  uint64_t seed = a.seed * 0x9e3779b97f4a7c15ull + static_cast<uint64_t>(trial) * 0xbf58476d1ce4e5b9ull + 1;
  std::mt19937_64 rng(seed);
  TrialRow row{trial, seed, 0, false, false};
  try {
    LadderTriplet t;
    if (a.model == "clique")
      t = clique_model(a.m, seed, a.k + 1);
    else if (a.model == "dlm")
      t = linial_meshulam_model(a.m, a.d, seed);
    else
      t = random_thinning_model(a.m, a.d == 3 ? 3 : 2, seed, a.k + 1);
    std::vector<double> vals = critical_values(t, a.k, a.prime);
    if (static_cast<int>(vals.size()) < 2) return row;
    int n = std::min<int>(a.n_max, static_cast<int>(vals.size()));
    std::uniform_int_distribution<int> n_dist(2, n);
    n = n_dist(rng);
    LadderFiltration filt = ladder_filtration(t, pick_thresholds(t, n, a.k, a.prime, rng));
    GridRep m = homology_rep(filt, a.k, a.prime);
    row.n = n;
    row.negative = has_negative(connected_pd(m));
    row.ok = true;
  } catch (const error&) {
    row.ok = false;
  }
  return row;
}

int cmd_stats(const StatsArgs& a) {
  std::ofstream out(a.out);
  if (!out) throw_usage("cannot write '" + a.out + "'");
  out << "model,trial,seed,n,k,negative\r\n";
  std::vector<TrialRow> rows(static_cast<size_t>(a.trials));
  std::atomic<int> next{0};
  auto worker = [&]() {
    while (true) {
      int t = next.fetch_add(1);
      if (t >= a.trials) return;
      rows[static_cast<size_t>(t)] = run_stats_trial(a, t);
    }
  };
  std::vector<std::future<void>> pool;
  for (int w = 0; w < std::max(1, a.jobs); ++w) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  int usable = 0, negative = 0;
  for (const TrialRow& r : rows) {
    if (!r.ok) continue;
    out << a.model << "," << r.trial << "," << r.seed << "," << r.n << "," << a.k << ","
        << (r.negative ? 1 : 0) << "\r\n";
    ++usable;
    negative += r.negative ? 1 : 0;
  }
  std::cout << "wrote " << a.out << " (" << usable << " usable trials, " << negative
            << " with negative multiplicities)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commutative-ladder persistence toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "generate a ladder filtration from a model");
  generate->add_option("model", gen.model, "thinning | clique | dlm")->required();
  generate->add_option("--m", gen.m, "vertex / point count");
  generate->add_option("--d", gen.d, "process dimension (dlm) or ambient dimension (thinning)");
  generate->add_option("--n", gen.n, "ladder length");
  generate->add_option("--k", gen.k, "homology dimension used for critical values");
  generate->add_option("--max-dim", gen.max_dim, "maximal simplex dimension");
  generate->add_option("--cap", gen.cap, "point-count capacity for Čech complexes");
  generate->add_option("--seed", gen.seed, "PRNG seed");
  generate->add_option("--prime", gen.prime, "field characteristic");
  generate->add_option("--points", gen.points_csv, "point cloud CSV (x,y[,z]) for thinning");
  generate->add_option("--subset", gen.subset_spec, "comma-separated indices kept by the thinning");
  generate->add_option("--out", gen.out, "output filtration JSON")->required();

  CpdArgs cpd;
  CLI::App* cpdc = app.add_subcommand("cpd", "connected persistence diagram of a module/filtration");
  cpdc->add_option("--input", cpd.input, "module or filtration JSON")->required();
  cpdc->add_option("--k", cpd.k, "homology dimension");
  cpdc->add_option("--prime", cpd.prime, "field characteristic");
  cpdc->add_option("--out", cpd.out, "output cPD JSON")->required();
  cpdc->add_option("--svg", cpd.svg, "optional SVG output path");
  cpdc->add_option("--style", cpd.style, "triangles | layered")
      ->check(CLI::IsMember({"triangles", "layered"}));

  DecomposeArgs dec;
  CLI::App* decc = app.add_subcommand("decompose", "finite-type indecomposable decomposition");
  decc->add_option("--input", dec.input, "module or filtration JSON")->required();
  decc->add_option("--n", dec.n, "ladder length (2, 3 or 4)")->required();
  decc->add_option("--k", dec.k, "homology dimension for filtration inputs");
  decc->add_option("--prime", dec.prime, "field characteristic");
  decc->add_option("--reps", dec.reps, "representative set JSON (required for n = 4)");
  decc->add_option("--out", dec.out, "output multiplicity JSON")->required();

  std::string bn_a, bn_b, bn_out;
  CLI::App* bn = app.add_subcommand("bottleneck", "bottleneck distance between two cPDs");
  bn->add_option("a", bn_a, "first cPD JSON")->required();
  bn->add_option("b", bn_b, "second cPD JSON")->required();
  bn->add_option("--out", bn_out, "optional certificate JSON");

  StatsArgs st;
  CLI::App* stats = app.add_subcommand("stats", "batch negativity statistics over a model");
  stats->add_option("--model", st.model, "clique | thinning | dlm")
      ->check(CLI::IsMember({"clique", "thinning", "dlm"}));
  stats->add_option("--trials", st.trials, "number of trials");
  stats->add_option("--m", st.m, "vertex / point count");
  stats->add_option("--d", st.d, "process or ambient dimension");
  stats->add_option("--n-max", st.n_max, "maximal ladder length");
  stats->add_option("--k", st.k, "homology dimension");
  stats->add_option("--jobs", st.jobs, "worker threads");
  stats->add_option("--seed", st.seed, "base seed");
  stats->add_option("--prime", st.prime, "field characteristic");
  stats->add_option("--out", st.out, "output CSV")->required();

  try {
    app.parse(argc, argv);
    if (*generate) return cmd_generate(gen);
    if (*cpdc) return cmd_cpd(cpd);
    if (*decc) return cmd_decompose(dec);
    if (*bn) return cmd_bottleneck(bn_a, bn_b, bn_out);
    if (*stats) return cmd_stats(st);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const cladder::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return 2;
}
