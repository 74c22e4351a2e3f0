#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lprips/circle.hpp"
#include "lprips/complexes.hpp"
#include "lprips/errors.hpp"
#include "lprips/io.hpp"
#include "lprips/magnitude.hpp"
#include "lprips/persistence.hpp"
#include "lprips/selftest.hpp"
#include "lprips/stability.hpp"
#include "lprips/weights.hpp"

namespace {

using namespace lprips;

double parse_exponent(const std::string& s) {
  if (s == "inf" || s == "infinity") return infty;
  size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size()) throw input_error("cannot parse exponent '" + s + "'");
  return v;
}

std::vector<double> parse_exponent_list(const std::string& s) {
  std::vector<double> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(parse_exponent(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (out.empty()) throw input_error("empty exponent list");
  return out;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (cur.empty()) continue;
      size_t pos = 0;
      int v = 0;
      try {
        v = std::stoi(cur, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != cur.size()) throw input_error(what + ": cannot parse '" + cur + "'");
      out.push_back(v);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  return out;
}

struct SpaceInput {
  std::string matrix, points, geometry = "euclidean";
  bool pseudo = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--matrix", matrix, "distance matrix CSV");
    cmd->add_option("--points", points, "point cloud CSV, one point per row");
    cmd->add_option("--geometry", geometry, "euclidean, l1 or circle (with --points)");
    cmd->add_flag("--pseudo", pseudo, "allow distinct points at distance zero");
  }

  FiniteMetricSpace load() const {
    if (matrix.empty() == points.empty())
      throw input_error("exactly one of --matrix and --points is required");
    return matrix.empty() ? read_points_csv(points, geometry) : read_space_csv(matrix, pseudo);
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw input_error("cannot open " + out_path + " for writing");
  f << text;
}

NormDescriptor descriptor(const std::string& p_str, bool sym, bool cyclic) {
  NormDescriptor nu;
  nu.p = parse_exponent(p_str);
  nu.symmetric = sym;
  nu.cyclic = cyclic;
  return nu;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lp Vietoris-Rips filtrations, persistence and magnitude homology"};
  app.require_subcommand(1);

  int threads = 1;
  std::string out_path;
  std::string p_str = "2";
  bool sym = false, cyclic = false;
  SpaceInput space;

  auto norm_opts = [&](CLI::App* cmd) {
    cmd->add_option("--p", p_str, "exponent, a number >= 1 or inf");
    cmd->add_flag("--sym", sym, "minimize over reorderings");
    cmd->add_flag("--cyclic", cyclic, "close the subsequence back to its start");
  };
  auto common_opts = [&](CLI::App* cmd, bool with_space = true) {
    if (with_space) space.attach(cmd);
    cmd->add_option("--threads", threads, "worker threads for weight batches (default 1)");
    cmd->add_option("-o,--output", out_path, "write to this file instead of stdout");
  };

  auto* weight_cmd = app.add_subcommand("weight", "weight of a tuple or vertex set");
  std::string tuple_str;
  bool subset_mode = false, oracle_check = false, as_json = false;
  weight_cmd->add_option("--tuple", tuple_str, "comma separated point indices")->required();
  weight_cmd->add_flag("--subset", subset_mode,
                       "treat the indices as a vertex set (strictly increasing)");
  weight_cmd->add_flag("--oracle", oracle_check,
                       "cross-check against the bitmask reference and fail on mismatch");
  weight_cmd->add_flag("--json", as_json, "emit a JSON object instead of a bare number");
  norm_opts(weight_cmd);
  common_opts(weight_cmd);

  auto* norm_cmd = app.add_subcommand("norm-eval", "norm of a raw square matrix");
  std::string norm_matrix;
  int constant_order = 0;
  norm_cmd->add_option("--matrix", norm_matrix, "square matrix CSV, no metric checks");
  norm_cmd->add_option("--order", constant_order,
                       "evaluate on the all-ones matrix of this order instead");
  norm_opts(norm_cmd);
  norm_cmd->add_option("--threads", threads, "unused, accepted for symmetry");
  norm_cmd->add_option("-o,--output", out_path, "write to this file instead of stdout");

  auto* build_cmd = app.add_subcommand("build", "dump a filtration or tuple complex as JSON");
  std::string mode = "vr";
  int max_dim = 2, max_deg = 2;
  double bound = infty;
  bool strict = false;
  build_cmd->add_option("--mode", mode, "vr or tuple");
  build_cmd->add_option("--max-dim", max_dim, "top simplex dimension (vr)");
  build_cmd->add_option("--max-deg", max_deg, "top tuple degree (tuple)");
  build_cmd->add_option("--r", bound, "threshold for tuple mode");
  build_cmd->add_flag("--strict", strict, "threshold excludes its bound");
  norm_opts(build_cmd);
  common_opts(build_cmd);

  auto* persist_cmd = app.add_subcommand("persist", "persistence barcode of the filtration");
  int field = 2;
  std::string format = "tsv";
  persist_cmd->add_option("--max-dim", max_dim, "top simplex dimension (default 2)");
  persist_cmd->add_option("--field", field, "coefficient prime (default 2)");
  persist_cmd->add_option("--format", format, "tsv, json or svg");
  norm_opts(persist_cmd);
  common_opts(persist_cmd);

  auto* mag_cmd = app.add_subcommand("magnitude", "blurred magnitude homology ranks");
  double radius = 0.0;
  int degree = 1;
  std::string variant = "graded";
  bool les = false, sweep = false;
  mag_cmd->add_option("--r", radius, "threshold radius");
  mag_cmd->add_option("--degree", degree, "homological degree (default 1)");
  mag_cmd->add_option("--variant", variant, "strict, nonstrict or graded");
  mag_cmd->add_option("--field", field, "coefficient prime (default 2)");
  mag_cmd->add_flag("--les", les, "check exactness of the connecting sequence at --r");
  mag_cmd->add_flag("--sweep", sweep, "check exactness at every realized weight");
  common_opts(mag_cmd);

  auto* stab_cmd = app.add_subcommand("stability", "barcode stability against the bound");
  std::string file_x, file_y, degrees_str = "0,1";
  uint64_t seed = 20260821;
  int trials = 0;
  stab_cmd->add_option("fileX", file_x, "first distance matrix CSV");
  stab_cmd->add_option("fileY", file_y, "second distance matrix CSV");
  stab_cmd->add_option("--p", p_str, "exponent, or a comma list in campaign mode");
  stab_cmd->add_option("--degrees", degrees_str, "comma separated homology degrees");
  stab_cmd->add_option("--max-dim", max_dim, "top simplex dimension (default 2)");
  stab_cmd->add_option("--seed", seed, "campaign seed");
  stab_cmd->add_option("--trials", trials, "campaign mode: number of random pairs");
  stab_cmd->add_flag("--pseudo", space.pseudo, "allow distinct points at distance zero");
  stab_cmd->add_option("--threads", threads, "worker threads");
  stab_cmd->add_option("-o,--output", out_path, "write to this file instead of stdout");

  auto* circle_cmd = app.add_subcommand("circle", "circle threshold experiment");
  int n_points = 60;
  bool random_points = false;
  circle_cmd->add_option("--p", p_str, "exponent")->required();
  circle_cmd->add_option("--n", n_points, "sample size (default 60)");
  circle_cmd->add_option("--max-dim", max_dim, "top simplex dimension (default 2)");
  circle_cmd->add_option("--seed", seed, "seed for --random");
  circle_cmd->add_flag("--random", random_points, "sorted uniform sample instead of regular");
  circle_cmd->add_option("--threads", threads, "worker threads");
  circle_cmd->add_option("-o,--output", out_path, "write to this file instead of stdout");

  auto* grid_cmd = app.add_subcommand("grid", "grid minimum of the 3-point weight");
  int resolution = 1000;
  grid_cmd->add_option("--p", p_str, "exponent")->required();
  grid_cmd->add_option("--resolution", resolution, "grid resolution (default 1000)");
  grid_cmd->add_option("--threads", threads, "worker threads");
  grid_cmd->add_option("-o,--output", out_path, "write to this file instead of stdout");

  auto* self_cmd = app.add_subcommand("selftest", "reduced-scale verification sweep");
  self_cmd->add_option("--seed", seed, "campaign seed");
  self_cmd->add_option("--threads", threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (weight_cmd->parsed()) {
      FiniteMetricSpace X = space.load();
      std::vector<int> t = parse_int_list(tuple_str, "--tuple");
      NormDescriptor nu = descriptor(p_str, sym, cyclic);
      double w = subset_mode ? subset_weight(nu, X, t) : tuple_weight(nu, X, t);
      if (oracle_check && (subset_mode || sym))
        throw input_error("--oracle covers fixed-order tuple weights only");
      if (oracle_check) {
        double ref = tuple_weight_oracle(nu, X, t);
        if (w != ref) {
          std::cerr << "oracle mismatch: " << double_token(w) << " vs " << double_token(ref)
                    << "\n";
          return 1;
        }
      }
      if (as_json) {
        nlohmann::ordered_json j;
        j["tuple"] = t;
        j["p"] = nu.p == infty ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(nu.p);
        j["symmetric"] = nu.symmetric;
        j["cyclic"] = nu.cyclic;
        j["subset"] = subset_mode;
        j["weight"] = w;
        emit(j.dump(2) + "\n", out_path);
      } else {
        emit(double_token(w) + "\n", out_path);
      }
    } else if (norm_cmd->parsed()) {
      NormDescriptor nu = descriptor(p_str, sym, cyclic);
      double v;
      if (constant_order > 0) {
        v = norm_constant(nu, constant_order);
      } else if (!norm_matrix.empty()) {
        v = norm_eval(nu, read_matrix_csv(norm_matrix));
      } else {
        throw input_error("norm-eval needs --matrix or --order");
      }
      emit(double_token(v) + "\n", out_path);
    } else if (build_cmd->parsed()) {
      FiniteMetricSpace X = space.load();
      NormDescriptor nu = descriptor(p_str, sym, cyclic);
      if (mode == "vr") {
        emit(filtration_json(build_vr_filtration(X, nu, max_dim, threads)), out_path);
      } else if (mode == "tuple") {
        bool have_bound = build_cmd->count("--r") > 0;
        LeftInterval L = !have_bound ? LeftInterval::all()
                         : strict    ? LeftInterval::less_than(bound)
                                     : LeftInterval::at_most(bound);
        emit(tuple_complex_json(build_tuple_complex(X, nu, L, max_deg, threads)), out_path);
      } else {
        throw input_error("--mode must be vr or tuple, got '" + mode + "'");
      }
    } else if (persist_cmd->parsed()) {
      FiniteMetricSpace X = space.load();
      NormDescriptor nu = descriptor(p_str, sym, cyclic);
      Barcode bars = persistence(build_vr_filtration(X, nu, max_dim, threads), field);
      if (format == "tsv")
        emit(barcode_tsv(bars), out_path);
      else if (format == "json")
        emit(barcode_json(bars), out_path);
      else if (format == "svg")
        emit(barcode_svg(bars), out_path);
      else
        throw input_error("--format must be tsv, json or svg, got '" + format + "'");
    } else if (mag_cmd->parsed()) {
      FiniteMetricSpace X = space.load();
      if (sweep) {
        LesSweep s = les_sweep(X, degree, field);
        emit(les_sweep_json(s), out_path);
        if (!s.all_exact) return 1;
      } else if (les) {
        LesReport rep = les_magnitude_check(X, radius, degree, field);
        emit(les_json(rep), out_path);
        if (!rep.exact) return 1;
      } else {
        MagnitudeResult res =
            magnitude_homology(X, radius, magnitude_variant_from_string(variant), degree, field);
        emit(magnitude_json(res), out_path);
      }
    } else if (stab_cmd->parsed()) {
      std::vector<int> degrees = parse_int_list(degrees_str, "--degrees");
      if (trials > 0) {
        StabilityCampaign camp =
            stability_campaign(seed, trials, parse_exponent_list(p_str), degrees, max_dim,
                               threads);
        emit(campaign_json(camp), out_path);
        if (!camp.all_pass) return 1;
      } else {
        if (file_x.empty() || file_y.empty())
          throw input_error("stability needs two matrix files, or --trials for campaign mode");
        FiniteMetricSpace X = read_space_csv(file_x, space.pseudo);
        FiniteMetricSpace Y = read_space_csv(file_y, space.pseudo);
        NormDescriptor nu = descriptor(p_str, false, false);
        StabilityReport rep = stability_report(X, Y, nu, degrees, max_dim, threads);
        emit(stability_json(rep), out_path);
        if (!rep.all_pass) return 1;
      }
    } else if (circle_cmd->parsed()) {
      CircleReport rep = circle_experiment(parse_exponent(p_str), n_points, max_dim, threads,
                                           seed, random_points);
      emit(circle_json(rep), out_path);
      if (!rep.pass) return 1;
    } else if (grid_cmd->parsed()) {
      double p = parse_exponent(p_str);
      GridSearchResult res = t_grid_search(p, resolution, threads);
      double formula = threshold_formula(p);
      nlohmann::ordered_json j;
      j["p"] = p == infty ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(p);
      j["resolution"] = resolution;
      j["value"] = res.value;
      j["formula"] = formula;
      j["gap"] = std::fabs(res.value - formula);
      j["a"] = res.a;
      j["b"] = res.b;
      emit(j.dump(2) + "\n", out_path);
    } else if (self_cmd->parsed()) {
      if (!selftest_run(std::cout, seed, threads)) return 1;
    }
  } catch (const cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
