#include "lprips/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace lprips {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

bool try_double(const std::string& s, double& v) {
  if (s.empty()) return false;
  if (s == "inf") {
    v = infty;
    return true;
  }
  const char* begin = s.c_str();
  char* end = nullptr;
  v = std::strtod(begin, &end);
  return end == begin + s.size();
}

struct CsvTable {
  std::vector<std::string> header;               // empty when absent
  std::vector<std::vector<std::string>> labels;  // per-row leading label, if any
  std::vector<std::vector<double>> rows;
};

// lines starting with '#' and blank lines are skipped; a first row with a
// non-numeric field is a header; a data row may carry one leading label
CsvTable read_table(std::istream& in, const std::string& what) {
  CsvTable t;
  std::string line;
  int lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    std::vector<std::string> fields = split_csv(s);
    std::vector<double> values;
    values.reserve(fields.size());
    bool numeric = true;
    for (const auto& f : fields) {
      double v;
      if (!try_double(f, v)) {
        numeric = false;
        break;
      }
      values.push_back(v);
    }
    if (numeric) {
      t.labels.emplace_back();
      t.rows.push_back(std::move(values));
      first = false;
      continue;
    }
    if (first) {
      t.header = fields;
      first = false;
      continue;
    }
    // retry with the first field as a label
    values.clear();
    for (size_t i = 1; i < fields.size(); ++i) {
      double v;
      if (!try_double(fields[i], v))
        throw input_error(what + ":" + std::to_string(lineno) + ": cannot parse '" + fields[i] +
                          "' as a number");
      values.push_back(v);
    }
    t.labels.push_back({fields[0]});
    t.rows.push_back(std::move(values));
  }
  return t;
}

ordered_json num_or_inf(double v) {
  if (v == infty) return ordered_json("inf");
  if (v == -infty) return ordered_json("-inf");
  return ordered_json(v);
}

ordered_json norm_json(const NormDescriptor& nu) {
  ordered_json j;
  j["p"] = num_or_inf(nu.p);
  j["symmetric"] = nu.symmetric;
  j["cyclic"] = nu.cyclic;
  return j;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string general6(double v) {
  if (v == infty) return "inf";
  if (v == -infty) return "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

ordered_json degree_json(const DegreeStability& ds) {
  ordered_json j;
  j["degree"] = ds.degree;
  j["bottleneck"] = num_or_inf(ds.bottleneck);
  j["bound"] = num_or_inf(ds.bound);
  j["pass"] = ds.pass;
  return j;
}

ordered_json stability_json_obj(const StabilityReport& r) {
  ordered_json j;
  j["p"] = num_or_inf(r.p);
  j["gromov_hausdorff"] = r.gh;
  j["degrees"] = ordered_json::array();
  for (const auto& ds : r.degrees) j["degrees"].push_back(degree_json(ds));
  j["all_pass"] = r.all_pass;
  return j;
}

}  // namespace

FiniteMetricSpace parse_space_csv(std::istream& in, bool pseudo, const std::string& what) {
  CsvTable t = read_table(in, what);
  const int n = static_cast<int>(t.rows.size());
  if (n == 0) throw input_error(what + ": no data rows");
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(t.rows[i].size()) != n)
      throw input_error(what + ": matrix is not square (" + std::to_string(n) + " rows, row " +
                        std::to_string(i + 1) + " has " + std::to_string(t.rows[i].size()) +
                        " entries)");
  std::vector<std::string> labels;
  bool row_labels = true;
  for (const auto& l : t.labels) row_labels = row_labels && !l.empty();
  if (row_labels && n > 0) {
    for (const auto& l : t.labels) labels.push_back(l[0]);
  } else if (!t.header.empty()) {
    std::vector<std::string> h = t.header;
    if (static_cast<int>(h.size()) == n + 1) h.erase(h.begin());
    if (static_cast<int>(h.size()) == n) labels = h;
  }
  DistanceMatrix m = DistanceMatrix::from_rows(t.rows);
  return validate_metric(m, pseudo, labels);
}

FiniteMetricSpace parse_points_csv(std::istream& in, const std::string& geometry,
                                   const std::string& what) {
  if (geometry != "euclidean" && geometry != "l1" && geometry != "circle")
    throw input_error("point geometry must be euclidean, l1 or circle, got '" + geometry + "'");
  CsvTable t = read_table(in, what);
  const int n = static_cast<int>(t.rows.size());
  if (n == 0) throw input_error(what + ": no data rows");
  const size_t dim = t.rows[0].size();
  for (int i = 0; i < n; ++i)
    if (t.rows[i].size() != dim)
      throw input_error(what + ": row " + std::to_string(i + 1) + " has " +
                        std::to_string(t.rows[i].size()) + " coordinates, expected " +
                        std::to_string(dim));
  if (geometry == "circle" && dim != 1)
    throw input_error(what + ": circle geometry takes one coordinate per point");

  DistanceMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d = 0.0;
      if (geometry == "euclidean") {
        for (size_t k = 0; k < dim; ++k) {
          double t2 = t.rows[i][k] - t.rows[j][k];
          d += t2 * t2;
        }
        d = std::sqrt(d);
      } else if (geometry == "l1") {
        for (size_t k = 0; k < dim; ++k) d += std::fabs(t.rows[i][k] - t.rows[j][k]);
      } else {
        double a = t.rows[i][0] - std::floor(t.rows[i][0]);
        double b = t.rows[j][0] - std::floor(t.rows[j][0]);
        double gap = std::fabs(a - b);
        d = std::min(gap, 1.0 - gap);
      }
      m.set(i, j, d);
      m.set(j, i, d);
    }
  std::vector<std::string> labels;
  bool row_labels = !t.labels.empty();
  for (const auto& l : t.labels) row_labels = row_labels && !l.empty();
  if (row_labels)
    for (const auto& l : t.labels) labels.push_back(l[0]);
  // coincident points are fine for a point cloud
  return validate_metric(m, true, labels);
}

DistanceMatrix parse_matrix_csv(std::istream& in, const std::string& what) {
  CsvTable t = read_table(in, what);
  const int n = static_cast<int>(t.rows.size());
  if (n == 0) throw input_error(what + ": no data rows");
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(t.rows[i].size()) != n)
      throw input_error(what + ": matrix is not square");
  return DistanceMatrix::from_rows(t.rows);
}

DistanceMatrix read_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  return parse_matrix_csv(in, path);
}

FiniteMetricSpace read_space_csv(const std::string& path, bool pseudo) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  return parse_space_csv(in, pseudo, path);
}

FiniteMetricSpace read_points_csv(const std::string& path, const std::string& geometry) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  return parse_points_csv(in, geometry, path);
}

std::string double_token(double v) {
  if (v == infty) return "inf";
  if (v == -infty) return "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string barcode_tsv(const Barcode& b) {
  std::string out = "dim\tbirth\tdeath\n";
  for (const auto& bar : b.bars) {
    out += std::to_string(bar.dim);
    out += '\t';
    out += general6(bar.birth);
    out += '\t';
    out += general6(bar.death);
    out += '\n';
  }
  return out;
}

std::string barcode_json(const Barcode& b) {
  ordered_json j;
  j["bars"] = ordered_json::array();
  for (const auto& bar : b.bars) {
    ordered_json e;
    e["dim"] = bar.dim;
    e["birth"] = bar.birth;
    e["death"] = num_or_inf(bar.death);
    j["bars"].push_back(e);
  }
  return j.dump(2) + "\n";
}

std::string barcode_svg(const Barcode& b) {
  static const char* palette[] = {"#3366cc", "#dc3912", "#109618", "#990099",
                                  "#ff9900", "#0099c6", "#dd4477"};
  const double width = 640.0, left = 60.0, right = 20.0;
  const double bar_h = 6.0, gap = 3.0, band_gap = 14.0, top = 24.0;

  double xmax = 0.0;
  int top_dim = -1;
  for (const auto& bar : b.bars) {
    xmax = std::max(xmax, bar.birth);
    if (!bar.essential()) xmax = std::max(xmax, bar.death);
    top_dim = std::max(top_dim, bar.dim);
  }
  if (xmax <= 0.0) xmax = 1.0;
  xmax *= 1.05;
  const double span = width - left - right;
  auto sx = [&](double v) { return left + span * v / xmax; };

  std::ostringstream svg;
  double y = top;
  std::ostringstream body;
  for (int dim = 0; dim <= top_dim; ++dim) {
    bool any = false;
    for (const auto& bar : b.bars) {
      if (bar.dim != dim) continue;
      if (!any) {
        body << "  <text x=\"8\" y=\"" << fixed6(y + bar_h) << "\" font-size=\"11\">H" << dim
             << "</text>\n";
        any = true;
      }
      double x0 = sx(bar.birth);
      double x1 = bar.essential() ? width - right : sx(bar.death);
      body << "  <rect x=\"" << fixed6(x0) << "\" y=\"" << fixed6(y) << "\" width=\""
           << fixed6(std::max(x1 - x0, 0.5)) << "\" height=\"" << fixed6(bar_h) << "\" fill=\""
           << palette[dim % 7] << "\"/>\n";
      y += bar_h + gap;
    }
    if (any) y += band_gap;
  }
  double height = y + 30.0;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed6(width) << "\" height=\""
      << fixed6(height) << "\" viewBox=\"0 0 " << fixed6(width) << " " << fixed6(height)
      << "\">\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"" << fixed6(width) << "\" height=\"" << fixed6(height)
      << "\" fill=\"white\"/>\n";
  svg << body.str();
  double axis_y = y + 8.0;
  svg << "  <line x1=\"" << fixed6(left) << "\" y1=\"" << fixed6(axis_y) << "\" x2=\""
      << fixed6(width - right) << "\" y2=\"" << fixed6(axis_y)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "  <text x=\"" << fixed6(left) << "\" y=\"" << fixed6(axis_y + 14.0)
      << "\" font-size=\"10\">0</text>\n";
  svg << "  <text x=\"" << fixed6(width - right - 40.0) << "\" y=\"" << fixed6(axis_y + 14.0)
      << "\" font-size=\"10\">" << fixed6(xmax) << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::string filtration_json(const FilteredComplex& F) {
  ordered_json j;
  j["n_points"] = F.n_points;
  j["norm"] = norm_json(F.norm);
  j["max_dim"] = F.max_dim;
  j["total_cells"] = F.total_cells();
  j["simplices"] = ordered_json::array();
  for (const auto& level : F.simplices) {
    ordered_json dim_arr = ordered_json::array();
    for (const auto& s : level) {
      ordered_json e;
      e["vertices"] = s.vertices;
      e["value"] = s.value;
      dim_arr.push_back(e);
    }
    j["simplices"].push_back(dim_arr);
  }
  return j.dump(2) + "\n";
}

std::string tuple_complex_json(const TupleChainComplex& C) {
  ordered_json j;
  j["n_points"] = C.n_points;
  j["norm"] = norm_json(C.norm);
  if (C.interval.unbounded()) {
    j["bound"] = "none";
  } else {
    j["bound"] = num_or_inf(C.interval.bound);
    j["strict"] = C.interval.strict;
  }
  j["max_deg"] = C.max_deg;
  j["total_cells"] = C.total_cells();
  j["degrees"] = ordered_json::array();
  for (int k = 0; k <= C.max_deg; ++k) {
    ordered_json deg;
    deg["degree"] = k;
    deg["tuples"] = C.basis[k];
    deg["weights"] = C.weights[k];
    j["degrees"].push_back(deg);
  }
  return j.dump(2) + "\n";
}

std::string magnitude_json(const MagnitudeResult& r) {
  ordered_json j;
  j["r"] = r.r;
  j["degree"] = r.degree;
  j["field"] = r.p;
  j["variant"] = to_string(r.variant);
  j["rank"] = r.rank;
  return j.dump(2) + "\n";
}

std::string les_json(const LesReport& r) {
  ordered_json j;
  j["r"] = r.r;
  j["degree"] = r.degree;
  j["field"] = r.p;
  j["rank_strict"] = r.rank_strict;
  j["rank_nonstrict"] = r.rank_nonstrict;
  j["rank_graded"] = r.rank_graded;
  j["rank_incl"] = r.rank_incl;
  j["rank_quot"] = r.rank_quot;
  j["composite_zero"] = r.composite_zero;
  j["exact"] = r.exact;
  return j.dump(2) + "\n";
}

std::string les_sweep_json(const LesSweep& s) {
  ordered_json j;
  j["degree"] = s.degree;
  j["field"] = s.p;
  j["all_exact"] = s.all_exact;
  j["entries"] = ordered_json::array();
  for (const auto& e : s.entries) {
    ordered_json o;
    o["r"] = e.r;
    o["rank_strict"] = e.rank_strict;
    o["rank_nonstrict"] = e.rank_nonstrict;
    o["rank_graded"] = e.rank_graded;
    o["rank_incl"] = e.rank_incl;
    o["rank_quot"] = e.rank_quot;
    o["exact"] = e.exact;
    j["entries"].push_back(o);
  }
  return j.dump(2) + "\n";
}

std::string stability_json(const StabilityReport& r) { return stability_json_obj(r).dump(2) + "\n"; }

std::string campaign_json(const StabilityCampaign& c) {
  ordered_json j;
  j["trials"] = ordered_json::array();
  for (const auto& t : c.trials) {
    ordered_json o;
    o["seed"] = t.seed;
    o["n_x"] = t.n_x;
    o["n_y"] = t.n_y;
    o["gromov_hausdorff"] = t.gh;
    o["pass"] = t.pass;
    o["reports"] = ordered_json::array();
    for (const auto& rep : t.per_p) o["reports"].push_back(stability_json_obj(rep));
    j["trials"].push_back(o);
  }
  j["all_pass"] = c.all_pass;
  return j.dump(2) + "\n";
}

std::string circle_json(const CircleReport& r) {
  ordered_json j;
  j["p"] = num_or_inf(r.p);
  j["n"] = r.n;
  j["formula"] = r.formula;
  j["birth"] = r.birth;
  j["death"] = num_or_inf(r.death);
  j["deviation"] = num_or_inf(r.deviation);
  j["tolerance"] = r.tolerance;
  j["found"] = r.found;
  j["pass"] = r.pass;
  return j.dump(2) + "\n";
}

}  // namespace lprips
