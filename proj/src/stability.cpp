#include "lprips/stability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "lprips/errors.hpp"
#include "lprips/random_spaces.hpp"

namespace lprips {

namespace {

// exhaustive search over map pairs (f, g) with distortion pruning.  The
// distortion of a pair is the largest of three maxima
//
//   dis f            = max |d(i,j) - d(fi,fj)|
//   dis g            = max |d(a,b) - d(ga,gb)|
//   cross term       = max |d(i,gb) - d(fi,b)|
//
// and twice the Gromov-Hausdorff distance is the minimum over all pairs.
// Assignments are extended one value at a time and a branch dies as soon as
// its partial maximum reaches the incumbent.
class GhSearch {
 public:
  GhSearch(const FiniteMetricSpace& X, const FiniteMetricSpace& Y)
      : X_(X), Y_(Y), nx_(X.size()), ny_(Y.size()) {
    f_.assign(nx_, 0);
    g_.assign(ny_, 0);
    best_ = infty;
  }

  GromovHausdorff run() {
    seed_incumbent();
    descend_f(0, 0.0);
    GromovHausdorff out;
    out.value = 0.5 * best_;
    out.best.f = best_f_;
    out.best.g = best_g_;
    out.best.distortion = best_;
    return out;
  }

 private:
  // the clamped identity pair is usually a decent start and makes the
  // incumbent finite before the search begins
  void seed_incumbent() {
    std::vector<int> f(nx_), g(ny_);
    for (int i = 0; i < nx_; ++i) f[i] = std::min(i, ny_ - 1);
    for (int a = 0; a < ny_; ++a) g[a] = std::min(a, nx_ - 1);
    double m = 0.0;
    for (int i = 0; i < nx_; ++i)
      for (int j = 0; j < i; ++j) m = std::max(m, std::fabs(X_.d(i, j) - Y_.d(f[i], f[j])));
    for (int a = 0; a < ny_; ++a)
      for (int b = 0; b < a; ++b) m = std::max(m, std::fabs(Y_.d(a, b) - X_.d(g[a], g[b])));
    for (int i = 0; i < nx_; ++i)
      for (int b = 0; b < ny_; ++b) m = std::max(m, std::fabs(X_.d(i, g[b]) - Y_.d(f[i], b)));
    best_ = m;
    best_f_ = f;
    best_g_ = g;
  }

  void descend_f(int i, double dis) {
    if (dis >= best_) return;
    if (i == nx_) {
      descend_g(0, dis);
      return;
    }
    for (int y = 0; y < ny_; ++y) {
      f_[i] = y;
      double m = dis;
      for (int j = 0; j < i && m < best_; ++j)
        m = std::max(m, std::fabs(X_.d(i, j) - Y_.d(y, f_[j])));
      if (m < best_) descend_f(i + 1, m);
    }
  }

  void descend_g(int a, double dis) {
    if (dis >= best_) return;
    if (a == ny_) {
      best_ = dis;
      best_f_ = f_;
      best_g_ = g_;
      return;
    }
    for (int x = 0; x < nx_; ++x) {
      g_[a] = x;
      double m = dis;
      for (int b = 0; b < a && m < best_; ++b)
        m = std::max(m, std::fabs(Y_.d(a, b) - X_.d(x, g_[b])));
      for (int i = 0; i < nx_ && m < best_; ++i)
        m = std::max(m, std::fabs(X_.d(i, x) - Y_.d(f_[i], a)));
      if (m < best_) descend_g(a + 1, m);
    }
  }

  const FiniteMetricSpace& X_;
  const FiniteMetricSpace& Y_;
  int nx_, ny_;
  std::vector<int> f_, g_;
  double best_;
  std::vector<int> best_f_, best_g_;
};

struct FiniteBar {
  double birth, death;

  double half() const { return 0.5 * (death - birth); }
};

double pair_cost(const FiniteBar& a, const FiniteBar& b) {
  return std::max(std::fabs(a.birth - b.birth), std::fabs(a.death - b.death));
}

// augmenting-path matching; bars are few at the scales this library targets
class Matcher {
 public:
  Matcher(int left, int right) : adj_(left), match_r_(right, -1) {}

  void edge(int l, int r) { adj_[l].push_back(r); }

  bool perfect() {
    int matched = 0;
    for (int l = 0; l < static_cast<int>(adj_.size()); ++l) {
      seen_.assign(match_r_.size(), 0);
      if (augment(l)) ++matched;
    }
    return matched == static_cast<int>(adj_.size());
  }

 private:
  bool augment(int l) {
    for (int r : adj_[l]) {
      if (seen_[r]) continue;
      seen_[r] = 1;
      if (match_r_[r] < 0 || augment(match_r_[r])) {
        match_r_[r] = l;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_r_;
  std::vector<char> seen_;
};

// perfect matching test at threshold t: left side is the A bars plus one
// diagonal slot per B bar, right side the B bars plus one slot per A bar.
// A bar may take its own diagonal slot when half its persistence fits, and
// diagonal slots pair with each other freely.
bool feasible(const std::vector<FiniteBar>& A, const std::vector<FiniteBar>& B, double t) {
  const int na = static_cast<int>(A.size());
  const int nb = static_cast<int>(B.size());
  Matcher m(na + nb, nb + na);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j)
      if (pair_cost(A[i], B[j]) <= t) m.edge(i, j);
    if (A[i].half() <= t) m.edge(i, nb + i);
  }
  for (int j = 0; j < nb; ++j) {
    if (B[j].half() <= t) m.edge(na + j, j);
    for (int i = 0; i < na; ++i) m.edge(na + j, nb + i);
  }
  return m.perfect();
}

double finite_bottleneck(const std::vector<FiniteBar>& A, const std::vector<FiniteBar>& B) {
  if (A.empty() && B.empty()) return 0.0;
  std::vector<double> cand{0.0};
  for (const auto& a : A) cand.push_back(a.half());
  for (const auto& b : B) cand.push_back(b.half());
  for (const auto& a : A)
    for (const auto& b : B) cand.push_back(pair_cost(a, b));
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  // the optimum is one of the candidates, so bisect on their indices
  int lo = 0, hi = static_cast<int>(cand.size()) - 1;
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (feasible(A, B, cand[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return cand[lo];
}

}  // namespace

GromovHausdorff gromov_hausdorff(const FiniteMetricSpace& X, const FiniteMetricSpace& Y) {
  if (X.size() == 0 || Y.size() == 0) throw input_error("gromov_hausdorff: empty space");
  if (X.size() > 5 || Y.size() > 5)
    throw input_error("gromov_hausdorff: exact search is limited to 5 points per space");
  GhSearch search(X, Y);
  return search.run();
}

double bottleneck_distance(const Barcode& A, const Barcode& B, int dim) {
  std::vector<FiniteBar> fa, fb;
  std::vector<double> ea, eb;
  for (const auto& bar : A.bars) {
    if (bar.dim != dim) continue;
    if (bar.essential())
      ea.push_back(bar.birth);
    else
      fa.push_back({bar.birth, bar.death});
  }
  for (const auto& bar : B.bars) {
    if (bar.dim != dim) continue;
    if (bar.essential())
      eb.push_back(bar.birth);
    else
      fb.push_back({bar.birth, bar.death});
  }
  // a bar with no endpoint can only be matched to another such bar, and on
  // the birth line the sorted pairing is optimal
  if (ea.size() != eb.size()) return infty;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  double ess = 0.0;
  for (size_t i = 0; i < ea.size(); ++i) ess = std::max(ess, std::fabs(ea[i] - eb[i]));
  return std::max(ess, finite_bottleneck(fa, fb));
}

StabilityReport stability_report(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                                 const NormDescriptor& nu, const std::vector<int>& degrees,
                                 int max_dim, int threads) {
  for (int n : degrees)
    if (n < 0 || n >= max_dim)
      throw input_error("stability_report: degree " + std::to_string(n) +
                        " needs max_dim at least " + std::to_string(n + 1));
  StabilityReport rep;
  rep.p = nu.p;
  rep.gh = gromov_hausdorff(X, Y).value;
  Barcode bx = persistence(build_vr_filtration(X, nu, max_dim, threads));
  Barcode by = persistence(build_vr_filtration(Y, nu, max_dim, threads));
  for (int n : degrees) {
    DegreeStability ds;
    ds.degree = n;
    ds.bottleneck = bottleneck_distance(bx, by, n);
    ds.bound = 2.0 * norm_constant(nu, n + 2) * rep.gh;
    ds.pass = ds.bottleneck <= ds.bound + 1e-9;
    rep.all_pass = rep.all_pass && ds.pass;
    rep.degrees.push_back(ds);
  }
  return rep;
}

StabilityCampaign stability_campaign(uint64_t seed, int trials, const std::vector<double>& ps,
                                     const std::vector<int>& degrees, int max_dim,
                                     int threads) {
  if (trials < 1) throw input_error("stability_campaign: trials must be positive");
  StabilityCampaign camp;
  for (int t = 0; t < trials; ++t) {
    Rng rng(mix_seed(seed, static_cast<uint64_t>(t)));
    StabilityTrial trial;
    trial.seed = mix_seed(seed, static_cast<uint64_t>(t));
    int n = 2 + rng.uniform_int(4);
    bool euclidean = rng.uniform() < 0.5;
    FiniteMetricSpace X =
        euclidean ? random_euclidean_space(rng, n, 2 + rng.uniform_int(2))
                  : random_range_metric(rng, n);
    FiniteMetricSpace Y;
    if (rng.uniform() < 0.7) {
      Y = perturb_space(rng, X, 0.05 + 0.2 * rng.uniform());
    } else {
      int m = 2 + rng.uniform_int(4);
      Y = euclidean ? random_euclidean_space(rng, m, 2) : random_range_metric(rng, m);
    }
    trial.n_x = X.size();
    trial.n_y = Y.size();
    for (double p : ps) {
      NormDescriptor nu;
      nu.p = p;
      StabilityReport rep = stability_report(X, Y, nu, degrees, max_dim, threads);
      trial.gh = rep.gh;
      trial.pass = trial.pass && rep.all_pass;
      trial.per_p.push_back(std::move(rep));
    }
    camp.all_pass = camp.all_pass && trial.pass;
    camp.trials.push_back(std::move(trial));
  }
  return camp;
}

}  // namespace lprips
