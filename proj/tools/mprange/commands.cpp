#include "commands.hpp"

#include "mpr/balanced_matrix.hpp"
#include "mpr/edge.hpp"
#include "mpr/feynman.hpp"
#include "mpr/io.hpp"
#include "mpr/multigraph.hpp"
#include "mpr/parallel.hpp"
#include "mpr/series.hpp"
#include "mpr/transform.hpp"
#include "mpr/verify.hpp"
#include "mpr/walk.hpp"
#include "mpr/weights.hpp"

#include <cmath>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace mprange {

namespace {

using mpr::BalancedMatrix;

std::string exact(const mpr::BigInt& x) { return x.str(); }
std::string exact(const mpr::Rational& x) { return x.str(); }

Json estimate(double value, double error) { return Json{{"value", value}, {"error", error}}; }
Json estimate(mpr::cplx value, double error) {
  return Json{{"re", value.real()}, {"im", value.imag()}, {"error", error}};
}

std::vector<BalancedMatrix> matrices_for(int r, int p, int w, int cap, const std::string& file) {
  if (!file.empty()) return mpr::matrices_from_json(mpr::read_text_file(file), p);
  return mpr::enumerate_mf(r, p, w, cap);
}

mpr::CoefficientTable coefficients(int order, long long samples, std::uint64_t seed) {
  mpr::VerifyConfig c;
  c.order = order;
  c.coeff_samples = samples;
  c.seed = seed;
  return mpr::verify_coefficients(c);
}

void add_convention(CLI::App* cmd, mpr::VisitConvention& conv) {
  cmd->add_flag("--count-time-zero", conv.count_time_zero, "Count the starting point as a visit at time 0");
  cmd->add_option_function<std::string>(
         "--multiplicity",
         [&conv](const std::string& m) { conv.even_multiplicity = m == "2k"; },
         "N_2k counts points visited exactly 2k times (2k) or exactly k times (k)")
      ->check(CLI::IsMember({"2k", "k"}))
      ->default_str("2k");
}

struct GridPoint {
  mpr::cplx s;
  int R = 1, p = 0;
};

std::vector<GridPoint> default_grid() {
  std::vector<GridPoint> g;
  for (const mpr::cplx s : {mpr::cplx(2.0, 0.0), mpr::cplx(3.0, 1.0), mpr::cplx(1.5, -0.8), mpr::cplx(4.0, 3.0)})
    for (int R = 1; R <= 3; ++R) g.push_back({s, R, 0});
  return g;
}

std::vector<GridPoint> read_grid(const std::string& path) {
  std::istringstream in(mpr::read_text_file(path));
  std::vector<GridPoint> g;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    for (char& c : line)
      if (c == ',') c = ' ';
    std::istringstream fields(line);
    double re = 0, im = 0;
    GridPoint pt;
    if (!(fields >> re >> im >> pt.R)) throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected s_re,s_im,R[,p]");
    fields >> pt.p;
    pt.s = {re, im};
    g.push_back(pt);
  }
  if (g.empty()) throw std::invalid_argument(path + ": empty grid");
  return g;
}

std::vector<double> parse_x_grid(const std::string& spec) {
  const auto a = spec.find(':'), b = spec.rfind(':');
  if (a == std::string::npos || a == b) throw std::invalid_argument("--x-grid must be a:b:n");
  double lo = 0, hi = 0;
  long n = 0;
  try {
    lo = std::stod(spec.substr(0, a));
    hi = std::stod(spec.substr(a + 1, b - a - 1));
    n = std::stol(spec.substr(b + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("--x-grid must be a:b:n with numbers, got '" + spec + "'");
  }
  if (n < 1) throw std::invalid_argument("--x-grid needs n >= 1");
  if (lo >= 0 || hi >= 0) throw std::invalid_argument("--x-grid: the edge densities live on x < 0");
  std::vector<double> xs;
  for (long i = 0; i < n; ++i) xs.push_back(n == 1 ? lo : lo + (hi - lo) * double(i) / double(n - 1));
  return xs;
}

}  // namespace

void register_commands(CLI::App& app, Selected& selected) {
  const auto select = [&selected](CLI::App* cmd, std::function<Result()> fn) {
    cmd->final_callback([&selected, name = cmd->get_name(), fn = std::move(fn)] {
      selected.name = name;
      selected.run = fn;
    });
  };

  {
    struct Opts {
      int r = 2, p = 0, w = 2, cap = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("enumerate", "List the matrices of MF(r,p,w) with symmetry and Euler data");
    cmd->add_option("--r", o->r, "Number of inner vertices")->required()->check(CLI::Range(1, 6));
    cmd->add_option("--p", o->p, "Number of outer vertices")->check(CLI::Range(0, 1));
    cmd->add_option("--w", o->w, "Minimum inner degree")->check(CLI::Range(1, 4));
    cmd->add_option("--cap", o->cap, "Maximum inner degree (default: w)")->check(CLI::Range(0, 6));
    select(cmd, [o] {
      Table t{{"id", "q", "rows", "syf", "gr", "eul", "mult", "cofactor"}, {}};
      long long id = 0;
      for (const auto& f : mpr::enumerate_mf(o->r, o->p, o->w, o->cap ? o->cap : o->w))
        t.add({id++, (long long)f.q(), f.to_string(), (long long)mpr::syf(f), exact(mpr::gr(f)), exact(mpr::eul(f)),
               exact(mpr::mult(f)), exact(mpr::cofactor(f))});
      return Result{t};
    });
  }

  {
    struct Opts {
      int r = 2, p = 0, cap = 2;
      std::string matrix;
    };
    auto o = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("weights", "Permutation weight polynomials wei_F(m) with Syf, gr and Eul");
    cmd->add_option("--r", o->r, "Number of inner vertices")->check(CLI::Range(1, 5));
    cmd->add_option("--p", o->p, "Number of outer vertices")->check(CLI::Range(0, 1));
    cmd->add_option("--cap", o->cap, "Maximum inner degree")->check(CLI::Range(2, 4));
    cmd->add_option("--matrix", o->matrix, "JSON file with one matrix or an array of matrices")->check(CLI::ExistingFile);
    select(cmd, [o] {
      Json out = Json::array();
      for (const auto& f : matrices_for(o->r, o->p, 2, o->cap, o->matrix)) {
        const mpr::WeightPolynomial w = mpr::wei_partition(f);
        Json coeffs = Json::array();
        for (const auto& a : w.a) coeffs.push_back(exact(a));
        out.push_back(Json{{"q", f.q()},
                           {"rows", f.rows()},
                           {"p", f.p()},
                           {"wei", coeffs},
                           {"syf", mpr::syf(f)},
                           {"gr", exact(mpr::gr(f))},
                           {"eul", exact(mpr::eul(f))}});
      }
      return Result{out};
    });
  }

  {
    struct Opts {
      int r = 2;
      long long samples = 1'000'000;
      std::uint64_t seed = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("integrate", "Monte Carlo Gamma_G(0) for every phi^4 vacuum matrix at order r");
    cmd->add_option("--r", o->r, "Order")->required()->check(CLI::Range(1, 6));
    cmd->add_option("--samples", o->samples, "Samples per integral")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o->seed, "Random seed")->required();
    select(cmd, [o] {
      const auto fs = mpr::enumerate_phi4(o->r);
      std::vector<mpr::IntegralEstimate> est(fs.size());
      mpr::parallel_for(fs.size(), [&](std::size_t i) {
        est[i] = mpr::gamma_at_zero(mpr::DirectedMultigraph::from_matrix(fs[i]), o->samples,
                                    mpr::derive_seed(o->seed, "integrate:" + fs[i].to_string()));
      });
      Table t{{"id", "matrix", "gamma0", "stderr", "n_eval"}, {}};
      for (std::size_t i = 0; i < fs.size(); ++i)
        t.add({(long long)i, fs[i].to_string(), est[i].value, est[i].std_error, est[i].n_eval});
      return Result{t};
    });
  }

  {
    struct Opts {
      int order = 4;
      long long samples = 1'000'000;
      std::uint64_t seed = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("coeffs", "Perturbative coefficient streams with propagated errors");
    cmd->add_option("--order", o->order, "Truncation order M")->check(CLI::Range(1, 6));
    cmd->add_option("--samples", o->samples, "Samples per integral")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o->seed, "Random seed")->required();
    select(cmd, [o] {
      const auto t = coefficients(o->order, o->samples, o->seed);
      const auto sigma = mpr::sigmaU_m0(t);
      const auto z2 = mpr::zeta_closure(2, t, o->order).zeta;
      Json rows = Json::array();
      for (const auto& row : t.rows) {
        const int r = row.r;
        rows.push_back(Json{{"r", r},
                            {"gamma0_r1", estimate(row.gamma0_r1.value, row.gamma0_r1.error)},
                            {"gC_r0", estimate(row.gC_r0.value, row.gC_r0.error)},
                            {"sigmaU_r0", estimate(sigma.coeff(r), sigma.error(r))},
                            {"zeta2_r", estimate(z2.coeff(r), z2.error(r))}});
      }
      return Result{Json{{"order", t.order}, {"samples", t.samples}, {"seed", o->seed}, {"rows", rows}}};
    });
  }

  {
    struct Opts {
      int dist = 0, j = 4, order = 4;
      long long samples = 1'000'000;
      std::uint64_t seed = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("moments", "Moments E(nu^j) from the characteristic-function series");
    cmd->add_option("--dist", o->dist, "0 for nu_0, 2 for nu_2")->required()->check(CLI::IsMember({0, 2}));
    cmd->add_option("--j", o->j, "Highest moment")->required()->check(CLI::Range(1, 6));
    cmd->add_option("--order", o->order, "Truncation order M (at least j)")->check(CLI::Range(1, 6));
    cmd->add_option("--samples", o->samples, "Samples per integral")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o->seed, "Random seed")->required();
    select(cmd, [o] {
      if (o->j > o->order) throw std::invalid_argument("--j must not exceed --order");
      const auto t = coefficients(o->order, o->samples, o->seed);
      const auto phi = mpr::phi_series(o->dist, t, o->j);
      const auto m = mpr::moments_from_series(phi);
      const auto e = mpr::moment_errors_from_series(phi);
      Table out{{"j", "re", "im", "error"}, {}};
      for (int j = 0; j <= o->j; ++j)
        out.add({(long long)j, m[std::size_t(j)].real(), m[std::size_t(j)].imag(), e[std::size_t(j)]});
      return Result{out};
    });
  }

  {
    auto grid = std::make_shared<std::string>();
    auto* cmd = app.add_subcommand("transform-check", "Borel identity on a grid of (s, R, p) points");
    cmd->add_option("--grid", *grid, "CSV lines s_re,s_im,R[,p]")->check(CLI::ExistingFile);
    select(cmd, [grid] {
      const auto pts = grid->empty() ? default_grid() : read_grid(*grid);
      std::vector<mpr::BorelCheck> res(pts.size());
      mpr::parallel_for(pts.size(), [&](std::size_t i) { res[i] = mpr::borel_identity(pts[i].s, pts[i].R, pts[i].p); });
      Table t{{"s_re", "s_im", "R", "p", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "rel_diff", "pass"}, {}};
      bool all = true;
      for (const auto& b : res) {
        all = all && b.pass;
        t.add({b.s.real(), b.s.imag(), (long long)b.R, (long long)b.p, b.lhs.real(), b.lhs.imag(), b.rhs.real(),
               b.rhs.imag(), b.rel_diff, b.pass});
      }
      return Result{t, all ? 0 : 1};
    });
  }

  {
    struct Opts {
      int order = 4;
      long long samples = 1'000'000;
      std::uint64_t seed = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("zeta", "zeta streams from the transform closure against the Feynman streams");
    cmd->add_option("--order", o->order, "Truncation order M")->check(CLI::Range(1, 6));
    cmd->add_option("--samples", o->samples, "Samples per integral")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o->seed, "Random seed")->required();
    select(cmd, [o] {
      const auto t = coefficients(o->order, o->samples, o->seed);
      Json streams = Json::array();
      for (const int which : {0, 2}) {
        const auto z = mpr::zeta_closure(which, t, o->order);
        const auto g = which == 0 ? mpr::gamma0_series(t) : mpr::gamma2_series(t);
        Json rows = Json::array();
        for (int r = 0; r <= o->order; ++r) {
          const double sigma = std::hypot(z.zeta.error(r), g.error(r));
          const double diff = std::abs(z.zeta.coeff(r) - g.coeff(r));
          rows.push_back(Json{{"r", r},
                              {"zeta", estimate(z.zeta.coeff(r), z.zeta.error(r))},
                              {"feynman", estimate(g.coeff(r), g.error(r))},
                              {"sigma_distance", sigma > 0 ? diff / sigma : (diff == 0 ? 0.0 : INFINITY)}});
        }
        Json residuals = Json::array();
        for (const auto& x : z.log_residuals) residuals.push_back(std::abs(x));
        streams.push_back(Json{{"which", which}, {"rows", rows}, {"log_residuals", residuals}});
      }
      return Result{Json{{"order", o->order}, {"samples", t.samples}, {"seed", o->seed}, {"streams", streams}}};
    });
  }

  {
    struct Opts {
      int which = 0;
      std::string grid, lipatov;
    };
    auto o = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("edge", "Rising-edge density f(x) on a grid of x < 0");
    cmd->add_option("--which", o->which, "0 or 2")->required()->check(CLI::IsMember({0, 2}));
    cmd->add_option("--x-grid", o->grid, "a:b:n, n evenly spaced points from a to b")->required();
    cmd->add_option("--lipatov", o->lipatov, "JSON file with I1, I4, I6, DL, DT")->check(CLI::ExistingFile);
    select(cmd, [o] {
      const auto c = o->lipatov.empty() ? mpr::LipatovConstants::defaults() : mpr::load_lipatov(o->lipatov);
      c.require("I1 I4 I6 DL DT");
      const auto xs = parse_x_grid(o->grid);
      Table t{{"x", "f"}, {}};
      for (const double x : xs) t.add({x, mpr::edge_density(o->which, x, c)});
      return Result{t};
    });
  }

  {
    struct Opts {
      std::string kind;
      long n = 0, batch = 0;
      int k = 1;
      std::uint64_t seed = 0;
      mpr::VisitConvention conv;
    };
    auto o = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("walk", "Moments of the centred multiple-point count over a batch of walks");
    cmd->add_option("--kind", o->kind, "closed or free")->required()->check(CLI::IsMember({"closed", "free"}));
    cmd->add_option("--n", o->n, "Walk size (closed walks have length 2n)")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--k", o->k, "Multiplicity index")->required()->check(CLI::Range(1, 64));
    cmd->add_option("--batch", o->batch, "Number of walks")->required()->check(CLI::Range(2L, 100'000'000L));
    cmd->add_option("--seed", o->seed, "Random seed")->required();
    add_convention(cmd, o->conv);
    select(cmd, [o] {
      const auto b = mpr::beta_statistic(mpr::walk_kind_from_string(o->kind), o->n, o->k, o->batch, o->seed, o->conv);
      return Result{Json::parse(mpr::beta_stats_to_json(b, o->conv))};
    });
  }

  {
    struct Opts {
      std::string profile = "full", lipatov;
      std::uint64_t seed = 0;
      int order = 0;
      bool verbose = false;
      mpr::VisitConvention conv;
    };
    auto o = std::make_shared<Opts>();
    auto* cmd = app.add_subcommand("verify-all", "Run every acceptance check and emit a report");
    cmd->add_option("--profile", o->profile, "full or quick (smaller samples, same thresholds)")
        ->check(CLI::IsMember({"full", "quick"}));
    cmd->add_option("--seed", o->seed, "Random seed")->required();
    cmd->add_option("--order", o->order, "Override the truncation order")->check(CLI::Range(3, 6));
    cmd->add_option("--lipatov", o->lipatov, "JSON file with I1, I4, I6, DL, DT")->check(CLI::ExistingFile);
    cmd->add_flag("--verbose", o->verbose, "Print per-check progress to stderr");
    add_convention(cmd, o->conv);
    select(cmd, [o] {
      mpr::VerifyConfig c = o->profile == "quick" ? mpr::VerifyConfig::quick() : mpr::VerifyConfig::full();
      c.seed = o->seed;
      if (o->order) c.order = o->order;
      if (!o->lipatov.empty()) c.lipatov = mpr::load_lipatov(o->lipatov);
      c.convention = o->conv;
      const auto report = mpr::run_verification(c, o->verbose ? &std::cerr : nullptr);
      return Result{Json::parse(mpr::report_to_json(report)), report.all_pass() ? 0 : 1};
    });
  }
}

}  // namespace mprange
