// Command-line front end: moment tables, marginal densities, chaos bases,
// Fock identity reports, Vage constants, process covariances, spectral
// covariance tables, and the full verification suite.
//
// Exit codes: 0 pass, 1 check failure, 2 usage error, 3 numerical-accuracy
// failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <random>
#include <iostream>
#include <sstream>

#include "greynoise/errors.hpp"
#include "greynoise/fockspace.hpp"
#include "greynoise/kondratiev.hpp"
#include "greynoise/marginals.hpp"
#include "greynoise/moments.hpp"
#include "greynoise/orthopoly.hpp"
#include "greynoise/phi_descriptor.hpp"
#include "greynoise/process.hpp"
#include "greynoise/spectral.hpp"
#include "greynoise/verify.hpp"

namespace {

using namespace greynoise;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

GramMatrix parse_gram(const std::string& spec) {
  if (spec.rfind("identity:", 0) == 0) {
    return GramMatrix::identity(std::stoi(spec.substr(9)));
  }
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw std::invalid_argument("gram: cannot open file");
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::vector<double> row;
      std::stringstream ss(line);
      std::string tok;
      while (std::getline(ss, tok, ',')) row.push_back(std::stod(tok));
      rows.push_back(std::move(row));
    }
    const int d = static_cast<int>(rows.size());
    Eigen::MatrixXd g(d, d);
    for (int i = 0; i < d; ++i) {
      if (static_cast<int>(rows[i].size()) != d) {
        throw std::invalid_argument("gram: ragged CSV matrix");
      }
      for (int j = 0; j < d; ++j) g(i, j) = rows[i][j];
    }
    return GramMatrix(std::move(g));
  }
  throw std::invalid_argument("gram: expected identity:<d> or file:<path>");
}

// --weights a=2^j,b=2^n,d=2
WeightSystem parse_weights(const std::string& spec) {
  double a_base = 2.0, b_base = 2.0;
  int d = 2;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("weights: key=value");
    const std::string key = tok.substr(0, eq);
    std::string value = tok.substr(eq + 1);
    const auto caret = value.find('^');
    if (caret != std::string::npos) value = value.substr(0, caret);
    if (key == "a") {
      a_base = std::stod(value);
    } else if (key == "b") {
      b_base = std::stod(value);
    } else if (key == "d") {
      d = std::stoi(value);
    } else {
      throw std::invalid_argument("weights: unknown key '" + key + "'");
    }
  }
  return WeightSystem::geometric(a_base, b_base, d);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
  out.imbue(std::locale::classic());
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  auto out = open_out(path);
  out << text;
}

int run_moments(const std::string& phi_spec, const std::string& gamma_spec,
                const std::string& gram_spec, int max_degree) {
  const MLFunction phi = phi_from_cli_spec(phi_spec);
  const MomentWeights m = moment_weights(phi);
  const MultiIndex gamma(parse_int_list(gamma_spec));
  const GramMatrix g = parse_gram(gram_spec);
  MomentLimits limits;
  limits.max_degree = max_degree;
  const MomentResult r = moment(gamma, g, m, limits);
  std::printf("%.12g\n", r.value);
  std::printf("# half-degree n = %d, diophantine solutions = %ld\n", r.half_degree,
              r.solution_count);
  if (g.has_exact()) {
    const Rational mult = moment_multiplier_exact(gamma, g, limits);
    std::printf("# value = multiplier * m_n with multiplier = %s (exact), "
                "m_%d = %.12g (divided convention; Taylor c_%d = %.12g)\n",
                mult.str().c_str(), r.half_degree, m[r.half_degree],
                r.half_degree, phi.coefficient(r.half_degree));
  }
  return 0;
}

int run_density(const std::string& phi_spec, const std::string& out_path,
                double x_max) {
  const MLFunction phi = phi_from_cli_spec(phi_spec);
  GridSpec spec;
  if (x_max > 0.0) spec.x_max = x_max;
  const MarginalDensity1D d = density_1d(phi, spec);
  std::ostringstream csv;
  csv.imbue(std::locale::classic());
  csv.precision(12);
  csv << "x,density\n";
  for (std::size_t k = 0; k < d.size(); ++k) {
    csv << d.x_at(k) << ',' << d.values[k] << '\n';
  }
  if (!out_path.empty()) {
    write_text(out_path, csv.str());
  } else {
    std::fputs(csv.str().c_str(), stdout);
  }
  std::fprintf(stderr, "# mass %.9f, clipped negativity %.3e\n", d.total_mass,
               d.clipped_negativity);
  return 0;
}

int run_chaos(const std::string& phi_spec, const std::string& gram_spec, int dim,
              int degree, const std::string& out_path) {
  const MLFunction phi = phi_from_cli_spec(phi_spec);
  const MomentWeights m = moment_weights(phi);
  const GramMatrix g = gram_spec.empty() ? GramMatrix::identity(dim)
                                         : parse_gram(gram_spec);
  const ChaosBasis basis = orthonormal_basis(dim, degree, g, m);
  const Eigen::MatrixXd gram = recompute_basis_gram(basis);
  const double residual =
      (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols()))
          .cwiseAbs()
          .maxCoeff();

  nlohmann::json j;
  j["dimension"] = basis.dimension;
  j["max_degree"] = basis.max_degree;
  j["gram_residual"] = residual;
  for (std::size_t i = 0; i < basis.indices.size(); ++i) {
    nlohmann::json row;
    row["index"] = basis.indices[i].entries();
    std::vector<double> coeffs(basis.indices.size());
    for (std::size_t c = 0; c < basis.indices.size(); ++c) {
      coeffs[c] = basis.coeffs(i, c);
    }
    row["coefficients"] = coeffs;
    j["basis"].push_back(std::move(row));
  }
  for (int level = 0; level + 1 <= degree; ++level) {
    for (int var = 0; var < dim; ++var) {
      const RecurrenceBlocks blocks = recurrence_blocks(basis, var, level);
      nlohmann::json rec;
      rec["variable"] = var;
      rec["level"] = level;
      auto dump = [](const Eigen::MatrixXd& mat) {
        std::vector<std::vector<double>> rows(mat.rows());
        for (int r = 0; r < mat.rows(); ++r) {
          rows[r].resize(mat.cols());
          for (int c = 0; c < mat.cols(); ++c) rows[r][c] = mat(r, c);
        }
        return rows;
      };
      rec["A"] = dump(blocks.a);
      rec["B"] = dump(blocks.b);
      rec["C"] = dump(blocks.c);
      rec["residual"] = blocks.residual;
      j["recurrence"].push_back(std::move(rec));
    }
  }
  if (!out_path.empty()) {
    write_text(out_path, j.dump(2) + "\n");
  } else {
    std::printf("%s\n", j.dump(2).c_str());
  }
  std::printf("# gram residual %.3e over %zu basis elements\n", residual,
              basis.indices.size());
  return residual <= 1e-8 ? 0 : 1;
}

int run_fock(const std::string& phi_spec, std::uint64_t seed) {
  const MLFunction phi = phi_from_cli_spec(phi_spec);
  const FockGeometry geom(phi);
  std::mt19937_64 rng(seed);
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1p-53);
  };
  bool all_ok = true;
  auto report = [&](const char* name, bool ok, double dev) {
    std::printf("[%s] %s (max dev %.3e)\n", ok ? "PASS" : "FAIL", name, dev);
    all_ok = all_ok && ok;
  };

  // reproducing property on truncations
  double dev_repro = 0.0;
  for (int trial = 0; trial < 16; ++trial) {
    GradedSeries f;
    for (int t = 0; t < 5; ++t) {
      std::vector<int> idx(2, 0);
      idx[rng() % 2] = static_cast<int>(rng() % 5);
      f.add(MultiIndex(idx), {uniform(-1, 1), uniform(-1, 1)});
    }
    const double r = 0.4 * phi.reliability_radius() / 2;
    const std::vector<std::complex<double>> w = {{uniform(-r, r), uniform(-r, r)},
                                                 {uniform(-r, r), uniform(-r, r)}};
    GradedSeries kernel_section;
    for (int k0 = 0; k0 <= 8; ++k0) {
      for (int k1 = 0; k1 <= 8; ++k1) {
        const MultiIndex idx({k0, k1});
        kernel_section.add(idx, geom.weight(idx) * std::pow(std::conj(w[0]), k0) *
                                    std::pow(std::conj(w[1]), k1));
      }
    }
    std::complex<double> direct = 0.0;
    for (const auto& [g, c] : f.coefficients()) {
      direct += c * std::pow(w[0], g[0]) * std::pow(w[1], g[1]);
    }
    dev_repro = std::max(dev_repro,
                         std::abs(fock_inner(f, kernel_section, geom) - direct));
  }
  report("reproducing property", dev_repro < 1e-8, dev_repro);

  // adjoint pairing and commutator
  double dev_pair = 0.0;
  for (int k = 0; k <= 12; ++k) {
    for (int l = 0; l <= 12; ++l) {
      const PairingCheck pc = pairing_check(k, l, phi);
      dev_pair = std::max(dev_pair,
                          std::abs(pc.derivative_side - pc.multiplier_side));
    }
  }
  report("adjoint pairing", dev_pair < 1e-10, dev_pair);

  // wick unit and commutativity on random pairs
  double dev_wick = 0.0;
  for (int trial = 0; trial < 8; ++trial) {
    GradedSeries f, g;
    for (int t = 0; t < 6; ++t) {
      std::vector<int> i1(3, 0), i2(3, 0);
      i1[rng() % 3] = static_cast<int>(rng() % 4);
      i2[rng() % 3] = static_cast<int>(rng() % 4);
      f.add(MultiIndex(i1), {uniform(-1, 1), 0.0});
      g.add(MultiIndex(i2), {uniform(-1, 1), 0.0});
    }
    const GradedSeries fg = wick_product(f, g);
    const GradedSeries gf = wick_product(g, f);
    const GradedSeries diff = fg.minus(gf);
    for (const auto& [idx, c] : diff.coefficients()) {
      dev_wick = std::max(dev_wick, std::abs(c));
    }
    const GradedSeries unit_test = wick_product(f, GradedSeries::unit()).minus(f);
    for (const auto& [idx, c] : unit_test.coefficients()) {
      dev_wick = std::max(dev_wick, std::abs(c));
    }
  }
  report("wick product algebra", dev_wick == 0.0, dev_wick);

  return all_ok ? 0 : 1;
}

int run_vage(const std::string& weights_spec, int p, int q, int pairs,
             std::uint64_t seed, const std::string& out_path) {
  const WeightSystem w = parse_weights(weights_spec);
  const VageConstants c = vage_constant(p, q, w);
  std::printf("tight constant   %.12g\nproduct constant %.12g\n", c.tight,
              c.product);
  std::mt19937_64 rng(seed);
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1p-53);
  };
  std::ostringstream csv;
  csv.imbue(std::locale::classic());
  csv.precision(12);
  csv << "trial,lhs,rhs,ratio,pass\n";
  bool all = true;
  for (int trial = 0; trial < pairs; ++trial) {
    GradedSeries f, g;
    const int terms = 1 + static_cast<int>(rng() % 25);
    for (int t = 0; t < terms; ++t) {
      std::vector<int> i1(8, 0), i2(8, 0);
      const int d1 = static_cast<int>(rng() % 9), d2 = static_cast<int>(rng() % 9);
      for (int u = 0; u < d1; ++u) ++i1[rng() % 8];
      for (int u = 0; u < d2; ++u) ++i2[rng() % 8];
      f.add(MultiIndex(i1), {uniform(-1, 1), uniform(-1, 1)});
      g.add(MultiIndex(i2), {uniform(-1, 1), uniform(-1, 1)});
    }
    const VageReport rep = verify_vage(f, g, p, q, w);
    all = all && rep.pass;
    csv << trial << ',' << rep.lhs << ',' << rep.rhs << ',' << rep.ratio << ','
        << (rep.pass ? 1 : 0) << '\n';
  }
  if (!out_path.empty()) write_text(out_path, csv.str());
  std::printf("%d pairs: %s\n", pairs, all ? "all PASS" : "FAILURES");
  return all ? 0 : 1;
}

int run_process(const std::string& phi_spec, int J, int grid, double tmax,
                const std::string& out_path) {
  const MLFunction phi = phi_from_cli_spec(phi_spec);
  const WeightSystem w = WeightSystem::geometric();
  std::ostringstream csv;
  csv.imbue(std::locale::classic());
  csv.precision(12);
  csv << "t,s,truncated_sum,t_min_s,error\n";
  std::vector<std::vector<double>> integrals;
  std::vector<double> ts;
  for (int i = 0; i < grid; ++i) {
    const double t = tmax * i / (grid - 1);
    ts.push_back(t);
    integrals.push_back(hermite_integrals_upto(J - 1, t));
  }
  const double c1 = phi.coefficient(1);
  for (int i = 0; i < grid; ++i) {
    for (int k = 0; k < grid; ++k) {
      double cov = 0.0;
      for (int j = 0; j < J; ++j) cov += integrals[i][j] * integrals[k][j];
      // the process carries 1/sqrt(c1) per factor and the inner product a
      // factor c1, so the covariance is convention-free
      (void)c1;
      const double target = std::min(ts[i], ts[k]);
      csv << ts[i] << ',' << ts[k] << ',' << cov << ',' << target << ','
          << cov - target << '\n';
    }
  }
  if (!out_path.empty()) {
    write_text(out_path, csv.str());
  } else {
    std::fputs(csv.str().c_str(), stdout);
  }

  std::printf("derivative rate at t=1 (J=100, p=1):\n");
  double prev = 0.0;
  for (double h : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const double err = diff_quotient_error(1.0, h, std::min(J, 100), phi, w, 1);
    std::printf("  h=%.0e  |dX/h - N| = %.6e%s\n", h, err,
                prev > 0.0 ? (err < prev ? "  (decreasing)" : "  (NOT decreasing)")
                           : "");
    prev = err;
  }
  return 0;
}

int run_integrate(const std::string& phi_spec, int mesh, int J,
                  const std::string& out_path) {
  const MLFunction phi = phi_from_cli_spec(phi_spec);
  const WeightSystem w = WeightSystem::geometric();
  auto constant_one = [](double) { return GradedSeries::unit(); };
  std::printf("mesh doubling in H_1 norm (integrand: unit constant):\n");
  GradedSeries prev;
  double prev_norm_diff = -1.0;
  for (int m = 16; m <= mesh; m *= 2) {
    const GradedSeries cur = wick_riemann_integral(constant_one, m, J, phi);
    if (!prev.empty()) {
      const double diff = hp_norm(cur.minus(prev), 1, w);
      std::printf("  mesh %5d -> %5d: |delta|_1 = %.6e\n", m / 2, m, diff);
      prev_norm_diff = diff;
    }
    prev = cur;
  }
  (void)prev_norm_diff;
  if (!out_path.empty()) write_text(out_path, graded_series_to_json(prev) + "\n");
  return 0;
}

int run_spectral(const std::string& measure_spec, double tmax, int grid,
                 const std::string& out_path) {
  SpectralMeasure mu = SpectralMeasure::lebesgue();
  bool is_fbm = false;
  double hurst = 0.5;
  if (measure_spec.rfind("fbm:", 0) == 0) {
    hurst = std::stod(measure_spec.substr(4));
    mu = SpectralMeasure::fbm(hurst);
    is_fbm = true;
  } else if (measure_spec.rfind("atomic:", 0) == 0) {
    // atomic:u1:m1,u2:m2,...
    std::vector<std::pair<double, double>> atoms;
    std::stringstream ss(measure_spec.substr(7));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos) {
        throw std::invalid_argument("atomic: expected u:mass pairs");
      }
      atoms.emplace_back(std::stod(tok.substr(0, colon)),
                         std::stod(tok.substr(colon + 1)));
    }
    mu = SpectralMeasure::atomic(std::move(atoms));
  } else if (measure_spec != "lebesgue") {
    throw std::invalid_argument("measure: lebesgue | fbm:<H> | atomic:<u:m,...>");
  }

  std::ostringstream csv;
  csv.imbue(std::locale::classic());
  csv.precision(12);
  csv << "t,s,covariance\n";
  std::vector<double> pts;
  for (int i = 1; i <= grid; ++i) pts.push_back(tmax * i / grid);
  for (double t : pts) {
    for (double s : pts) {
      csv << t << ',' << s << ',' << spectral_covariance(t, s, mu).real() << '\n';
    }
  }
  if (!out_path.empty()) {
    write_text(out_path, csv.str());
  } else {
    std::fputs(csv.str().c_str(), stdout);
  }
  if (is_fbm) {
    const FbmRatioReport rep = fbm_covariance_check(hurst, pts);
    std::printf("fbm ratio: mean %.9f, relative spread %.3e, %s\n", rep.mean_ratio,
                rep.relative_spread, rep.pass ? "PASS" : "FAIL");
    return rep.pass ? 0 : 1;
  }
  return 0;
}

int run_verify(std::uint64_t seed, const std::string& out_path) {
  const verify::Report report = verify::run_with_determinism(seed);
  const std::string text = verify::format_report(report, seed);
  std::fputs(text.c_str(), stdout);
  if (!out_path.empty()) write_text(out_path, text);
  return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"grey-noise analysis toolkit"};
  app.require_subcommand(1);

  std::string phi_spec = "exp", gamma_spec = "2,2", gram_spec = "identity:2";
  std::string out_path, weights_spec = "a=2^j,b=2^n,d=2", measure_spec = "lebesgue";
  std::uint64_t seed = 7;
  int max_degree = 12, dim = 2, degree = 3, p = 4, q = 1, pairs = 1000;
  int big_j = 400, grid = 5, mesh = 256;
  double tmax = 3.0, x_max = 0.0;

  auto* c_moments = app.add_subcommand("moments", "mixed moment of Q^gamma");
  c_moments->add_option("--phi", phi_spec, "exp | ml:<alpha> | file:<path>");
  c_moments->add_option("--gamma", gamma_spec, "comma-separated exponents");
  c_moments->add_option("--gram", gram_spec, "identity:<d> | file:<csv>");
  c_moments->add_option("--max-degree", max_degree, "refusal threshold");

  auto* c_density = app.add_subcommand("density", "1-d marginal density CSV");
  c_density->add_option("--phi", phi_spec);
  c_density->add_option("--out", out_path, "CSV path (stdout otherwise)");
  c_density->add_option("--x-max", x_max, "half-width of the x grid");

  auto* c_chaos = app.add_subcommand("chaos", "orthonormal chaos basis JSON");
  c_chaos->add_option("--phi", phi_spec);
  c_chaos->add_option("--dim", dim);
  c_chaos->add_option("-N,--degree", degree);
  c_chaos->add_option("--gram", gram_spec);
  c_chaos->add_option("--out", out_path);

  auto* c_fock = app.add_subcommand("fock", "kernel-space identity checks");
  c_fock->add_option("--phi", phi_spec);
  c_fock->add_option("--seed", seed);

  auto* c_vage = app.add_subcommand("vage", "convolution inequality sweep");
  c_vage->add_option("--weights", weights_spec, "a=<base>^j,b=<base>^n,d=<int>");
  c_vage->add_option("-p", p);
  c_vage->add_option("-q", q);
  c_vage->add_option("--pairs", pairs);
  c_vage->add_option("--seed", seed);
  c_vage->add_option("--out", out_path, "CSV table path");

  auto* c_process = app.add_subcommand("process", "covariance table + rate");
  c_process->add_option("--phi", phi_spec);
  c_process->add_option("-J", big_j, "basis truncation");
  c_process->add_option("--grid", grid);
  c_process->add_option("--tmax", tmax);
  c_process->add_option("--out", out_path);

  auto* c_integrate = app.add_subcommand("integrate", "wick-Riemann integral");
  c_integrate->add_option("--phi", phi_spec);
  c_integrate->add_option("--mesh", mesh);
  c_integrate->add_option("-J", big_j);
  c_integrate->add_option("--out", out_path, "JSON coefficients path");

  auto* c_spectral = app.add_subcommand("spectral", "covariance tables");
  c_spectral->add_option("--measure", measure_spec,
                         "lebesgue | fbm:<H> | atomic:<u:m,...>");
  c_spectral->add_option("--tmax", tmax);
  c_spectral->add_option("--grid", grid);
  c_spectral->add_option("--out", out_path);

  auto* c_verify = app.add_subcommand("verify", "full acceptance suite");
  std::string suite = "all";
  c_verify->add_option("--suite", suite, "only 'all' is defined");
  c_verify->add_option("--seed", seed);
  c_verify->add_option("--out", out_path, "report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_moments->parsed()) {
      return run_moments(phi_spec, gamma_spec, gram_spec, max_degree);
    }
    if (c_density->parsed()) return run_density(phi_spec, out_path, x_max);
    if (c_chaos->parsed()) {
      return run_chaos(phi_spec, c_chaos->count("--gram") ? gram_spec : "",
                       dim, degree, out_path);
    }
    if (c_fock->parsed()) return run_fock(phi_spec, seed);
    if (c_vage->parsed()) {
      return run_vage(weights_spec, p, q, pairs, seed, out_path);
    }
    if (c_process->parsed()) {
      return run_process(phi_spec, big_j, grid, tmax, out_path);
    }
    if (c_integrate->parsed()) {
      return run_integrate(phi_spec, mesh, big_j, out_path);
    }
    if (c_spectral->parsed()) {
      return run_spectral(measure_spec, tmax, grid, out_path);
    }
    if (c_verify->parsed()) {
      if (suite != "all") throw std::invalid_argument("unknown suite");
      return run_verify(seed, out_path);
    }
  } catch (const accuracy_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
