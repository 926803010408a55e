#pragma once

// Command execution behind the pdmosc tool. Parsing of argv lives in
// tools/; everything here works on a RunConfig so it can be driven from
// tests.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "extensions.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "oscillator.hpp"
#include "verify.hpp"

namespace pdmosc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadConfig = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Invalid user input; reported with exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Command { spectrum, potential, wavefunction, extend, verify, limits, figures };
enum class Format { csv, json };

struct Grid {
  double r_min = 0.01;
  double r_max = 10.0;
  int points = 200;
  std::vector<double> nodes() const { return uniform_grid(r_min, r_max, points); }
};

struct RunConfig {
  Command command = Command::spectrum;
  double alpha = 1.0 / std::numbers::sqrt3;
  int L = 1;
  double omega = 1.0;
  std::optional<ExtensionSpec> extension;
  int n_max = 3;
  Grid grid;
  Format format = Format::csv;
  std::string out;  // empty: stdout
  std::string suite = "all";
  std::string which = "all";
  bool oracle = false;
};

inline Grid parse_grid(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 3) throw ConfigError("--grid must be r_min:r_max:points, got '" + s + "'");
  Grid g;
  try {
    std::size_t used = 0;
    g.r_min = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("");
    g.r_max = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("");
    g.points = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("");
  } catch (const std::logic_error&) {
    throw ConfigError("--grid must be r_min:r_max:points, got '" + s + "'");
  }
  if (!(g.r_min > 0.0)) throw ConfigError("--grid: r_min must be > 0");
  if (!(g.r_max > g.r_min)) throw ConfigError("--grid: r_max must exceed r_min");
  if (g.points < 2) throw ConfigError("--grid: points must be >= 2");
  if (g.points > 1000000) throw ConfigError("--grid: points must be <= 1000000");
  return g;
}

inline void validate(const RunConfig& c) {
  if (c.n_max < 0 || c.n_max > oscillator::kMaxLevels)
    throw ConfigError("--n-max must lie in [0, " + std::to_string(oscillator::kMaxLevels) + "]");
  if (!(c.grid.r_min > 0.0) || !(c.grid.r_max > c.grid.r_min) || c.grid.points < 2)
    throw ConfigError("grid: need 0 < r_min < r_max and points >= 2");
  if (c.command == Command::extend && !c.extension) throw ConfigError("extend requires --type and --m");
  if (c.extension && c.extension->m < 0) throw ConfigError("--m must be >= 0");
}

namespace detail {

struct Output {
  std::vector<std::pair<std::string, io::Table>> tables;  // (name, table)
};

inline ModelParams params_of(const RunConfig& c) { return ModelParams(c.alpha, c.L, c.omega); }

inline void require_deformed(const ModelParams& p, const char* what) {
  if (!p.deformed()) throw ConfigError(std::string(what) + " requires --alpha > 0");
}

inline std::string psi_label(int n) { return "psi_" + std::to_string(n); }

inline SpectrumTable spectrum_cmd(const RunConfig& c) {
  const ModelParams p = params_of(c);
  SpectrumTable s;
  if (c.extension) {
    require_deformed(p, "spectrum of an extension");
    s = ext::extended_spectrum(*c.extension, p, c.n_max);
  } else {
    s = oscillator::spectrum(p, c.n_max);
  }
  if (c.oracle) {
    require_deformed(p, "--oracle");
    const int k = static_cast<int>(s.entries.size());
    std::vector<double> ev;
    if (c.extension) {
      const ext::ExtendedPotential V(*c.extension, p);
      ev = oracle::pdm_eigenvalues(p, [&V](double r) { return V(r); }, k);
    } else {
      ev = oracle::pdm_eigenvalues(p, [&p](double r) { return oscillator::potential(p, r); }, k);
    }
    for (int i = 0; i < k; ++i) s.entries[i].energy = ev[i];
    s.source = SpectrumSource::oracle;
  }
  return s;
}

inline io::Table potential_cmd(const RunConfig& c) {
  const ModelParams p = params_of(c);
  io::Table t;
  t.comments.push_back(io::params_comment(p, c.extension));
  const auto r = c.grid.nodes();
  if (!c.extension) {
    t.columns = {"r", "V"};
    for (double x : r) t.add_row({x, oscillator::potential(p, x)});
    return t;
  }
  t.columns = {"r", "V", "V_rat", "V_ext"};
  if (p.deformed()) {
    const ext::ExtendedPotential V(*c.extension, p);
    t.comments.push_back("gamma=" + io::format_double(V.gamma()));
    for (double x : r) {
      const double v = oscillator::potential(p, x), vx = V(x);
      t.add_row({x, v, vx - v, vx});
    }
  } else {
    for (double x : r) {
      const double v = oscillator::potential(p, x), rat = ext::limit_rational_term(*c.extension, c.L, c.omega, x);
      t.add_row({x, v, rat, v + rat});
    }
  }
  return t;
}

inline io::Table wavefunction_cmd(const RunConfig& c) {
  const ModelParams p = params_of(c);
  io::Table t;
  t.comments.push_back(io::params_comment(p));
  t.columns = {"r"};
  for (int n = 0; n <= c.n_max; ++n) t.columns.push_back(psi_label(n));
  std::vector<oscillator::Eigenstate> states;
  if (p.deformed())
    for (int n = 0; n <= c.n_max; ++n) states.emplace_back(p, n);
  std::string energies = "energies:";
  for (int n = 0; n <= c.n_max; ++n) energies += " " + io::format_double(oscillator::energy(p, n));
  t.comments.push_back(energies);
  for (double x : c.grid.nodes()) {
    std::vector<double> row{x};
    for (int n = 0; n <= c.n_max; ++n)
      row.push_back(p.deformed() ? states[n](x) : oscillator::limit_wavefunction(c.L, c.omega, n, x));
    t.add_row(std::move(row));
  }
  return t;
}

inline io::Table extend_cmd(const RunConfig& c) {
  const ModelParams p = params_of(c);
  require_deformed(p, "extend");
  const ExtensionSpec spec = *c.extension;
  const ext::ExtendedPotential V(spec, p);
  io::Table t;
  t.comments.push_back(io::params_comment(p, spec));
  const auto& q = V.partner_data();
  t.comments.push_back("gamma=" + io::format_double(q.gamma) + " partner_L=" + std::to_string(q.L) +
                       " partner_omega=" + io::format_double(q.omega));
  std::vector<int> levels;
  if (spec.type == ExtensionType::III) levels.push_back(-spec.m - 1);
  for (int n = 0; n <= c.n_max; ++n) levels.push_back(n);
  std::vector<ext::ExtendedEigenstate> states;
  std::string energies = "energies:";
  for (int n : levels) {
    states.emplace_back(spec, p, n);
    energies += " " + io::format_double(states.back().energy());
  }
  t.comments.push_back(energies);
  t.columns = {"r", "V", "V_rat", "V_ext"};
  for (int n : levels) t.columns.push_back(psi_label(n));
  for (double x : c.grid.nodes()) {
    const double v = oscillator::potential(p, x), vx = V(x);
    std::vector<double> row{x, v, vx - v, vx};
    for (const auto& s : states) row.push_back(s(x));
    t.add_row(std::move(row));
  }
  return t;
}

inline io::Table limits_cmd(const RunConfig& c) {
  io::Table t;
  t.comments.push_back("L=" + std::to_string(c.L) + " omega=" + io::format_double(c.omega) +
                       " alpha->0 sweep; psi_error is the max over the grid" +
                       (c.extension ? " type=" + ext::to_string(c.extension->type) + " m=" + std::to_string(c.extension->m)
                                    : std::string()));
  t.columns = {"alpha", "n", "energy_error", "energy_error_over_alpha", "psi_error"};
  if (c.extension) {
    t.columns.push_back("seed_energy_error");
    t.columns.push_back("rational_term_error");
  }
  const auto grid = c.grid.nodes();
  for (double a : {0.2, 0.1, 0.05, 0.025, 0.0125}) {
    const ModelParams p(a, c.L, c.omega);
    double seed_err = 0.0, rat_err = 0.0;
    if (c.extension) {
      if (auto v = ext::extension_violation(*c.extension, p))
        throw ConfigError("extension invalid at alpha=" + io::format_double(a) + ": " + *v);
      const auto& spec = *c.extension;
      if (!ext::seed_violation(spec, p) && !ext::limit_seed_violation(spec, c.L))
        seed_err = std::abs(ext::seed_energy(spec, p) - ext::limit_seed_energy(spec, c.L, c.omega));
      else
        seed_err = std::nan("");
      for (double x : grid)
        rat_err = std::max(rat_err, std::abs(ext::rational_term(spec, p, x) -
                                             ext::limit_rational_term(spec, c.L, c.omega, x)));
    }
    for (int n = 0; n <= c.n_max; ++n) {
      const double dE = std::abs(oscillator::energy(p, n) - (2.0 * n + c.L + 1.5) * c.omega);
      const oscillator::Eigenstate psi(p, n);
      double dpsi = 0.0;
      for (double x : grid) dpsi = std::max(dpsi, std::abs(psi(x) - oscillator::limit_wavefunction(c.L, c.omega, n, x)));
      std::vector<double> row{a, static_cast<double>(n), dE, dE / a, dpsi};
      if (c.extension) {
        row.push_back(seed_err);
        row.push_back(rat_err);
      }
      t.add_row(std::move(row));
    }
  }
  return t;
}

// Figure datasets at L = omega = 1.

inline io::Table figure1() {
  io::Table t;
  t.comments.push_back("figure 1: E_n(alpha) for L=1 omega=1, n=0..3");
  t.columns = {"alpha", "E_0", "E_1", "E_2", "E_3"};
  for (int i = 0; i <= 100; ++i) {
    const double a = i / 100.0;
    const ModelParams p(a, 1, 1.0);
    t.add_row({a, oscillator::energy(p, 0), oscillator::energy(p, 1), oscillator::energy(p, 2),
               oscillator::energy(p, 3)});
  }
  return t;
}

inline const double kFig2Alphas[] = {1.0 / std::numbers::sqrt3, 1.0 / (2.0 * std::numbers::sqrt2), 0.0};

inline io::Table figure2(const Grid& g) {
  io::Table t;
  t.comments.push_back("figure 2: psi_0(r) for L=1 omega=1; alpha = 1/sqrt(3), 1/(2 sqrt(2)), 0");
  t.columns = {"r", "psi_0_a1", "psi_0_a2", "psi_0_a0"};
  const oscillator::Eigenstate s1(ModelParams(kFig2Alphas[0], 1, 1.0), 0), s2(ModelParams(kFig2Alphas[1], 1, 1.0), 0);
  for (double x : g.nodes()) t.add_row({x, s1(x), s2(x), oscillator::limit_wavefunction(1, 1.0, 0, x)});
  return t;
}

inline io::Table figure3(const Grid& g) {
  io::Table t;
  t.comments.push_back("figure 3: V_ext for type I m=1, L=1 omega=1; alpha = 1/sqrt(3), 0");
  t.columns = {"r", "V_ext_a1", "V_ext_a0"};
  const ExtensionSpec spec{ExtensionType::I, 1};
  const ext::ExtendedPotential V(spec, ModelParams(1.0 / std::numbers::sqrt3, 1, 1.0));
  for (double x : g.nodes())
    t.add_row({x, V(x), oscillator::potential(1.0, 1.0, x) + ext::limit_rational_term(spec, 1, 1.0, x)});
  return t;
}

inline io::Table figure4(const Grid& g) {
  io::Table t;
  const ExtensionSpec spec{ExtensionType::I, 1};
  const ModelParams p(1.0 / std::numbers::sqrt3, 1, 1.0);
  std::vector<ext::ExtendedEigenstate> states;
  std::string energies = "energies:", scaled = "energies*2sqrt(3):";
  for (int n = 0; n <= 2; ++n) {
    states.emplace_back(spec, p, n);
    energies += " " + io::format_double(states.back().energy());
    scaled += " " + io::format_double(std::round(states.back().energy() * 2.0 * std::numbers::sqrt3 * 1e9) / 1e9);
  }
  t.comments.push_back("figure 4: extended psi_n, type I m=1, L=1 omega=1 alpha=1/sqrt(3)");
  t.comments.push_back(energies);
  t.comments.push_back(scaled);
  t.columns = {"r", "psi_0", "psi_1", "psi_2"};
  for (double x : g.nodes()) t.add_row({x, states[0](x), states[1](x), states[2](x)});
  return t;
}

inline Output figures_cmd(const RunConfig& c) {
  Output o;
  const auto want = [&](const char* k) { return c.which == "all" || c.which == k; };
  if (!(c.which == "all" || c.which == "1" || c.which == "2" || c.which == "3" || c.which == "4"))
    throw ConfigError("--which must be 1, 2, 3, 4 or all");
  if (want("1")) o.tables.emplace_back("fig1", figure1());
  if (want("2")) o.tables.emplace_back("fig2", figure2(c.grid));
  if (want("3")) o.tables.emplace_back("fig3", figure3(c.grid));
  if (want("4")) o.tables.emplace_back("fig4", figure4(c.grid));
  return o;
}

inline void write_table(std::ostream& os, const io::Table& t, Format f) {
  if (f == Format::csv) io::write_csv(os, t);
  else os << io::table_to_json(t).dump(2) << '\n';
}

inline void write_verify(std::ostream& os, const std::vector<verify::Check>& checks, Format f) {
  if (f == Format::json) {
    io::json arr = io::json::array();
    for (const auto& c : checks)
      arr.push_back({{"suite", c.suite}, {"name", c.name}, {"measured", c.measured}, {"threshold", c.threshold},
                     {"pass", c.pass}});
    os << io::json{{"checks", arr}, {"pass", verify::all_passed(checks)}}.dump(2) << '\n';
    return;
  }
  os << "suite,name,measured,threshold,pass\n";
  for (const auto& c : checks)
    os << c.suite << ",\"" << c.name << "\"," << io::format_double(c.measured) << ','
       << io::format_double(c.threshold) << ',' << (c.pass ? "true" : "false") << '\n';
}

/// Opens --out (or stdout) and hands the stream to fn.
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file '" + path + "'");
  fn(f);
}

}  // namespace detail

/// Executes one command. Returns the process exit code; throws ConfigError
/// (and the library's invalid_argument / domain_error) for bad input.
inline int run(const RunConfig& c) {
  validate(c);
  using namespace detail;
  switch (c.command) {
    case Command::spectrum: {
      const auto s = spectrum_cmd(c);
      with_output(c.out, [&](std::ostream& os) {
        if (c.format == Format::json) os << io::spectrum_to_json(s).dump(2) << '\n';
        else io::write_csv(os, io::spectrum_table(s));
      });
      return kExitOk;
    }
    case Command::potential: {
      const auto t = potential_cmd(c);
      with_output(c.out, [&](std::ostream& os) { write_table(os, t, c.format); });
      return kExitOk;
    }
    case Command::wavefunction: {
      const auto t = wavefunction_cmd(c);
      with_output(c.out, [&](std::ostream& os) { write_table(os, t, c.format); });
      return kExitOk;
    }
    case Command::extend: {
      const auto t = extend_cmd(c);
      with_output(c.out, [&](std::ostream& os) { write_table(os, t, c.format); });
      return kExitOk;
    }
    case Command::limits: {
      const auto t = limits_cmd(c);
      with_output(c.out, [&](std::ostream& os) { write_table(os, t, c.format); });
      return kExitOk;
    }
    case Command::verify: {
      std::vector<verify::Check> checks;
      try {
        checks = verify::run_suite(c.suite);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
      with_output(c.out, [&](std::ostream& os) { write_verify(os, checks, c.format); });
      return verify::all_passed(checks) ? kExitOk : kExitVerifyFailed;
    }
    case Command::figures: {
      const auto o = figures_cmd(c);
      const std::string ext = c.format == Format::csv ? ".csv" : ".json";
      if (o.tables.size() > 1 && !c.out.empty() && c.out != "-") {
        // several datasets: --out names a directory
        std::filesystem::create_directories(c.out);
        for (const auto& [name, t] : o.tables)
          with_output((std::filesystem::path(c.out) / (name + ext)).string(),
                      [&](std::ostream& os) { write_table(os, t, c.format); });
        return kExitOk;
      }
      with_output(c.out, [&](std::ostream& os) {
        for (std::size_t i = 0; i < o.tables.size(); ++i) {
          if (i) os << '\n';
          write_table(os, o.tables[i].second, c.format);
        }
      });
      return kExitOk;
    }
  }
  return kExitOk;
}

}  // namespace pdmosc::cli
