// pdmosc: spectra, potentials, wavefunctions, rational extensions,
// verification reports and figure datasets for the deformed oscillator.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pdmosc/cli.hpp"

namespace {

using pdmosc::cli::Command;
using pdmosc::cli::ConfigError;
using pdmosc::cli::Format;
using pdmosc::cli::RunConfig;

struct RawOptions {
  std::optional<std::string> type;
  std::optional<int> m;
  std::optional<std::string> grid;
  std::string format = "csv";
};

void add_params(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--alpha", cfg.alpha, "deformation parameter alpha >= 0 (default 1/sqrt(3))");
  sub->add_option("--L", cfg.L, "orbital quantum number L >= 0")->capture_default_str();
  sub->add_option("--omega", cfg.omega, "oscillator frequency omega > 0")->capture_default_str();
}

void add_extension(CLI::App* sub, RawOptions& raw, bool required) {
  auto* t = sub->add_option("--type", raw.type, "extension type")->check(CLI::IsMember({"I", "II", "III"}));
  auto* m = sub->add_option("--m", raw.m, "degree m of the extension");
  if (required) {
    t->required();
    m->required();
  }
}

void add_output(CLI::App* sub, RunConfig& cfg, RawOptions& raw) {
  sub->add_option("--format", raw.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sub->add_option("--out", cfg.out, "output path (default: stdout)");
}

void add_grid(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--grid", raw.grid, "radial grid r_min:r_max:points (default 0.01:10:200)");
}

void finish(RunConfig& cfg, const RawOptions& raw) {
  if (raw.type.has_value() != raw.m.has_value()) throw ConfigError("--type and --m must be given together");
  if (raw.type) cfg.extension = pdmosc::ExtensionSpec{*pdmosc::ext::parse_type(*raw.type), *raw.m};
  if (raw.grid) cfg.grid = pdmosc::cli::parse_grid(*raw.grid);
  cfg.format = raw.format == "json" ? Format::json : Format::csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Position-dependent-mass oscillator: spectra, extensions, verification and figure data"};
  app.require_subcommand(1);
  RunConfig cfg;
  RawOptions raw;

  auto* spectrum = app.add_subcommand("spectrum", "energy levels (n, E)");
  add_params(spectrum, cfg);
  add_extension(spectrum, raw, false);
  spectrum->add_option("--n-max", cfg.n_max, "highest level")->capture_default_str();
  spectrum->add_flag("--oracle", cfg.oracle, "solve numerically with the finite-difference oracle");
  add_output(spectrum, cfg, raw);

  auto* potential = app.add_subcommand("potential", "potential samples (r, V[, V_rat, V_ext])");
  add_params(potential, cfg);
  add_extension(potential, raw, false);
  add_grid(potential, raw);
  add_output(potential, cfg, raw);

  auto* wave = app.add_subcommand("wavefunction", "normalized eigenfunctions (r, psi_0..psi_nmax)");
  add_params(wave, cfg);
  wave->add_option("--n-max", cfg.n_max, "highest level")->capture_default_str();
  add_grid(wave, raw);
  add_output(wave, cfg, raw);

  auto* extend = app.add_subcommand("extend", "extended potential and eigenfunctions");
  add_params(extend, cfg);
  add_extension(extend, raw, true);
  extend->add_option("--n-max", cfg.n_max, "highest level")->capture_default_str();
  add_grid(extend, raw);
  add_output(extend, cfg, raw);

  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("--suite", cfg.suite, "suite to run")
      ->check(CLI::IsMember({"specfun", "oscillator", "susy", "extensions", "all"}))
      ->capture_default_str();
  add_output(verify, cfg, raw);

  auto* limits = app.add_subcommand("limits", "alpha -> 0 error tables");
  limits->add_option("--L", cfg.L, "orbital quantum number L >= 0")->capture_default_str();
  limits->add_option("--omega", cfg.omega, "oscillator frequency omega > 0")->capture_default_str();
  add_extension(limits, raw, false);
  limits->add_option("--n-max", cfg.n_max, "highest level")->capture_default_str();
  add_grid(limits, raw);
  add_output(limits, cfg, raw);

  auto* figures = app.add_subcommand("figures", "figure datasets (L = omega = 1)");
  figures->add_option("--which", cfg.which, "1, 2, 3, 4 or all")
      ->check(CLI::IsMember({"1", "2", "3", "4", "all"}))
      ->capture_default_str();
  add_grid(figures, raw);
  add_output(figures, cfg, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "pdmosc: " << e.what() << '\n';
    return pdmosc::cli::kExitBadConfig;
  }

  const std::pair<CLI::App*, Command> commands[] = {
      {spectrum, Command::spectrum}, {potential, Command::potential}, {wave, Command::wavefunction},
      {extend, Command::extend},     {verify, Command::verify},       {limits, Command::limits},
      {figures, Command::figures}};
  for (const auto& [sub, cmd] : commands)
    if (sub->parsed()) cfg.command = cmd;

  try {
    finish(cfg, raw);
    return pdmosc::cli::run(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "pdmosc: " << e.what() << '\n';
    return pdmosc::cli::kExitBadConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "pdmosc: " << e.what() << '\n';
    return pdmosc::cli::kExitBadConfig;
  } catch (const std::length_error& e) {
    std::cerr << "pdmosc: " << e.what() << '\n';
    return pdmosc::cli::kExitBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "pdmosc: internal error: " << e.what() << '\n';
    return 1;
  }
}
