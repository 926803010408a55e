#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "pdmosc/cli.hpp"
#include "pdmosc/io.hpp"

using namespace pdmosc;

namespace {

struct Result {
  int code;
  std::string out;
};

Result run_binary(const std::string& args) {
  const std::string cmd = std::string(PDMOSC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> data_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);)
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

std::vector<double> split_numbers(const std::string& line) {
  std::vector<double> v;
  std::istringstream is(line);
  for (std::string cell; std::getline(is, cell, ',');) v.push_back(std::stod(cell));
  return v;
}

std::string capture(const cli::RunConfig& c, int* code = nullptr) {
  std::ostringstream os;
  auto* old = std::cout.rdbuf(os.rdbuf());
  try {
    const int rc = cli::run(c);
    if (code) *code = rc;
  } catch (...) {
    std::cout.rdbuf(old);
    throw;
  }
  std::cout.rdbuf(old);
  return os.str();
}

}  // namespace

TEST(Io, FormatDoubleRoundTrips) {
  for (double x : {0.0, 1.0, -2.5, 1.0 / 3.0, 5.484827557301445, 1e-300, 6.02214076e23, std::nextafter(1.0, 2.0)})
    EXPECT_EQ(std::stod(io::format_double(x)), x);
  EXPECT_EQ(io::format_double(2.5), "2.5");
  EXPECT_EQ(io::format_double(NAN), "nan");
  EXPECT_EQ(io::format_double(-INFINITY), "-inf");
}

TEST(Io, SpectrumJsonRoundTripIsExact) {
  const ModelParams p(1.0 / std::sqrt(3.0), 1, 1.0);
  for (const auto& s : {oscillator::spectrum(p, 5), ext::extended_spectrum({ExtensionType::III, 2}, ModelParams(0.1, 3, 1.0), 3)}) {
    const auto back = io::spectrum_from_json(io::json::parse(io::spectrum_to_json(s).dump()));
    ASSERT_EQ(back.entries.size(), s.entries.size());
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
      EXPECT_EQ(back.entries[i].n, s.entries[i].n);
      EXPECT_EQ(back.entries[i].energy, s.entries[i].energy);
    }
    EXPECT_EQ(back.params, s.params);
    EXPECT_EQ(back.extension, s.extension);
    EXPECT_EQ(back.source, s.source);
  }
}

TEST(Io, CsvLayout) {
  io::Table t;
  t.comments = {"hello"};
  t.columns = {"a", "b"};
  t.add_row({1.0, 0.5});
  EXPECT_THROW(t.add_row({1.0}), std::logic_error);
  std::ostringstream os;
  io::write_csv(os, t);
  EXPECT_EQ(os.str(), "# hello\na,b\n1,0.5\n");
}

TEST(Cli, ParseGrid) {
  const auto g = cli::parse_grid("0.5:4:9");
  EXPECT_EQ(g.r_min, 0.5);
  EXPECT_EQ(g.r_max, 4.0);
  EXPECT_EQ(g.points, 9);
  EXPECT_EQ(g.nodes().size(), 9u);
  for (const char* bad : {"0.5:4", "0:4:9", "2:1:9", "0.5:4:1", "a:4:9", "0.5:4:9x"})
    EXPECT_THROW(cli::parse_grid(bad), cli::ConfigError) << bad;
}

TEST(Cli, RunInProcessSpectrum) {
  cli::RunConfig c;
  c.alpha = 0.0;
  int code = -1;
  const auto lines = data_lines(capture(c, &code));
  EXPECT_EQ(code, cli::kExitOk);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], "n,energy");
  EXPECT_EQ(lines[1], "0,2.5");
  EXPECT_EQ(lines[4], "3,8.5");
}

TEST(Cli, RunInProcessRejectsBadConfig) {
  cli::RunConfig c;
  c.n_max = -1;
  EXPECT_THROW(capture(c), cli::ConfigError);
  cli::RunConfig e;
  e.command = cli::Command::extend;
  EXPECT_THROW(capture(e), cli::ConfigError);
  cli::RunConfig v;
  v.command = cli::Command::verify;
  v.suite = "nope";
  EXPECT_THROW(capture(v), cli::ConfigError);
  cli::RunConfig a;
  a.alpha = -0.5;
  EXPECT_THROW(capture(a), std::domain_error);
}

TEST(Cli, WavefunctionAtZeroAlphaUsesConstantMassStates) {
  cli::RunConfig w;
  w.command = cli::Command::wavefunction;
  w.alpha = 0.0;
  w.n_max = 2;
  w.grid = cli::parse_grid("0.5:3:6");
  const auto lines = data_lines(capture(w));
  ASSERT_EQ(lines.size(), 7u);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto v = split_numbers(lines[i]);
    for (int n = 0; n <= 2; ++n) EXPECT_EQ(v[n + 1], oscillator::limit_wavefunction(1, 1.0, n, v[0]));
  }
}

TEST(Cli, OracleSpectrumAgreesWithClosedForm) {
  cli::RunConfig c;
  c.extension = ExtensionSpec{ExtensionType::I, 1};
  c.n_max = 2;
  const auto closed = data_lines(capture(c));
  c.oracle = true;
  const auto oracle = data_lines(capture(c));
  ASSERT_EQ(closed.size(), oracle.size());
  for (std::size_t i = 1; i < closed.size(); ++i)
    EXPECT_NEAR(split_numbers(closed[i])[1], split_numbers(oracle[i])[1], 1e-5 * split_numbers(closed[i])[1]);
}

TEST(Cli, VerifyFailureMapsToExitThree) {
  EXPECT_EQ(cli::kExitVerifyFailed, 3);
  std::vector<verify::Check> checks{verify::make_check("s", "ok", 0.0, 1.0), verify::make_check("s", "bad", 2.0, 1.0)};
  EXPECT_FALSE(verify::all_passed(checks));
  std::ostringstream os;
  cli::detail::write_verify(os, checks, cli::Format::csv);
  EXPECT_NE(os.str().find("s,\"bad\",2,1,false"), std::string::npos);
}

TEST(CliBinary, ExitCodes) {
  EXPECT_EQ(run_binary("spectrum").code, 0);
  EXPECT_EQ(run_binary("spectrum --alpha -1").code, 2);
  EXPECT_EQ(run_binary("spectrum --bogus").code, 2);
  EXPECT_EQ(run_binary("extend --type I").code, 2);
  EXPECT_EQ(run_binary("extend --type II --m 3 --alpha 0.1").code, 2);
  EXPECT_EQ(run_binary("extend --type IV --m 1").code, 2);
  EXPECT_EQ(run_binary("potential --grid 0:1:10").code, 2);
  EXPECT_EQ(run_binary("verify --suite nope").code, 2);
  EXPECT_EQ(run_binary("--help").code, 0);
}

TEST(CliBinary, GoldenConstantMassSpectrum) {
  const auto r = run_binary("spectrum --alpha 0 --L 1 --omega 1");
  ASSERT_EQ(r.code, 0);
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 5u);
  const double expect[] = {2.5, 4.5, 6.5, 8.5};
  for (int n = 0; n < 4; ++n) EXPECT_EQ(split_numbers(lines[n + 1])[1], expect[n]);
}

TEST(CliBinary, Deterministic) {
  for (const char* args : {"spectrum --format json", "extend --type III --m 2 --alpha 0.1 --L 3", "figures --which 2",
                           "limits --type I --m 1"}) {
    const auto a = run_binary(args), b = run_binary(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(CliBinary, JsonSpectrumParses) {
  const auto r = run_binary("spectrum --format json --type I --m 1");
  ASSERT_EQ(r.code, 0);
  const auto j = io::json::parse(r.out);
  EXPECT_EQ(j.at("extension").at("type"), "I");
  EXPECT_EQ(j.at("entries").size(), 4u);
  EXPECT_NEAR(j["entries"][0]["energy"].get<double>(), 19.0 / (2.0 * std::sqrt(3.0)), 1e-14);
}

TEST(CliBinary, FigureFourDataset) {
  const auto r = run_binary("figures --which 4 --grid 0.001:20:4000");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("energies*2sqrt(3): 19 55 107"), std::string::npos);
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines[0], "r,psi_0,psi_1,psi_2");
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) rows.push_back(split_numbers(lines[i]));
  for (int n = 0; n < 3; ++n) {
    int changes = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
      if ((rows[i][n + 1] > 0.0) != (rows[i - 1][n + 1] > 0.0)) ++changes;
    EXPECT_EQ(changes, n);
  }
}

TEST(CliBinary, FiguresToDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "pdmosc_cli_figures";
  std::filesystem::remove_all(dir);
  ASSERT_EQ(run_binary("figures --out " + dir.string()).code, 0);
  for (const char* f : {"fig1.csv", "fig2.csv", "fig3.csv", "fig4.csv"}) EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  std::filesystem::remove_all(dir);
}

TEST(CliBinary, VerifyAllPasses) {
  const auto r = run_binary("verify --suite all");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find(",false"), std::string::npos);
}
