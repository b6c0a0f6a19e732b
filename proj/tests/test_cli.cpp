#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

const char* kCli = VORTEXLAB_CLI_PATH;

int run_cmd(const std::string& args) {
  const int rc = std::system((std::string(kCli) + " " + args +
                              " > cli_tmp.out 2> cli_tmp.err")
                                 .c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

const char* kSmokeConfig =
    "[grid]\n"
    "n = 64\n"
    "half_width = 10\n"
    "[time]\n"
    "dt = 0.02\n"
    "t_end = 0.2\n"
    "diag_interval = 0.02\n"
    "[vortex]\n"
    "alpha = 0.5\n"
    "[init]\n"
    "preset = dipole\n"
    "amplitude = 1\n";

}  // namespace

TEST_CASE("cli: unknown subcommand fails with usage") {
  CHECK(run_cmd("frobnicate") == 1);
  const std::string err = slurp("cli_tmp.err") + slurp("cli_tmp.out");
  CHECK_FALSE(err.empty());  // some usage hint lands on the console
}

TEST_CASE("cli: invalid config exits nonzero") {
  write_file("cli_bad_tmp.ini", "[time]\ndt = -1\n");
  CHECK(run_cmd("run --config cli_bad_tmp.ini") == 1);
  const std::string err = slurp("cli_tmp.err");
  CHECK(err.find("time.dt") != std::string::npos);
  std::remove("cli_bad_tmp.ini");
}

TEST_CASE("cli: run writes trajectory and summary, deterministically") {
  write_file("cli_smoke_tmp.ini", std::string(kSmokeConfig) +
                                      "[output]\ndir = cli_out_a\n");
  REQUIRE(run_cmd("run --config cli_smoke_tmp.ini") == 0);
  const std::string traj_a = slurp("cli_out_a/trajectory.csv");
  const std::string summ_a = slurp("cli_out_a/summary.txt");
  CHECK(traj_a.find("schema_version") != std::string::npos);
  CHECK(traj_a.find("t,l2_v,") != std::string::npos);
  CHECK(summ_a.find("final_l2_v=") != std::string::npos);
  CHECK(summ_a.find("final_circulation=") != std::string::npos);

  // Same config, fresh output directory: byte-identical artifacts apart
  // from the embedded directory name.
  write_file("cli_smoke_tmp2.ini", std::string(kSmokeConfig) +
                                       "[output]\ndir = cli_out_a\n");
  REQUIRE(run_cmd("run --config cli_smoke_tmp2.ini") == 0);
  CHECK(slurp("cli_out_a/trajectory.csv") == traj_a);
  CHECK(slurp("cli_out_a/summary.txt") == summ_a);

  std::remove("cli_smoke_tmp.ini");
  std::remove("cli_smoke_tmp2.ini");
}

TEST_CASE("cli: snapshot times produce files") {
  write_file("cli_snap_tmp.ini", std::string(kSmokeConfig) +
                                     "[output]\ndir = cli_out_snap\n"
                                     "snapshot_times = 0.1\n");
  REQUIRE(run_cmd("run --config cli_snap_tmp.ini") == 0);
  std::ifstream snap("cli_out_snap/snapshot_t0.1.bin", std::ios::binary);
  CHECK(snap.good());
  std::remove("cli_snap_tmp.ini");
}

TEST_CASE("cli: report fits a stored trajectory") {
  // The power.log fit needs a window inside t > 1, so run a bit longer.
  write_file("cli_fit_tmp.ini",
             "[grid]\nn = 64\nhalf_width = 10\n"
             "[time]\ndt = 0.05\nt_end = 3\ndiag_interval = 0.1\n"
             "[init]\npreset = dipole\namplitude = 1\n"
             "[output]\ndir = cli_out_fit\n");
  REQUIRE(run_cmd("run --config cli_fit_tmp.ini") == 0);
  const int rc =
      run_cmd("report --input cli_out_fit/trajectory.csv --t-min 1.1 "
              "--t-max 3");
  CHECK(rc == 0);
  const std::string out = slurp("cli_tmp.out");
  CHECK(out.find("exponent") != std::string::npos);
  std::remove("cli_fit_tmp.ini");
}
