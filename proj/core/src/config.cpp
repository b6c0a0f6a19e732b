#include "vortexlab/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vortexlab/error.hpp"

namespace vortexlab {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Validator {
 public:
  void fail(const std::string& key, const std::string& reason) {
    violations_.push_back(key + ": " + reason);
  }

  bool to_double(const std::string& key, const std::string& raw,
                 double& out) {
    try {
      std::size_t pos = 0;
      const double v = std::stod(raw, &pos);
      if (pos != raw.size() || !std::isfinite(v)) throw std::exception();
      out = v;
      return true;
    } catch (...) {
      fail(key, "not a finite number: '" + raw + "'");
      return false;
    }
  }

  bool to_int(const std::string& key, const std::string& raw, int& out) {
    try {
      std::size_t pos = 0;
      out = std::stoi(raw, &pos);
      if (pos != raw.size()) throw std::exception();
      return true;
    } catch (...) {
      fail(key, "not an integer: '" + raw + "'");
      return false;
    }
  }

  bool to_u64(const std::string& key, const std::string& raw,
              std::uint64_t& out) {
    try {
      std::size_t pos = 0;
      out = std::stoull(raw, &pos);
      if (pos != raw.size()) throw std::exception();
      return true;
    } catch (...) {
      fail(key, "not an unsigned integer: '" + raw + "'");
      return false;
    }
  }

  bool to_bool(const std::string& key, const std::string& raw, bool& out) {
    if (raw == "true" || raw == "1") {
      out = true;
      return true;
    }
    if (raw == "false" || raw == "0") {
      out = false;
      return true;
    }
    fail(key, "expected true/false: '" + raw + "'");
    return false;
  }

  void require(bool ok, const std::string& key, const std::string& reason) {
    if (!ok) fail(key, reason);
  }

  void finish() const {
    if (!violations_.empty()) throw SchemaError(violations_);
  }

 private:
  std::vector<std::string> violations_;
};

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  Validator val;

  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        val.fail("line " + std::to_string(lineno), "malformed section header");
        continue;
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section != "grid" && section != "time" && section != "vortex" &&
          section != "init" && section != "penalization" &&
          section != "output" && section != "study")
        val.fail(section, "unknown section");
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      val.fail("line " + std::to_string(lineno), "expected key = value");
      continue;
    }
    const std::string name = trim(line.substr(0, eq));
    const std::string raw = trim(line.substr(eq + 1));
    const std::string key = section + "." + name;

    if (section == "grid") {
      if (name == "n")
        val.to_int(key, raw, cfg.grid.n);
      else if (name == "half_width")
        val.to_double(key, raw, cfg.grid.half_width);
      else
        val.fail(key, "unknown key");
    } else if (section == "time") {
      if (name == "dt")
        val.to_double(key, raw, cfg.time.dt);
      else if (name == "t_end")
        val.to_double(key, raw, cfg.time.t_end);
      else if (name == "diag_interval")
        val.to_double(key, raw, cfg.time.diag_interval);
      else
        val.fail(key, "unknown key");
    } else if (section == "vortex") {
      if (name == "alpha")
        val.to_double(key, raw, cfg.vortex.alpha);
      else if (name == "r_inner")
        val.to_double(key, raw, cfg.vortex.r_inner);
      else if (name == "r_outer")
        val.to_double(key, raw, cfg.vortex.r_outer);
      else
        val.fail(key, "unknown key");
    } else if (section == "init") {
      if (name == "preset")
        cfg.init.preset = raw;
      else if (name == "amplitude")
        val.to_double(key, raw, cfg.init.amplitude);
      else if (name == "file_path")
        cfg.init.file_path = raw;
      else
        val.fail(key, "unknown key");
    } else if (section == "penalization") {
      if (name == "enabled")
        val.to_bool(key, raw, cfg.penalization.enabled);
      else if (name == "epsilon")
        val.to_double(key, raw, cfg.penalization.epsilon);
      else if (name == "obstacle_radius")
        val.to_double(key, raw, cfg.penalization.obstacle_radius);
      else
        val.fail(key, "unknown key");
    } else if (section == "output") {
      if (name == "dir")
        cfg.output.dir = raw;
      else if (name == "snapshot_times") {
        cfg.output.snapshot_times.clear();
        std::istringstream items(raw);
        std::string item;
        while (std::getline(items, item, ',')) {
          item = trim(item);
          if (item.empty()) continue;
          double t = 0.0;
          if (val.to_double(key, item, t))
            cfg.output.snapshot_times.push_back(t);
        }
      } else
        val.fail(key, "unknown key");
    } else if (section == "study") {
      if (name == "kind")
        cfg.study.kind = raw;
      else if (name == "q")
        val.to_double(key, raw, cfg.study.q);
      else if (name == "seed")
        val.to_u64(key, raw, cfg.study.seed);
      else
        val.fail(key, "unknown key");
    } else {
      val.fail(name, "key outside any section");
    }
  }

  val.require(cfg.grid.n >= 16 && (cfg.grid.n & (cfg.grid.n - 1)) == 0,
              "grid.n", "must be a power of two >= 16");
  val.require(cfg.grid.half_width > 0.0, "grid.half_width",
              "must be positive");
  val.require(cfg.time.dt > 0.0, "time.dt", "must be positive");
  val.require(cfg.time.t_end >= 0.0, "time.t_end", "must be nonnegative");
  val.require(cfg.time.diag_interval > 0.0, "time.diag_interval",
              "must be positive");
  val.require(cfg.vortex.r_inner > 0.0, "vortex.r_inner",
              "must be positive");
  val.require(cfg.vortex.r_outer > cfg.vortex.r_inner, "vortex.r_outer",
              "must exceed vortex.r_inner");
  val.require(cfg.init.preset == "oseen" || cfg.init.preset == "dipole" ||
                  cfg.init.preset == "quadrupole" || cfg.init.preset == "file",
              "init.preset", "must be oseen|dipole|quadrupole|file");
  val.require(cfg.init.amplitude >= 0.0, "init.amplitude",
              "must be nonnegative");
  val.require(cfg.init.preset != "file" || !cfg.init.file_path.empty(),
              "init.file_path", "required when init.preset = file");
  val.require(!cfg.penalization.enabled || cfg.penalization.epsilon > 0.0,
              "penalization.epsilon", "must be positive");
  val.require(
      !cfg.penalization.enabled || cfg.penalization.obstacle_radius > 0.0,
      "penalization.obstacle_radius", "must be positive");
  val.require(!cfg.output.dir.empty(), "output.dir", "must not be empty");
  for (double t : cfg.output.snapshot_times)
    val.require(t >= 0.0, "output.snapshot_times", "must be nonnegative");
  val.require(cfg.study.kind == "run" || cfg.study.kind == "verify-lemmas" ||
                  cfg.study.kind == "decay",
              "study.kind", "must be run|verify-lemmas|decay");
  val.require(cfg.study.q > 1.0 && cfg.study.q < 2.0, "study.q",
              "must lie in (1, 2)");

  val.finish();
  return cfg;
}

ExperimentConfig parse_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read config file " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_config_text(buf.str());
}

std::vector<std::string> serialize_config(const ExperimentConfig& c) {
  std::vector<std::string> out;
  out.push_back("grid.n=" + std::to_string(c.grid.n));
  out.push_back("grid.half_width=" + fmt(c.grid.half_width));
  out.push_back("time.dt=" + fmt(c.time.dt));
  out.push_back("time.t_end=" + fmt(c.time.t_end));
  out.push_back("time.diag_interval=" + fmt(c.time.diag_interval));
  out.push_back("vortex.alpha=" + fmt(c.vortex.alpha));
  out.push_back("vortex.r_inner=" + fmt(c.vortex.r_inner));
  out.push_back("vortex.r_outer=" + fmt(c.vortex.r_outer));
  out.push_back("init.preset=" + c.init.preset);
  out.push_back("init.amplitude=" + fmt(c.init.amplitude));
  if (!c.init.file_path.empty())
    out.push_back("init.file_path=" + c.init.file_path);
  out.push_back(std::string("penalization.enabled=") +
                (c.penalization.enabled ? "true" : "false"));
  if (c.penalization.enabled) {
    out.push_back("penalization.epsilon=" + fmt(c.penalization.epsilon));
    out.push_back("penalization.obstacle_radius=" +
                  fmt(c.penalization.obstacle_radius));
  }
  out.push_back("output.dir=" + c.output.dir);
  if (!c.output.snapshot_times.empty()) {
    std::string times;
    for (double t : c.output.snapshot_times) {
      if (!times.empty()) times += ',';
      times += fmt(t);
    }
    out.push_back("output.snapshot_times=" + times);
  }
  out.push_back("study.kind=" + c.study.kind);
  out.push_back("study.q=" + fmt(c.study.q));
  out.push_back("study.seed=" + std::to_string(c.study.seed));
  return out;
}

}  // namespace vortexlab
