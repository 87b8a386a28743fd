#include "tmts/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tmts {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "': bad number '" + v + "'");
  }
}

long parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long d = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "': bad integer '" + v + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "off" || v == "no") return false;
  throw std::invalid_argument("config key '" + key + "': bad boolean '" + v + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_double(key, item));
  }
  return out;
}

// "50x50,60x60"
std::vector<std::pair<int, int>> parse_ladder(const std::string& key, const std::string& v) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto x = item.find('x');
    if (x == std::string::npos)
      throw std::invalid_argument("config key '" + key + "': rung '" + item +
                                  "' must look like 50x50");
    out.emplace_back(static_cast<int>(parse_int(key, item.substr(0, x))),
                     static_cast<int>(parse_int(key, item.substr(x + 1))));
  }
  return out;
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));

    if (key == "omega_x") cfg.params.omega_x = parse_double(key, val);
    else if (key == "omega_y") cfg.params.omega_y = parse_double(key, val);
    else if (key == "theta") cfg.params.theta = parse_double(key, val);
    else if (key == "a") cfg.params.a = parse_double(key, val);
    else if (key == "eps_A") cfg.params.eps_A = parse_double(key, val);
    else if (key == "eps_B") cfg.params.eps_B = parse_double(key, val);
    else if (key == "J") cfg.params.J = parse_double(key, val);
    else if (key == "Omega_x") cfg.basis.Omega_x = parse_double(key, val);
    else if (key == "Omega_y") cfg.basis.Omega_y = parse_double(key, val);
    else if (key == "N_x") cfg.basis.n_max_x = static_cast<int>(parse_int(key, val));
    else if (key == "N_y") cfg.basis.n_max_y = static_cast<int>(parse_int(key, val));
    else if (key == "ladder") cfg.ladder = parse_ladder(key, val);
    else if (key == "drift_tol") cfg.drift_tol = parse_double(key, val);
    else if (key == "window_lo") cfg.stats.window_lo = static_cast<std::size_t>(parse_int(key, val));
    else if (key == "window_hi") cfg.stats.window_hi = static_cast<std::size_t>(parse_int(key, val));
    else if (key == "unfold_degree") cfg.stats.unfold_degree = static_cast<int>(parse_int(key, val));
    else if (key == "nnsd_bins") cfg.stats.nnsd_bins = static_cast<int>(parse_int(key, val));
    else if (key == "amplitude_bins") cfg.stats.amplitude_bins = static_cast<int>(parse_int(key, val));
    else if (key == "delta3_L_min") cfg.stats.delta3_l_min = parse_double(key, val);
    else if (key == "delta3_L_max") cfg.stats.delta3_l_max = parse_double(key, val);
    else if (key == "delta3_L_steps") cfg.stats.delta3_l_steps = static_cast<int>(parse_int(key, val));
    else if (key == "delta3_windows") cfg.stats.delta3_windows = static_cast<int>(parse_int(key, val));
    else if (key == "grid_x_min") cfg.grid.x_min = parse_double(key, val);
    else if (key == "grid_x_max") cfg.grid.x_max = parse_double(key, val);
    else if (key == "grid_nx") cfg.grid.n_x_points = static_cast<int>(parse_int(key, val));
    else if (key == "grid_y_min") cfg.grid.y_min = parse_double(key, val);
    else if (key == "grid_y_max") cfg.grid.y_max = parse_double(key, val);
    else if (key == "grid_ny") cfg.grid.n_y_points = static_cast<int>(parse_int(key, val));
    else if (key == "sweep_J") cfg.sweep_J = parse_list(key, val);
    else if (key == "sweep_theta") cfg.sweep_theta = parse_list(key, val);
    else if (key == "out_dir") cfg.out_dir = val;
    else if (key == "cache_dir") cfg.cache_dir = val;
    else if (key == "cache") cfg.use_cache = parse_bool(key, val);
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_int(key, val));
    else if (key == "jobs") cfg.jobs = static_cast<int>(parse_int(key, val));
    else if (key == "svg") cfg.svg = parse_bool(key, val);
    else if (key == "memory_budget_gb") cfg.memory_budget_gb = parse_double(key, val);
    else
      throw std::invalid_argument("unknown config key '" + key + "' on line " +
                                  std::to_string(lineno));
  }
  return cfg;
}

RunConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::vector<std::string> config_echo(const RunConfig& cfg) {
  std::vector<std::string> out;
  auto kv = [&out](const std::string& k, const std::string& v) { out.push_back(k + " = " + v); };
  kv("omega_x", format_g17(cfg.params.omega_x));
  kv("omega_y", format_g17(cfg.params.omega_y));
  kv("theta", format_g17(cfg.params.theta));
  kv("a", format_g17(cfg.params.a));
  kv("eps_A", format_g17(cfg.params.eps_A));
  kv("eps_B", format_g17(cfg.params.eps_B));
  kv("J", format_g17(cfg.params.J));
  kv("Omega_x", format_g17(cfg.basis.Omega_x));
  kv("Omega_y", format_g17(cfg.basis.Omega_y));
  kv("N_x", std::to_string(cfg.basis.n_max_x));
  kv("N_y", std::to_string(cfg.basis.n_max_y));
  {
    std::string l;
    for (const auto& [nx, ny] : cfg.ladder) {
      if (!l.empty()) l += ",";
      l += std::to_string(nx) + "x" + std::to_string(ny);
    }
    kv("ladder", l);
  }
  kv("drift_tol", format_g17(cfg.drift_tol));
  kv("window_lo", std::to_string(cfg.stats.window_lo));
  kv("window_hi", std::to_string(cfg.stats.window_hi));
  kv("unfold_degree", std::to_string(cfg.stats.unfold_degree));
  kv("nnsd_bins", std::to_string(cfg.stats.nnsd_bins));
  kv("amplitude_bins", std::to_string(cfg.stats.amplitude_bins));
  kv("delta3_L_min", format_g17(cfg.stats.delta3_l_min));
  kv("delta3_L_max", format_g17(cfg.stats.delta3_l_max));
  kv("delta3_L_steps", std::to_string(cfg.stats.delta3_l_steps));
  kv("delta3_windows", std::to_string(cfg.stats.delta3_windows));
  kv("grid_x_min", format_g17(cfg.grid.x_min));
  kv("grid_x_max", format_g17(cfg.grid.x_max));
  kv("grid_nx", std::to_string(cfg.grid.n_x_points));
  kv("grid_y_min", format_g17(cfg.grid.y_min));
  kv("grid_y_max", format_g17(cfg.grid.y_max));
  kv("grid_ny", std::to_string(cfg.grid.n_y_points));
  {
    std::string l;
    for (double v : cfg.sweep_J) {
      if (!l.empty()) l += ",";
      l += format_g17(v);
    }
    kv("sweep_J", l);
  }
  {
    std::string l;
    for (double v : cfg.sweep_theta) {
      if (!l.empty()) l += ",";
      l += format_g17(v);
    }
    kv("sweep_theta", l);
  }
  kv("out_dir", cfg.out_dir);
  kv("cache_dir", cfg.cache_dir);
  kv("cache", cfg.use_cache ? "true" : "false");
  kv("seed", std::to_string(cfg.seed));
  kv("jobs", std::to_string(cfg.jobs));
  kv("svg", cfg.svg ? "true" : "false");
  kv("memory_budget_gb", format_g17(cfg.memory_budget_gb));
  return out;
}

}  // namespace tmts
