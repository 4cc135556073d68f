#include "mayer/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "mayer/errors.hpp"

namespace mayer {

double RunConfig::require_mu() const {
  if (mu) return *mu;
  if (!variant.is_active()) return 1.0;  // inert for the linear model
  throw std::invalid_argument(
      "mu is required for variant " + std::string(variant.name()));
}

namespace {

std::string trim(const std::string& s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

struct RawEntry {
  std::string value;
  int line = 0;
};

[[noreturn]] void fail_line(const std::string& origin, int line,
                            const std::string& message) {
  throw std::invalid_argument(origin + ":" + std::to_string(line) + ": " +
                              message);
}

double parse_double(const std::string& origin, const RawEntry& entry,
                    const std::string& key) {
  try {
    size_t consumed = 0;
    const double value = std::stod(entry.value, &consumed);
    if (consumed != entry.value.size() || !std::isfinite(value)) {
      throw std::invalid_argument("");
    }
    return value;
  } catch (const std::exception&) {
    fail_line(origin, entry.line,
              "value for '" + key + "' is not a finite number: '" +
                  entry.value + "'");
  }
}

int parse_int(const std::string& origin, const RawEntry& entry,
              const std::string& key) {
  try {
    size_t consumed = 0;
    const int value = std::stoi(entry.value, &consumed);
    if (consumed != entry.value.size()) throw std::invalid_argument("");
    return value;
  } catch (const std::exception&) {
    fail_line(origin, entry.line,
              "value for '" + key + "' is not an integer: '" + entry.value +
                  "'");
  }
}

bool parse_bool(const std::string& origin, const RawEntry& entry,
                const std::string& key) {
  if (entry.value == "true") return true;
  if (entry.value == "false") return false;
  fail_line(origin, entry.line,
            "value for '" + key + "' must be true or false, got '" +
                entry.value + "'");
}

const std::map<std::string, ControlKind> kVariantNames = {
    {"linear", ControlKind::linear_no_control},
    {"linear_no_control", ControlKind::linear_no_control},
    {"heart_rate", ControlKind::heart_rate},
    {"systemic_resistance", ControlKind::systemic_resistance},
    {"unstressed_volume", ControlKind::unstressed_volume},
    {"venous_compliance", ControlKind::venous_compliance},
};

// Keys whose value feeds a double slot, CardioParams overrides included.
const std::map<std::string, int> kKnownKeys = {
    {"variant", 0},   {"f1", 0},       {"f2", 0},
    {"r1", 0},        {"r2", 0},       {"d1", 0},
    {"d2", 0},        {"c1", 0},       {"c2", 0},
    {"mu", 0},        {"c_sa", 0},     {"c_pa", 0},
    {"c_pv", 0},      {"c_sv", 0},     {"c_l", 0},
    {"c_r", 0},       {"r_s", 0},      {"r_p", 0},
    {"f", 0},         {"v_o", 0},      {"v_c", 0},
    {"v_d", 0},       {"dt", 0},       {"t_end", 0},
    {"transient_fraction", 0},         {"mu_min", 0},
    {"mu_max", 0},    {"steps", 0},    {"mu_max_scan", 0},
    {"tol", 0},       {"allow_unnormalized", 0},
};

struct ConstantKeys {
  const char* slope;
  const char* offset;
};

ConstantKeys constant_keys_for(ControlKind kind) {
  switch (kind) {
    case ControlKind::heart_rate:
      return {"f1", "f2"};
    case ControlKind::systemic_resistance:
      return {"r1", "r2"};
    case ControlKind::unstressed_volume:
      return {"d1", "d2"};
    case ControlKind::venous_compliance:
      return {"c1", "c2"};
    case ControlKind::linear_no_control:
      return {nullptr, nullptr};
  }
  return {nullptr, nullptr};
}

}  // namespace

RunConfig parse_config_text(const std::string& text,
                            const std::string& origin) {
  std::map<std::string, RawEntry> entries;
  {
    std::istringstream stream(text);
    std::string raw_line;
    int line_no = 0;
    while (std::getline(stream, raw_line)) {
      ++line_no;
      const size_t hash = raw_line.find('#');
      std::string line =
          trim(hash == std::string::npos ? raw_line : raw_line.substr(0, hash));
      if (line.empty()) continue;
      const size_t eq = line.find('=');
      if (eq == std::string::npos) {
        fail_line(origin, line_no, "expected 'key = value', got '" + line + "'");
      }
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty()) fail_line(origin, line_no, "empty key");
      if (value.empty()) fail_line(origin, line_no, "empty value for '" + key + "'");
      if (kKnownKeys.find(key) == kKnownKeys.end()) {
        fail_line(origin, line_no, "unknown key '" + key + "'");
      }
      entries[key] = RawEntry{value, line_no};  // later lines win
    }
  }

  const auto take = [&](const char* key) -> std::optional<RawEntry> {
    auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    RawEntry entry = it->second;
    entries.erase(it);
    return entry;
  };
  const auto take_double = [&](const char* key, double& slot) {
    if (auto entry = take(key)) slot = parse_double(origin, *entry, key);
  };

  RunConfig cfg;

  // The variant is the one mandatory key.
  ControlKind kind;
  {
    auto entry = take("variant");
    if (!entry) {
      throw std::invalid_argument(origin + ": variant is required");
    }
    auto it = kVariantNames.find(entry->value);
    if (it == kVariantNames.end()) {
      fail_line(origin, entry->line, "unknown variant '" + entry->value + "'");
    }
    kind = it->second;
  }

  if (auto entry = take("allow_unnormalized")) {
    cfg.allow_unnormalized = parse_bool(origin, *entry, "allow_unnormalized");
  }

  take_double("c_sa", cfg.params.c_sa);
  take_double("c_pa", cfg.params.c_pa);
  take_double("c_pv", cfg.params.c_pv);
  take_double("c_sv", cfg.params.c_sv_base);
  take_double("c_l", cfg.params.c_l);
  take_double("c_r", cfg.params.c_r);
  take_double("r_s", cfg.params.r_s_base);
  take_double("r_p", cfg.params.r_p);
  take_double("f", cfg.params.f_base);
  take_double("v_o", cfg.params.v_o);
  take_double("v_c", cfg.params.v_c);
  take_double("v_d", cfg.params.v_d_base);
  try {
    cfg.params.validate();
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(origin + ": " + e.what());
  }

  // Control constants: the offset defaults to 0, the slope to the
  // normalized complement 2*(base - offset).
  {
    cfg.variant.kind = kind;
    const ConstantKeys keys = constant_keys_for(kind);
    for (const char* key : {"f1", "f2", "r1", "r2", "d1", "d2", "c1", "c2"}) {
      auto it = entries.find(key);
      if (it == entries.end()) continue;
      const bool applies =
          keys.slope != nullptr &&
          (key == std::string(keys.slope) || key == std::string(keys.offset));
      if (!applies) {
        fail_line(origin, it->second.line,
                  "'" + std::string(key) + "' does not apply to variant " +
                      cfg.variant.name());
      }
    }
    if (kind != ControlKind::linear_no_control) {
      double offset = 0.0;
      if (auto entry = take(keys.offset)) {
        offset = parse_double(origin, *entry, keys.offset);
      }
      double slope = 2.0 * (cfg.variant.base_value(cfg.params) - offset);
      if (auto entry = take(keys.slope)) {
        slope = parse_double(origin, *entry, keys.slope);
      }
      cfg.variant.slope_coeff = slope;
      cfg.variant.offset = offset;
    }
    try {
      cfg.variant.validate(cfg.params, cfg.allow_unnormalized);
    } catch (const std::domain_error& e) {
      throw std::invalid_argument(origin + ": " + e.what());
    }
  }

  if (auto entry = take("mu")) {
    const double mu = parse_double(origin, *entry, "mu");
    if (!(mu > 0.0)) fail_line(origin, entry->line, "mu must be positive");
    cfg.mu = mu;
  }
  if (auto entry = take("dt")) {
    cfg.dt = parse_double(origin, *entry, "dt");
    if (!(cfg.dt > 0.0)) fail_line(origin, entry->line, "dt must be positive");
  }
  if (auto entry = take("t_end")) {
    cfg.t_end = parse_double(origin, *entry, "t_end");
    if (!(cfg.t_end > 0.0)) {
      fail_line(origin, entry->line, "t_end must be positive");
    }
  }
  if (auto entry = take("transient_fraction")) {
    cfg.transient_fraction = parse_double(origin, *entry, "transient_fraction");
    if (!(cfg.transient_fraction >= 0.0) || !(cfg.transient_fraction < 1.0)) {
      fail_line(origin, entry->line, "transient_fraction must lie in [0, 1)");
    }
  }
  if (auto entry = take("mu_min")) {
    cfg.mu_min = parse_double(origin, *entry, "mu_min");
    if (!(cfg.mu_min > 0.0)) {
      fail_line(origin, entry->line, "mu_min must be positive");
    }
  }
  if (auto entry = take("mu_max")) {
    cfg.mu_max = parse_double(origin, *entry, "mu_max");
  }
  if (!(cfg.mu_min < cfg.mu_max)) {
    throw std::invalid_argument(origin + ": mu_min must be below mu_max");
  }
  if (auto entry = take("steps")) {
    cfg.steps = parse_int(origin, *entry, "steps");
    if (cfg.steps < 2) fail_line(origin, entry->line, "steps must be at least 2");
  }
  if (auto entry = take("mu_max_scan")) {
    cfg.mu_max_scan = parse_double(origin, *entry, "mu_max_scan");
    if (!(cfg.mu_max_scan > 0.0)) {
      fail_line(origin, entry->line, "mu_max_scan must be positive");
    }
  }
  if (auto entry = take("tol")) {
    cfg.tol = parse_double(origin, *entry, "tol");
    if (!(cfg.tol > 0.0)) fail_line(origin, entry->line, "tol must be positive");
  }

  return cfg;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw io_error("error while reading config file: " + path);
  return parse_config_text(buffer.str(), path);
}

}  // namespace mayer
