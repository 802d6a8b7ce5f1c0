#include "wgqed/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nlohmann/json.hpp"
#include "wgqed/errors.hpp"

namespace wgqed {

namespace {

using nlohmann::json;

void require_finite(double v, const std::string& field) {
  if (!std::isfinite(v)) throw ValidationError(field, "must be finite");
}

// Strict-mode guard: any key outside `allowed` is a config error, so typos
// never silently become defaults.
void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ConfigError(path + ": unknown key \"" + it.key() + "\"");
    }
  }
}

const json& require_object(const json& parent, const char* key,
                           const std::string& path) {
  auto it = parent.find(key);
  if (it == parent.end()) {
    throw ConfigError(path + ": missing required section \"" + key + "\"");
  }
  if (!it->is_object()) {
    throw ConfigError(path + "." + key + ": expected an object");
  }
  return *it;
}

double require_number(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ConfigError(path + ": missing required key \"" + key + "\"");
  }
  if (!it->is_number()) {
    throw ConfigError(path + "." + key + ": expected a number");
  }
  return it->get<double>();
}

double optional_number(const json& obj, const char* key, double fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number()) {
    throw ConfigError(std::string(key) + ": expected a number");
  }
  return it->get<double>();
}

PortSpec parse_port(const json& obj, const std::string& path) {
  reject_unknown_keys(obj, {"z_mm", "gamma_MHz"}, path);
  PortSpec port;
  port.position_z = mm_to_m(require_number(obj, "z_mm", path));
  port.gamma = mhz_to_rad(require_number(obj, "gamma_MHz", path));
  return port;
}

QubitSpec parse_qubit(const json& obj, const std::string& path) {
  reject_unknown_keys(obj, {"z_mm", "omega_q_GHz", "gamma_a_MHz", "g_MHz"},
                      path);
  QubitSpec qb;
  qb.position_z = mm_to_m(require_number(obj, "z_mm", path));
  qb.omega_q = ghz_to_rad(require_number(obj, "omega_q_GHz", path));
  qb.gamma_a = mhz_to_rad(require_number(obj, "gamma_a_MHz", path));
  qb.g = mhz_to_rad(require_number(obj, "g_MHz", path));
  return qb;
}

}  // namespace

void validate(const WaveguideSpec& wg) {
  require_finite(wg.omega_c, "waveguide.omega_c");
  require_finite(wg.length_L, "waveguide.length_L");
  require_finite(wg.eta, "waveguide.eta");
  if (wg.omega_c <= 0.0) {
    throw ValidationError("waveguide.omega_c", "must be positive");
  }
  if (wg.length_L <= 0.0) {
    throw ValidationError("waveguide.length_L", "must be positive");
  }
  if (wg.speed_c <= 0.0) {
    throw ValidationError("waveguide.speed_c", "must be positive");
  }
  if (wg.eta < 0.0) {
    throw ValidationError("waveguide.eta", "must be non-negative");
  }
}

void validate(const SystemSpec& system) {
  validate(system.waveguide);
  const double half_L = 0.5 * system.waveguide.length_L;

  auto check_port = [&](const PortSpec& port, const std::string& name) {
    require_finite(port.position_z, name + ".position_z");
    if (std::abs(port.position_z) > half_L) {
      throw ValidationError(name + ".position_z",
                            "outside the waveguide [-L/2, L/2]");
    }
    if (port.gamma < 0.0) {
      throw ValidationError(name + ".gamma", "must be non-negative");
    }
  };
  check_port(system.port_left, "ports.left");
  check_port(system.port_right, "ports.right");
  if (!(system.port_left.position_z < system.port_right.position_z)) {
    throw ValidationError("ports", "left port must sit left of the right port");
  }

  if (system.qubits.size() > 2) {
    throw ValidationError("qubits", "at most two qubits are supported");
  }
  for (std::size_t j = 0; j < system.qubits.size(); ++j) {
    const QubitSpec& qb = system.qubits[j];
    const std::string base = "qubits[" + std::to_string(j) + "]";
    require_finite(qb.position_z, base + ".position_z");
    if (std::abs(qb.position_z) > half_L) {
      throw ValidationError(base + ".position_z",
                            "outside the waveguide [-L/2, L/2]");
    }
    if (qb.omega_q <= 0.0) {
      throw ValidationError(base + ".omega_q", "must be positive");
    }
    if (qb.gamma_a < 0.0) {
      throw ValidationError(base + ".gamma_a", "must be non-negative");
    }
    if (qb.g < 0.0) {
      throw ValidationError(base + ".g", "must be non-negative");
    }
  }
}

SystemSpec from_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse failure: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("config root must be a JSON object");
  }
  reject_unknown_keys(doc, {"waveguide", "ports", "qubits"}, "config");

  SystemSpec system;

  const json& wg = require_object(doc, "waveguide", "config");
  reject_unknown_keys(wg, {"omega_c_GHz", "length_L_mm", "eta"}, "waveguide");
  system.waveguide.omega_c =
      ghz_to_rad(require_number(wg, "omega_c_GHz", "waveguide"));
  system.waveguide.length_L =
      mm_to_m(require_number(wg, "length_L_mm", "waveguide"));
  system.waveguide.eta = optional_number(wg, "eta", 1e-6);

  const json& ports = require_object(doc, "ports", "config");
  reject_unknown_keys(ports, {"left", "right"}, "ports");
  system.port_left =
      parse_port(require_object(ports, "left", "ports"), "ports.left");
  system.port_right =
      parse_port(require_object(ports, "right", "ports"), "ports.right");

  if (auto it = doc.find("qubits"); it != doc.end()) {
    if (!it->is_array()) {
      throw ConfigError("qubits: expected an array");
    }
    for (std::size_t j = 0; j < it->size(); ++j) {
      const json& entry = (*it)[j];
      const std::string path = "qubits[" + std::to_string(j) + "]";
      if (!entry.is_object()) {
        throw ConfigError(path + ": expected an object");
      }
      system.qubits.push_back(parse_qubit(entry, path));
    }
  }

  validate(system);
  return system;
}

SystemSpec load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_config(buf.str());
}

std::string to_config(const SystemSpec& system) {
  json doc;
  doc["waveguide"] = {
      {"omega_c_GHz", rad_to_ghz(system.waveguide.omega_c)},
      {"length_L_mm", m_to_mm(system.waveguide.length_L)},
      {"eta", system.waveguide.eta},
  };
  auto port_json = [](const PortSpec& port) {
    return json{{"z_mm", m_to_mm(port.position_z)},
                {"gamma_MHz", rad_to_mhz(port.gamma)}};
  };
  doc["ports"] = {{"left", port_json(system.port_left)},
                  {"right", port_json(system.port_right)}};
  json qubits = json::array();
  for (const QubitSpec& qb : system.qubits) {
    qubits.push_back({{"z_mm", m_to_mm(qb.position_z)},
                      {"omega_q_GHz", rad_to_ghz(qb.omega_q)},
                      {"gamma_a_MHz", rad_to_mhz(qb.gamma_a)},
                      {"g_MHz", rad_to_mhz(qb.g)}});
  }
  doc["qubits"] = qubits;
  return doc.dump(2) + "\n";
}

double gamma_eff(const SystemSpec& system, std::size_t idx) {
  if (idx >= system.qubits.size()) {
    throw std::out_of_range("gamma_eff: qubit index " + std::to_string(idx) +
                            " out of range (" +
                            std::to_string(system.qubits.size()) + " present)");
  }
  const QubitSpec& qb = system.qubits[idx];
  return qb.g * qb.g * system.waveguide.length_L / system.waveguide.speed_c;
}

}  // namespace wgqed
