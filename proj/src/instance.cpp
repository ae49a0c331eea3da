#include "qres/instance.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qres/errors.hpp"

namespace qres {

using nlohmann::json;

namespace {

const Exact kProbabilityTolerance(1, 1'000'000'000);

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string get_string(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

std::int64_t get_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d == static_cast<double>(static_cast<std::int64_t>(d))) return static_cast<std::int64_t>(d);
  }
  fail(where, "expected an integer");
}

std::int64_t get_micros(const json& v, const std::string& where) {
  try {
    if (v.is_number()) return to_micros(v.get<double>());
    if (v.is_string()) {
      Exact q = parse_decimal(v.get<std::string>()) * kMicrosPerUnit;
      if (q.get_den() != 1) fail(where, "more precision than micro units");
      return q.get_num().get_si();
    }
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  } catch (const std::out_of_range& e) {
    fail(where, e.what());
  }
  fail(where, "expected a number");
}

Exact get_probability(const json& v, const std::string& where) {
  try {
    if (v.is_number()) return exact_from_double(v.get<double>());
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      if (s.find('/') != std::string::npos) {
        Exact q;
        if (q.set_str(s, 10) != 0 || q.get_den() == 0) fail(where, "malformed fraction '" + s + "'");
        q.canonicalize();
        return q;
      }
      return parse_decimal(s);
    }
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
  fail(where, "expected a probability");
}

std::vector<Exact> get_probabilities(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of probabilities");
  std::vector<Exact> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(get_probability(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::int64_t> parse_demand_set(const json& v, const std::string& where) {
  std::vector<std::int64_t> out;
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.push_back(get_integer(v[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
  }
  if (!v.is_object()) fail(where, "expected a list or a {lo, hi, step} range");
  const std::int64_t lo = get_integer(require(v, "lo", where), where + ".lo");
  const std::int64_t hi = get_integer(require(v, "hi", where), where + ".hi");
  const std::int64_t step = v.contains("step") ? get_integer(v["step"], where + ".step") : 1;
  if (step <= 0) fail(where, "range step must be positive");
  if (hi < lo) fail(where, "range hi < lo");
  if ((hi - lo) / step > 10'000'000) fail(where, "range too large");
  for (std::int64_t x = lo; x <= hi; x += step) out.push_back(x);
  return out;
}

std::vector<Duration> parse_wait_set(const json& v, const std::string& where) {
  std::vector<Duration> out;
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.push_back(Duration{get_micros(v[i], where + "[" + std::to_string(i) + "]")});
    }
    return out;
  }
  if (!v.is_object()) fail(where, "expected a list or a {lo, hi, step} range");
  const std::int64_t lo = get_micros(require(v, "lo", where), where + ".lo");
  const std::int64_t hi = get_micros(require(v, "hi", where), where + ".hi");
  const std::int64_t step = get_micros(require(v, "step", where), where + ".step");
  if (step <= 0) fail(where, "range step must be positive");
  if (hi < lo) fail(where, "range hi < lo");
  if ((hi - lo) / step > 10'000'000) fail(where, "range too large");
  for (std::int64_t x = lo; x <= hi; x += step) out.push_back(Duration{x});
  return out;
}

CostRates parse_rates(const json& v, const std::optional<CostRates>& fallback, const std::string& where) {
  if (!v.is_object()) fail(where, "expected an object");
  auto field = [&](const char* key, Money CostRates::*member) -> Money {
    if (v.contains(key)) return Money{get_micros(v[key], where + "." + key)};
    if (fallback) return (*fallback).*member;
    fail(where, std::string("missing field '") + key + "'");
  };
  CostRates r;
  r.reserve_per_qubit = field("reserve", &CostRates::reserve_per_qubit);
  r.utilize_per_qubit = field("utilize", &CostRates::utilize_per_qubit);
  r.on_demand_per_qubit = field("on_demand", &CostRates::on_demand_per_qubit);
  r.penalty_per_second = field("penalty", &CostRates::penalty_per_second);
  return r;
}

Circuit parse_circuit(const json& v, const std::string& where) {
  if (!v.is_object()) fail(where, "expected an object");
  Circuit c;
  c.id = get_string(require(v, "id", where), where + ".id");
  if (v.contains("label")) c.label = get_string(v["label"], where + ".label");
  if (v.contains("num_qubits")) c.num_qubits = static_cast<int>(get_integer(v["num_qubits"], where + ".num_qubits"));
  if (v.contains("encoded_value")) {
    const std::int64_t e = get_integer(v["encoded_value"], where + ".encoded_value");
    if (e < 0) fail(where + ".encoded_value", "must be non-negative");
    c.encoded_value = static_cast<std::uint64_t>(e);
  }
  c.demand_set = parse_demand_set(require(v, "demand_set", where), where + ".demand_set");
  c.wait_set = parse_wait_set(require(v, "wait_set", where), where + ".wait_set");
  if (v.contains("demand_probs")) c.demand_probs = get_probabilities(v["demand_probs"], where + ".demand_probs");
  if (v.contains("wait_probs")) c.wait_probs = get_probabilities(v["wait_probs"], where + ".wait_probs");
  if (v.contains("joint_probs")) c.joint_probs = get_probabilities(v["joint_probs"], where + ".joint_probs");
  return c;
}

int line_of_byte(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  for (auto& c : out) {
    const auto b = c.find_first_not_of(" \t");
    const auto e = c.find_last_not_of(" \t");
    c = b == std::string::npos ? std::string() : c.substr(b, e - b + 1);
  }
  return out;
}

json probabilities_to_json(const std::vector<Exact>& probs) {
  json arr = json::array();
  for (const auto& p : probs) {
    arr.push_back(is_terminating_decimal(p) ? format_exact_decimal(p) : p.get_str());
  }
  return arr;
}

json money_json(std::int64_t micros) { return json::parse(format_decimal(Money{micros})); }

bool strictly_increasing(const auto& values) {
  return std::adjacent_find(values.begin(), values.end(),
                            [](const auto& a, const auto& b) { return !(a < b); }) == values.end();
}

void check_probabilities(const std::vector<Exact>& probs, std::size_t expected_size, const std::string& where,
                         std::vector<Diagnostic>& out) {
  if (probs.empty()) return;
  if (probs.size() != expected_size) {
    out.push_back({Severity::error, where,
                   "has " + std::to_string(probs.size()) + " entries, expected " + std::to_string(expected_size)});
    return;
  }
  Exact sum = 0;
  for (const auto& p : probs) {
    if (p < 0) {
      out.push_back({Severity::error, where, "contains a negative probability"});
      return;
    }
    sum += p;
  }
  if (abs(sum - 1) > kProbabilityTolerance) {
    out.push_back({Severity::error, where, "probabilities sum to " + format_fixed(sum, 9) + ", not 1"});
  }
}

}  // namespace

std::string to_string(const TripleKey& key) {
  return "(" + key.circuit_id + ", " + key.provider_id + ", " + key.machine_id + ")";
}

std::string to_string(const Diagnostic& d) {
  return std::string(d.severity == Severity::error ? "error" : "warning") + ": " + d.location + ": " + d.message;
}

const Circuit& Instance::circuit(std::string_view id) const {
  for (const auto& c : circuits) {
    if (c.id == id) return c;
  }
  throw ModelError("unknown circuit '" + std::string(id) + "'");
}

const Machine& Instance::machine(std::string_view provider_id, std::string_view machine_id) const {
  for (const auto& m : machines) {
    if (m.provider_id == provider_id && m.machine_id == machine_id) return m;
  }
  throw ModelError("unknown machine '" + std::string(provider_id) + "/" + std::string(machine_id) + "'");
}

const CostRates& Instance::rates_for(std::string_view circuit_id, std::string_view provider_id) const {
  auto it = rates.find({std::string(circuit_id), std::string(provider_id)});
  if (it == rates.end()) {
    throw ModelError("missing rates for (" + std::string(circuit_id) + ", " + std::string(provider_id) + ")");
  }
  return it->second;
}

Duration Instance::exec_time(const TripleKey& key) const {
  auto it = exec_times.entries.find(key);
  if (it == exec_times.entries.end()) throw ModelError("missing execution time for " + to_string(key));
  return it->second;
}

std::vector<TripleRef> triples(const Instance& instance) {
  std::vector<TripleRef> out;
  for (std::size_t ci = 0; ci < instance.circuits.size(); ++ci) {
    for (std::size_t pi = 0; pi < instance.providers.size(); ++pi) {
      std::size_t mi = 0;
      for (std::size_t pos = 0; pos < instance.machines.size(); ++pos) {
        const Machine& m = instance.machines[pos];
        if (m.provider_id != instance.providers[pi]) continue;
        out.push_back({{instance.circuits[ci].id, m.provider_id, m.machine_id}, ci, pi, mi++, pos});
      }
    }
  }
  return out;
}

Instance parse_instance(std::string_view json_text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), line_of_byte(json_text, e.byte));
  }
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object");

  Instance inst;
  const json& circuits = require(doc, "circuits", "instance");
  if (!circuits.is_array()) fail("circuits", "expected an array");
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    inst.circuits.push_back(parse_circuit(circuits[i], "circuits[" + std::to_string(i) + "]"));
  }

  const json& providers = require(doc, "providers", "instance");
  if (!providers.is_array()) fail("providers", "expected an array");
  for (std::size_t i = 0; i < providers.size(); ++i) {
    inst.providers.push_back(get_string(providers[i], "providers[" + std::to_string(i) + "]"));
  }

  const json& machines = require(doc, "machines", "instance");
  if (!machines.is_array()) fail("machines", "expected an array");
  for (std::size_t i = 0; i < machines.size(); ++i) {
    const std::string where = "machines[" + std::to_string(i) + "]";
    const json& m = machines[i];
    if (!m.is_object()) fail(where, "expected an object");
    Machine machine;
    machine.provider_id = get_string(require(m, "provider", where), where + ".provider");
    machine.machine_id = get_string(require(m, "id", where), where + ".id");
    if (m.contains("capacity")) machine.capacity_qubits = get_integer(m["capacity"], where + ".capacity");
    inst.machines.push_back(std::move(machine));
  }

  std::optional<CostRates> defaults;
  if (doc.contains("default_rates")) defaults = parse_rates(doc["default_rates"], std::nullopt, "default_rates");
  if (defaults) {
    for (const auto& c : inst.circuits) {
      for (const auto& p : inst.providers) inst.rates[{c.id, p}] = *defaults;
    }
  }
  if (doc.contains("rates")) {
    const json& rates = doc["rates"];
    if (!rates.is_array()) fail("rates", "expected an array");
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t i = 0; i < rates.size(); ++i) {
      const std::string where = "rates[" + std::to_string(i) + "]";
      const json& r = rates[i];
      if (!r.is_object()) fail(where, "expected an object");
      auto key = std::make_pair(get_string(require(r, "circuit", where), where + ".circuit"),
                                get_string(require(r, "provider", where), where + ".provider"));
      if (!seen.insert(key).second) fail(where, "duplicate rates for (" + key.first + ", " + key.second + ")");
      inst.rates[key] = parse_rates(r, defaults, where);
    }
  }

  if (doc.contains("exec_times") && doc.contains("exec_times_csv")) {
    fail("instance", "give either 'exec_times' or 'exec_times_csv', not both");
  }
  if (doc.contains("exec_times")) {
    const json& times = doc["exec_times"];
    if (!times.is_array()) fail("exec_times", "expected an array");
    for (std::size_t i = 0; i < times.size(); ++i) {
      const std::string where = "exec_times[" + std::to_string(i) + "]";
      const json& t = times[i];
      if (!t.is_object()) fail(where, "expected an object");
      TripleKey key{get_string(require(t, "circuit", where), where + ".circuit"),
                    get_string(require(t, "provider", where), where + ".provider"),
                    get_string(require(t, "machine", where), where + ".machine")};
      Duration seconds{get_micros(require(t, "seconds", where), where + ".seconds")};
      if (!inst.exec_times.entries.emplace(key, seconds).second) {
        fail(where, "duplicate execution time for " + to_string(key));
      }
    }
  } else if (doc.contains("exec_times_csv")) {
    const std::filesystem::path path = base_dir / get_string(doc["exec_times_csv"], "exec_times_csv");
    std::ifstream in(path);
    if (!in) fail("exec_times_csv", "cannot open '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      inst.exec_times = load_exec_times(buf.str());
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ": " + e.what());
    }
  }
  return inst;
}

Instance load_instance(std::string_view json_text, const std::filesystem::path& base_dir) {
  Instance inst = parse_instance(json_text, base_dir);
  const auto diagnostics = validate(inst);
  if (has_errors(diagnostics)) {
    std::string msg = "invalid instance:";
    for (const auto& d : diagnostics) {
      if (d.severity == Severity::error) msg += "\n  " + to_string(d);
    }
    throw ModelError(msg);
  }
  return inst;
}

Instance load_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_instance(buf.str(), path.parent_path());
}

std::vector<Diagnostic> validate(const Instance& inst) {
  std::vector<Diagnostic> out;
  auto error = [&](std::string where, std::string what) {
    out.push_back({Severity::error, std::move(where), std::move(what)});
  };
  auto warning = [&](std::string where, std::string what) {
    out.push_back({Severity::warning, std::move(where), std::move(what)});
  };

  if (inst.circuits.empty()) error("circuits", "no circuits");
  if (inst.providers.empty()) error("providers", "no providers");
  if (inst.machines.empty()) error("machines", "no machines");

  std::set<std::string> circuit_ids;
  for (const auto& c : inst.circuits) {
    const std::string where = "circuit '" + c.id + "'";
    if (!circuit_ids.insert(c.id).second) error(where, "duplicate circuit id");
    if (c.demand_set.empty()) error(where + ".demand_set", "empty demand set");
    if (c.wait_set.empty()) error(where + ".wait_set", "empty wait set");
    if (std::any_of(c.demand_set.begin(), c.demand_set.end(), [](auto b) { return b < 0; })) {
      error(where + ".demand_set", "negative demand");
    }
    if (!strictly_increasing(c.demand_set)) error(where + ".demand_set", "values must be strictly increasing");
    if (std::any_of(c.wait_set.begin(), c.wait_set.end(), [](auto a) { return a.micros < 0; })) {
      error(where + ".wait_set", "negative waiting time");
    }
    if (!strictly_increasing(c.wait_set)) error(where + ".wait_set", "values must be strictly increasing");
    check_probabilities(c.demand_probs, c.demand_set.size(), where + ".demand_probs", out);
    check_probabilities(c.wait_probs, c.wait_set.size(), where + ".wait_probs", out);
    check_probabilities(c.joint_probs, c.demand_set.size() * c.wait_set.size(), where + ".joint_probs", out);
    if (c.num_qubits && c.encoded_value) {
      if (*c.num_qubits <= 0 || *c.num_qubits > 63 || *c.encoded_value >> *c.num_qubits != 0) {
        warning(where, "encoded value does not fit in num_qubits");
      }
    }
  }

  std::set<std::string> provider_ids;
  for (const auto& p : inst.providers) {
    if (!provider_ids.insert(p).second) error("provider '" + p + "'", "duplicate provider id");
  }

  std::set<std::pair<std::string, std::string>> machine_ids;
  std::set<std::string> used_providers;
  for (const auto& m : inst.machines) {
    const std::string where = "machine '" + m.provider_id + "/" + m.machine_id + "'";
    if (!machine_ids.insert({m.provider_id, m.machine_id}).second) error(where, "duplicate machine");
    if (!provider_ids.contains(m.provider_id)) error(where, "unknown provider '" + m.provider_id + "'");
    if (m.capacity_qubits < 0) error(where, "capacity " + std::to_string(m.capacity_qubits) + " is negative");
    used_providers.insert(m.provider_id);
  }

  for (const auto& c : inst.circuits) {
    for (const auto& p : inst.providers) {
      if (!used_providers.contains(p)) continue;
      const std::string where = "rates (" + c.id + ", " + p + ")";
      auto it = inst.rates.find({c.id, p});
      if (it == inst.rates.end()) {
        error(where, "missing rates");
        continue;
      }
      const CostRates& r = it->second;
      if (r.reserve_per_qubit.micros < 0 || r.utilize_per_qubit.micros < 0 || r.on_demand_per_qubit.micros < 0 ||
          r.penalty_per_second.micros < 0) {
        error(where, "rates must be non-negative");
        continue;
      }
      std::vector<std::string> issues;
      if (r.utilize_per_qubit > r.on_demand_per_qubit) issues.emplace_back("utilize > on_demand");
      if (r.reserve_per_qubit >= r.on_demand_per_qubit) issues.emplace_back("reserve >= on_demand");
      if (!issues.empty()) {
        std::string msg = "pricing sanity: ";
        for (std::size_t i = 0; i < issues.size(); ++i) msg += (i ? ", " : "") + issues[i];
        warning(where, msg);
      }
    }
  }
  for (const auto& [key, r] : inst.rates) {
    if (!circuit_ids.contains(key.first) || !provider_ids.contains(key.second)) {
      warning("rates (" + key.first + ", " + key.second + ")", "refers to an unknown circuit or provider");
    }
  }

  std::set<TripleKey> known;
  for (const auto& t : triples(inst)) {
    known.insert(t.key);
    auto it = inst.exec_times.entries.find(t.key);
    if (it == inst.exec_times.entries.end()) {
      error("exec_times " + to_string(t.key), "missing execution time");
    } else if (it->second.micros < 0) {
      error("exec_times " + to_string(t.key), "negative execution time");
    }
  }
  for (const auto& [key, t] : inst.exec_times.entries) {
    if (!known.contains(key)) warning("exec_times " + to_string(key), "refers to an unknown triple");
  }
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::error; });
}

std::string serialize(const Instance& inst) {
  json doc;
  doc["circuits"] = json::array();
  for (const auto& c : inst.circuits) {
    json jc;
    jc["id"] = c.id;
    if (c.label) jc["label"] = *c.label;
    if (c.num_qubits) jc["num_qubits"] = *c.num_qubits;
    if (c.encoded_value) jc["encoded_value"] = *c.encoded_value;
    jc["demand_set"] = c.demand_set;
    json waits = json::array();
    for (const auto& a : c.wait_set) waits.push_back(money_json(a.micros));
    jc["wait_set"] = waits;
    if (!c.demand_probs.empty()) jc["demand_probs"] = probabilities_to_json(c.demand_probs);
    if (!c.wait_probs.empty()) jc["wait_probs"] = probabilities_to_json(c.wait_probs);
    if (!c.joint_probs.empty()) jc["joint_probs"] = probabilities_to_json(c.joint_probs);
    doc["circuits"].push_back(jc);
  }
  doc["providers"] = inst.providers;
  doc["machines"] = json::array();
  for (const auto& m : inst.machines) {
    doc["machines"].push_back({{"provider", m.provider_id}, {"id", m.machine_id}, {"capacity", m.capacity_qubits}});
  }
  doc["rates"] = json::array();
  for (const auto& [key, r] : inst.rates) {
    doc["rates"].push_back({{"circuit", key.first},
                            {"provider", key.second},
                            {"reserve", money_json(r.reserve_per_qubit.micros)},
                            {"utilize", money_json(r.utilize_per_qubit.micros)},
                            {"on_demand", money_json(r.on_demand_per_qubit.micros)},
                            {"penalty", money_json(r.penalty_per_second.micros)}});
  }
  doc["exec_times"] = json::array();
  for (const auto& [key, t] : inst.exec_times.entries) {
    doc["exec_times"].push_back({{"circuit", key.circuit_id},
                                 {"provider", key.provider_id},
                                 {"machine", key.machine_id},
                                 {"seconds", money_json(t.micros)}});
  }
  return doc.dump(2) + "\n";
}

ExecTimeTable load_exec_times(std::string_view csv) {
  ExecTimeTable table;
  std::istringstream in{std::string(csv)};
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    auto cells = split_csv_line(line);
    if (!header_seen) {
      header_seen = true;
      const std::vector<std::string> expected{"circuit_id", "provider_id", "machine_id", "seconds"};
      if (cells == expected) continue;
      throw ParseError("expected header 'circuit_id,provider_id,machine_id,seconds'", line_no);
    }
    if (cells.size() != 4 || cells[0].empty() || cells[1].empty() || cells[2].empty()) {
      throw ParseError("malformed row '" + line + "'", line_no);
    }
    Exact seconds;
    try {
      seconds = parse_decimal(cells[3]);
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed seconds '" + cells[3] + "'", line_no);
    }
    if (seconds < 0) throw ParseError("negative execution time", line_no);
    Exact micros_q = seconds * kMicrosPerUnit;
    mpz_class micros = micros_q.get_num() / micros_q.get_den();
    if (Exact(micros) != micros_q) throw ParseError("execution time finer than a microsecond", line_no);
    if (!micros.fits_slong_p()) throw ParseError("execution time out of range", line_no);
    TripleKey key{cells[0], cells[1], cells[2]};
    if (!table.entries.emplace(key, Duration{micros.get_si()}).second) {
      throw ParseError("duplicate triple " + to_string(key), line_no);
    }
  }
  return table;
}

Duration synth_exec_time(int num_qubits, std::uint64_t encoded_value, Duration base, Duration slope) {
  if (num_qubits <= 0 || num_qubits > 63) throw ModelError("num_qubits must be in 1..63");
  if (encoded_value >> num_qubits != 0) {
    throw ModelError("encoded value " + std::to_string(encoded_value) + " does not fit in " +
                     std::to_string(num_qubits) + " qubits");
  }
  if (base.micros <= 0 || slope.micros <= 0) throw ModelError("base and slope must be positive");
  return Duration{base.micros + slope.micros * num_qubits * std::popcount(encoded_value)};
}

Instance reference_instance() {
  Instance inst;
  Circuit qft;
  qft.id = "qft";
  qft.label = "QFT";
  qft.num_qubits = 10;
  qft.encoded_value = 1023;
  for (std::int64_t b = 10; b <= 22; ++b) qft.demand_set.push_back(b);
  for (std::int64_t a = 1; a <= 9; ++a) qft.wait_set.push_back(Duration{a * 1000});
  inst.circuits.push_back(qft);
  inst.providers = {"p1", "p2", "p3"};
  const CostRates rates{dollars(1.68), dollars(0.1), dollars(7), dollars(10)};
  std::int64_t t = 5000;
  for (const auto& p : inst.providers) {
    inst.rates[{qft.id, p}] = rates;
    for (const char* m : {"m1", "m2"}) {
      inst.machines.push_back({p, m, kDefaultCapacity});
      inst.exec_times.entries[{qft.id, p, m}] = Duration{t};
      t += 1000;
    }
  }
  return inst;
}

}  // namespace qres
