#include "qres/scenario.hpp"

#include "qres/errors.hpp"

namespace qres {

namespace {

const Exact kTolerance(1, 1'000'000'000);

std::vector<Exact> checked_probs(std::span<const Exact> probs, std::size_t n, const std::string& what) {
  if (probs.empty()) return std::vector<Exact>(n, Exact(1, static_cast<unsigned long>(n)));
  if (probs.size() != n) {
    throw ModelError(what + ": " + std::to_string(probs.size()) + " probabilities for " + std::to_string(n) +
                     " values");
  }
  Exact sum = 0;
  for (const auto& p : probs) {
    if (p < 0) throw ModelError(what + ": negative probability");
    sum += p;
  }
  if (abs(sum - 1) > kTolerance) {
    throw ModelError(what + ": probabilities sum to " + format_fixed(sum, 9) + ", not 1");
  }
  return {probs.begin(), probs.end()};
}

ScenarioSpace skeleton(std::string circuit_id, std::span<const std::int64_t> demand_set,
                       std::span<const Duration> wait_set) {
  if (demand_set.empty()) throw ModelError("circuit '" + circuit_id + "': empty demand set");
  if (wait_set.empty()) throw ModelError("circuit '" + circuit_id + "': empty wait set");
  ScenarioSpace space;
  space.circuit_id = std::move(circuit_id);
  space.demand_values.assign(demand_set.begin(), demand_set.end());
  space.wait_values.assign(wait_set.begin(), wait_set.end());
  space.scenarios.reserve(demand_set.size() * wait_set.size());
  for (auto beta : demand_set) {
    for (auto alpha : wait_set) {
      space.scenarios.push_back({beta, alpha, space.scenarios.size()});
    }
  }
  return space;
}

}  // namespace

ScenarioSpace build_space(std::string circuit_id, std::span<const std::int64_t> demand_set,
                          std::span<const Duration> wait_set, std::span<const Exact> demand_probs,
                          std::span<const Exact> wait_probs) {
  ScenarioSpace space = skeleton(std::move(circuit_id), demand_set, wait_set);
  const auto pd = checked_probs(demand_probs, demand_set.size(), "circuit '" + space.circuit_id + "' demand");
  const auto pw = checked_probs(wait_probs, wait_set.size(), "circuit '" + space.circuit_id + "' wait");
  space.probabilities.reserve(space.scenarios.size());
  for (const auto& d : pd) {
    for (const auto& w : pw) space.probabilities.push_back(d * w);
  }
  return space;
}

ScenarioSpace build_space_joint(std::string circuit_id, std::span<const std::int64_t> demand_set,
                                std::span<const Duration> wait_set, std::span<const Exact> joint_probs) {
  ScenarioSpace space = skeleton(std::move(circuit_id), demand_set, wait_set);
  if (joint_probs.empty()) throw ModelError("circuit '" + space.circuit_id + "': empty joint table");
  space.probabilities = checked_probs(joint_probs, space.scenarios.size(), "circuit '" + space.circuit_id + "' joint");
  return space;
}

ScenarioSpace build_space(const Circuit& circuit) {
  if (!circuit.joint_probs.empty()) {
    return build_space_joint(circuit.id, circuit.demand_set, circuit.wait_set, circuit.joint_probs);
  }
  return build_space(circuit.id, circuit.demand_set, circuit.wait_set, circuit.demand_probs, circuit.wait_probs);
}

DemandMarginal demand_marginal(const ScenarioSpace& space) {
  DemandMarginal m{space.demand_values, std::vector<Exact>(space.demand_values.size(), Exact(0))};
  const std::size_t waits = space.wait_values.size();
  for (std::size_t i = 0; i < space.scenarios.size(); ++i) m.probs[i / waits] += space.probabilities[i];
  return m;
}

WaitMarginal wait_marginal(const ScenarioSpace& space) {
  WaitMarginal m{space.wait_values, std::vector<Exact>(space.wait_values.size(), Exact(0))};
  const std::size_t waits = space.wait_values.size();
  for (std::size_t i = 0; i < space.scenarios.size(); ++i) m.probs[i % waits] += space.probabilities[i];
  return m;
}

}  // namespace qres
