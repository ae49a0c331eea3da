#include "qres/random_instance.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "qres/scenario.hpp"

namespace qres {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::vector<Exact> random_probs(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::int64_t> weights(n);
  std::int64_t sum = 0;
  while (sum == 0) {
    sum = 0;
    for (auto& w : weights) {
      w = uniform(rng, 0, 9);
      sum += w;
    }
  }
  std::vector<Exact> out;
  for (auto w : weights) {
    Exact p(w, sum);
    p.canonicalize();
    out.push_back(p);
  }
  return out;
}

template <class T>
std::vector<T> distinct_sorted(std::mt19937_64& rng, int count, std::int64_t lo, std::int64_t hi) {
  std::set<std::int64_t> values;
  count = static_cast<int>(std::min<std::int64_t>(count, hi - lo + 1));
  while (static_cast<int>(values.size()) < count) values.insert(uniform(rng, lo, hi));
  std::vector<T> out;
  for (auto v : values) out.push_back(T{v});
  return out;
}

}  // namespace

CostRates random_rates(std::mt19937_64& rng, std::int64_t max_micros) {
  std::int64_t r = uniform(rng, 0, max_micros);
  std::int64_t u = uniform(rng, 0, max_micros);
  std::int64_t o = uniform(rng, 0, max_micros);
  const std::int64_t p = uniform(rng, 0, max_micros);
  if (uniform(rng, 0, 1) == 1) {
    std::array<std::int64_t, 3> sorted{r, u, o};
    std::sort(sorted.begin(), sorted.end());
    u = sorted[0];
    r = sorted[1];
    o = sorted[2];
  }
  return {Money{r}, Money{u}, Money{o}, Money{p}};
}

Instance random_instance(std::mt19937_64& rng, const RandomShape& shape) {
  Instance inst;
  const int circuits = static_cast<int>(uniform(rng, 1, shape.max_circuits));
  const int providers = static_cast<int>(uniform(rng, 1, shape.max_providers));
  for (int p = 0; p < providers; ++p) inst.providers.push_back("p" + std::to_string(p));

  int triples_left = shape.max_triples;
  for (int c = 0; c < circuits && triples_left > 0; ++c) {
    Circuit circuit;
    circuit.id = "c" + std::to_string(c);
    circuit.demand_set = distinct_sorted<std::int64_t>(rng, static_cast<int>(uniform(rng, 1, shape.max_demand_values)),
                                                       0, shape.max_demand);
    circuit.wait_set = distinct_sorted<Duration>(rng, static_cast<int>(uniform(rng, 1, shape.max_wait_values)), 0, 12);
    for (auto& w : circuit.wait_set) w.micros *= 1000;
    if (shape.random_probabilities) {
      if (uniform(rng, 0, 3) == 0) {
        circuit.joint_probs = random_probs(rng, circuit.demand_set.size() * circuit.wait_set.size());
      } else {
        circuit.demand_probs = random_probs(rng, circuit.demand_set.size());
        circuit.wait_probs = random_probs(rng, circuit.wait_set.size());
      }
    }
    inst.circuits.push_back(std::move(circuit));
    triples_left -= 1;
  }

  // Machines: at least one per provider, bounded so the triple count stays
  // within max_triples.
  const int per_circuit_budget = std::max(1, shape.max_triples / static_cast<int>(inst.circuits.size()));
  int machines_total = 0;
  for (int p = 0; p < providers && machines_total < per_circuit_budget; ++p) {
    const int count = static_cast<int>(uniform(rng, 1, shape.max_machines_per_provider));
    for (int m = 0; m < count && machines_total < per_circuit_budget; ++m, ++machines_total) {
      inst.machines.push_back({inst.providers[p], "m" + std::to_string(m), uniform(rng, 0, shape.max_capacity)});
    }
  }
  // Providers without machines are dropped to keep every provider meaningful.
  std::vector<std::string> used;
  for (const auto& p : inst.providers) {
    if (std::any_of(inst.machines.begin(), inst.machines.end(), [&](const Machine& m) { return m.provider_id == p; })) {
      used.push_back(p);
    }
  }
  inst.providers = used;

  for (const auto& c : inst.circuits) {
    for (const auto& p : inst.providers) inst.rates[{c.id, p}] = random_rates(rng, shape.max_rate_micros);
  }
  for (const auto& t : triples(inst)) inst.exec_times.entries[t.key] = Duration{uniform(rng, 0, 14) * 1000};
  return inst;
}

TripleProblem random_triple(std::mt19937_64& rng, const RandomShape& shape) {
  TripleProblem p;
  p.rates = random_rates(rng, shape.max_rate_micros);
  p.demand.values = distinct_sorted<std::int64_t>(rng, static_cast<int>(uniform(rng, 1, shape.max_demand_values)), 0,
                                                  shape.max_demand);
  p.wait.values = distinct_sorted<Duration>(rng, static_cast<int>(uniform(rng, 1, shape.max_wait_values)), 0, 12);
  for (auto& w : p.wait.values) w.micros *= 1000;
  p.demand.probs = random_probs(rng, p.demand.values.size());
  p.wait.probs = random_probs(rng, p.wait.values.size());
  p.exec_time = Duration{uniform(rng, 0, 14) * 1000};
  p.capacity = uniform(rng, 0, shape.max_capacity);
  return p;
}

}  // namespace qres
