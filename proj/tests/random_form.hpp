#pragma once

#include <random>
#include <string>

#include "qres/extensive_form.hpp"
#include "test_support.hpp"

namespace qres::testing {

// Arbitrary small form with rational data and LP-safe names.
inline ExtensiveForm random_form(std::mt19937_64& rng) {
  ExtensiveForm f;
  std::uniform_int_distribution<int> nvars(1, 12);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 999);
  const int n = nvars(rng);
  for (int i = 0; i < n; ++i) {
    Variable v;
    v.name = "v" + std::to_string(i) + (rng() % 2 ? "_a" : "");
    v.kind = rng() % 2 ? VarKind::integer : VarKind::continuous;
    if (rng() % 3 == 0) v.lower = q(num(rng), den(rng));
    if (rng() % 2) v.upper = v.lower + q(std::abs(num(rng)), den(rng));
    f.variables.push_back(v);
    f.objective.push_back({static_cast<std::size_t>(i), rng() % 5 == 0 ? q(0) : q(num(rng), den(rng))});
  }
  const int rows = 1 + static_cast<int>(rng() % 10);
  for (int r = 0; r < rows; ++r) {
    Row row;
    row.name = "r" + std::to_string(r);
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < k; ++j) {
      Exact c = q(num(rng), den(rng));
      if (c == 0) c = 1;
      row.terms.push_back({rng() % static_cast<std::size_t>(n), c});
    }
    row.sense = rng() % 2 ? Sense::less_equal : Sense::greater_equal;
    row.rhs = q(num(rng), den(rng));
    f.constraints.push_back(row);
  }
  return f;
}

}  // namespace qres::testing
