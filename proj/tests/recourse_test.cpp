#include <gtest/gtest.h>

#include <array>
#include <optional>

#include "qres/recourse.hpp"
#include "test_support.hpp"

namespace qres {
namespace {

using testing::q;

CostRates rates(double u, double o, double p = 10) { return {dollars(1.68), dollars(u), dollars(o), dollars(p)}; }

TEST(OptimalRecourse, ReservationCoversDemand) {
  const auto d = optimal_recourse(15, {12, Duration{3000}, 0}, rates(0.1, 7), Duration{3000});
  EXPECT_EQ(d.utilized, 12);
  EXPECT_EQ(d.on_demand, 0);
  EXPECT_EQ(d.over_wait, Duration{});
  EXPECT_EQ(d.cost, q(12, 10));
}

TEST(OptimalRecourse, ShortfallGoesOnDemand) {
  const auto d = optimal_recourse(10, {22, Duration{3000}, 0}, rates(0.1, 7), Duration{3000});
  EXPECT_EQ(d.utilized, 10);
  EXPECT_EQ(d.on_demand, 12);
  EXPECT_EQ(d.cost, 85);
}

TEST(OptimalRecourse, OverWaitPenalty) {
  for (std::int64_t reserved : {0, 5, 30}) {
    const auto d = optimal_recourse(reserved, {0, Duration{9000}, 0}, rates(0.1, 7), Duration{12000});
    EXPECT_EQ(d.over_wait, Duration{3000});
    EXPECT_EQ(d.penalty_cost, q(3, 100));
  }
}

TEST(OptimalRecourse, UtilizationDearerThanOnDemand) {
  const auto d = optimal_recourse(10, {6, Duration{}, 0}, rates(8, 7), Duration{});
  EXPECT_EQ(d.utilized, 0);
  EXPECT_EQ(d.on_demand, 6);
  const auto tie = optimal_recourse(10, {6, Duration{}, 0}, rates(7, 7), Duration{});
  EXPECT_EQ(tie.utilized, 6);
}

TEST(PenaltyTime, PositivePart) {
  EXPECT_EQ(penalty_time(Duration{12000}, Duration{9000}), Duration{3000});
  EXPECT_EQ(penalty_time(Duration{4000}, Duration{9000}), Duration{});
  EXPECT_EQ(penalty_time(Duration{7000}, Duration{7000}), Duration{});
}

constexpr std::array<double, 5> kRateGrid{0, 0.1, 1, 7, 10};

// Minimum of U*xu + O*xo over integer xu <= reserved, xo <= beta with xu + xo >= beta.
Exact exhaustive_qubit_cost(std::int64_t reserved, std::int64_t beta, const CostRates& r) {
  std::optional<Money> best;
  for (std::int64_t xu = 0; xu <= reserved; ++xu) {
    for (std::int64_t xo = 0; xo <= beta; ++xo) {
      if (xu + xo < beta) continue;
      const Money c = r.utilize_per_qubit * xu + r.on_demand_per_qubit * xo;
      if (!best || c < *best) best = c;
    }
  }
  return to_exact(*best);
}

TEST(OptimalRecourse, MatchesExhaustiveEnumerationOnGrid) {
  const Duration exec{6000};
  const std::array<Duration, 3> waits{Duration{0}, Duration{6000}, Duration{9000}};
  int mismatches = 0;
  for (double u : kRateGrid) {
    for (double o : kRateGrid) {
      for (double p : kRateGrid) {
        const CostRates r = rates(u, o, p);
        for (std::int64_t beta = 0; beta <= 8; ++beta) {
          for (const Duration a : waits) {
            const Exact penalty = time_cost(penalty_time(exec, a), r.penalty_per_second);
            for (std::int64_t x = 0; x <= 8; ++x) {
              const auto d = optimal_recourse(x, {beta, a, 0}, r, exec);
              if (d.cost != exhaustive_qubit_cost(x, beta, r) + penalty) ++mismatches;
            }
          }
        }
      }
    }
  }
  EXPECT_EQ(mismatches, 0);
}

TEST(OptimalRecourse, OverWaitIsMinimalAndIndependentOfReservation) {
  const Duration exec{6000};
  for (std::int64_t a = 0; a <= 9000; a += 500) {
    const Duration wait{a};
    const auto first = optimal_recourse(0, {4, wait, 0}, rates(0.1, 7), exec);
    // Any smaller over-wait would violate exec <= wait + y.
    EXPECT_LE(exec, wait + first.over_wait);
    if (first.over_wait > Duration{}) EXPECT_GT(exec, wait + first.over_wait - Duration{1});
    for (std::int64_t x = 1; x <= 8; ++x) {
      EXPECT_EQ(optimal_recourse(x, {4, wait, 0}, rates(0.1, 7), exec).over_wait, first.over_wait);
    }
  }
}

TEST(OptimalRecourse, FeasibleAndCostNonIncreasingInReservation) {
  const Duration exec{5000};
  for (double u : kRateGrid) {
    for (double o : kRateGrid) {
      const CostRates r = rates(u, o);
      for (std::int64_t beta = 0; beta <= 8; ++beta) {
        std::optional<Exact> previous;
        for (std::int64_t x = 0; x <= 8; ++x) {
          const Scenario w{beta, Duration{2000}, 0};
          const auto d = optimal_recourse(x, w, r, exec);
          EXPECT_GE(d.utilized, 0);
          EXPECT_GE(d.on_demand, 0);
          EXPECT_LE(d.utilized, x);
          EXPECT_GE(d.utilized + d.on_demand, beta);
          EXPECT_LE(exec, w.wait_time + d.over_wait);
          EXPECT_EQ(d.utilization_cost, r.utilize_per_qubit * d.utilized);
          EXPECT_EQ(d.on_demand_cost, r.on_demand_per_qubit * d.on_demand);
          EXPECT_EQ(d.penalty_cost, time_cost(d.over_wait, r.penalty_per_second));
          EXPECT_EQ(d.cost, to_exact(d.utilization_cost) + to_exact(d.on_demand_cost) + d.penalty_cost);
          if (u <= o) {
            if (previous) EXPECT_LE(d.cost, *previous);
            previous = d.cost;
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace qres
