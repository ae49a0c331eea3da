#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

#include "qres/errors.hpp"
#include "qres/solver.hpp"
#include "qres/sweep.hpp"
#include "test_support.hpp"

namespace qres {
namespace {

using testing::q;

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(hi - lo + 1));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

std::vector<Duration> waits_ms(int lo, int hi) {
  std::vector<Duration> v;
  for (int ms = lo; ms <= hi; ++ms) v.push_back(Duration{ms * 1000});
  return v;
}

TEST(SweepReservation, ReferenceCurveShape) {
  const Instance inst = reference_instance();
  const CostCurve c = sweep_reservation(inst, range(0, 30));
  ASSERT_EQ(c.points.size(), 31u);
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    const CurvePoint& p = c.points[i];
    EXPECT_EQ(p.reserved, static_cast<std::int64_t>(i));
    EXPECT_EQ(p.first_stage, q(1008, 100) * p.reserved);
    EXPECT_EQ(p.total, p.first_stage + p.second_stage + p.penalty);
    if (p.reserved >= 22) EXPECT_EQ(p.on_demand, 0);
    if (i > 0) {
      EXPECT_LE(p.second_stage, c.points[i - 1].second_stage);
      EXPECT_EQ(p.penalty, c.points[0].penalty);
    }
    if (i > 1) {
      EXPECT_LE(c.points[i - 1].total - c.points[i - 2].total, p.total - c.points[i - 1].total);
    }
  }
  EXPECT_GT(c.points[21].on_demand, 0);
  const auto argmin = std::min_element(c.points.begin(), c.points.end(),
                                       [](const CurvePoint& a, const CurvePoint& b) { return a.total < b.total; });
  EXPECT_EQ(argmin->reserved, 19);
  EXPECT_EQ(argmin->total, solve_instance(inst).expected_total);
}

TEST(SweepReservation, PointsMatchExpectedCost) {
  const Instance inst = reference_instance();
  const CostCurve c = sweep_reservation(inst, std::vector<std::int64_t>{0, 5, 30});
  for (const auto& p : c.points) {
    const Solution s = expected_cost(inst, uniform_plan(inst, p.reserved));
    EXPECT_EQ(p.first_stage, s.expected_first_stage);
    EXPECT_EQ(p.second_stage, s.expected_second_stage);
    EXPECT_EQ(p.penalty, s.expected_penalty);
    EXPECT_EQ(p.total, s.expected_total);
  }
}

TEST(SweepReservation, SinglePointAndGridErrors) {
  const Instance inst = reference_instance();
  const CostCurve c = sweep_reservation(inst, std::vector<std::int64_t>{0});
  ASSERT_EQ(c.points.size(), 1u);
  EXPECT_EQ(c.points[0].first_stage, 0);
  std::ostringstream out;
  emit_csv(c, out);
  const std::string text = out.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
  EXPECT_THROW(sweep_reservation(inst, std::vector<std::int64_t>{31}), ModelError);
  EXPECT_THROW(sweep_reservation(inst, std::vector<std::int64_t>{-1}), ModelError);
  EXPECT_THROW(sweep_reservation(inst, std::vector<std::int64_t>{3, 2}), ModelError);
  EXPECT_THROW(sweep_reservation(inst, std::vector<std::int64_t>{}), ModelError);
}

TEST(SweepReservation, GoldenCurve) {
  const CostCurve c = sweep_reservation(reference_instance(), range(0, 30));
  std::ostringstream out;
  const std::size_t bytes = emit_csv(c, out);
  EXPECT_EQ(bytes, out.str().size());
  EXPECT_EQ(out.str(), read_file(testing::golden("reference_curve.csv")));
  std::ostringstream again;
  emit_csv(sweep_reservation(reference_instance(), range(0, 30)), again);
  EXPECT_EQ(again.str(), out.str());
}

TEST(WithArrangedWait, CollapsesWaitSet) {
  const Instance inst = with_arranged_wait(reference_instance(), Duration{4000});
  for (const auto& c : inst.circuits) {
    EXPECT_EQ(c.wait_set, (std::vector<Duration>{Duration{4000}}));
    EXPECT_EQ(c.demand_set.size(), 13u);
  }
  Instance joint = reference_instance();
  joint.circuits[0].demand_set = {1, 2};
  joint.circuits[0].wait_set = {Duration{1}, Duration{2}};
  joint.circuits[0].joint_probs = {q(1, 10), q(2, 10), q(3, 10), q(4, 10)};
  const Instance collapsed = with_arranged_wait(joint, Duration{5});
  EXPECT_EQ(collapsed.circuits[0].demand_probs, (std::vector<Exact>{q(3, 10), q(7, 10)}));
  EXPECT_TRUE(collapsed.circuits[0].joint_probs.empty());
}

TEST(SweepReservationWaiting, ReferenceSurfaceShape) {
  const Instance inst = reference_instance();
  const auto xs = range(0, 30);
  const auto ws = waits_ms(1, 12);
  const CostSurface s = sweep_reservation_waiting(inst, xs, ws);
  ASSERT_EQ(s.rows.size(), xs.size() * ws.size());

  Exact penalty_rate = 0;
  Duration max_exec{};
  for (const auto& ref : triples(inst)) {
    penalty_rate += to_exact(inst.rates_for(ref.key.circuit_id, ref.key.provider_id).penalty_per_second);
    max_exec = std::max(max_exec, inst.exec_time(ref.key));
  }
  EXPECT_EQ(penalty_rate, 60);

  const SurfaceRow* best = &s.rows.front();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ws.size(); ++j) {
      const SurfaceRow& r = s.rows[i * ws.size() + j];
      EXPECT_EQ(r.reserved, xs[i]);
      EXPECT_EQ(r.arranged_wait, ws[j]);
      // Penalty depends on the wait only.
      EXPECT_EQ(r.penalty, s.rows[j].penalty);
      Exact hand = 0;
      for (const auto& ref : triples(inst)) hand += 10 * to_exact(penalty_time(inst.exec_time(ref.key), ws[j]));
      EXPECT_EQ(r.penalty, hand);
      if (ws[j] >= max_exec) EXPECT_EQ(r.penalty, 0);
      if (j > 0 && ws[j] <= Duration{5000}) {
        // Every triple is still late, so each second of arrangement saves the summed rate.
        const SurfaceRow& prev = s.rows[i * ws.size() + j - 1];
        EXPECT_EQ(prev.total - r.total, penalty_rate * to_exact(ws[j] - ws[j - 1]));
      }
      if (r.total < best->total) best = &r;
    }
  }
  EXPECT_EQ(best->reserved, 19);
  EXPECT_EQ(best->arranged_wait, max_exec);
  EXPECT_EQ(best->arranged_wait, Duration{10'000});
  // Every wait at or past the slowest machine ties with the minimum.
  for (std::size_t j = 0; j < ws.size(); ++j) {
    if (ws[j] >= max_exec) EXPECT_EQ(s.rows[19 * ws.size() + j].total, best->total);
  }
}

TEST(SweepReservationWaiting, RowEqualsDeterministicWaitTotal) {
  const Instance inst = reference_instance();
  const CostSurface s = sweep_reservation_waiting(inst, std::vector<std::int64_t>{7}, waits_ms(10, 10));
  const Solution direct = expected_cost(with_arranged_wait(inst, Duration{10'000}), uniform_plan(inst, 7));
  EXPECT_EQ(s.rows[0].total, direct.expected_total);
  EXPECT_EQ(direct.expected_penalty, 0);
}

TEST(SweepReservationWaiting, CsvLayoutAndErrors) {
  const Instance inst = reference_instance();
  const CostSurface s = sweep_reservation_waiting(inst, std::vector<std::int64_t>{0, 1}, waits_ms(1, 3));
  std::ostringstream out;
  emit_csv(s, out);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "reserved,arranged_wait,total");
  std::getline(lines, line);
  EXPECT_EQ(line.substr(0, 11), "0,0.001000,");
  std::getline(lines, line);
  EXPECT_EQ(line.substr(0, 11), "0,0.002000,");
  const std::string text = out.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 7);
  EXPECT_THROW(sweep_reservation_waiting(inst, std::vector<std::int64_t>{0}, std::vector<Duration>{}), ModelError);
  EXPECT_THROW(sweep_reservation_waiting(inst, std::vector<std::int64_t>{40}, waits_ms(1, 1)), ModelError);
}

}  // namespace
}  // namespace qres
