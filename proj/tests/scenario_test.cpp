#include <gtest/gtest.h>

#include <random>

#include "qres/errors.hpp"
#include "qres/scenario.hpp"
#include "test_support.hpp"

namespace qres {
namespace {

using testing::q;

ScenarioSpace reference_space() { return build_space(reference_instance().circuits[0]); }

TEST(BuildSpace, ReferenceSetsAreUniformProduct) {
  const ScenarioSpace s = reference_space();
  ASSERT_EQ(s.size(), 117u);
  for (const auto& p : s.probabilities) EXPECT_EQ(p, q(1, 117));
  // Demand-major, then wait.
  EXPECT_EQ(s.scenarios[0].demand_qubits, 10);
  EXPECT_EQ(s.scenarios[0].wait_time, Duration{1000});
  EXPECT_EQ(s.scenarios[8].wait_time, Duration{9000});
  EXPECT_EQ(s.scenarios[9].demand_qubits, 11);
  EXPECT_EQ(s.scenarios[116].demand_qubits, 22);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s.scenarios[i].index, i);
}

TEST(BuildSpace, Singleton) {
  const std::vector<std::int64_t> b{5};
  const std::vector<Duration> e{Duration{2000}};
  const ScenarioSpace s = build_space("c", b, e);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.probabilities[0], 1);
}

TEST(BuildSpace, GivenDemandMarginal) {
  const std::vector<std::int64_t> b{1, 2};
  const std::vector<Duration> e{Duration{1'000'000}};
  const std::vector<Exact> pb{q(3, 10), q(7, 10)};
  const ScenarioSpace s = build_space("c", b, e, pb);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.probabilities[0], q(3, 10));
  EXPECT_EQ(s.probabilities[1], q(7, 10));
}

TEST(BuildSpace, Errors) {
  const std::vector<std::int64_t> b{1, 2};
  const std::vector<Duration> e{Duration{1}};
  const std::vector<std::int64_t> none;
  EXPECT_THROW(build_space("c", none, e), ModelError);
  EXPECT_THROW(build_space("c", b, {}), ModelError);
  const std::vector<Exact> short_probs{q(1)};
  EXPECT_THROW(build_space("c", b, e, short_probs), ModelError);
  const std::vector<Exact> bad_sum{q(1, 2), q(1, 4)};
  EXPECT_THROW(build_space("c", b, e, bad_sum), ModelError);
  const std::vector<Exact> negative{q(3, 2), q(-1, 2)};
  EXPECT_THROW(build_space("c", b, e, negative), ModelError);
}

TEST(BuildSpace, JointTableAndMarginals) {
  const std::vector<std::int64_t> b{1, 4};
  const std::vector<Duration> e{Duration{10}, Duration{20}, Duration{30}};
  const std::vector<Exact> joint{q(1, 10), q(0), q(2, 10), q(3, 10), q(1, 10), q(3, 10)};
  const ScenarioSpace s = build_space_joint("c", b, e, joint);
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s.probabilities, joint);
  const DemandMarginal dm = demand_marginal(s);
  EXPECT_EQ(dm.values, b);
  EXPECT_EQ(dm.probs, (std::vector<Exact>{q(3, 10), q(7, 10)}));
  const WaitMarginal wm = wait_marginal(s);
  EXPECT_EQ(wm.values, e);
  EXPECT_EQ(wm.probs, (std::vector<Exact>{q(4, 10), q(1, 10), q(5, 10)}));
  EXPECT_THROW(build_space_joint("c", b, e, std::vector<Exact>(5, q(1, 5))), ModelError);
}

TEST(Expectation, Constant) { EXPECT_EQ(expectation(reference_space(), [](const Scenario&) { return 1; }), 1); }

TEST(Expectation, MeanDemand) {
  EXPECT_EQ(expectation(reference_space(), [](const Scenario& w) { return w.demand_qubits; }), 16);
}

TEST(Expectation, OverWaitAgainstNineTermSum) {
  const Duration t{5000};
  const Exact got = expectation(reference_space(), [&](const Scenario& w) {
    return to_exact(t > w.wait_time ? t - w.wait_time : Duration{});
  });
  // (0.004 + 0.003 + 0.002 + 0.001) / 9
  Exact hand = 0;
  for (int ms = 1; ms <= 9; ++ms) hand += ms < 5 ? q(5 - ms, 1000) : q(0);
  hand /= 9;
  EXPECT_EQ(hand, q(10, 9000));
  EXPECT_EQ(got, hand);
}

TEST(Expectation, LinearityProperty) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-50, 50);
  for (int round = 0; round < 200; ++round) {
    const int nb = 1 + static_cast<int>(rng() % 6);
    const int ne = 1 + static_cast<int>(rng() % 4);
    std::vector<std::int64_t> b;
    std::vector<Duration> e;
    for (int i = 0; i < nb; ++i) b.push_back(i * 3 + static_cast<std::int64_t>(rng() % 3));
    for (int i = 0; i < ne; ++i) e.push_back(Duration{i * 1000 + static_cast<std::int64_t>(rng() % 1000)});
    std::vector<Exact> pb;
    Exact total = 0;
    for (int i = 0; i < nb; ++i) {
      pb.push_back(q(1 + static_cast<long>(rng() % 9)));
      total += pb.back();
    }
    for (auto& p : pb) p /= total;
    const ScenarioSpace s = build_space("c", b, e, pb);

    Exact sum = 0;
    for (const auto& p : s.probabilities) sum += p;
    EXPECT_EQ(sum, 1);

    std::vector<int> fv(s.size()), gv(s.size());
    for (auto& v : fv) v = coef(rng);
    for (auto& v : gv) v = coef(rng);
    const Exact a = q(coef(rng), 7);
    const Exact c = q(coef(rng), 3);
    const auto f = [&](const Scenario& w) { return Exact(fv[w.index]); };
    const auto g = [&](const Scenario& w) { return Exact(gv[w.index]); };
    const Exact lhs = expectation(s, [&](const Scenario& w) { return Exact(a * f(w) + c * g(w)); });
    EXPECT_EQ(lhs, a * expectation(s, f) + c * expectation(s, g));
  }
}

TEST(BuildSpace, Deterministic) {
  const Circuit c = reference_instance().circuits[0];
  EXPECT_EQ(build_space(c), build_space(c));
}

}  // namespace
}  // namespace qres
