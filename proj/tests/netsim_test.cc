#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "georoute/errors.hpp"
#include "georoute/netsim.hpp"

using namespace georoute;
using std::numbers::pi;

namespace {

SimConfig adjacent_pair()
{
    SimConfig c;
    c.field_width = 100.0;
    c.field_height = 100.0;
    c.node_count = 2;
    c.tx_range = 250.0;
    c.flows = 10;
    return c;
}

} // namespace

TEST(SimConfig, Validation)
{
    SimConfig c;
    EXPECT_NO_THROW(c.validate());
    c.tx_range = -5;
    EXPECT_THROW(c.validate(), ConfigError);
    c = {};
    c.time_step = 2.0;
    EXPECT_THROW(c.validate(), ConfigError);
    c = {};
    c.speed_min = 30.0;
    EXPECT_THROW(c.validate(), ConfigError);
    c = {};
    c.density = 0.0;
    EXPECT_THROW(c.validate(), ConfigError);
    c.node_count = 5;
    EXPECT_NO_THROW(c.validate());
}

TEST(GenerateNodes, FixedCountAndDeterminism)
{
    SimConfig c;
    c.node_count = 1;
    const NetworkSnapshot one = generate_nodes(c);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_TRUE(neighbors(one.vehicles()[0].id, one).empty());

    c = {};
    const NetworkSnapshot a = generate_nodes(c), b = generate_nodes(c);
    EXPECT_EQ(a.vehicles(), b.vehicles());
    for (const Vehicle& v : a.vehicles()) {
        EXPECT_TRUE(c.field().contains(v.position));
        EXPECT_GE(v.speed, c.speed_min);
        EXPECT_LE(v.speed, c.speed_max);
        EXPECT_GT(v.heading.radians, -pi);
        EXPECT_LE(v.heading.radians, pi);
    }
    c.seed = 2;
    EXPECT_NE(a.vehicles(), generate_nodes(c).vehicles());
}

TEST(GenerateNodes, PoissonMeanCount)
{
    SimConfig c;
    c.density = 100.0 / (c.field_width * c.field_height);
    double total = 0.0;
    constexpr int kSeeds = 10000;
    for (int s = 0; s < kSeeds; ++s) {
        c.seed = static_cast<std::uint64_t>(s);
        total += static_cast<double>(generate_nodes(c).size());
    }
    EXPECT_NEAR(total / kSeeds, 100.0, 1.0);
}

TEST(StepMobility, Examples)
{
    const Field field{1000.0, 1000.0};
    const NetworkSnapshot still({{0, {10, 20}, 0.0, {1.0}}}, 100.0);
    EXPECT_EQ(step_mobility(still, 5.0, field).vehicles()[0].position, (Position{10, 20}));

    const NetworkSnapshot edge({{0, {999, 500}, 10.0, {0.0}}, {1, {5, 5}, 3.0, {-pi / 2}}}, 100.0);
    const NetworkSnapshot moved = step_mobility(edge, 1.0, field);
    ASSERT_EQ(moved.size(), 2u);
    EXPECT_NEAR(moved.vehicles()[0].position.x, 991.0, 1e-9);
    EXPECT_NEAR(moved.vehicles()[0].position.y, 500.0, 1e-9);
    EXPECT_NEAR(moved.vehicles()[0].heading.radians, pi, 1e-12);
    // Bottom edge: y = 5 - 3 -> 2, no reflection yet.
    EXPECT_NEAR(moved.vehicles()[1].position.y, 2.0, 1e-9);

    EXPECT_THROW(step_mobility(edge, 0.0, field), InvalidArgument);
}

TEST(StepMobility, StaysInFieldAndPreservesSpeed)
{
    SimConfig c;
    c.speed_min = 0.0;
    c.speed_max = 60.0;
    NetworkSnapshot s = generate_nodes(c);
    const auto speeds = [](const NetworkSnapshot& snap) {
        std::vector<double> out;
        for (const Vehicle& v : snap.vehicles())
            out.push_back(v.speed);
        return out;
    };
    const auto before = speeds(s);
    for (int i = 0; i < 500; ++i) {
        s = step_mobility(s, 0.7, c.field());
        for (const Vehicle& v : s.vehicles())
            ASSERT_TRUE(c.field().contains(v.position));
    }
    EXPECT_EQ(speeds(s), before);
}

TEST(BeaconView, Examples)
{
    const Field field{1000.0, 1000.0};
    const NetworkSnapshot s({{0, {100, 100}, 0.0, {0.0}}, {1, {500, 500}, 10.0, {pi / 2}}}, 100.0);

    // Exact tick: identical to ground truth.
    auto view = beacon_view(s, 3.0, 1.0, field);
    EXPECT_EQ(view.at(0), (Position{100, 100}));
    EXPECT_EQ(view.at(1), (Position{500, 500}));

    // Just past a tick, stationary nodes are still exact.
    view = beacon_view(s, 3.0 + 1e-6, 1.0, field);
    EXPECT_EQ(view.at(0), (Position{100, 100}));

    // Mid-interval, the moving node lags by speed * 0.4 s.
    view = beacon_view(s, 7.4, 1.0, field);
    EXPECT_NEAR(view.at(1).x, 500.0, 1e-9);
    EXPECT_NEAR(view.at(1).y, 496.0, 1e-9);

    EXPECT_THROW(beacon_view(s, 1.0, 0.0, field), InvalidArgument);
}

TEST(BeaconView, UndoesReflection)
{
    const Field field{1000.0, 1000.0};
    const NetworkSnapshot at_tick({{0, {998, 300}, 10.0, {0.0}}}, 100.0);
    const NetworkSnapshot later = step_mobility(at_tick, 0.5, field);
    const auto view = beacon_view(later, 2.5, 1.0, field);
    EXPECT_NEAR(view.at(0).x, 998.0, 1e-9);
    EXPECT_NEAR(view.at(0).y, 300.0, 1e-9);
}

TEST(RunCampaign, NoFlows)
{
    SimConfig c = adjacent_pair();
    c.flows = 0;
    const CampaignMetrics m = run_campaign(c);
    EXPECT_EQ(m.sent, 0);
    EXPECT_FALSE(m.pdr);
    std::ostringstream out;
    write_metrics_row(out, m);
    EXPECT_NE(out.str().find(",0,0,null,null,null,"), std::string::npos) << out.str();
}

TEST(RunCampaign, AdjacentPairAlwaysDelivers)
{
    for (Protocol p : {Protocol::dir, Protocol::lar, Protocol::dlar}) {
        SimConfig c = adjacent_pair();
        c.protocol = p;
        const CampaignMetrics m = run_campaign(c);
        EXPECT_EQ(m.sent, 10);
        EXPECT_EQ(m.delivered, 10);
        EXPECT_EQ(*m.pdr, 1.0);
        EXPECT_EQ(*m.mean_hop_count, 1.0);
        EXPECT_DOUBLE_EQ(*m.mean_delay_ms, 2.0);
    }
}

TEST(RunCampaign, ConservationAndDeterminism)
{
    for (Protocol p : {Protocol::dir, Protocol::lar, Protocol::dlar}) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            SimConfig c;
            c.protocol = p;
            c.seed = seed;
            c.density = 4e-5;
            const CampaignMetrics a = run_campaign(c), b = run_campaign(c);
            std::int64_t total = 0;
            for (auto n : a.outcomes)
                total += n;
            EXPECT_EQ(total, a.sent);
            EXPECT_EQ(a.count(RouteOutcome::delivered), a.delivered);

            std::ostringstream ra, rb;
            write_metrics_row(ra, a);
            write_metrics_row(rb, b);
            EXPECT_EQ(ra.str(), rb.str());
        }
    }
}

TEST(RunCampaign, ProtocolsShareScenario)
{
    SimConfig c;
    c.seed = 17;
    std::uint64_t hash = 0;
    for (Protocol p : {Protocol::dir, Protocol::lar, Protocol::dlar}) {
        c.protocol = p;
        const CampaignMetrics m = run_campaign(c);
        if (hash)
            EXPECT_EQ(m.scenario_hash, hash);
        hash = m.scenario_hash;
    }
    c.seed = 18;
    EXPECT_NE(run_campaign(c).scenario_hash, hash);
}

TEST(RunCampaign, RejectsInvalidConfigUpFront)
{
    SimConfig c;
    c.beacon_interval = 0.0;
    EXPECT_THROW(run_campaign(c), ConfigError);
    std::vector<SimConfig> batch{SimConfig{}, c};
    EXPECT_THROW(run_campaigns(batch), ConfigError);
}

TEST(RunCampaigns, OrderIndependentOfThreads)
{
    std::vector<SimConfig> cells;
    for (std::uint64_t s = 1; s <= 6; ++s) {
        SimConfig c;
        c.seed = s;
        c.flows = 40;
        cells.push_back(c);
    }
    const auto serial = run_campaigns(cells, 1);
    const auto parallel = run_campaigns(cells, 4);
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        EXPECT_EQ(serial[i].seed, cells[i].seed);
        EXPECT_EQ(serial[i].scenario_hash, parallel[i].scenario_hash);
        EXPECT_EQ(serial[i].delivered, parallel[i].delivered);
    }
}

TEST(MetricsCsv, Header)
{
    std::ostringstream out;
    write_metrics_header(out);
    EXPECT_EQ(out.str(), "protocol,density,tx_range,seed,sent,delivered,pdr,mean_hops,mean_delay_ms,void_drops,"
                         "ttl_drops,loop_drops,zone_unreachable\n");
}
