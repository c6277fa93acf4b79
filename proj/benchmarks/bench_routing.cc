#include <benchmark/benchmark.h>

#include "georoute/netsim.hpp"
#include "georoute/routing.hpp"

using namespace georoute;

namespace {

NetworkSnapshot snapshot(std::int64_t nodes)
{
    SimConfig c;
    c.node_count = static_cast<int>(nodes);
    c.seed = 7;
    return generate_nodes(c);
}

void BM_DirNextHop(benchmark::State& state)
{
    const NetworkSnapshot s = snapshot(state.range(0));
    const Vehicle& src = s.vehicles().front();
    const Position dest = s.vehicles().back().position;
    for (auto _ : state)
        benchmark::DoNotOptimize(dir_next_hop(src, dest, s));
}
BENCHMARK(BM_DirNextHop)->Arg(50)->Arg(200)->Arg(1000);

void BM_DlarNextHop(benchmark::State& state)
{
    const NetworkSnapshot s = snapshot(state.range(0));
    const Vehicle& dst = s.vehicles().back();
    const Packet pkt = Packet::make(s.vehicles().front().id, dst.id, dst.position, dst.speed, 0.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(dlar_next_hop(s.vehicles().front(), pkt, s, 1.0));
}
BENCHMARK(BM_DlarNextHop)->Arg(50)->Arg(200)->Arg(1000);

void BM_Route(benchmark::State& state)
{
    const auto protocol = static_cast<Protocol>(state.range(0));
    const NetworkSnapshot s = snapshot(state.range(1));
    const Vehicle& dst = s.vehicles().back();
    const Packet pkt = Packet::make(s.vehicles().front().id, dst.id, dst.position, dst.speed, 0.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(route(protocol, pkt, s, 1.0));
    state.SetLabel(std::string(to_string(protocol)));
}
BENCHMARK(BM_Route)->ArgsProduct({{0, 1, 2}, {100, 400}});

void BM_Campaign(benchmark::State& state)
{
    SimConfig c;
    c.protocol = static_cast<Protocol>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(run_campaign(c));
    state.SetLabel(std::string(to_string(c.protocol)));
}
BENCHMARK(BM_Campaign)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

} // namespace
