#pragma once

#include <cstdint>
#include <random>

namespace georoute {

// Independent random streams carved from one master seed, so that e.g.
// adding flows never perturbs node placement.
enum class Stream : std::uint64_t
{
    placement = 1,
    kinematics = 2,
    flows = 3,
    monte_carlo = 4,
};

// splitmix64 finaliser; used to decorrelate (seed, stream, index) triples.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::mt19937_64 make_stream(std::uint64_t seed, Stream purpose, std::uint64_t index = 0)
{
    return std::mt19937_64(mix64(mix64(mix64(seed) ^ static_cast<std::uint64_t>(purpose)) ^ index));
}

} // namespace georoute
