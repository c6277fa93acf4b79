#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "georoute/errors.hpp"
#include "georoute/zones.hpp"

using namespace georoute;

TEST(ExpectedZone, Examples)
{
    auto ez = expected_zone({100, 100}, 0.0, 0.0, 10.0);
    EXPECT_EQ(ez.center, (Position{100, 100}));
    EXPECT_EQ(ez.radius, 0.0);

    EXPECT_DOUBLE_EQ(expected_zone({100, 100}, 5.0, 0.0, 10.0).radius, 50.0);
    EXPECT_EQ(expected_zone({0, 0}, 20.0, 3.0, 3.0).radius, 0.0);
}

TEST(ExpectedZone, RejectsBadInputs)
{
    EXPECT_THROW(expected_zone({0, 0}, 1.0, 5.0, 4.0), InvalidArgument);
    EXPECT_THROW(expected_zone({0, 0}, -1.0, 0.0, 4.0), InvalidArgument);
}

TEST(RequestZone, Examples)
{
    EXPECT_EQ(request_zone({0, 0}, {{100, 100}, 50}), (RequestZone{{0, 0}, {150, 150}}));
    EXPECT_EQ(request_zone({100, 100}, {{100, 100}, 50}), (RequestZone{{50, 50}, {150, 150}}));
    EXPECT_EQ(request_zone({200, 60}, {{100, 100}, 30}), (RequestZone{{70, 60}, {200, 130}}));
}

TEST(InRequestZone, BoundaryInclusive)
{
    const RequestZone rz{{0, 0}, {150, 150}};
    EXPECT_TRUE(in_request_zone({75, 75}, rz));
    EXPECT_TRUE(in_request_zone({150, 150}, rz));
    EXPECT_TRUE(in_request_zone({0, 75}, rz));
    EXPECT_FALSE(in_request_zone({151, 75}, rz));
    EXPECT_FALSE(in_request_zone({75, -0.001}, rz));
}

TEST(RequestZone, ContainmentMinimalityMonotonicity)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> coord(-1000.0, 1000.0);
    std::uniform_real_distribution<double> rad(0.0, 400.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    constexpr double eps = 1e-6;

    for (int trial = 0; trial < 200; ++trial) {
        const Position src{coord(rng), coord(rng)};
        const ExpectedZone ez{{coord(rng), coord(rng)}, rad(rng)};
        const RequestZone rz = request_zone(src, ez);

        ASSERT_LE(rz.min_corner.x, rz.max_corner.x);
        ASSERT_LE(rz.min_corner.y, rz.max_corner.y);
        EXPECT_TRUE(rz.contains(src));

        for (int i = 0; i < 1000; ++i) {
            const double r = ez.radius * std::sqrt(unit(rng));
            const double t = 2 * std::numbers::pi * unit(rng);
            const Position p{ez.center.x + r * std::cos(t), ez.center.y + r * std::sin(t)};
            // Allow for rounding in the polar-to-cartesian conversion.
            const RequestZone padded{{rz.min_corner.x - 1e-9, rz.min_corner.y - 1e-9},
                                     {rz.max_corner.x + 1e-9, rz.max_corner.y + 1e-9}};
            ASSERT_TRUE(padded.contains(p));
        }

        // Shrinking any side drops the source or a disk extreme point.
        const Position extremes[] = {
            src,
            {ez.center.x - ez.radius, ez.center.y},
            {ez.center.x + ez.radius, ez.center.y},
            {ez.center.x, ez.center.y - ez.radius},
            {ez.center.x, ez.center.y + ez.radius},
        };
        RequestZone shrunk[4] = {rz, rz, rz, rz};
        shrunk[0].min_corner.x += eps;
        shrunk[1].min_corner.y += eps;
        shrunk[2].max_corner.x -= eps;
        shrunk[3].max_corner.y -= eps;
        for (const RequestZone& s : shrunk) {
            bool lost = false;
            for (const Position& p : extremes)
                lost = lost || !s.contains(p);
            EXPECT_TRUE(lost);
        }

        const RequestZone bigger = request_zone(src, {ez.center, ez.radius + rad(rng)});
        EXPECT_LE(bigger.min_corner.x, rz.min_corner.x);
        EXPECT_LE(bigger.min_corner.y, rz.min_corner.y);
        EXPECT_GE(bigger.max_corner.x, rz.max_corner.x);
        EXPECT_GE(bigger.max_corner.y, rz.max_corner.y);
    }
}
