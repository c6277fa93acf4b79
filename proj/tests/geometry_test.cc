#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "georoute/errors.hpp"
#include "georoute/geometry.hpp"

using namespace georoute;
using std::numbers::pi;

namespace {

constexpr double kAngleTol = 1e-9;

Position rand_pos(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> d(-5000.0, 5000.0);
    return {d(rng), d(rng)};
}

} // namespace

TEST(Distance, Examples)
{
    EXPECT_DOUBLE_EQ(distance({0, 0}, {3, 4}), 5.0);
    EXPECT_EQ(distance({7, -2}, {7, -2}), 0.0);
    EXPECT_NEAR(distance({1.5, 2.5}, {4.5, 6.5}), 5.0, 5.0 * 1e-9);
}

TEST(Distance, SymmetricAndTriangle)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10000; ++i) {
        const Position a = rand_pos(rng), b = rand_pos(rng), c = rand_pos(rng);
        EXPECT_EQ(distance(a, b), distance(b, a));
        const double rhs = distance(a, b) + distance(b, c);
        EXPECT_LE(distance(a, c), rhs * (1.0 + 1e-9));
        EXPECT_GE(distance(a, b), 0.0);
    }
}

TEST(Bearing, Examples)
{
    EXPECT_NEAR(bearing({0, 0}, {1, 0}).radians, 0.0, kAngleTol);
    EXPECT_NEAR(bearing({0, 0}, {0, 1}).radians, pi / 2, kAngleTol);
    EXPECT_NEAR(bearing({0, 0}, {-1, -1}).radians, -3 * pi / 4, kAngleTol);
}

TEST(Bearing, WestIsPlusPi)
{
    EXPECT_EQ(bearing({0, 0}, {-1, 0}).radians, pi);
    EXPECT_EQ(bearing({0, 0}, {-1, -0.0}).radians, pi);
}

TEST(Bearing, CoincidentPointsThrow)
{
    EXPECT_THROW(bearing({2, 3}, {2, 3}), DegenerateGeometry);
}

TEST(DeviationAngle, Examples)
{
    EXPECT_NEAR(deviation_angle({0, 0}, {5, 5}, {10, 0}).radians, pi / 4, kAngleTol);
    EXPECT_EQ(deviation_angle({0, 0}, {3, 0}, {10, 0}).radians, 0.0);
    EXPECT_NEAR(deviation_angle({0, 0}, {-4, 0}, {10, 0}).radians, pi, kAngleTol);
}

TEST(DeviationAngle, DegenerateThrows)
{
    EXPECT_THROW(deviation_angle({1, 1}, {1, 1}, {5, 5}), DegenerateGeometry);
    EXPECT_THROW(deviation_angle({1, 1}, {5, 5}, {1, 1}), DegenerateGeometry);
}

TEST(DeviationAngle, Properties)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> rot(-pi, pi);
    std::uniform_real_distribution<double> scale(0.01, 100.0);
    for (int i = 0; i < 10000; ++i) {
        const Position s = rand_pos(rng), c = rand_pos(rng), d = rand_pos(rng);
        const double dev = deviation_angle(s, c, d).radians;
        ASSERT_GE(dev, 0.0);
        ASSERT_LE(dev, pi);

        EXPECT_NEAR(dev, deviation_angle(s, d, c).radians, kAngleTol);

        // Agrees with the wrapped bearing difference.
        const double gap = std::fabs(wrap_angle(bearing(s, c).radians - bearing(s, d).radians));
        EXPECT_NEAR(dev, gap, kAngleTol);

        // Rotation + positive scaling about s.
        const double th = rot(rng), k = scale(rng);
        const auto xf = [&](Position p) {
            const double dx = p.x - s.x, dy = p.y - s.y;
            return Position{s.x + k * (dx * std::cos(th) - dy * std::sin(th)),
                            s.y + k * (dx * std::sin(th) + dy * std::cos(th))};
        };
        EXPECT_NEAR(dev, deviation_angle(s, xf(c), xf(d)).radians, kAngleTol);
    }
}

TEST(WrapAngle, HalfOpenRange)
{
    EXPECT_EQ(wrap_angle(-pi), pi);
    EXPECT_EQ(wrap_angle(pi), pi);
    EXPECT_NEAR(wrap_angle(3 * pi / 2), -pi / 2, kAngleTol);
    EXPECT_NEAR(wrap_angle(-5 * pi / 2), -pi / 2, kAngleTol);
    EXPECT_NEAR(Angle::from_degrees(90).radians, pi / 2, kAngleTol);
    EXPECT_NEAR(Angle{pi}.degrees(), 180.0, 1e-12);
}
