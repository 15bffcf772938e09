/*
 * Copyright 2026 The sitesurvey Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include <gtest/gtest.h>

#include <sitesurvey/coverage.hpp>

#include "oracles.hpp"

using namespace sitesurvey;

TEST(ClassifyRssi, TableBands)
{
	EXPECT_EQ(classify_rssi(PowerDbm{-60}), Region::B);
	EXPECT_EQ(classify_rssi(PowerDbm{-45}), Region::A);
	EXPECT_EQ(classify_rssi(PowerDbm{-85}), Region::OutOfCoverage);
	EXPECT_EQ(classify_rssi(PowerDbm{-68}), Region::C);
	EXPECT_EQ(classify_rssi(PowerDbm{-76}), Region::D);
}

TEST(ClassifyRssi, LowerEdgeBelongsToTheBand)
{
	EXPECT_EQ(classify_rssi(PowerDbm{-48}), Region::A);
	EXPECT_EQ(classify_rssi(PowerDbm{-56}), Region::A);
	EXPECT_EQ(classify_rssi(PowerDbm{-64}), Region::B);
	EXPECT_EQ(classify_rssi(PowerDbm{-72}), Region::C);
	EXPECT_EQ(classify_rssi(PowerDbm{-80}), Region::D);
	EXPECT_EQ(classify_rssi(PowerDbm{std::nextafter(-80.0, -100.0)}), Region::OutOfCoverage);
	EXPECT_EQ(classify_rssi(PowerDbm{std::nextafter(-56.0, -100.0)}), Region::B);
}

TEST(ClassifyRssi, RejectsNonFinite)
{
	EXPECT_THROW(classify_rssi(PowerDbm{std::numeric_limits<double>::quiet_NaN()}), std::domain_error);
	EXPECT_THROW(classify_rssi(PowerDbm{-std::numeric_limits<double>::infinity()}), std::domain_error);
}

TEST(ClassifyRssi, CustomTable)
{
	RegionTable t;
	t.rssi_bounds = {-40, -50, -60, -70, -90};
	EXPECT_EQ(classify_rssi(PowerDbm{-85}, t), Region::D);
	EXPECT_EQ(classify_rssi(PowerDbm{-50}, t), Region::A);
	t.rssi_bounds = {-40, -60, -50, -70, -90};
	EXPECT_THROW(validate(t), std::invalid_argument);
}

TEST(ClassifyDistance, TableRanges)
{
	EXPECT_EQ(classify_distance(DistanceMeters{3}), Region::A);
	EXPECT_EQ(classify_distance(DistanceMeters{30}), Region::D);
	EXPECT_EQ(classify_distance(DistanceMeters{1}), Region::A);
	EXPECT_EQ(classify_distance(DistanceMeters{0}), Region::A);
	EXPECT_EQ(classify_distance(DistanceMeters{4}), Region::B);
	EXPECT_EQ(classify_distance(DistanceMeters{10}), Region::C);
	EXPECT_EQ(classify_distance(DistanceMeters{25}), Region::D);
	EXPECT_EQ(classify_distance(DistanceMeters{1e6}), Region::D);
	EXPECT_THROW(classify_distance(DistanceMeters{-0.1}), std::domain_error);
}

TEST(ClassifyProperty, TotalAndMonotone)
{
	Region prev = Region::A;
	for (double r = 0.0; r >= -120.0; r -= 0.25)
	{
		const Region cur = classify_rssi(PowerDbm{r});
		EXPECT_TRUE(at_least(prev, cur)) << r;
		prev = cur;
	}
	prev = Region::A;
	for (double d = 0.0; d <= 100.0; d += 0.25)
	{
		const Region cur = classify_distance(DistanceMeters{d});
		EXPECT_TRUE(at_least(prev, cur)) << d;
		prev = cur;
	}
}

TEST(RegionNames, Tokens)
{
	EXPECT_EQ(to_string(Region::A), "A");
	EXPECT_EQ(to_string(Region::D), "D");
	EXPECT_EQ(to_string(Region::OutOfCoverage), "OUT");
}

TEST(Heatmap, CellCountAndCenters)
{
	const LogDistanceModel m{40.0, DistanceMeters{1.0}, 2.0, 0.0};
	const auto g = generate_heatmap(m, PowerDbm{23}, 0.0, 0.0, Extent{0.0, 10.0, 0.0, 4.5}, 2.0);
	EXPECT_EQ(g.cols, 5u);
	EXPECT_EQ(g.rows, 3u);
	EXPECT_EQ(g.cells.size(), 15u);
	EXPECT_EQ(g.center_x(0), 1.0);
	EXPECT_EQ(g.center_y(2), 5.0);
}

TEST(Heatmap, PythagoreanCell)
{
	const LogDistanceModel m{40.0, DistanceMeters{1.0}, 2.0, 0.0};
	// single cell centered at (3, 4)
	const auto g = generate_heatmap(m, PowerDbm{23}, 0.0, 0.0, Extent{2.5, 3.5, 3.5, 4.5}, 1.0);
	ASSERT_EQ(g.cells.size(), 1u);
	EXPECT_NEAR(g.cells[0].predicted_rssi.value, predict_rssi(m, PowerDbm{23}, DistanceMeters{5.0}).value, 1e-12);
}

TEST(Heatmap, CellAtApClampsToReferenceDistance)
{
	const LogDistanceModel m{45.0, DistanceMeters{2.0}, 3.0, 0.0};
	const auto g = generate_heatmap(m, PowerDbm{23}, 1.0, 1.0, Extent{0.5, 1.5, 0.5, 1.5}, 1.0);
	ASSERT_EQ(g.cells.size(), 1u);
	EXPECT_EQ(g.cells[0].predicted_rssi.value, 23.0 - 45.0);
}

TEST(Heatmap, RegionFlipsAtCoverageRadius)
{
	const LogDistanceModel m{40.0, DistanceMeters{1.0}, 2.0, 0.0};
	const double radius = oracle::bisect_decreasing(
		[](double d) { return 23.0 - 40.0 - 20.0 * std::log10(d) + 56.0; }, 1.0, 1000.0);
	EXPECT_NEAR(radius, 89.12509381337455, 1e-9);

	const auto g = generate_heatmap(m, PowerDbm{23}, 0.0, 0.0, Extent{-100.0, 100.0, -100.0, 100.0}, 0.5);
	for (std::size_t row = 0; row < g.rows; ++row)
	{
		for (std::size_t col = 0; col < g.cols; ++col)
		{
			const double d = std::hypot(g.center_x(col), g.center_y(row));
			if (d < radius - 1e-6)
			{
				EXPECT_EQ(g.at(col, row).region, Region::A);
			}
			else if (d > radius + 1e-6 && d < radius + 1.0)
			{
				EXPECT_EQ(g.at(col, row).region, Region::B);
			}
		}
	}
}

TEST(Heatmap, SymmetryAndClassifierConsistency)
{
	const LogDistanceModel m{40.0, DistanceMeters{1.0}, 3.45, 13.92};
	const auto g = generate_heatmap(m, PowerDbm{23}, 0.0, 0.0, Extent{-20.5, 20.5, -20.5, 20.5}, 1.0);
	std::map<long, double> by_radius;
	for (std::size_t row = 0; row < g.rows; ++row)
	{
		for (std::size_t col = 0; col < g.cols; ++col)
		{
			const auto& cell = g.at(col, row);
			EXPECT_EQ(cell.region, classify_rssi(cell.predicted_rssi));
			const long x = std::lround(g.center_x(col));
			const long y = std::lround(g.center_y(row));
			auto [it, fresh] = by_radius.emplace(x * x + y * y, cell.predicted_rssi.value);
			if (!fresh)
			{
				EXPECT_NEAR(it->second, cell.predicted_rssi.value, 1e-9);
			}
		}
	}
}

TEST(Heatmap, Errors)
{
	const LogDistanceModel m{40.0, DistanceMeters{1.0}, 2.0, 0.0};
	EXPECT_THROW(generate_heatmap(m, PowerDbm{23}, 0, 0, Extent{0, 1, 0, 1}, 0.0), std::domain_error);
	EXPECT_THROW(generate_heatmap(m, PowerDbm{23}, 0, 0, Extent{0, 1, 0, 1}, -1.0), std::domain_error);
	EXPECT_THROW(generate_heatmap(m, PowerDbm{23}, 0, 0, Extent{1, 1, 0, 1}, 0.5), std::domain_error);
	EXPECT_THROW(generate_heatmap(m, PowerDbm{23}, 0, 0, Extent{0, 1, 2, 1}, 0.5), std::domain_error);
}
