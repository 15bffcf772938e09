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

/**
 * \file coverage.hpp
 *
 * \brief Coverage-region classification and predicted-RSSI heatmaps.
 *
 * The default region table has four bands:
 *
 * | Region | Range (m) | RSSI (dBm)  |
 * |--------|-----------|-------------|
 * | A      | 2 - 4     | -56 to -48  |
 * | B      | 4 - 10    | -64 to -56  |
 * | C      | 10 - 25   | -72 to -64  |
 * | D      | > 25      | -80 to -72  |
 *
 * Each band owns its lower (weaker) edge. A is unbounded above in RSSI and
 * below in distance; D is unbounded in distance. RSSI under the weakest
 * edge is OutOfCoverage.
 */

#ifndef SITESURVEY_COVERAGE_HPP
#define SITESURVEY_COVERAGE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <sitesurvey/propagation.hpp>
#include <sitesurvey/units.hpp>

namespace sitesurvey {

/// Ordered by signal quality: A is the strongest.
enum class Region
{
	OutOfCoverage = 0,
	D = 1,
	C = 2,
	B = 3,
	A = 4
};

/// True when \a lhs is the same as or a stronger region than \a rhs.
constexpr bool at_least(Region lhs, Region rhs) noexcept
{
	return static_cast<int>(lhs) >= static_cast<int>(rhs);
}

/// Single-letter tag: A, B, C, D or OUT.
constexpr std::string_view to_string(Region r) noexcept
{
	switch (r)
	{
		case Region::A: return "A";
		case Region::B: return "B";
		case Region::C: return "C";
		case Region::D: return "D";
		case Region::OutOfCoverage: break;
	}
	return "OUT";
}

struct RegionTable
{
	/// Band edges in dBm, strongest first: A top, A/B, B/C, C/D, D bottom.
	std::array<double, 5> rssi_bounds{-48.0, -56.0, -64.0, -72.0, -80.0};
	/// Distance edges in meters: A/B, B/C, C/D.
	std::array<double, 3> range_bounds{4.0, 10.0, 25.0};
};

inline void validate(const RegionTable& t)
{
	for (std::size_t i = 0; i < t.rssi_bounds.size(); ++i)
	{
		detail::require_finite(t.rssi_bounds[i], "rssi bound");
		if (i > 0 && !(t.rssi_bounds[i] < t.rssi_bounds[i - 1]))
		{
			throw std::invalid_argument("rssi bounds must be strictly descending");
		}
	}
	for (std::size_t i = 0; i < t.range_bounds.size(); ++i)
	{
		detail::require_finite(t.range_bounds[i], "range bound");
		if (i > 0 && !(t.range_bounds[i] > t.range_bounds[i - 1]))
		{
			throw std::invalid_argument("range bounds must be strictly ascending");
		}
	}
}

inline Region classify_rssi(PowerDbm rssi, const RegionTable& table = {})
{
	detail::require_finite(rssi.value, "rssi");
	const auto& b = table.rssi_bounds;
	if (rssi.value >= b[1]) return Region::A;
	if (rssi.value >= b[2]) return Region::B;
	if (rssi.value >= b[3]) return Region::C;
	if (rssi.value >= b[4]) return Region::D;
	return Region::OutOfCoverage;
}

inline Region classify_distance(DistanceMeters d, const RegionTable& table = {})
{
	detail::require_finite(d.value, "distance");
	if (d.value < 0.0)
	{
		throw std::domain_error("distance must be non-negative");
	}
	const auto& b = table.range_bounds;
	if (d.value < b[0]) return Region::A;
	if (d.value < b[1]) return Region::B;
	if (d.value < b[2]) return Region::C;
	return Region::D;
}

struct Extent
{
	double x_min{0.0};
	double x_max{0.0};
	double y_min{0.0};
	double y_max{0.0};
};

struct HeatmapCell
{
	PowerDbm predicted_rssi;
	Region region{Region::OutOfCoverage};
};

/// Row-major raster: row j spans y, column i spans x.
struct HeatmapGrid
{
	double ap_x{0.0};
	double ap_y{0.0};
	Extent extent;
	double resolution{1.0};
	std::size_t cols{0};
	std::size_t rows{0};
	std::vector<HeatmapCell> cells;

	double center_x(std::size_t col) const noexcept
	{
		return extent.x_min + (static_cast<double>(col) + 0.5) * resolution;
	}

	double center_y(std::size_t row) const noexcept
	{
		return extent.y_min + (static_cast<double>(row) + 0.5) * resolution;
	}

	const HeatmapCell& at(std::size_t col, std::size_t row) const { return cells.at(row * cols + col); }
};

/**
 * \brief Predicted RSSI and region at every cell center around an AP.
 *
 * Distances inside the model's reference distance are clamped to d0.
 */
inline HeatmapGrid generate_heatmap(const LogDistanceModel& model,
									PowerDbm tx,
									double ap_x,
									double ap_y,
									const Extent& extent,
									double resolution,
									const RegionTable& table = {})
{
	validate(model);
	validate(table);
	detail::require_finite(tx.value, "tx power");
	detail::require_finite(ap_x, "ap x");
	detail::require_finite(ap_y, "ap y");
	if (!std::isfinite(resolution) || !(resolution > 0.0))
	{
		throw std::domain_error("resolution must be positive");
	}
	for (double v : {extent.x_min, extent.x_max, extent.y_min, extent.y_max})
	{
		detail::require_finite(v, "extent");
	}
	if (!(extent.x_min < extent.x_max) || !(extent.y_min < extent.y_max))
	{
		throw std::domain_error("extent is empty");
	}

	HeatmapGrid grid;
	grid.ap_x = ap_x;
	grid.ap_y = ap_y;
	grid.extent = extent;
	grid.resolution = resolution;
	grid.cols = static_cast<std::size_t>(std::ceil((extent.x_max - extent.x_min) / resolution));
	grid.rows = static_cast<std::size_t>(std::ceil((extent.y_max - extent.y_min) / resolution));
	grid.cells.resize(grid.cols * grid.rows);

	for (std::size_t row = 0; row < grid.rows; ++row)
	{
		const double dy = grid.center_y(row) - ap_y;
		for (std::size_t col = 0; col < grid.cols; ++col)
		{
			const double dx = grid.center_x(col) - ap_x;
			const double d = std::max(std::hypot(dx, dy), model.d0.value);
			HeatmapCell& cell = grid.cells[row * grid.cols + col];
			cell.predicted_rssi = predict_rssi(model, tx, DistanceMeters{d});
			cell.region = classify_rssi(cell.predicted_rssi, table);
		}
	}
	return grid;
}

} // namespace sitesurvey

#endif // SITESURVEY_COVERAGE_HPP
