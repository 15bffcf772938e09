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
 * \file io.hpp
 *
 * \brief Text formats: survey CSV, model JSON, and the fit/plan/heatmap
 *  reports written by the command-line tool.
 *
 * Survey CSV:
 * \code
 * # comment lines start with '#'
 * location_id,distance,unit,rssi_dbm
 * room1,16,ft,-60
 * room1,2.5,m,-48.5
 * \endcode
 * Units are \c m or \c ft; feet are converted to meters on ingestion.
 */

#ifndef SITESURVEY_IO_HPP
#define SITESURVEY_IO_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <istream>
#include <iterator>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include <json.hpp>

#include <sitesurvey/coverage.hpp>
#include <sitesurvey/fit.hpp>
#include <sitesurvey/planner.hpp>
#include <sitesurvey/propagation.hpp>
#include <sitesurvey/units.hpp>

namespace sitesurvey {

/// Malformed input; line() is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error
{
public:
	ParseError(std::size_t line, const std::string& what)
	: std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
	  line_(line)
	{
	}

	std::size_t line() const noexcept { return line_; }

private:
	std::size_t line_;
};

inline constexpr std::string_view survey_csv_header = "location_id,distance,unit,rssi_dbm";

namespace detail {

inline std::string_view trim(std::string_view s) noexcept
{
	const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
	while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
	while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
	return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
	std::vector<std::string_view> out;
	std::size_t start = 0;
	for (;;)
	{
		const auto pos = s.find(sep, start);
		if (pos == std::string_view::npos)
		{
			out.push_back(trim(s.substr(start)));
			return out;
		}
		out.push_back(trim(s.substr(start, pos - start)));
		start = pos + 1;
	}
}

inline bool parse_double(std::string_view s, double& out) noexcept
{
	if (!s.empty() && s.front() == '+')
	{
		s.remove_prefix(1);
	}
	const char* end = s.data() + s.size();
	const auto [ptr, ec] = std::from_chars(s.data(), end, out);
	return ec == std::errc{} && ptr == end && !s.empty();
}

/// Shortest representation that reads back to the same double.
inline std::string shortest(double v)
{
	char buf[64];
	const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
	return std::string(buf, ptr);
}

inline std::string fixed(double v, int decimals)
{
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
	return buf;
}

} // namespace detail

/**
 * \brief Reads a survey CSV, grouping rows by location.
 *
 * Groups keep first-appearance order and rows keep file order. Every group
 * gets a copy of \a ap.
 */
inline std::vector<Survey> parse_survey(std::istream& in, const ApConfig& ap = {})
{
	std::vector<Survey> surveys;
	std::string line;
	std::size_t line_no = 0;
	bool have_header = false;
	while (std::getline(in, line))
	{
		++line_no;
		const std::string_view text = detail::trim(line);
		if (text.empty() || text.front() == '#')
		{
			continue;
		}
		if (!have_header)
		{
			const auto cols = detail::split(text, ',');
			if (cols.size() != 4 || cols[0] != "location_id" || cols[1] != "distance" || cols[2] != "unit"
				|| cols[3] != "rssi_dbm")
			{
				throw ParseError(line_no, "expected header '" + std::string(survey_csv_header) + "'");
			}
			have_header = true;
			continue;
		}

		const auto cols = detail::split(text, ',');
		if (cols.size() != 4)
		{
			throw ParseError(line_no, "expected 4 fields, got " + std::to_string(cols.size()));
		}
		if (cols[0].empty())
		{
			throw ParseError(line_no, "empty location_id");
		}
		double distance = 0.0;
		if (!detail::parse_double(cols[1], distance) || !std::isfinite(distance))
		{
			throw ParseError(line_no, "invalid distance '" + std::string(cols[1]) + "'");
		}
		if (!(distance > 0.0))
		{
			throw ParseError(line_no, "distance must be positive");
		}
		DistanceMeters meters;
		if (cols[2] == "m")
		{
			meters = DistanceMeters{distance};
		}
		else if (cols[2] == "ft")
		{
			meters = feet_to_meters(distance);
		}
		else
		{
			throw ParseError(line_no, "unknown unit '" + std::string(cols[2]) + "' (expected m or ft)");
		}
		double rssi = 0.0;
		if (!detail::parse_double(cols[3], rssi) || !std::isfinite(rssi))
		{
			throw ParseError(line_no, "invalid rssi '" + std::string(cols[3]) + "'");
		}

		auto it = std::find_if(surveys.begin(), surveys.end(),
			[&](const Survey& s) { return s.location_id == cols[0]; });
		if (it == surveys.end())
		{
			Survey fresh;
			fresh.location_id = std::string(cols[0]);
			fresh.ap = ap;
			surveys.push_back(std::move(fresh));
			it = std::prev(surveys.end());
		}
		it->samples.push_back(Sample{meters, PowerDbm{rssi}});
	}
	if (!have_header)
	{
		throw ParseError(0, "missing header line");
	}
	if (surveys.empty())
	{
		throw ParseError(0, "no data rows");
	}
	return surveys;
}

/// Writes samples in meters with round-trip precision.
inline void write_survey_csv(std::ostream& out, const std::vector<Survey>& surveys)
{
	out << survey_csv_header << '\n';
	for (const auto& survey : surveys)
	{
		for (const auto& s : survey.samples)
		{
			out << survey.location_id << ',' << detail::shortest(s.distance.value) << ",m,"
				<< detail::shortest(s.rssi.value) << '\n';
		}
	}
}

/// A fitted model plus the context it was fitted in.
struct ModelRecord
{
	std::string name;
	LogDistanceModel model;
	PowerDbm tx_power{23.0};
	double frequency_mhz{2432.0};
	std::size_t num_samples{0};
	double r_squared{1.0};

	friend bool operator==(const ModelRecord&, const ModelRecord&) = default;
};

inline void to_json(nlohmann::json& j, const ModelRecord& r)
{
	j = nlohmann::json{
		{"name", r.name},
		{"pl_d0_db", r.model.pl_d0_db},
		{"d0_m", r.model.d0.value},
		{"n", r.model.n},
		{"sigma_db", r.model.sigma_db},
		{"tx_power_dbm", r.tx_power.value},
		{"frequency_mhz", r.frequency_mhz},
		{"num_samples", r.num_samples},
		{"r_squared", r.r_squared},
	};
}

inline void from_json(const nlohmann::json& j, ModelRecord& r)
{
	j.at("name").get_to(r.name);
	j.at("pl_d0_db").get_to(r.model.pl_d0_db);
	j.at("d0_m").get_to(r.model.d0.value);
	j.at("n").get_to(r.model.n);
	j.at("sigma_db").get_to(r.model.sigma_db);
	j.at("tx_power_dbm").get_to(r.tx_power.value);
	j.at("frequency_mhz").get_to(r.frequency_mhz);
	j.at("num_samples").get_to(r.num_samples);
	j.at("r_squared").get_to(r.r_squared);
}

/// One record is written as an object, several as an array.
inline void write_models(std::ostream& out, const std::vector<ModelRecord>& records)
{
	const nlohmann::json doc = records.size() == 1 ? nlohmann::json(records.front()) : nlohmann::json(records);
	out << doc.dump(2) << '\n';
}

inline std::vector<ModelRecord> read_models(std::istream& in)
{
	std::vector<ModelRecord> out;
	try
	{
		const auto doc = nlohmann::json::parse(in);
		if (doc.is_array())
		{
			out = doc.get<std::vector<ModelRecord>>();
		}
		else
		{
			out.push_back(doc.get<ModelRecord>());
		}
	}
	catch (const nlohmann::json::exception& e)
	{
		throw ParseError(0, std::string("invalid model file: ") + e.what());
	}
	for (const auto& r : out)
	{
		validate(r.model);
	}
	if (out.empty())
	{
		throw ParseError(0, "model file holds no models");
	}
	return out;
}

inline constexpr std::string_view fit_report_header = "location_id,n,sigma_db,pl_d0_db,r_squared,num_samples";

inline std::string format_fit_row(const std::string& location_id, const FitResult& r)
{
	return location_id + ',' + detail::fixed(r.model.n, 4) + ',' + detail::fixed(r.model.sigma_db, 4) + ','
		+ detail::fixed(r.model.pl_d0_db, 4) + ',' + detail::fixed(r.r_squared, 4) + ','
		+ std::to_string(r.num_samples);
}

inline constexpr std::string_view plan_report_header = "location_id,worst_rssi_dbm,margin_db,needs_new_ap";

inline std::string format_plan_row(const PlanEntry& e)
{
	return e.location_id + ',' + detail::fixed(e.worst_rssi.value, 2) + ',' + detail::fixed(e.margin_db, 2) + ','
		+ (e.needs_new_ap ? "yes" : "no");
}

inline constexpr std::string_view heatmap_csv_header = "x_m,y_m,rssi_dbm,region";

/// One row per cell center, row-major (y outer, x inner).
inline void write_heatmap_csv(std::ostream& out, const HeatmapGrid& grid)
{
	out << heatmap_csv_header << '\n';
	for (std::size_t row = 0; row < grid.rows; ++row)
	{
		for (std::size_t col = 0; col < grid.cols; ++col)
		{
			const auto& cell = grid.at(col, row);
			out << detail::shortest(grid.center_x(col)) << ',' << detail::shortest(grid.center_y(row)) << ','
				<< detail::fixed(cell.predicted_rssi.value, 2) << ',' << to_string(cell.region) << '\n';
		}
	}
}

/// Parses "a,b,c,..." into exactly \a count finite numbers.
inline std::vector<double> parse_number_list(std::string_view text, std::size_t count)
{
	const auto parts = detail::split(text, ',');
	if (parts.size() != count)
	{
		throw ParseError(0, "expected " + std::to_string(count) + " comma-separated numbers");
	}
	std::vector<double> out(count);
	for (std::size_t i = 0; i < count; ++i)
	{
		if (!detail::parse_double(parts[i], out[i]) || !std::isfinite(out[i]))
		{
			throw ParseError(0, "invalid number '" + std::string(parts[i]) + "'");
		}
	}
	return out;
}

} // namespace sitesurvey

#endif // SITESURVEY_IO_HPP
