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
 * \file planner.hpp
 *
 * \brief Link-margin check against receiver sensitivity.
 *
 * A location needs a new access point when its weakest reading sits less
 * than \c margin_threshold_db above the receiver sensitivity (strict
 * comparison; exactly at the threshold is not flagged).
 */

#ifndef SITESURVEY_PLANNER_HPP
#define SITESURVEY_PLANNER_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <sitesurvey/units.hpp>

namespace sitesurvey {

inline constexpr double default_margin_threshold_db = 10.0;

inline double link_margin_db(PowerDbm rssi, PowerDbm sensitivity)
{
	detail::require_finite(rssi.value, "rssi");
	detail::require_finite(sensitivity.value, "sensitivity");
	return rssi.value - sensitivity.value;
}

inline bool needs_new_ap(PowerDbm rssi, PowerDbm sensitivity, double margin_threshold_db = default_margin_threshold_db)
{
	detail::require_finite(margin_threshold_db, "margin threshold");
	if (margin_threshold_db < 0.0)
	{
		throw std::domain_error("margin threshold must be non-negative");
	}
	return link_margin_db(rssi, sensitivity) < margin_threshold_db;
}

struct PlanEntry
{
	std::string location_id;
	PowerDbm worst_rssi;
	double margin_db{0.0};
	bool needs_new_ap{false};
	/// Non-empty when the survey could not be assessed.
	std::string error;

	bool ok() const noexcept { return error.empty(); }
};

struct PlanReport
{
	std::vector<PlanEntry> entries;
	PowerDbm sensitivity;
	double margin_threshold_db{default_margin_threshold_db};
};

inline PlanReport plan_surveys(const std::vector<Survey>& surveys,
							   PowerDbm sensitivity,
							   double margin_threshold_db = default_margin_threshold_db)
{
	if (surveys.empty())
	{
		throw std::invalid_argument("no surveys");
	}
	detail::require_finite(sensitivity.value, "sensitivity");
	detail::require_finite(margin_threshold_db, "margin threshold");
	if (margin_threshold_db < 0.0)
	{
		throw std::domain_error("margin threshold must be non-negative");
	}

	PlanReport report;
	report.sensitivity = sensitivity;
	report.margin_threshold_db = margin_threshold_db;
	report.entries.reserve(surveys.size());
	for (const auto& survey : surveys)
	{
		PlanEntry entry;
		entry.location_id = survey.location_id;
		try
		{
			if (survey.samples.empty())
			{
				throw std::invalid_argument("survey '" + survey.location_id + "' has no samples");
			}
			const auto worst = std::min_element(survey.samples.begin(), survey.samples.end(),
				[](const Sample& a, const Sample& b) { return a.rssi.value < b.rssi.value; });
			entry.worst_rssi = worst->rssi;
			entry.margin_db = link_margin_db(entry.worst_rssi, sensitivity);
			entry.needs_new_ap = needs_new_ap(entry.worst_rssi, sensitivity, margin_threshold_db);
		}
		catch (const std::exception& e)
		{
			entry.error = e.what();
		}
		report.entries.push_back(std::move(entry));
	}
	return report;
}

} // namespace sitesurvey

#endif // SITESURVEY_PLANNER_HPP
