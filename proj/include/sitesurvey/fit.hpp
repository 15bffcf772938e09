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
 * \file fit.hpp
 *
 * \brief Least-squares estimation of a log-distance model from a survey.
 *
 * Measured path loss (tx - rssi) is regressed on log10(d / d0). The slope
 * divided by 10 is the path loss exponent, the intercept is PL(d0), and the
 * shadowing spread is the residual standard error with N - 2 degrees of
 * freedom (zero for a two-point fit).
 */

#ifndef SITESURVEY_FIT_HPP
#define SITESURVEY_FIT_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <sitesurvey/propagation.hpp>
#include <sitesurvey/units.hpp>

namespace sitesurvey {

struct FitResult
{
	LogDistanceModel model;
	double r_squared{1.0};
	std::size_t num_samples{0};
	/// Measured minus predicted path loss, in input order.
	std::vector<double> residuals;
};

class FitError : public std::invalid_argument
{
public:
	enum class Kind
	{
		insufficient_data,
		degenerate_abscissa
	};

	FitError(Kind kind, const std::string& what)
	: std::invalid_argument(what),
	  kind_(kind)
	{
	}

	Kind kind() const noexcept { return kind_; }

private:
	Kind kind_;
};

inline FitResult fit_log_distance(const Survey& survey, DistanceMeters d0 = DistanceMeters{1.0})
{
	require_positive(d0);
	const auto& samples = survey.samples;
	const std::size_t count = samples.size();
	if (count < 2)
	{
		throw FitError(FitError::Kind::insufficient_data, "insufficient data: at least 2 samples required");
	}
	for (const auto& s : samples)
	{
		validate(s);
	}
	detail::require_finite(survey.ap.tx_power.value, "tx power");

	bool distinct = false;
	for (const auto& s : samples)
	{
		if (s.distance.value != samples.front().distance.value)
		{
			distinct = true;
			break;
		}
	}
	if (!distinct)
	{
		throw FitError(FitError::Kind::degenerate_abscissa, "degenerate abscissa: all distances are identical");
	}

	std::vector<double> x(count);
	std::vector<double> y(count);
	for (std::size_t i = 0; i < count; ++i)
	{
		x[i] = std::log10(samples[i].distance.value / d0.value);
		y[i] = path_loss_db(survey.ap.tx_power, samples[i].rssi);
	}

	// Two-pass centered sums.
	const double num = static_cast<double>(count);
	double x_mean = 0.0;
	double y_mean = 0.0;
	for (std::size_t i = 0; i < count; ++i)
	{
		x_mean += x[i];
		y_mean += y[i];
	}
	x_mean /= num;
	y_mean /= num;

	double sxx = 0.0;
	double sxy = 0.0;
	double syy = 0.0;
	for (std::size_t i = 0; i < count; ++i)
	{
		const double dx = x[i] - x_mean;
		const double dy = y[i] - y_mean;
		sxx += dx * dx;
		sxy += dx * dy;
		syy += dy * dy;
	}
	if (!(sxx > 0.0))
	{
		throw FitError(FitError::Kind::degenerate_abscissa, "degenerate abscissa: zero spread in log distance");
	}

	const double slope = sxy / sxx;
	const double intercept = y_mean - slope * x_mean;

	FitResult result;
	result.num_samples = count;
	result.residuals.resize(count);
	double ss_res = 0.0;
	for (std::size_t i = 0; i < count; ++i)
	{
		const double r = y[i] - (intercept + slope * x[i]);
		result.residuals[i] = r;
		ss_res += r * r;
	}

	result.model.pl_d0_db = intercept;
	result.model.d0 = d0;
	result.model.n = slope / 10.0;
	result.model.sigma_db = count > 2 ? std::sqrt(ss_res / (num - 2.0)) : 0.0;
	result.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
	if (result.r_squared < 0.0)
	{
		result.r_squared = 0.0;
	}
	return result;
}

/// Outcome for one location of fit_many: either a result or an error message.
struct LocationFit
{
	std::string location_id;
	std::optional<FitResult> result;
	std::string error;

	bool ok() const noexcept { return result.has_value(); }
};

/**
 * Fits every survey independently. A failing survey produces an entry with
 * an error message instead of aborting the batch. Output order follows input.
 */
inline std::vector<LocationFit> fit_many(const std::vector<Survey>& surveys, DistanceMeters d0 = DistanceMeters{1.0})
{
	if (surveys.empty())
	{
		throw std::invalid_argument("no surveys");
	}
	std::vector<LocationFit> out;
	out.reserve(surveys.size());
	for (const auto& survey : surveys)
	{
		LocationFit entry;
		entry.location_id = survey.location_id;
		try
		{
			entry.result = fit_log_distance(survey, d0);
		}
		catch (const std::exception& e)
		{
			entry.error = e.what();
		}
		out.push_back(std::move(entry));
	}
	return out;
}

} // namespace sitesurvey

#endif // SITESURVEY_FIT_HPP
