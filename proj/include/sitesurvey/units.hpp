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
 * \file units.hpp
 *
 * \brief Domain types for site-survey data and the dB/dBm arithmetic used
 *  throughout the library.
 *
 * Distances are stored in meters and powers in dBm. Feet only appear at
 * ingestion time (see feet_to_meters). All logarithms are base 10.
 */

#ifndef SITESURVEY_UNITS_HPP
#define SITESURVEY_UNITS_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sitesurvey {

/// Power level in decibel-milliwatts.
struct PowerDbm
{
	double value{0.0};

	friend constexpr bool operator==(PowerDbm, PowerDbm) = default;
	friend constexpr auto operator<=>(PowerDbm, PowerDbm) = default;
};

/// Distance in meters. Zero is allowed for storage; propagation needs > 0.
struct DistanceMeters
{
	double value{0.0};

	friend constexpr bool operator==(DistanceMeters, DistanceMeters) = default;
	friend constexpr auto operator<=>(DistanceMeters, DistanceMeters) = default;
};

/// One field reading: distance from the reference point and the RSSI seen there.
struct Sample
{
	DistanceMeters distance;
	PowerDbm rssi;

	friend bool operator==(const Sample&, const Sample&) = default;
};

/**
 * \brief Access point configuration active while a survey was taken.
 *
 * Gains and system loss are dimensionless linear factors. The receiver
 * sensitivity has no default: client devices range from -90 to -120 dBm.
 */
struct ApConfig
{
	std::string name;
	PowerDbm tx_power{23.0};
	double frequency_mhz{2432.0};
	std::optional<PowerDbm> sensitivity;
	double antenna_gain_tx{1.0};
	double antenna_gain_rx{1.0};
	double system_loss{1.0};

	friend bool operator==(const ApConfig&, const ApConfig&) = default;
};

/// Samples collected at one named location.
struct Survey
{
	std::string location_id;
	std::vector<Sample> samples;
	ApConfig ap;

	friend bool operator==(const Survey&, const Survey&) = default;
};

namespace detail {

inline void require_finite(double x, const char* what)
{
	if (!std::isfinite(x))
	{
		throw std::domain_error(std::string(what) + " must be finite");
	}
}

} // namespace detail

/// Throws std::domain_error unless \a d is a usable propagation distance.
inline void require_positive(DistanceMeters d)
{
	detail::require_finite(d.value, "distance");
	if (!(d.value > 0.0))
	{
		throw std::domain_error("distance must be positive");
	}
}

inline void validate(const ApConfig& ap)
{
	detail::require_finite(ap.tx_power.value, "tx power");
	if (ap.sensitivity)
	{
		detail::require_finite(ap.sensitivity->value, "sensitivity");
	}
	if (!std::isfinite(ap.frequency_mhz) || !(ap.frequency_mhz > 0.0))
	{
		throw std::domain_error("frequency must be positive");
	}
	if (!std::isfinite(ap.antenna_gain_tx) || !(ap.antenna_gain_tx > 0.0)
		|| !std::isfinite(ap.antenna_gain_rx) || !(ap.antenna_gain_rx > 0.0))
	{
		throw std::domain_error("antenna gains must be positive");
	}
	if (!std::isfinite(ap.system_loss) || !(ap.system_loss >= 1.0))
	{
		throw std::domain_error("system loss must be >= 1");
	}
}

inline void validate(const Sample& s)
{
	require_positive(s.distance);
	detail::require_finite(s.rssi.value, "rssi");
}

inline void validate(const Survey& survey)
{
	if (survey.location_id.empty())
	{
		throw std::invalid_argument("survey location id is empty");
	}
	if (survey.samples.empty())
	{
		throw std::invalid_argument("survey '" + survey.location_id + "' has no samples");
	}
	for (const auto& s : survey.samples)
	{
		validate(s);
	}
	validate(survey.ap);
}

inline PowerDbm mw_to_dbm(double power_mw)
{
	if (!std::isfinite(power_mw) || !(power_mw > 0.0))
	{
		throw std::domain_error("power in mW must be positive and finite");
	}
	return PowerDbm{10.0 * std::log10(power_mw)};
}

inline double dbm_to_mw(PowerDbm p)
{
	detail::require_finite(p.value, "power");
	return std::pow(10.0, p.value / 10.0);
}

/// Path loss in dB between a transmit level and a received level.
inline double path_loss_db(PowerDbm tx, PowerDbm rx)
{
	detail::require_finite(tx.value, "tx power");
	detail::require_finite(rx.value, "rx power");
	return tx.value - rx.value;
}

inline constexpr double meters_per_foot = 0.3048;

inline DistanceMeters feet_to_meters(double d_feet)
{
	detail::require_finite(d_feet, "distance");
	if (d_feet < 0.0)
	{
		throw std::domain_error("distance in feet must be non-negative");
	}
	return DistanceMeters{d_feet * meters_per_foot};
}

} // namespace sitesurvey

#endif // SITESURVEY_UNITS_HPP
