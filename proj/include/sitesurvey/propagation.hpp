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
 * \file propagation.hpp
 *
 * \brief Closed-form propagation models.
 *
 * Free space (Friis) and the log-distance model with its inversion to a
 * coverage radius. The Friis loss factor \c L is the dimensionless system
 * loss (>= 1), not an antenna dimension.
 */

#ifndef SITESURVEY_PROPAGATION_HPP
#define SITESURVEY_PROPAGATION_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <sitesurvey/units.hpp>

namespace sitesurvey {

inline constexpr double speed_of_light_mps = 299792458.0;

/**
 * \brief Mean log-distance path loss model with shadowing spread.
 *
 * PL(d) = pl_d0_db + 10 n log10(d / d0). The exponent may be any finite
 * value; sigma_db is the standard deviation of the Gaussian dB-scale
 * shadowing term.
 */
struct LogDistanceModel
{
	double pl_d0_db{0.0};
	DistanceMeters d0{1.0};
	double n{2.0};
	double sigma_db{0.0};

	friend bool operator==(const LogDistanceModel&, const LogDistanceModel&) = default;
};

struct FreeSpaceParams
{
	ApConfig ap;
};

inline void validate(const LogDistanceModel& m)
{
	detail::require_finite(m.pl_d0_db, "pl_d0");
	detail::require_finite(m.n, "path loss exponent");
	detail::require_finite(m.sigma_db, "sigma");
	require_positive(m.d0);
	if (m.sigma_db < 0.0)
	{
		throw std::domain_error("sigma must be non-negative");
	}
}

inline double wavelength_m(double frequency_mhz)
{
	if (!std::isfinite(frequency_mhz) || !(frequency_mhz > 0.0))
	{
		throw std::domain_error("frequency must be positive");
	}
	return speed_of_light_mps / (frequency_mhz * 1e6);
}

namespace detail {

// Gt Gr W^2 / ((4 pi d)^2 L); gains multiply first so swapping them is exact.
inline double friis_gain(const ApConfig& ap, DistanceMeters d)
{
	validate(ap);
	require_positive(d);
	const double w = wavelength_m(ap.frequency_mhz);
	const double four_pi_d = 4.0 * std::numbers::pi * d.value;
	const double antennas = ap.antenna_gain_tx * ap.antenna_gain_rx;
	return antennas * (w * w) / (four_pi_d * four_pi_d * ap.system_loss);
}

} // namespace detail

inline double free_space_path_loss_db(const FreeSpaceParams& p, DistanceMeters d)
{
	return -10.0 * std::log10(detail::friis_gain(p.ap, d));
}

/// Friis received power, evaluated in mW and returned in dBm.
inline PowerDbm friis_received_power(const FreeSpaceParams& p, DistanceMeters d)
{
	const double gain = detail::friis_gain(p.ap, d);
	return mw_to_dbm(dbm_to_mw(p.ap.tx_power) * gain);
}

/// Deterministic mean of the log-distance model (no shadowing term).
inline double log_distance_path_loss_db(const LogDistanceModel& m, DistanceMeters d)
{
	require_positive(d);
	require_positive(m.d0);
	return m.pl_d0_db + 10.0 * m.n * std::log10(d.value / m.d0.value);
}

inline PowerDbm predict_rssi(const LogDistanceModel& m, PowerDbm tx, DistanceMeters d)
{
	detail::require_finite(tx.value, "tx power");
	return PowerDbm{tx.value - log_distance_path_loss_db(m, d)};
}

/**
 * \brief Distance at which the predicted RSSI falls to \a threshold.
 *
 * Requires a decaying model (n > 0) and a threshold below \a tx.
 */
inline DistanceMeters coverage_radius(const LogDistanceModel& m, PowerDbm tx, PowerDbm threshold)
{
	detail::require_finite(tx.value, "tx power");
	detail::require_finite(threshold.value, "threshold");
	require_positive(m.d0);
	if (!(m.n > 0.0))
	{
		throw std::domain_error("model not invertible: path loss exponent must be positive");
	}
	if (!(threshold.value < tx.value))
	{
		throw std::domain_error("threshold must be below tx power");
	}
	const double excess_db = tx.value - threshold.value - m.pl_d0_db;
	return DistanceMeters{m.d0.value * std::pow(10.0, excess_db / (10.0 * m.n))};
}

} // namespace sitesurvey

#endif // SITESURVEY_PROPAGATION_HPP
