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
 * \file synthgen.hpp
 *
 * \brief Seeded synthetic surveys drawn from a log-distance model with
 *  log-normal shadowing.
 *
 * The random stream is fixed, not delegated to <random>:
 *
 *  - xoshiro256** (Blackman and Vigna, 2018) for 64-bit words, with its
 *    256-bit state filled by four successive SplitMix64 outputs of the seed;
 *  - uniforms as (w >> 11) * 2^-53, shifted into (0, 1] where a log is taken;
 *  - standard normals by the basic Box-Muller transform, consuming two
 *    uniforms per pair (cosine branch first, then sine).
 *
 * Distances are log-uniform over [d_min, d_max] and come from a second
 * xoshiro256** stream seeded with seed ^ distance_stream_salt, so that the
 * shadowing sequence of a survey equals gaussian_stream(seed, N).
 */

#ifndef SITESURVEY_SYNTHGEN_HPP
#define SITESURVEY_SYNTHGEN_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <sitesurvey/propagation.hpp>
#include <sitesurvey/units.hpp>

namespace sitesurvey {

class SplitMix64
{
public:
	explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

	constexpr std::uint64_t operator()() noexcept
	{
		std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
		z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
		z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
		return z ^ (z >> 31);
	}

private:
	std::uint64_t state_;
};

class Xoshiro256ss
{
public:
	using result_type = std::uint64_t;

	explicit constexpr Xoshiro256ss(std::uint64_t seed) noexcept
	{
		SplitMix64 sm(seed);
		for (auto& word : s_)
		{
			word = sm();
		}
	}

	static constexpr result_type min() noexcept { return 0; }
	static constexpr result_type max() noexcept { return ~result_type{0}; }

	constexpr result_type operator()() noexcept
	{
		const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
		const std::uint64_t t = s_[1] << 17;
		s_[2] ^= s_[0];
		s_[3] ^= s_[1];
		s_[1] ^= s_[2];
		s_[0] ^= s_[3];
		s_[2] ^= t;
		s_[3] = rotl(s_[3], 45);
		return result;
	}

	/// Uniform on [0, 1) with 53 random bits.
	constexpr double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

	/// Uniform on (0, 1].
	constexpr double uniform_open_zero() noexcept
	{
		return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53;
	}

private:
	static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

	std::array<std::uint64_t, 4> s_{};
};

inline constexpr std::uint64_t distance_stream_salt = 0xD1B54A32D192ED03ULL;

/// First \a count standard normals of the stream for \a seed.
inline std::vector<double> gaussian_stream(std::uint64_t seed, std::size_t count)
{
	std::vector<double> out;
	out.reserve(count);
	Xoshiro256ss gen(seed);
	while (out.size() < count)
	{
		const double u1 = gen.uniform_open_zero();
		const double u2 = gen.uniform();
		const double r = std::sqrt(-2.0 * std::log(u1));
		const double theta = 2.0 * std::numbers::pi * u2;
		out.push_back(r * std::cos(theta));
		if (out.size() < count)
		{
			out.push_back(r * std::sin(theta));
		}
	}
	return out;
}

struct SynthSpec
{
	LogDistanceModel model;
	PowerDbm tx{23.0};
	std::size_t num_samples{1};
	DistanceMeters d_min{1.0};
	DistanceMeters d_max{10.0};
	std::uint64_t seed{0};
	std::string location_id{"synthetic"};
};

inline void validate(const SynthSpec& spec)
{
	validate(spec.model);
	detail::require_finite(spec.tx.value, "tx power");
	require_positive(spec.d_min);
	require_positive(spec.d_max);
	if (!(spec.d_min.value <= spec.d_max.value))
	{
		throw std::domain_error("d_min must not exceed d_max");
	}
	if (spec.num_samples < 1)
	{
		throw std::domain_error("num_samples must be at least 1");
	}
	if (spec.location_id.empty())
	{
		throw std::domain_error("location id is empty");
	}
}

inline Survey generate_survey(const SynthSpec& spec)
{
	validate(spec);
	const std::vector<double> noise = gaussian_stream(spec.seed, spec.num_samples);
	Xoshiro256ss dist_gen(spec.seed ^ distance_stream_salt);
	const double log_min = std::log10(spec.d_min.value);
	const double log_span = std::log10(spec.d_max.value) - log_min;

	Survey survey;
	survey.location_id = spec.location_id;
	survey.ap.name = spec.location_id;
	survey.ap.tx_power = spec.tx;
	survey.samples.reserve(spec.num_samples);
	for (std::size_t i = 0; i < spec.num_samples; ++i)
	{
		double d = std::pow(10.0, log_min + log_span * dist_gen.uniform());
		// pow can round a hair outside the closed interval
		d = std::clamp(d, spec.d_min.value, spec.d_max.value);
		const double mean_pl = log_distance_path_loss_db(spec.model, DistanceMeters{d});
		const double pl = mean_pl + spec.model.sigma_db * noise[i];
		survey.samples.push_back(Sample{DistanceMeters{d}, PowerDbm{spec.tx.value - pl}});
	}
	return survey;
}

} // namespace sitesurvey

#endif // SITESURVEY_SYNTHGEN_HPP
