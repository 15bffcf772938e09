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

// sitesurvey: fit, predict, heatmap, plan and synth commands over the
// survey CSV and model JSON formats in <sitesurvey/io.hpp>.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <sitesurvey/sitesurvey.hpp>

namespace {

using namespace sitesurvey;

constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

std::vector<Survey> load_surveys(const std::string& path, const ApConfig& ap)
{
	std::ifstream in(path);
	if (!in)
	{
		throw std::runtime_error("cannot open survey file '" + path + "'");
	}
	try
	{
		return parse_survey(in, ap);
	}
	catch (const ParseError& e)
	{
		throw std::runtime_error(path + ": " + e.what());
	}
}

ModelRecord load_model(const std::string& path, const std::string& location)
{
	std::ifstream in(path);
	if (!in)
	{
		throw std::runtime_error("cannot open model file '" + path + "'");
	}
	const auto records = read_models(in);
	if (location.empty())
	{
		if (records.size() != 1)
		{
			throw UsageError("model file holds " + std::to_string(records.size()) + " models; pick one with --location");
		}
		return records.front();
	}
	for (const auto& r : records)
	{
		if (r.name == location)
		{
			return r;
		}
	}
	throw UsageError("no model named '" + location + "' in " + path);
}

RegionTable region_table(const std::string& thresholds)
{
	RegionTable table;
	if (!thresholds.empty())
	{
		const auto values = parse_number_list(thresholds, table.rssi_bounds.size());
		std::copy(values.begin(), values.end(), table.rssi_bounds.begin());
	}
	try
	{
		validate(table);
	}
	catch (const std::exception& e)
	{
		throw UsageError(std::string("--region-thresholds: ") + e.what());
	}
	return table;
}

std::ofstream open_output(const std::string& path)
{
	std::ofstream out(path, std::ios::binary);
	if (!out)
	{
		throw std::runtime_error("cannot write '" + path + "'");
	}
	return out;
}

struct FitArgs
{
	std::string survey;
	double tx_power_dbm{0.0};
	double d0_m{1.0};
	double frequency_mhz{2432.0};
	std::string out;
};

int run_fit(const FitArgs& args)
{
	ApConfig ap;
	ap.tx_power = PowerDbm{args.tx_power_dbm};
	ap.frequency_mhz = args.frequency_mhz;
	if (!(args.d0_m > 0.0))
	{
		throw UsageError("--d0-m must be positive");
	}
	const auto surveys = load_surveys(args.survey, ap);
	const auto fits = fit_many(surveys, DistanceMeters{args.d0_m});

	bool failed = false;
	std::vector<ModelRecord> records;
	std::cout << fit_report_header << '\n';
	for (const auto& f : fits)
	{
		if (!f.ok())
		{
			std::cerr << "sitesurvey: fit " << f.location_id << ": " << f.error << '\n';
			failed = true;
			continue;
		}
		std::cout << format_fit_row(f.location_id, *f.result) << '\n';
		ModelRecord rec;
		rec.name = f.location_id;
		rec.model = f.result->model;
		rec.tx_power = ap.tx_power;
		rec.frequency_mhz = ap.frequency_mhz;
		rec.num_samples = f.result->num_samples;
		rec.r_squared = f.result->r_squared;
		records.push_back(std::move(rec));
	}
	if (!args.out.empty() && !records.empty())
	{
		auto out = open_output(args.out);
		write_models(out, records);
	}
	return failed ? exit_failure : 0;
}

struct PredictArgs
{
	std::string model;
	std::string location;
	std::optional<double> tx_power_dbm;
	double distance_m{0.0};
	std::string format{"text"};
	std::string thresholds;
};

int run_predict(const PredictArgs& args)
{
	if (!(args.distance_m > 0.0))
	{
		throw UsageError("--distance-m must be positive");
	}
	const auto table = region_table(args.thresholds);
	const auto rec = load_model(args.model, args.location);
	const PowerDbm tx = args.tx_power_dbm ? PowerDbm{*args.tx_power_dbm} : rec.tx_power;
	const PowerDbm rssi = predict_rssi(rec.model, tx, DistanceMeters{args.distance_m});
	const Region region = classify_rssi(rssi, table);
	if (args.format == "json")
	{
		const nlohmann::json doc{
			{"model", rec.name},
			{"distance_m", args.distance_m},
			{"tx_power_dbm", tx.value},
			{"rssi_dbm", rssi.value},
			{"region", std::string(to_string(region))},
		};
		std::cout << doc.dump() << '\n';
	}
	else
	{
		std::cout << detail::fixed(rssi.value, 2) << " dBm, region " << to_string(region) << '\n';
	}
	return 0;
}

struct HeatmapArgs
{
	std::string model;
	std::string location;
	std::optional<double> tx_power_dbm;
	double ap_x{0.0};
	double ap_y{0.0};
	std::string extent;
	double resolution{1.0};
	std::string out;
	std::string thresholds;
};

int run_heatmap(const HeatmapArgs& args)
{
	if (!(args.resolution > 0.0))
	{
		throw UsageError("--resolution must be positive");
	}
	Extent extent;
	try
	{
		const auto v = parse_number_list(args.extent, 4);
		extent = Extent{v[0], v[1], v[2], v[3]};
	}
	catch (const ParseError& e)
	{
		throw UsageError(std::string("--extent: ") + e.what());
	}
	if (!(extent.x_min < extent.x_max) || !(extent.y_min < extent.y_max))
	{
		throw UsageError("--extent must satisfy x0 < x1 and y0 < y1");
	}
	const auto table = region_table(args.thresholds);
	const auto rec = load_model(args.model, args.location);
	const PowerDbm tx = args.tx_power_dbm ? PowerDbm{*args.tx_power_dbm} : rec.tx_power;
	const auto grid = generate_heatmap(rec.model, tx, args.ap_x, args.ap_y, extent, args.resolution, table);
	auto out = open_output(args.out);
	write_heatmap_csv(out, grid);
	return 0;
}

struct PlanArgs
{
	std::string survey;
	double tx_power_dbm{0.0};
	double sensitivity_dbm{0.0};
	double margin_db{default_margin_threshold_db};
};

int run_plan(const PlanArgs& args)
{
	if (!(args.margin_db >= 0.0))
	{
		throw UsageError("--margin-db must be non-negative");
	}
	ApConfig ap;
	ap.tx_power = PowerDbm{args.tx_power_dbm};
	ap.sensitivity = PowerDbm{args.sensitivity_dbm};
	const auto surveys = load_surveys(args.survey, ap);
	const auto report = plan_surveys(surveys, PowerDbm{args.sensitivity_dbm}, args.margin_db);

	bool failed = false;
	std::cout << plan_report_header << '\n';
	for (const auto& e : report.entries)
	{
		if (!e.ok())
		{
			std::cerr << "sitesurvey: plan " << e.location_id << ": " << e.error << '\n';
			failed = true;
			continue;
		}
		std::cout << format_plan_row(e) << '\n';
	}
	return failed ? exit_failure : 0;
}

struct SynthArgs
{
	double n{2.0};
	double sigma{0.0};
	double pl_d0{40.0};
	double d0_m{1.0};
	double tx_power_dbm{23.0};
	std::size_t samples{0};
	double dmin_m{1.0};
	double dmax_m{10.0};
	std::uint64_t seed{0};
	std::string location_id{"synthetic"};
	std::string out;
};

int run_synth(const SynthArgs& args)
{
	SynthSpec spec;
	spec.model = LogDistanceModel{args.pl_d0, DistanceMeters{args.d0_m}, args.n, args.sigma};
	spec.tx = PowerDbm{args.tx_power_dbm};
	spec.num_samples = args.samples;
	spec.d_min = DistanceMeters{args.dmin_m};
	spec.d_max = DistanceMeters{args.dmax_m};
	spec.seed = args.seed;
	spec.location_id = args.location_id;
	try
	{
		validate(spec);
	}
	catch (const std::exception& e)
	{
		throw UsageError(e.what());
	}
	const Survey survey = generate_survey(spec);
	auto out = open_output(args.out);
	write_survey_csv(out, {survey});
	return 0;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"WLAN site-survey toolkit: path-loss fitting, coverage prediction and AP planning"};
	app.require_subcommand(1);

	FitArgs fit_args;
	auto* fit = app.add_subcommand("fit", "Fit a log-distance model per survey location");
	fit->add_option("--survey", fit_args.survey, "Survey CSV")->required();
	fit->add_option("--tx-power-dbm", fit_args.tx_power_dbm, "AP transmit power (dBm)")->required();
	fit->add_option("--d0-m", fit_args.d0_m, "Reference distance (m)")->capture_default_str();
	fit->add_option("--frequency-mhz", fit_args.frequency_mhz, "Carrier frequency recorded in model files")
		->capture_default_str();
	fit->add_option("--out", fit_args.out, "Write fitted models as JSON");

	PredictArgs predict_args;
	auto* predict = app.add_subcommand("predict", "Predict RSSI and coverage region at a distance");
	predict->add_option("--model", predict_args.model, "Model JSON")->required();
	predict->add_option("--location", predict_args.location, "Model name when the file holds several");
	predict->add_option("--tx-power-dbm", predict_args.tx_power_dbm, "Transmit power (dBm); defaults to the model's");
	predict->add_option("--distance-m", predict_args.distance_m, "Distance from the AP (m)")->required();
	predict->add_option("--format", predict_args.format, "Output format")
		->check(CLI::IsMember({"text", "json"}))
		->capture_default_str();
	predict->add_option("--region-thresholds", predict_args.thresholds,
		"Five descending RSSI band edges in dBm (default -48,-56,-64,-72,-80)");

	HeatmapArgs heatmap_args;
	auto* heatmap = app.add_subcommand("heatmap", "Rasterize predicted RSSI around an AP");
	heatmap->add_option("--model", heatmap_args.model, "Model JSON")->required();
	heatmap->add_option("--location", heatmap_args.location, "Model name when the file holds several");
	heatmap->add_option("--tx-power-dbm", heatmap_args.tx_power_dbm, "Transmit power (dBm); defaults to the model's");
	heatmap->add_option("--ap-x", heatmap_args.ap_x, "AP x position (m)")->required();
	heatmap->add_option("--ap-y", heatmap_args.ap_y, "AP y position (m)")->required();
	heatmap->add_option("--extent", heatmap_args.extent, "x0,x1,y0,y1 in meters")->required();
	heatmap->add_option("--resolution", heatmap_args.resolution, "Cell size (m)")->required();
	heatmap->add_option("--out", heatmap_args.out, "Output grid CSV")->required();
	heatmap->add_option("--region-thresholds", heatmap_args.thresholds,
		"Five descending RSSI band edges in dBm (default -48,-56,-64,-72,-80)");

	PlanArgs plan_args;
	auto* plan = app.add_subcommand("plan", "Flag locations whose weakest reading is near receiver sensitivity");
	plan->add_option("--survey", plan_args.survey, "Survey CSV")->required();
	plan->add_option("--tx-power-dbm", plan_args.tx_power_dbm, "AP transmit power (dBm)")->required();
	plan->add_option("--sensitivity-dbm", plan_args.sensitivity_dbm, "Receiver sensitivity (dBm)")->required();
	plan->add_option("--margin-db", plan_args.margin_db, "Required margin above sensitivity (dB)")
		->capture_default_str();

	SynthArgs synth_args;
	auto* synth = app.add_subcommand("synth", "Generate a seeded synthetic survey");
	synth->add_option("--n", synth_args.n, "Path loss exponent")->required();
	synth->add_option("--sigma", synth_args.sigma, "Shadowing standard deviation (dB)")->required();
	synth->add_option("--pl-d0", synth_args.pl_d0, "Path loss at d0 (dB)")->required();
	synth->add_option("--d0-m", synth_args.d0_m, "Reference distance (m)")->capture_default_str();
	synth->add_option("--tx-power-dbm", synth_args.tx_power_dbm, "Transmit power (dBm)")->required();
	synth->add_option("--samples", synth_args.samples, "Number of samples")->required();
	synth->add_option("--dmin-m", synth_args.dmin_m, "Smallest distance (m)")->required();
	synth->add_option("--dmax-m", synth_args.dmax_m, "Largest distance (m)")->required();
	synth->add_option("--seed", synth_args.seed, "Random seed")->required();
	synth->add_option("--location-id", synth_args.location_id, "Location id for every row")->capture_default_str();
	synth->add_option("--out", synth_args.out, "Output survey CSV")->required();

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError& e)
	{
		const int code = app.exit(e);
		return code == 0 ? 0 : exit_usage;
	}

	try
	{
		if (*fit) return run_fit(fit_args);
		if (*predict) return run_predict(predict_args);
		if (*heatmap) return run_heatmap(heatmap_args);
		if (*plan) return run_plan(plan_args);
		if (*synth) return run_synth(synth_args);
	}
	catch (const UsageError& e)
	{
		std::cerr << "sitesurvey: usage error: " << e.what() << '\n';
		return exit_usage;
	}
	catch (const std::exception& e)
	{
		std::cerr << "sitesurvey: error: " << e.what() << '\n';
		return exit_failure;
	}
	return exit_usage;
}
