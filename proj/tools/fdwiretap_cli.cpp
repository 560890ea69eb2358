// SPDX-License-Identifier: Apache-2.0
//
// fdwiretap: secrecy-rate simulation for two-way full-duplex MIMOME links
// Copyright (C) 2026 The fdwiretap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <fdwiretap/fdwiretap.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace fdwiretap::experiments;

namespace {

constexpr int kConfigError = 2;

std::vector<Scenario> scenario_source(const std::string &config) {
    return config.empty() ? builtin_catalog() : load_scenarios(config);
}

double column_mean(const std::vector<SweepRow> &rows, double SweepRow::*field) {
    double s = 0.0;
    for (const auto &r : rows)
        s += r.*field;
    return rows.empty() ? 0.0 : s / rows.size();
}

int cmd_list(const std::string &config) {
    for (const auto &s : scenario_source(config))
        std::cout << s.id << "  " << to_string(s.variable) << " x" << s.values.size() << "  "
                  << s.cases.size() << " cases  " << s.description << "\n";
    return 0;
}

int cmd_validate(const std::string &config) {
    const auto list = load_scenarios(config);
    std::cout << config << ": " << list.size() << " scenario(s) ok\n";
    return 0;
}

int cmd_run(const std::string &config, const std::vector<std::string> &ids, bool all, std::uint64_t seed,
            std::optional<int> trials, const std::string &out_dir, unsigned threads) {
    const auto source = scenario_source(config);
    std::vector<Scenario> todo;
    if (all || ids.empty())
        todo = source;
    else
        for (const auto &id : ids)
            todo.push_back(find_scenario(source, id));

    fs::create_directories(out_dir);
    RunOptions opts;
    opts.seed = seed;
    opts.trials = trials;
    opts.threads = threads;

    std::string manifest = "catalog_version " + std::string(kCatalogVersion) + "\n";
    manifest += "seed " + std::to_string(seed) + "\n";
    manifest += "source " + (config.empty() ? std::string("builtin") : fs::path(config).filename().string()) + "\n";
    for (const auto &sc : todo) {
        const auto res = run_scenario(sc, opts);
        const int n_trials = trials.value_or(sc.base.trials);
        const std::string csv = (fs::path(out_dir) / (sc.id + ".csv")).string();
        emit_csv(res.rows, csv);
        manifest += "scenario " + sc.id + " trials " + std::to_string(n_trials) + " rows " +
                    std::to_string(res.rows.size());
        if (!res.region.empty()) {
            emit_region_csv(res.region, (fs::path(out_dir) / (sc.id + "_region.csv")).string());
            manifest += " region_rows " + std::to_string(res.region.size());
        }
        manifest += "\n";

        int failed = 0;
        for (const auto &r : res.rows)
            failed += r.failed;
        char line[256];
        std::snprintf(line, sizeof line, "%-6s rows=%zu trials=%d mean_sum_secrecy=%.4f failed=%d -> %s",
                      sc.id.c_str(), res.rows.size(), n_trials,
                      column_mean(res.rows, &SweepRow::sum_secrecy), failed, csv.c_str());
        std::cout << line << std::endl;
    }
    detail::write_file((fs::path(out_dir) / "manifest.txt").string(), manifest);
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Secrecy-rate Monte Carlo sweeps for two-way full-duplex MIMOME links"};
    app.require_subcommand(1);

    std::string config;
    std::vector<std::string> ids;
    bool all = false;
    std::uint64_t seed = 42;
    std::optional<int> trials;
    std::string out_dir = "out";
    unsigned threads = 0;

    auto *run = app.add_subcommand("run", "run scenarios and write CSV files");
    auto *scenario_opt = run->add_option("--scenario", ids, "scenario id (repeatable)");
    run->add_flag("--all", all, "run every scenario")->excludes(scenario_opt);
    run->add_option("--seed", seed, "master seed");
    run->add_option("--trials", trials, "override the number of trials")->check(CLI::PositiveNumber);
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--config", config, "scenario file replacing the built-in catalog")->check(CLI::ExistingFile);
    run->add_option("--threads", threads, "worker threads, 0 = all cores");

    auto *list = app.add_subcommand("list", "print the scenario catalog");
    list->add_option("--config", config, "scenario file")->check(CLI::ExistingFile);

    auto *validate_cmd = app.add_subcommand("validate", "check a scenario file");
    validate_cmd->add_option("--config", config, "scenario file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kConfigError;
    }

    try {
        if (*list)
            return cmd_list(config);
        if (*validate_cmd)
            return cmd_validate(config);
        return cmd_run(config, ids, all, seed, trials, out_dir, threads);
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
