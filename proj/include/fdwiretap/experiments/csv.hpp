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

#ifndef FDWIRETAP_EXPERIMENTS_CSV_HPP
#define FDWIRETAP_EXPERIMENTS_CSV_HPP

#include "scenario.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdwiretap::experiments {

inline constexpr const char *kSweepHeader =
    "scenario,case,variable,value,r_ba,r_ab,r_ea,r_eb,r_sa,r_sb,sum_secrecy,"
    "approx_r_ba,approx_r_ab,approx_r_ea,approx_r_eb,approx_sum_secrecy,"
    "gamma_a,gamma_b,iterations,converged,trials,failed,floored,fallbacks,"
    "hd_r_ba,hd_r_ab,hd_r_ea,hd_r_eb,hd_sum_secrecy";

inline constexpr const char *kRegionHeader =
    "scenario,case,gamma_a,gamma_b,objective,approx_secrecy_a,approx_secrecy_b,"
    "boundary_res_a,boundary_res_b";

namespace detail {

inline std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

inline std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ','))
        out.push_back(cell);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

inline double to_double(const std::string &s) {
    char *end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0')
        throw std::runtime_error("csv: bad number '" + s + "'");
    return v;
}

inline int to_int(const std::string &s) {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size())
        throw std::runtime_error("csv: bad integer '" + s + "'");
    return v;
}

inline void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    f << text;
    f.flush();
    if (!f)
        throw std::runtime_error("write failed for '" + path + "'");
}

} // namespace detail

inline std::string format_csv(const std::vector<SweepRow> &rows) {
    using detail::fmt;
    std::string out = std::string(kSweepHeader) + "\n";
    for (const auto &r : rows) {
        out += r.scenario + "," + r.case_id + "," + r.variable + "," + fmt(r.value);
        for (double x : {r.r_ba, r.r_ab, r.r_ea, r.r_eb, r.r_sa, r.r_sb, r.sum_secrecy, r.approx_r_ba,
                         r.approx_r_ab, r.approx_r_ea, r.approx_r_eb, r.approx_sum_secrecy, r.gamma_a,
                         r.gamma_b})
            out += "," + fmt(x);
        for (int n : {r.iterations, r.converged, r.trials, r.failed, r.floored, r.fallbacks})
            out += "," + std::to_string(n);
        for (double x : {r.hd_r_ba, r.hd_r_ab, r.hd_r_ea, r.hd_r_eb, r.hd_sum_secrecy})
            out += "," + fmt(x);
        out += "\n";
    }
    return out;
}

inline std::vector<SweepRow> parse_csv_text(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kSweepHeader)
        throw std::runtime_error("csv: unexpected header");
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto c = detail::split(line);
        if (c.size() != 29)
            throw std::runtime_error("csv: expected 29 columns, got " + std::to_string(c.size()));
        using detail::to_double;
        using detail::to_int;
        SweepRow r;
        r.scenario = c[0];
        r.case_id = c[1];
        r.variable = c[2];
        std::size_t i = 3;
        for (double *x : {&r.value, &r.r_ba, &r.r_ab, &r.r_ea, &r.r_eb, &r.r_sa, &r.r_sb, &r.sum_secrecy,
                          &r.approx_r_ba, &r.approx_r_ab, &r.approx_r_ea, &r.approx_r_eb,
                          &r.approx_sum_secrecy, &r.gamma_a, &r.gamma_b})
            *x = to_double(c[i++]);
        for (int *n : {&r.iterations, &r.converged, &r.trials, &r.failed, &r.floored, &r.fallbacks})
            *n = to_int(c[i++]);
        for (double *x : {&r.hd_r_ba, &r.hd_r_ab, &r.hd_r_ea, &r.hd_r_eb, &r.hd_sum_secrecy})
            *x = to_double(c[i++]);
        rows.push_back(std::move(r));
    }
    return rows;
}

inline void emit_csv(const std::vector<SweepRow> &rows, const std::string &path) {
    detail::write_file(path, format_csv(rows));
}

inline std::vector<SweepRow> parse_csv(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << f.rdbuf();
    try {
        return parse_csv_text(ss.str());
    } catch (const std::exception &e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

inline std::string format_region_csv(const std::vector<RegionRow> &rows) {
    using detail::fmt;
    std::string out = std::string(kRegionHeader) + "\n";
    for (const auto &r : rows) {
        out += r.scenario + "," + r.case_id;
        for (double x : {r.gamma_a, r.gamma_b, r.objective, r.approx_secrecy_a, r.approx_secrecy_b,
                         r.boundary_res_a, r.boundary_res_b})
            out += "," + fmt(x);
        out += "\n";
    }
    return out;
}

inline void emit_region_csv(const std::vector<RegionRow> &rows, const std::string &path) {
    detail::write_file(path, format_region_csv(rows));
}

} // namespace fdwiretap::experiments

#endif
