// SPDX-License-Identifier: Apache-2.0
//
// beamout: outage analysis and beamwidth optimization for positioning-assisted beamforming
// Copyright (C) 2026 The beamout authors
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

#include "beamout/cli/commands.hpp"

#include "beamout/error.hpp"
#include "beamout/optimizer.hpp"
#include "beamout/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <ostream>
#include <string>
#include <thread>

namespace beamout::cli
{

namespace
{

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSandwichSlack = 1e-12;
constexpr double kMcSigmas = 4.0;
constexpr std::size_t kDefaultVerifyPoints = 200;

std::string sci(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

bool deterministic(outage::RegimeKind kind)
{
    return kind == outage::RegimeKind::AlwaysCovered || kind == outage::RegimeKind::AlwaysOutage;
}

optimizer::BudgetedLink budget_of(const ScenarioConfig &cfg, double p_t_watts, const channel::LinkConfig &link)
{
    return {p_t_watts, link, cfg.a_m.value()};
}

void print_warnings(const ScenarioConfig &cfg, std::ostream &err)
{
    for (const auto &w : cfg.warnings)
        err << "warning: " << w << '\n';
}

} // namespace

Scenario resolve(const ScenarioConfig &cfg, std::optional<double> axis_value)
{
    const SweepAxis axis = axis_value ? cfg.sweep_axis : SweepAxis::None;

    const gauss2d::Covariance2x2 R =
        gauss2d::covariance_from_model(gauss2d::PositioningErrorModel(cfg.sigma1, cfg.sigma2, cfg.phi));
    const double d = axis == SweepAxis::D ? *axis_value : cfg.d.value();
    const channel::LinkConfig link(d, cfg.lambda.value(), cfg.gamma_th.value());

    std::optional<double> p_t;
    if (axis == SweepAxis::Pt)
        p_t = to_watts(*axis_value, cfg.p_t_unit);
    else if (cfg.p_t)
        p_t = to_watts(*cfg.p_t, cfg.p_t_unit);

    double theta = 0.0;
    if (axis == SweepAxis::Theta3db)
        theta = *axis_value;
    else if (cfg.theta_optimal)
        theta = optimizer::optimal_beamwidth(budget_of(cfg, p_t.value(), link)).theta_star;
    else
        theta = cfg.theta_3db.value();

    const double p_max = p_t ? optimizer::budget_pmax(*p_t, theta) : cfg.p_max.value();
    return {R, channel::AntennaConfig(theta, cfg.a_m.value(), p_max), link, p_t};
}

SweepRow evaluate(const ScenarioConfig &cfg, std::optional<double> axis_value)
{
    const Scenario s = resolve(cfg, axis_value);
    const outage::OutageEstimate est = outage::estimate(s.antenna, s.link, s.R);

    SweepRow row;
    row.axis_value = axis_value.value_or(kNaN);
    row.regime = est.regime.kind;
    row.k = est.regime.k;
    row.lower = est.lower;
    row.upper = est.upper;
    row.tightness_ratio = est.tightness_ratio;
    if (deterministic(row.regime))
    {
        row.quadrature = row.mc = est.upper;
        row.mc_stderr = 0.0;
        return row;
    }

    row.quadrature = oracle::outage_probability(s.antenna, s.link, s.R, cfg.quad_tol).p_out;
    if (cfg.mc_samples == 0)
    {
        row.mc = row.mc_stderr = kNaN;
        return row;
    }
    const oracle::OracleResult mc =
        oracle::outage_montecarlo(s.antenna, s.link, s.R, oracle::McConfig{cfg.mc_samples, cfg.mc_seed, 1});
    row.mc = mc.p_out;
    row.mc_stderr = mc.std_err;
    return row;
}

std::vector<SweepRow> run_sweep(const ScenarioConfig &cfg, unsigned threads)
{
    const std::vector<double> grid = sweep_grid(cfg);
    std::vector<SweepRow> rows(grid.size());
    std::vector<std::exception_ptr> errors(grid.size());

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, grid.size()));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++)
        {
            try
            {
                rows[i] = evaluate(cfg, grid[i]);
            }
            catch (...)
            {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t)
            pool.emplace_back(work);
        work();
    }
    for (const auto &e : errors)
        if (e)
            std::rethrow_exception(e);
    return rows;
}

void write_csv(std::ostream &out, SweepAxis axis, std::span<const SweepRow> rows)
{
    out << to_string(axis) << ",regime,k,lower,upper,quadrature,mc,mc_stderr,tightness_ratio\n";
    for (const SweepRow &r : rows)
    {
        out << sci(r.axis_value) << ',' << outage::to_string(r.regime) << ',' << sci(r.k) << ',' << sci(r.lower) << ','
            << sci(r.upper) << ',' << sci(r.quadrature) << ',' << sci(r.mc) << ',' << sci(r.mc_stderr) << ','
            << sci(r.tightness_ratio) << "\n";
    }
}

SweepTally tally(std::span<const SweepRow> rows, std::uint64_t mc_samples)
{
    SweepTally t;
    t.rows = rows.size();
    for (const SweepRow &r : rows)
    {
        if (r.quadrature < r.lower - kSandwichSlack || r.quadrature > r.upper + kSandwichSlack)
            ++t.outside_bounds;
        if (mc_samples == 0 || deterministic(r.regime))
            continue;
        // standard error under the hypothesis p = quadrature, which stays positive when
        // the frequency estimate sees no events
        const double se = oracle::binomial_std_err(r.quadrature, mc_samples);
        ++t.mc_checked;
        if (std::abs(r.mc - r.quadrature) > kMcSigmas * se)
            ++t.mc_outliers;
    }
    return t;
}

int exit_code(const Error &e) noexcept
{
    switch (e.code())
    {
    case Errc::tolerance_not_met:
        return 3;
    default:
        return 2;
    }
}

int cmd_point(const ScenarioConfig &cfg, std::ostream &out, std::ostream &err)
{
    print_warnings(cfg, err);
    require_point(cfg);

    const Scenario s = resolve(cfg);
    const outage::OutageEstimate est = outage::estimate(s.antenna, s.link, s.R);

    out << "regime = " << outage::to_string(est.regime.kind) << '\n';
    if (s.p_t_watts)
        out << "p_t = " << sci(*s.p_t_watts) << '\n';
    out << "theta_3db = " << sci(s.antenna.theta_3db()) << '\n';
    out << "p_max = " << sci(s.antenna.p_max()) << '\n';
    if (deterministic(est.regime.kind))
    {
        out << "p_out = " << sci(est.upper) << '\n';
        return 0;
    }

    const SweepRow row = evaluate(cfg, std::nullopt);
    out << "k = " << sci(est.regime.k) << '\n';
    if (est.regime.kind == outage::RegimeKind::WideBeam)
        out << "rear_slope = " << sci(est.regime.rear_slope) << '\n';
    out << "i_r = " << sci(est.i_r) << '\n';
    out << "i_l = " << sci(est.i_l) << '\n';
    out << "i_b = " << sci(est.i_b) << '\n';
    out << "lower = " << sci(est.lower) << '\n';
    out << "upper = " << sci(est.upper) << '\n';
    out << "quadrature = " << sci(row.quadrature) << '\n';
    if (cfg.mc_samples == 0)
        out << "mc = disabled\n";
    else
        out << "mc = " << sci(row.mc) << " +- " << sci(row.mc_stderr) << " (" << cfg.mc_samples << " samples, seed "
            << cfg.mc_seed << ")\n";
    out << "tightness_ratio = " << sci(est.tightness_ratio) << '\n';
    if (est.degenerate)
        err << "note: I_R + I_L underflows; the bounds coincide at machine precision\n";
    return 0;
}

int cmd_sweep(const ScenarioConfig &cfg, std::ostream &out, std::ostream &err)
{
    print_warnings(cfg, err);
    require_sweep(cfg);

    const std::vector<SweepRow> rows = run_sweep(cfg);
    write_csv(out, cfg.sweep_axis, rows);
    out.flush();

    const SweepTally t = tally(rows, cfg.mc_samples);
    err << "sweep: " << t.rows << " rows, " << t.outside_bounds << " with quadrature outside [lower, upper]";
    if (t.mc_checked > 0)
        err << ", " << t.mc_outliers << " of " << t.mc_checked << " with |mc - quadrature| > 4 standard errors";
    err << '\n';
    if (t.outside_bounds > 0)
        err << "warning: bound sandwich violated on " << t.outside_bounds << " rows\n";
    if (t.mc_outliers * 100 > t.mc_checked)
        err << "warning: Monte Carlo disagreement exceeds 1% of rows\n";
    return 0;
}

int cmd_optimize(const ScenarioConfig &cfg, bool verify, std::ostream &out, std::ostream &err)
{
    print_warnings(cfg, err);
    require_optimize(cfg);

    const double p_t = to_watts(cfg.p_t.value(), cfg.p_t_unit);
    const channel::LinkConfig link(cfg.d.value(), cfg.lambda.value(), cfg.gamma_th.value());
    const optimizer::BudgetedLink b = budget_of(cfg, p_t, link);
    const optimizer::Optimum opt = optimizer::optimal_beamwidth(b);

    out << "p_t = " << sci(p_t) << '\n';
    out << "beam_limit = " << sci(opt.beam_limit) << '\n';
    out << "theta_star = " << sci(opt.theta_star) << '\n';
    out << "k_star = " << sci(opt.k_star) << '\n';
    out << "feasible = " << (opt.feasible ? "true" : "false") << '\n';
    if (!opt.feasible)
        err << "warning: optimum outside the small-beamwidth regime: " << opt.diagnostic << '\n';
    if (!verify)
        return 0;

    const gauss2d::Covariance2x2 R =
        gauss2d::covariance_from_model(gauss2d::PositioningErrorModel(cfg.sigma1, cfg.sigma2, cfg.phi));
    const std::vector<double> grid = optimizer::default_grid(b, cfg.sweep_points.value_or(kDefaultVerifyPoints));
    const optimizer::VerifyReport rep = optimizer::verify_optimum(b, R, grid, cfg.quad_tol);

    out << "verify_points = " << rep.points.size() << '\n';
    out << "verify_excluded = " << rep.excluded << '\n';
    out << "argmin_theta = " << sci(rep.argmin_theta) << '\n';
    out << "argmin_p_out = " << sci(rep.argmin_p_out) << '\n';
    out << "gap = " << sci(rep.gap) << '\n';
    out << "grid_step = " << sci(rep.grid_step) << '\n';
    out << "within_one_step = " << (rep.within_one_step ? "true" : "false") << '\n';
    return 0;
}

} // namespace beamout::cli
