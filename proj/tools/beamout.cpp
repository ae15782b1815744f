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
#include "beamout/cli/config.hpp"
#include "beamout/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char **argv)
{
    CLI::App app{"Outage analysis and beamwidth optimization for positioning-assisted beamforming"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    bool verify = false;

    CLI::App *point = app.add_subcommand("point", "Regime, bounds and oracle values for one scenario");
    CLI::App *sweep = app.add_subcommand("sweep", "CSV sweep over d, p_t or theta_3db");
    CLI::App *optimize = app.add_subcommand("optimize", "Optimal half-power beamwidth under a transmit-power budget");
    for (CLI::App *sub : {point, sweep, optimize})
        sub->add_option("--config", config_path, "Scenario file (key = value)")->required();
    sweep->add_option("--out", out_path, "CSV output file (default: standard output)");
    optimize->add_flag("--verify", verify, "Check the optimum against a quadrature grid sweep");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try
    {
        const beamout::cli::ScenarioConfig cfg = beamout::cli::load_config(config_path);
        if (point->parsed())
            return beamout::cli::cmd_point(cfg, std::cout, std::cerr);
        if (optimize->parsed())
            return beamout::cli::cmd_optimize(cfg, verify, std::cout, std::cerr);

        if (out_path.empty())
            return beamout::cli::cmd_sweep(cfg, std::cout, std::cerr);
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
        {
            std::cerr << "error: cannot write " << out_path << '\n';
            return 2;
        }
        const int rc = beamout::cli::cmd_sweep(cfg, out, std::cerr);
        out.close();
        if (!out)
        {
            std::cerr << "error: writing " << out_path << " failed\n";
            return 1;
        }
        return rc;
    }
    catch (const beamout::Error &e)
    {
        std::cerr << "error [" << beamout::to_string(e.code()) << "]: " << e.what() << '\n';
        return beamout::cli::exit_code(e);
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
