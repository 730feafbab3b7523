#include "submeas/runner.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

namespace {

submeas::RunOptions make_options(const std::string& eps_grid, double tol, bool tol_set,
                                 unsigned max_depth, bool depth_set, std::uint64_t seed)
{
    submeas::RunOptions opts;
    if (!eps_grid.empty()) {
        std::istringstream in(eps_grid);
        std::string item;
        while (std::getline(in, item, ','))
            opts.extra_eps.push_back(submeas::parse_rat(item));
    }
    if (tol_set)
        opts.tol = tol;
    if (depth_set)
        opts.max_depth = max_depth;
    opts.seed = seed;
    if (const char* env = std::getenv("SUBMEAS_WORKERS"))
        opts.workers = std::max(1, std::atoi(env));
    return opts;
}

int emit(const submeas::RunReport& report, bool json)
{
    std::cout << (json ? submeas::to_json_text(report) + "\n" : submeas::to_text(report));
    return report.exit_status();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"verification suites for lattice-valued set functions on finite rings and "
                 "dyadic interval models"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string set_expr;
    std::string eps_grid;
    double tol = 0;
    unsigned max_depth = 0;
    std::uint64_t seed = 0x5eedcafe;
    bool json = false;

    auto add_common = [&](CLI::App* cmd, bool needs_spec = true) {
        if (needs_spec)
            cmd->add_option("spec", spec_path, "instance spec file")->required();
        cmd->add_flag("--json", json, "emit the report as JSON (schema report_v1)");
        cmd->add_option("--eps-grid", eps_grid, "extra epsilon values, comma separated");
        cmd->add_option("--seed", seed, "seed for the random sweeps");
        return cmd;
    };

    CLI::App* check = add_common(app.add_subcommand("check", "classification and ring checks"));
    CLI::App* extend = add_common(app.add_subcommand("extend", "extension pipeline"));
    CLI::App* choquet =
        add_common(app.add_subcommand("choquet", "integral value and derived classification"));
    choquet->add_option("set", set_expr, "integration set, e.g. {0,1}")->required();
    CLI::App* dyadic = add_common(app.add_subcommand("dyadic", "interval-model suite"));
    const auto* tol_opt = dyadic->add_option("--tol", tol, "tolerance override");
    const auto* depth_opt = dyadic->add_option("--max-depth", max_depth, "depth override");

    CLI11_PARSE(app, argc, argv);

    try {
        const submeas::InstanceSpec spec = submeas::parse_spec_file(spec_path);
        const submeas::RunOptions opts = make_options(eps_grid, tol, tol_opt->count() > 0,
                                                      max_depth, depth_opt->count() > 0, seed);
        if (check->parsed())
            return emit(submeas::run_check(spec, opts), json);
        if (extend->parsed())
            return emit(submeas::run_extend(spec, opts), json);
        if (choquet->parsed())
            return emit(submeas::run_choquet(spec, set_expr, opts), json);
        if (dyadic->parsed())
            return emit(submeas::run_dyadic(spec, opts), json);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    return 2;
}
