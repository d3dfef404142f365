#include "takagi/cli.hpp"
#include "takagi/errors.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

using takagi::cli::OutputRecord;

namespace {

void emit(const OutputRecord& rec) {
    std::cout << rec.render_json();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Takagi function toolkit: evaluation, local level sets, "
                 "the deficient digit set, and the singular/BV machinery"};
    app.require_subcommand(1);

    std::string point, x_str, k_str = "0", breakpoint_str, format = "json";
    std::string function = "all";
    unsigned depth = 3, m = 4, max_2m = 6, family_k = 1;
    takagi::cli::EvalOptions eval_opt;
    takagi::cli::SampleOptions sample_opt;
    takagi::cli::CoareaOptions coarea_opt;
    unsigned partial_n = 0, series_n = 0, decimal_digits = 0;

    auto* eval = app.add_subcommand("eval", "Exact tau(x) for rational x in [0,1]");
    eval->add_option("x", x_str, "rational p/q")->required();
    auto* eval_partial = eval->add_option("--partial", partial_n, "also report tau_n(x)");
    auto* eval_series = eval->add_option("--series", series_n, "also report a series partial sum");
    auto* eval_decimal = eval->add_option("--decimal", decimal_digits, "extra decimal rendering");

    auto* localset = app.add_subcommand("localset", "Local level set descriptor and members");
    localset->add_option("point", point, "rational p/q or expansion 0.pre(per)")->required();
    localset->add_option("--depth", depth, "block depth for uncountable enumerations");

    auto* omega = app.add_subcommand("omega", "Deficient digit set Omega^L");
    omega->require_subcommand(1);
    auto* omega_check = omega->add_subcommand("check", "membership test");
    std::string omega_point;
    omega_check->add_option("point", omega_point, "rational or expansion")->required();
    auto* omega_project = omega->add_subcommand("project", "projection P^L");
    std::string omega_proj_point;
    omega_project->add_option("point", omega_proj_point, "rational or expansion")->required();

    auto* breakpoints = app.add_subcommand("breakpoints", "Balanced breakpoints of 2m digits");
    breakpoints->add_option("--m", m, "half-length m")->required();

    auto* gaps = app.add_subcommand("gaps", "Gap intervals removed from [0,1)");
    gaps->add_option("--max-2m", max_2m, "largest breakpoint bit-length")->required();
    gaps->add_option("--format", format, "json|csv");

    auto* level_half = app.add_subcommand("level-half", "The family x_k with tau(x_k) = 1/2");
    level_half->add_option("--k", k_str, "index, or 'inf' for the limit 1/6")->required();

    auto* family = app.add_subcommand("family", "Members of the level tau(B')+2^-(2m+1)");
    family->add_option("--breakpoint", breakpoint_str, "balanced breakpoint B'")->required();
    family->add_option("--k", family_k, "member index, k >= 1")->required();

    auto* sample = app.add_subcommand("sample", "Exact dyadic-grid sweeps of tau/tauL/tauS");
    sample->add_option("--function", function, "all|tauL|tauS|partial:N");
    sample->add_option("--depth", sample_opt.depth, "grid 2^-depth");
    sample->add_option("--format", format, "json|csv");
    auto* sample_decimal = sample->add_option("--decimal", decimal_digits, "decimal digits");

    auto* coarea = app.add_subcommand("coarea", "Variation, exact coarea identity, N^loc estimate");
    coarea->add_option("--depth", coarea_opt.depth, "sampling depth");
    coarea->add_option("--samples", coarea_opt.samples, "number of random levels");
    coarea->add_option("--seed", coarea_opt.seed, "RNG seed");
    coarea->add_flag("--dump-levels", coarea_opt.dump_levels, "include per-level rows");
    coarea->add_option("--format", format, "json|csv (csv implies --dump-levels)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval) {
            if (*eval_partial) eval_opt.partial = partial_n;
            if (*eval_series) eval_opt.series = series_n;
            if (*eval_decimal) eval_opt.decimal_digits = decimal_digits;
            emit(takagi::cli::cmd_eval(x_str, eval_opt));
        } else if (*localset) {
            emit(takagi::cli::cmd_localset(point, depth));
        } else if (*omega_check) {
            emit(takagi::cli::cmd_omega_check(omega_point));
        } else if (*omega_project) {
            emit(takagi::cli::cmd_omega_project(omega_proj_point));
        } else if (*breakpoints) {
            emit(takagi::cli::cmd_breakpoints(m));
        } else if (*gaps) {
            OutputRecord rec = takagi::cli::cmd_gaps(max_2m);
            if (format == "csv") std::cout << takagi::cli::render_gaps_csv(rec);
            else emit(rec);
        } else if (*level_half) {
            emit(takagi::cli::cmd_level_half(k_str));
        } else if (*family) {
            emit(takagi::cli::cmd_family(breakpoint_str, family_k));
        } else if (*sample) {
            sample_opt.function = function;
            if (*sample_decimal) sample_opt.decimal_digits = decimal_digits;
            OutputRecord rec = takagi::cli::cmd_sample(sample_opt);
            if (format == "csv") std::cout << takagi::cli::render_sample_csv(rec);
            else emit(rec);
        } else if (*coarea) {
            if (format == "csv") coarea_opt.dump_levels = true;
            OutputRecord rec = takagi::cli::cmd_coarea(coarea_opt);
            if (format == "csv") std::cout << takagi::cli::render_levels_csv(rec);
            else emit(rec);
        }
    } catch (const takagi::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const takagi::degenerate_level_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
