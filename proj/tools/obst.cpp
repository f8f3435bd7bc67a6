#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "obst/cli.hpp"

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("OBST_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

void emit(const obst::cli::CommandOutput& out, const std::string& report_path,
          const std::string& instance_path, const std::string& svg_path) {
    const std::string text = obst::dump_json(out.report);
    if (report_path.empty())
        std::cout << text;
    else
        obst::write_file_atomic(report_path, text);
    if (!instance_path.empty()) {
        if (!out.instance) throw obst::SchemaError("this command emits no instance");
        obst::write_file_atomic(instance_path, obst::dump_json(*out.instance));
    }
    if (!svg_path.empty()) {
        if (!out.svg) throw obst::SchemaError("this command emits no SVG");
        obst::write_file_atomic(svg_path, *out.svg);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for obstacle representations of graphs"};
    app.require_subcommand(1);

    std::string in_path, in_path_b, report_path, instance_path, svg_path;
    std::uint64_t seed = default_seed();
    int budget = 1000;
    int k = 1;
    int n = 5;
    int samples = 100;
    long long bounds_n = 1024;
    double c = 1.0, alpha = 0.01, enc = 1.0;
    std::string mode = "faces";

    auto add_io = [&](CLI::App* cmd, bool needs_instance = true) {
        if (needs_instance)
            cmd->add_option("instance", in_path, "instance JSON file")->required();
        cmd->add_option("--out", report_path, "report file (default: stdout)");
    };

    CLI::App* c_verify = app.add_subcommand("verify", "check an obstacle representation");
    add_io(c_verify);

    CLI::App* c_minimize =
        app.add_subcommand("minimize", "minimum obstacles for the given embedding");
    add_io(c_minimize);
    c_minimize->add_option("--mode", mode, "faces | vertex_clusters")
        ->check(CLI::IsMember({"faces", "vertex_clusters"}));
    c_minimize->add_option("--seed", seed, "report echo seed");
    c_minimize->add_option("--svg", svg_path, "write the certificate drawing");

    CLI::App* c_search =
        app.add_subcommand("search", "randomized upper bound on the obstacle number");
    add_io(c_search);
    c_search->add_option("--budget", budget, "embedding samples");
    c_search->add_option("--seed", seed, "random seed");
    c_search->add_option("--svg", svg_path, "write the best certificate drawing");

    CLI::App* c_sot = app.add_subcommand("sot", "super-order type of one or two instances");
    add_io(c_sot);
    c_sot->add_option("instance_b", in_path_b, "second instance to compare");

    CLI::App* c_perturb = app.add_subcommand("perturb", "perturb points into simple position");
    add_io(c_perturb);
    c_perturb->add_option("--seed", seed, "random seed");
    c_perturb->add_option("--out-instance", instance_path, "write the perturbed instance");

    CLI::App* c_slab = app.add_subcommand("slab", "vertical slab decomposition report");
    add_io(c_slab);
    c_slab->add_option("--k", k, "points per slab")->required();

    CLI::App* c_census = app.add_subcommand("census", "count distinct super-order types");
    add_io(c_census, false);
    c_census->add_option("--n", n, "points per sample")->required();
    c_census->add_option("--samples", samples, "number of samples");
    c_census->add_option("--seed", seed, "random seed");

    CLI::App* c_bounds = app.add_subcommand("bounds", "evaluate the counting-bound calculators");
    add_io(c_bounds, false);
    c_bounds->add_option("--n", bounds_n, "number of vertices")->required();
    c_bounds->add_option("--c", c, "slab-size constant");
    c_bounds->add_option("--alpha", alpha, "per-slab exponent constant");
    c_bounds->add_option("--enc", enc, "encoding constant");

    CLI::App* c_gap = app.add_subcommand(
        "ordertype-gap", "search for equal order types with different minima");
    add_io(c_gap, false);
    c_gap->add_option("--n", n, "points per embedding")->required();
    c_gap->add_option("--budget", budget, "trials");
    c_gap->add_option("--seed", seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    const auto start = std::chrono::steady_clock::now();
    try {
        obst::cli::CommandOutput out;
        if (app.got_subcommand(c_verify)) {
            out = obst::cli::cmd_verify(obst::load_instance(in_path));
        } else if (app.got_subcommand(c_minimize)) {
            out = obst::cli::cmd_minimize(obst::load_instance(in_path), mode, seed,
                                          !svg_path.empty());
        } else if (app.got_subcommand(c_search)) {
            out = obst::cli::cmd_search(obst::load_instance(in_path), budget, seed,
                                        !svg_path.empty());
        } else if (app.got_subcommand(c_sot)) {
            std::optional<obst::Instance> second;
            if (!in_path_b.empty()) second = obst::load_instance(in_path_b);
            out = obst::cli::cmd_sot(obst::load_instance(in_path), second);
        } else if (app.got_subcommand(c_perturb)) {
            out = obst::cli::cmd_perturb(obst::load_instance(in_path), seed);
        } else if (app.got_subcommand(c_slab)) {
            out = obst::cli::cmd_slab(obst::load_instance(in_path), k);
        } else if (app.got_subcommand(c_census)) {
            out = obst::cli::cmd_census(n, samples, seed);
        } else if (app.got_subcommand(c_bounds)) {
            out = obst::cli::cmd_bounds(bounds_n, c, alpha, enc);
        } else if (app.got_subcommand(c_gap)) {
            out = obst::cli::cmd_ordertype_gap(n, budget, seed);
        }
        emit(out, report_path, instance_path, svg_path);
    } catch (const obst::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const obst::PreconditionError& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 3;
    } catch (const obst::BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 4;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    std::cerr << "done in " << elapsed.count() << " ms\n";
    return 0;
}
