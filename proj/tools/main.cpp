// Command-line front end. Exit codes: 0 success, 1 usage, 2 cost cap,
// 3 internal error. Timing goes to stderr; stdout/output files carry only
// the canonical report bytes.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "bicubic/cli.hpp"

namespace {

bicubic::i64 env_thread_hint() {
    const char* v = std::getenv("BICUBIC_THREADS");
    return v ? std::atoll(v) : 0;
}

std::array<bicubic::i64, 3> parse_triple(const std::string& s) {
    std::array<bicubic::i64, 3> t{};
    char extra = 0;
    if (std::sscanf(s.c_str(), "%lld,%lld,%lld%c", &t[0], &t[1], &t[2], &extra) != 3)
        throw CLI::ValidationError("expected a comma triple like 1,2,3: " + s);
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace bicubic;
    CLI::App app{"counting and constants for a bilinear cubic threefold"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    RunConfig cfg;
    cfg.thread_count = static_cast<int>(env_thread_hint());
    std::string config_path, r_str, x_str, y_str, bounds_str;

    app.add_option("--config", config_path, "key=value file mirroring the flags");
    app.add_option("--output", cfg.output_path, "write the report here instead of stdout");
    app.add_option("--format", cfg.output_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", cfg.seed, "seed for randomized property suites");
    app.add_option("--threads", cfg.thread_count, "worker hint; never changes results");
    app.add_option("--abs-tol", cfg.quad.abs_tol, "quadrature absolute tolerance");
    app.add_option("--rel-tol", cfg.quad.rel_tol, "quadrature relative tolerance");
    app.add_option("--max-subdivisions", cfg.quad.max_subdivisions, "quadrature refinement budget");
    app.add_option("--alpha-cutoff", cfg.quad.alpha_cutoff,
                   "initial frequency window, units of 1/min(r X Y)");

    auto* count = app.add_subcommand("count-points", "enumerate points of bounded height");
    count->add_option("--height-bound", cfg.height_bound, "height bound B")->required();
    count->add_option("--method", cfg.method, "direct, torsor or both")
        ->check(CLI::IsMember({"direct", "torsor", "both"}));
    count->add_flag("--with-points", cfg.with_points, "include the point list in the report");

    auto* boxcmd = app.add_subcommand("boxcount", "exact dyadic box count vs main term");
    boxcmd->add_option("--r", r_str, "coefficients r1,r2,r3")->required();
    boxcmd->add_option("--X", x_str, "box sides X1,X2,X3")->required();
    boxcmd->add_option("--Y", y_str, "box sides Y1,Y2,Y3")->required();
    boxcmd->add_flag("--mellin-check", cfg.mellin_check, "also run the contour cross-check");

    auto* constant = app.add_subcommand("constant", "Euler product C and the constant pipeline");
    constant->add_option("--prime-cutoff", cfg.prime_cutoff, "truncate Euler products at this prime");
    constant->add_flag("--full", cfg.full_constant, "emit the full constant breakdown");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", cfg.suite, "points|expsums|localdata|oscint|geometry|all")
        ->check(CLI::IsMember({"points", "expsums", "localdata", "oscint", "geometry", "all"}));

    auto* trend = app.add_subcommand("trend", "N(B) against B (log B)^4");
    trend->add_option("--height-bounds", bounds_str, "comma list of bounds")->required();

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        for (size_t i = 0; i < args.size(); ++i) {
            if (args[i] == "--config" && i + 1 < args.size()) {
                auto extra = config_file_args(args[i + 1]);
                args.insert(args.begin() + static_cast<long>(i) + 2, extra.begin(), extra.end());
            }
        }
        std::vector<const char*> cargv{argv[0]};
        for (const auto& a : args) cargv.push_back(a.c_str());
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (count->parsed()) cfg.subcommand = "count-points";
        if (boxcmd->parsed()) {
            cfg.subcommand = "boxcount";
            auto r = parse_triple(r_str);
            auto x = parse_triple(x_str);
            auto y = parse_triple(y_str);
            cfg.r = {r[0], r[1], r[2]};
            cfg.box = {x[0], x[1], x[2], y[0], y[1], y[2]};
        }
        if (constant->parsed()) cfg.subcommand = "constant";
        if (verify->parsed()) cfg.subcommand = "verify";
        if (trend->parsed()) {
            cfg.subcommand = "trend";
            std::stringstream ss(bounds_str);
            std::string tok;
            while (std::getline(ss, tok, ',')) cfg.height_bounds.push_back(std::stoll(tok));
        }

        auto doc = run(cfg);
        auto bytes = serialize(cfg, doc);
        if (cfg.output_path.empty()) {
            std::cout << bytes;
        } else {
            std::ofstream out(cfg.output_path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot open output path");
            out << bytes;
        }
        std::fprintf(stderr, "# elapsed_ms=%.1f\n", doc.timing_ms);
        return doc.all_passed ? 0 : 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const cost_cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
