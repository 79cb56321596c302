// verify: identity-verification suites for the spherical-analysis library.
//   verify <suite> [--n INT] [--l INT] [--a NAME[:k=v,...]] [--eta F] [--tol F]
//                  [--seed INT] [--out PATH] [--format json|csv|plotdata]
//                  [--config PATH]
// exit codes: 0 all checks pass, 1 failures recorded, 2 configuration error

#include "rmt/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"spherical-analysis verification suites"};
    std::string suite = "all", a_spec, out_path, format = "json", config_path;
    int n = 2, l = 0;
    double eta = -1.0, tol = -1.0;
    unsigned long seed = 12345;

    app.add_option("suite", suite,
                   "classical | sl2 | su1n | c-calculus | bounds | counterexample | all");
    app.add_option("--n", n, "K-type (sl2) or dimension parameter (su1n)");
    app.add_option("--l", l, "character index, |l| < n");
    app.add_option("--a", a_spec, "interpolant spec, e.g. exp:p=1.0");
    app.add_option("--eta", eta, "contour shift");
    app.add_option("--tol", tol, "identity tolerance override");
    app.add_option("--seed", seed, "seed for randomized grids");
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--format", format, "json | csv | plotdata");
    app.add_option("--config", config_path, "key = value config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        rmt::SuiteConfig cfg;
        if (!config_path.empty()) cfg = rmt::load_config_file(config_path, cfg);
        // command line overrides the file
        for (auto* opt : app.get_options()) (void)opt;
        if (app.count("suite") || config_path.empty()) cfg.suite = suite;
        if (app.count("--n")) cfg.n = n;
        if (app.count("--l")) cfg.l = l;
        if (app.count("--a")) cfg.a_spec = a_spec;
        if (app.count("--eta")) cfg.eta = eta;
        if (app.count("--tol")) cfg.tol = tol;
        if (app.count("--seed")) cfg.seed = seed;
        if (app.count("--out")) cfg.out_path = out_path;
        if (app.count("--format")) cfg.format = rmt::parse_format(format);
        cfg.validate();

        rmt::VerificationReport rep = rmt::run_suite(cfg);
        std::string payload = rmt::emit(rep, cfg.format);
        if (cfg.out_path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream out(cfg.out_path, std::ios::binary);
            if (!out) throw rmt::ConfigError("cannot open output path " + cfg.out_path);
            out << payload;
        }
        std::cerr << "pass " << rep.total_pass() << " fail " << rep.total_fail() << "\n";
        return rep.all_pass() ? 0 : 1;
    } catch (const rmt::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
