#ifndef RMT_SUITES_HPP
#define RMT_SUITES_HPP

#include "rmt/report.hpp"

#include <string>

namespace rmt {

struct SuiteConfig {
    std::string suite = "all"; // classical | sl2 | su1n | c-calculus | bounds | counterexample | all
    int n = 2;                 // K-type (sl2 suites) / dimension (su1n suites)
    int l = 0;                 // character index for su1n
    std::string a_spec;        // interpolant, e.g. "exp:p=1.0"; suite default when empty
    double eta = -1.0;         // contour shift; default per suite when < 0
    double tol = -1.0;         // identity tolerance override; default per case when < 0
    unsigned long seed = 12345;
    std::string out_path;      // empty: stdout
    EmitFormat format = EmitFormat::json;
    int threads = 0;           // 0: RMT_THREADS or hardware

    void validate() const; // throws ConfigError with the offending field
};

// parse "key = value" lines with [section] headers into a config
SuiteConfig load_config_file(const std::string& path, SuiteConfig base = {});

VerificationReport run_suite(const SuiteConfig& cfg);

} // namespace rmt

#endif
