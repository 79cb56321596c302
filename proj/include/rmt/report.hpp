#ifndef RMT_REPORT_HPP
#define RMT_REPORT_HPP

#include "rmt/types.hpp"

#include <map>
#include <string>
#include <vector>

namespace rmt {

struct CaseRecord {
    std::string name;
    std::string inputs;
    Cx lhs{0, 0}, rhs{0, 0};
    double abs_err = 0.0, rel_err = 0.0, tol = 0.0;
    bool pass = false;
    bool expected_failure = false; // divergence probes: failing to converge is the pass
    std::string status;            // e.g. "DIVERGENT-AS-EXPECTED"
    std::string lhs_src, rhs_src;  // provenance of both sides
    std::map<std::string, double> constants;
    // optional plot payload: lhs/rhs curves over a shared abscissa
    std::string xlabel;
    std::vector<double> xs;
    std::vector<Cx> ys1, ys2;

    bool operator==(const CaseRecord&) const = default;
};

struct SuiteReport {
    std::string id;
    std::string build_info;
    unsigned long seed = 0;
    std::vector<CaseRecord> cases;
    std::map<std::string, double> constants; // calibration constants etc.
    std::vector<std::string> notes;          // resolved-ambiguity notes

    int n_pass() const;
    int n_fail() const;
    bool operator==(const SuiteReport&) const = default;
};

struct VerificationReport {
    std::vector<SuiteReport> suites;

    int total_pass() const;
    int total_fail() const;
    bool all_pass() const; // every non-expected-failure case passes
    bool operator==(const VerificationReport&) const = default;
};

enum class EmitFormat { json, csv, plotdata };

EmitFormat parse_format(const std::string& s);
std::string emit(const VerificationReport& rep, EmitFormat fmt);
VerificationReport parse_report_json(const std::string& text);

// helper used throughout the suites
CaseRecord make_case(const std::string& name, const std::string& inputs, Cx lhs, Cx rhs,
                     double tol, const std::string& lhs_src, const std::string& rhs_src,
                     bool relative = true);

std::string build_info_string();

} // namespace rmt

#endif
