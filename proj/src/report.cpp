#include "rmt/report.hpp"

#include <json.hpp>

#include <sstream>

namespace rmt {

using nlohmann::json;

int SuiteReport::n_pass() const {
    int c = 0;
    for (auto& cr : cases)
        if (cr.pass) ++c;
    return c;
}

int SuiteReport::n_fail() const { return int(cases.size()) - n_pass(); }

int VerificationReport::total_pass() const {
    int c = 0;
    for (auto& s : suites) c += s.n_pass();
    return c;
}

int VerificationReport::total_fail() const {
    int c = 0;
    for (auto& s : suites) c += s.n_fail();
    return c;
}

bool VerificationReport::all_pass() const {
    for (auto& s : suites)
        for (auto& cr : s.cases)
            if (!cr.pass && !cr.expected_failure) return false;
    return true;
}

std::string build_info_string() {
#if defined(__GNUC__) && !defined(__clang__)
    return "rmt 1.0.0 gcc-" + std::to_string(__GNUC__) + "." + std::to_string(__GNUC_MINOR__) +
           " cxx" + std::to_string(__cplusplus / 100 % 100);
#else
    return "rmt 1.0.0";
#endif
}

CaseRecord make_case(const std::string& name, const std::string& inputs, Cx lhs, Cx rhs,
                     double tol, const std::string& lhs_src, const std::string& rhs_src,
                     bool relative) {
    CaseRecord c;
    c.name = name;
    c.inputs = inputs;
    c.lhs = lhs;
    c.rhs = rhs;
    c.tol = tol;
    c.lhs_src = lhs_src;
    c.rhs_src = rhs_src;
    c.abs_err = std::abs(lhs - rhs);
    // degenerate reference: report the absolute error as the relative one
    c.rel_err = (std::abs(rhs) > 1e-30) ? c.abs_err / std::abs(rhs) : c.abs_err;
    c.pass = (relative ? c.rel_err : c.abs_err) <= tol;
    return c;
}

namespace {

json cx_to_json(Cx z) { return json::array({z.real(), z.imag()}); }
Cx cx_from_json(const json& j) { return Cx(j.at(0).get<double>(), j.at(1).get<double>()); }

json case_to_json(const CaseRecord& c) {
    json j;
    j["name"] = c.name;
    j["inputs"] = c.inputs;
    j["lhs"] = cx_to_json(c.lhs);
    j["rhs"] = cx_to_json(c.rhs);
    j["abs_err"] = c.abs_err;
    j["rel_err"] = c.rel_err;
    j["tol"] = c.tol;
    j["pass"] = c.pass;
    j["lhs_src"] = c.lhs_src;
    j["rhs_src"] = c.rhs_src;
    if (c.expected_failure) j["expected_failure"] = true;
    if (!c.status.empty()) j["status"] = c.status;
    if (!c.constants.empty()) j["constants"] = c.constants;
    if (!c.xs.empty()) {
        json curve;
        curve["xlabel"] = c.xlabel;
        curve["x"] = c.xs;
        json y1 = json::array(), y2 = json::array();
        for (auto& v : c.ys1) y1.push_back(cx_to_json(v));
        for (auto& v : c.ys2) y2.push_back(cx_to_json(v));
        curve["ys1"] = y1;
        curve["ys2"] = y2;
        j["curve"] = curve;
    }
    return j;
}

CaseRecord case_from_json(const json& j) {
    CaseRecord c;
    c.name = j.at("name").get<std::string>();
    c.inputs = j.at("inputs").get<std::string>();
    c.lhs = cx_from_json(j.at("lhs"));
    c.rhs = cx_from_json(j.at("rhs"));
    c.abs_err = j.at("abs_err").get<double>();
    c.rel_err = j.at("rel_err").get<double>();
    c.tol = j.at("tol").get<double>();
    c.pass = j.at("pass").get<bool>();
    c.lhs_src = j.at("lhs_src").get<std::string>();
    c.rhs_src = j.at("rhs_src").get<std::string>();
    if (j.contains("expected_failure")) c.expected_failure = j["expected_failure"].get<bool>();
    if (j.contains("status")) c.status = j["status"].get<std::string>();
    if (j.contains("constants"))
        c.constants = j["constants"].get<std::map<std::string, double>>();
    if (j.contains("curve")) {
        const json& cv = j["curve"];
        c.xlabel = cv.at("xlabel").get<std::string>();
        c.xs = cv.at("x").get<std::vector<double>>();
        for (auto& v : cv.at("ys1")) c.ys1.push_back(cx_from_json(v));
        for (auto& v : cv.at("ys2")) c.ys2.push_back(cx_from_json(v));
    }
    return c;
}

} // namespace

EmitFormat parse_format(const std::string& s) {
    if (s == "json") return EmitFormat::json;
    if (s == "csv") return EmitFormat::csv;
    if (s == "plotdata") return EmitFormat::plotdata;
    throw ConfigError("unsupported output format '" + s + "'");
}

std::string emit(const VerificationReport& rep, EmitFormat fmt) {
    if (fmt == EmitFormat::json) {
        json j;
        j["suites"] = json::array();
        for (auto& s : rep.suites) {
            json js;
            js["id"] = s.id;
            js["build"] = s.build_info;
            js["seed"] = s.seed;
            if (!s.constants.empty()) js["constants"] = s.constants;
            if (!s.notes.empty()) js["notes"] = s.notes;
            js["cases"] = json::array();
            for (auto& c : s.cases) js["cases"].push_back(case_to_json(c));
            j["suites"].push_back(js);
        }
        j["summary"] = {{"pass", rep.total_pass()}, {"fail", rep.total_fail()}};
        return j.dump();
    }
    if (fmt == EmitFormat::csv) {
        std::ostringstream os;
        os << "suite,case,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tol,pass\n";
        os.precision(17);
        for (auto& s : rep.suites)
            for (auto& c : s.cases)
                os << s.id << ',' << c.name << ',' << c.lhs.real() << ',' << c.lhs.imag() << ','
                   << c.rhs.real() << ',' << c.rhs.imag() << ',' << c.abs_err << ',' << c.rel_err
                   << ',' << c.tol << ',' << (c.pass ? 1 : 0) << '\n';
        return os.str();
    }
    // plotdata: one block per case carrying a curve
    std::ostringstream os;
    os.precision(17);
    for (auto& s : rep.suites)
        for (auto& c : s.cases) {
            if (c.xs.empty()) continue;
            os << "# " << s.id << '/' << c.name << ' ' << c.xlabel << '\n';
            for (size_t i = 0; i < c.xs.size(); ++i) {
                os << c.xs[i];
                if (i < c.ys1.size()) os << '\t' << c.ys1[i].real() << '\t' << c.ys1[i].imag();
                if (i < c.ys2.size()) os << '\t' << c.ys2[i].real() << '\t' << c.ys2[i].imag();
                os << '\n';
            }
            os << '\n';
        }
    return os.str();
}

VerificationReport parse_report_json(const std::string& text) {
    json j = json::parse(text);
    VerificationReport rep;
    for (auto& js : j.at("suites")) {
        SuiteReport s;
        s.id = js.at("id").get<std::string>();
        s.build_info = js.at("build").get<std::string>();
        s.seed = js.at("seed").get<unsigned long>();
        if (js.contains("constants"))
            s.constants = js["constants"].get<std::map<std::string, double>>();
        if (js.contains("notes")) s.notes = js["notes"].get<std::vector<std::string>>();
        for (auto& jc : js.at("cases")) s.cases.push_back(case_from_json(jc));
        rep.suites.push_back(std::move(s));
    }
    return rep;
}

} // namespace rmt
