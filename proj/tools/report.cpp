#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace bcq::tools {

namespace {

using nlohmann::json;

// JSON has no NaN or infinity; they are written as strings.
json number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

double from_number(const json& j) {
    if (j.is_number()) return j.get<double>();
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    return std::numeric_limits<double>::quiet_NaN();
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

}  // namespace

int CertificationReport::passed() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; }));
}

int CertificationReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

void CertificationReport::sort() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
}

CheckRecord make_check(std::string name, std::string anchor, double lhs, double rhs, double tol) {
    CheckRecord c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.lhs = lhs;
    c.rhs = rhs;
    c.tol = tol;
    c.abs_err = std::abs(lhs - rhs);
    c.rel_err = rhs != 0.0 ? c.abs_err / std::abs(rhs) : c.abs_err;
    // NaN compares false, so a NaN error never passes.
    c.pass = c.rel_err <= tol;
    return c;
}

CheckRecord failed_check(std::string name, std::string anchor, double tol, std::string note) {
    CheckRecord c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.lhs = c.rhs = c.abs_err = c.rel_err = std::numeric_limits<double>::quiet_NaN();
    c.tol = tol;
    c.pass = false;
    c.note = std::move(note);
    return c;
}

std::string to_json(const CertificationReport& r, bool with_timing) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json e = {{"name", c.name},       {"anchor", c.anchor},   {"lhs", number(c.lhs)},
                  {"rhs", number(c.rhs)}, {"abs_err", number(c.abs_err)}, {"rel_err", number(c.rel_err)},
                  {"tol", c.tol},         {"pass", c.pass},       {"ms", with_timing ? c.ms : 0.0}};
        if (!c.note.empty()) e["note"] = c.note;
        checks.push_back(std::move(e));
    }
    json out = {{"suite", r.suite},
                {"config_echo", r.config_echo},
                {"checks", checks},
                {"summary", {{"pass", r.passed()}, {"fail", r.failed()}}}};
    return out.dump(2) + "\n";
}

CertificationReport parse_json(const std::string& text) {
    CertificationReport r;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw IoError(std::string("report: malformed JSON: ") + e.what());
    }
    r.suite = j.value("suite", "");
    if (j.contains("config_echo")) r.config_echo = j["config_echo"].get<std::map<std::string, std::string>>();
    for (const auto& e : j.at("checks")) {
        CheckRecord c;
        c.name = e.at("name").get<std::string>();
        c.anchor = e.at("anchor").get<std::string>();
        c.lhs = from_number(e.at("lhs"));
        c.rhs = from_number(e.at("rhs"));
        c.abs_err = from_number(e.at("abs_err"));
        c.rel_err = from_number(e.at("rel_err"));
        c.tol = e.at("tol").get<double>();
        c.pass = e.at("pass").get<bool>();
        c.ms = e.at("ms").get<double>();
        c.note = e.value("note", "");
        r.checks.push_back(std::move(c));
    }
    return r;
}

std::string to_text(const CertificationReport& r) {
    std::ostringstream os;
    char line[512];
    std::snprintf(line, sizeof line, "suite: %s\n", r.suite.c_str());
    os << line;
    std::snprintf(line, sizeof line, "%-44s %-5s %12s %12s %10s %9s\n", "check", "pass", "lhs", "rhs", "rel_err",
                  "ms");
    os << line << std::string(97, '-') << "\n";
    for (const auto& c : r.checks) {
        std::snprintf(line, sizeof line, "%-44.44s %-5s %12s %12s %10s %9s\n", c.name.c_str(), c.pass ? "ok" : "FAIL",
                      fmt("%.5e", c.lhs).c_str(), fmt("%.5e", c.rhs).c_str(), fmt("%.2e", c.rel_err).c_str(),
                      fmt("%.1f", c.ms).c_str());
        os << line;
        if (!c.note.empty()) os << "    " << c.note << "\n";
    }
    std::snprintf(line, sizeof line, "summary: pass=%d fail=%d\n", r.passed(), r.failed());
    os << line;
    return os.str();
}

void emit_report(const CertificationReport& r, const std::string& format, const std::string& path) {
    std::string body;
    if (format == "json") {
        body = to_json(r);
    } else if (format == "text") {
        body = to_text(r);
    } else {
        throw IoError("report: unknown format '" + format + "'");
    }
    if (path.empty() || path == "-") {
        std::cout << body;
        std::cout.flush();
        if (!std::cout) throw IoError("report: cannot write to stdout");
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("report: cannot open '" + path + "' for writing");
    f << body;
    f.close();
    if (!f) throw IoError("report: write to '" + path + "' failed");
}

}  // namespace bcq::tools
