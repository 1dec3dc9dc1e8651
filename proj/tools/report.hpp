#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcq::tools {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One verified identity. rel_err is abs_err/|rhs|, or abs_err when rhs = 0;
// pass holds exactly when rel_err <= tol.
struct CheckRecord {
    std::string name;
    std::string anchor;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    bool pass = false;
    double ms = 0.0;
    // Error message when the check could not be evaluated.
    std::string note;

    bool operator==(const CheckRecord&) const = default;
};

struct CertificationReport {
    std::string suite;
    std::map<std::string, std::string> config_echo;
    std::vector<CheckRecord> checks;

    int passed() const;
    int failed() const;
    // Orders checks by name.
    void sort();

    bool operator==(const CertificationReport&) const = default;
};

// Fills abs_err, rel_err and pass from lhs, rhs and tol.
CheckRecord make_check(std::string name, std::string anchor, double lhs, double rhs, double tol);
// A check that failed to evaluate; it counts as a failure.
CheckRecord failed_check(std::string name, std::string anchor, double tol, std::string note);

std::string to_json(const CertificationReport& r, bool with_timing = true);
CertificationReport parse_json(const std::string& text);
std::string to_text(const CertificationReport& r);

// Writes json or text to path, or to stdout when path is empty or "-".
void emit_report(const CertificationReport& r, const std::string& format, const std::string& path);

}  // namespace bcq::tools
