#pragma once

#include <string>
#include <vector>

namespace qcat {

struct CheckResult {
    std::string relation;
    int n = 0;
    int k = 0;
    bool pass = true;
    // First discrepancy, when there is one (matrix entry, element difference, ...).
    std::string witness;
};

class VerificationReport {
public:
    void add(CheckResult r) { checks_.push_back(std::move(r)); }
    void add_pass(std::string relation, int n = 0, int k = 0);
    void add_fail(std::string relation, int n, int k, std::string witness);
    void append(const VerificationReport& o);

    const std::vector<CheckResult>& checks() const { return checks_; }
    bool all_pass() const;
    std::size_t fail_count() const;

    // JSON array of {relation, n, k, pass, witness?}.
    std::string to_json() const;
    // One line per check plus a summary line.
    std::string to_text() const;

private:
    std::vector<CheckResult> checks_;
};

} // namespace qcat
