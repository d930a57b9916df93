#include "qcat/report.hpp"

#include <nlohmann/json.hpp>

namespace qcat {

void VerificationReport::add_pass(std::string relation, int n, int k) {
    checks_.push_back({std::move(relation), n, k, true, {}});
}

void VerificationReport::add_fail(std::string relation, int n, int k, std::string witness) {
    checks_.push_back({std::move(relation), n, k, false, std::move(witness)});
}

void VerificationReport::append(const VerificationReport& o) {
    checks_.insert(checks_.end(), o.checks_.begin(), o.checks_.end());
}

bool VerificationReport::all_pass() const {
    for (const auto& c : checks_)
        if (!c.pass) return false;
    return true;
}

std::size_t VerificationReport::fail_count() const {
    std::size_t n = 0;
    for (const auto& c : checks_)
        if (!c.pass) ++n;
    return n;
}

std::string VerificationReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks_) {
        nlohmann::json obj = {
            {"relation", c.relation}, {"n", c.n}, {"k", c.k}, {"pass", c.pass}};
        if (!c.witness.empty()) obj["witness"] = c.witness;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2);
}

std::string VerificationReport::to_text() const {
    std::string out;
    for (const auto& c : checks_) {
        out += c.pass ? "[PASS] " : "[FAIL] ";
        out += c.relation;
        if (c.n || c.k) {
            out += " (n=" + std::to_string(c.n) + ", k=" + std::to_string(c.k) + ")";
        }
        if (!c.pass && !c.witness.empty()) {
            out += "  -- " + c.witness;
        }
        out += "\n";
    }
    out += std::to_string(checks_.size() - fail_count()) + "/" + std::to_string(checks_.size()) +
           " checks passed\n";
    return out;
}

} // namespace qcat
