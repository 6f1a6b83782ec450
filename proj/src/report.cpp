#include "vltau/report.hpp"

#include <sstream>

#include "json.hpp"

namespace vltau {

void Report::add(const std::string& name, bool pass, const std::string& expected,
                 const std::string& computed, const std::string& detail) {
    checks.push_back({name, pass, expected, computed, detail});
}

void Report::merge(const Report& other) {
    for (auto& c : other.checks) {
        Check copy = c;
        copy.name = other.suite.empty() ? c.name : other.suite + "/" + c.name;
        checks.push_back(std::move(copy));
    }
}

bool Report::all_pass() const {
    for (auto& c : checks)
        if (!c.pass) return false;
    return true;
}

size_t Report::failed() const {
    size_t n = 0;
    for (auto& c : checks)
        if (!c.pass) ++n;
    return n;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "== " << suite << " ==\n";
    for (auto& c : checks) {
        os << (c.pass ? "  ok   " : "  FAIL ") << c.name;
        if (!c.pass && !c.expected.empty())
            os << "\n         expected: " << c.expected
               << "\n         computed: " << c.computed;
        if (!c.detail.empty()) os << "  [" << c.detail << "]";
        os << "\n";
    }
    os << (all_pass() ? "all " : "FAILED ") << checks.size() << " checks";
    if (!all_pass()) os << " (" << failed() << " failing)";
    os << "\n";
    return os.str();
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["suite"] = suite;
    j["pass"] = all_pass();
    j["total"] = checks.size();
    j["failed"] = failed();
    j["checks"] = nlohmann::ordered_json::array();
    for (auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.expected.empty()) jc["expected"] = c.expected;
        if (!c.computed.empty()) jc["computed"] = c.computed;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        j["checks"].push_back(jc);
    }
    return j.dump(2);
}

}  // namespace vltau
