#pragma once

#include <string>
#include <vector>

namespace vltau {

struct Check {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string computed;
    std::string detail;
};

/// Deterministic per-suite result list. Timing is reported on stderr by the
/// CLI, never inside the report body, so reports are byte-reproducible.
struct Report {
    std::string suite;
    std::vector<Check> checks;

    void add(const std::string& name, bool pass, const std::string& expected = "",
             const std::string& computed = "", const std::string& detail = "");
    void merge(const Report& other);
    bool all_pass() const;
    size_t failed() const;

    std::string to_text() const;
    std::string to_json() const;
};

}  // namespace vltau
