#pragma once

#include <map>
#include <string>
#include <vector>

#include "vltau/report.hpp"

namespace vltau {

/// Formal sum of module labels with multiplicities in {0,1}.
using FusionSum = std::map<std::string, int>;

/// The three fusion tables (Klein-side, ternary-side, W(0)-rows of the
/// orbifold subalgebra), loaded from the data file. Pairs the tables do not
/// determine raise "unknown pair".
class FusionTables {
  public:
    explicit FusionTables(const std::string& config_dir);

    FusionSum fuse(const std::string& a, const std::string& b) const;
    bool known(const std::string& a, const std::string& b) const;

    Report check_table_consistency() const;

  private:
    struct Table {
        std::string name;
        std::map<std::pair<std::string, std::string>, FusionSum> prod;
        std::map<std::string, std::string> dual;
        std::map<std::string, std::string> grade;  // empty for the W(0) rows
        std::string unit;
    };
    std::vector<Table> tables_;
    const Table* table_for(const std::string& a, const std::string& b) const;
};

}  // namespace vltau
