#include "doctest.h"

#include "vltau/config.hpp"
#include "vltau/fusion.hpp"

using namespace vltau;

static FusionTables& tables() {
    static FusionTables t(default_config_dir());
    return t;
}

TEST_CASE("fusion lookups") {
    FusionSum s = tables().fuse("Wt0", "Wt0");
    CHECK(s == FusionSum{{"Mt0", 1}, {"Wt0", 1}});
    CHECK(tables().fuse("Mka", "Mkb") == FusionSum{{"Mkc", 1}});
    CHECK(tables().fuse("W(0)", "WT(tau)(1)") ==
          FusionSum{{"MT(tau)(1)", 1}, {"WT(tau)(1)", 1}});
    CHECK(tables().fuse("Mt0", "Wt2") == FusionSum{{"Wt2", 1}});
    CHECK(!tables().known("M(1)", "M(2)"));
    CHECK_THROWS(tables().fuse("M(1)", "M(2)"));
}

TEST_CASE("table consistency") {
    Report r = tables().check_table_consistency();
    INFO(r.to_text());
    CHECK(r.all_pass());
}
