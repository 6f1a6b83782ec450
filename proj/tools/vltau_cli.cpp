#include <chrono>
#include <functional>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"
#include "vltau/catalog.hpp"
#include "vltau/charq.hpp"
#include "vltau/classify.hpp"
#include "vltau/config.hpp"
#include "vltau/fusion.hpp"
#include "vltau/suites.hpp"

using namespace vltau;

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for the order-3 orbifold of the sqrt(2)A_2 "
                 "lattice vertex operator algebra"};
    app.require_subcommand(1);

    std::string config_dir = default_config_dir();
    long max_weight = -1;  // -1: per-suite default
    uint64_t seed = 0;
    std::string format = "text";

    app.add_option("--config", config_dir, "data directory")->capture_default_str();
    app.add_option("--max-weight", max_weight,
                   "weight bound for graded checks (default: per suite)");
    app.add_option("--seed", seed, "seed for the property suites")
        ->capture_default_str();
    app.add_option("--report-format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::vector<std::pair<std::string, std::function<Report()>>> jobs;

    auto cat = []() -> Catalog& {
        static Catalog c;
        return c;
    };
    auto red = [&]() -> ZhuReducer& {
        static ZhuReducer r(cat());
        return r;
    };
    auto cls = [&]() -> Classifier& {
        static Classifier c(cat(), config_dir);
        return c;
    };
    auto sys = [&]() -> ScalarSystem& {
        static ScalarSystem sy = derive_scalar_system(
            red(), parse_appendix_file(config_dir + "/appendix_b.txt"));
        return sy;
    };

    auto job_structure = [&]() { return cat().verify_structure_constants(); };
    auto job_appendix = [&]() {
        return cat().verify_appendix_b(config_dir + "/appendix_b.txt");
    };
    auto job_singular = [&]() { return cat().verify_singular_vectors(); };
    auto job_section4 = [&]() {
        Report r = cat().verify_section4_untwisted();
        r.merge(cat().verify_conformal_orthogonality());
        r.merge(cat().verify_automorphism_actions());
        r.merge(cls().verify_cards_untwisted(&red().jkp_nc()));
        r.suite = "section4";
        return r;
    };
    auto job_commutators = [&]() {
        return suite_commutators(cat(), rat(max_weight < 0 ? 5 : max_weight));
    };
    auto job_borcherds = [&]() {
        Report r = suite_borcherds(cat(), 200, seed);
        r.merge(suite_equivariance(cat(), 100, seed + 1));
        r.suite = "borcherds";
        return r;
    };
    auto job_zhu = [&]() {
        Report r;
        r.suite = "zhu";
        derive_scalar_system(red(),
                             parse_appendix_file(config_dir + "/appendix_b.txt"), &r);
        r.merge(suite_ov_annihilation(cat(), red(), cls(), 100, seed + 2));
        r.merge(suite_star_commutativity(cat(), red(), cls()));
        return r;
    };
    auto job_classify = [&]() {
        Report r = cls().verify_roster_derived();
        r.merge(cls().classify_all(sys()));
        r.merge(cls().contragredient_check());
        r.merge(cls().o_homomorphism_all(sys()));
        r.suite = "classify";
        return r;
    };
    auto job_zhu_structure = [&]() { return cls().zhu_algebra_structure(); };
    auto job_sigma = [&]() { return cls().sigma_permutation_check(); };
    auto job_chars_dec = [&]() {
        return verify_decompositions(cat(), rat(max_weight < 0 ? 6 : max_weight));
    };
    auto job_chars_tw = [&]() {
        return verify_twisted_characters(rat(max_weight < 0 ? 6 : max_weight));
    };
    auto job_fusion = [&]() {
        return FusionTables(config_dir).check_table_consistency();
    };

    auto* verify = app.add_subcommand("verify", "vertex-algebra identities");
    verify->require_subcommand(1);
    const std::map<std::string, std::function<Report()>> verify_cmds = {
        {"structure", job_structure},     {"appendix-b", job_appendix},
        {"singular", job_singular},       {"section4", job_section4},
        {"commutators", job_commutators}, {"borcherds", job_borcherds}};
    for (auto& [name, fn] : verify_cmds) {
        auto* c = verify->add_subcommand(name);
        c->callback([&jobs, name = name, fn = fn]() { jobs.push_back({name, fn}); });
    }

    auto* zhu = app.add_subcommand("zhu", "Zhu algebra reduction");
    zhu->require_subcommand(1);
    zhu->add_subcommand("derive", "derive the scalar relation system")
        ->callback([&]() { jobs.push_back({"zhu-derive", job_zhu}); });

    auto* classify = app.add_subcommand("classify", "simple-module classification");
    classify->require_subcommand(1);
    classify->add_subcommand("run", "solve the 60 candidate quadruplets")
        ->callback([&]() { jobs.push_back({"classify", job_classify}); });
    classify->add_subcommand("zhu-structure", "dimension 51 = 23 + 7*4")
        ->callback([&]() { jobs.push_back({"zhu-structure", job_zhu_structure}); });
    classify->add_subcommand("sigma", "sigma permutation of the simple modules")
        ->callback([&]() { jobs.push_back({"sigma", job_sigma}); });

    auto* chars = app.add_subcommand("chars", "graded characters");
    chars->require_subcommand(1);
    chars->add_subcommand("decompositions", "coset and commutant decompositions")
        ->callback([&]() { jobs.push_back({"chars-dec", job_chars_dec}); });
    chars->add_subcommand("twisted", "twisted-sector characters")
        ->callback([&]() { jobs.push_back({"chars-twisted", job_chars_tw}); });

    auto* fusion = app.add_subcommand("fusion", "fusion tables");
    fusion->require_subcommand(1);
    fusion->add_subcommand("check", "table consistency")
        ->callback([&]() { jobs.push_back({"fusion", job_fusion}); });

    app.add_subcommand("all", "full pipeline in dependency order")->callback([&]() {
        jobs = {{"structure", job_structure},
                {"appendix-b", job_appendix},
                {"singular", job_singular},
                {"section4", job_section4},
                {"commutators", job_commutators},
                {"borcherds", job_borcherds},
                {"zhu-derive", job_zhu},
                {"classify", job_classify},
                {"zhu-structure", job_zhu_structure},
                {"sigma", job_sigma},
                {"chars-dec", job_chars_dec},
                {"chars-twisted", job_chars_tw},
                {"fusion", job_fusion}};
    });

    // allow the global flags to appear after subcommands
    for (auto* sc : app.get_subcommands({})) {
        sc->fallthrough(true);
        for (auto* sub : sc->get_subcommands({})) sub->fallthrough(true);
    }

    CLI11_PARSE(app, argc, argv);
    setenv("VLTAU_CONFIG_DIR", config_dir.c_str(), 1);

    std::vector<Report> reports;
    bool all_pass = true;
    for (auto& [name, fn] : jobs) {
        auto t0 = std::chrono::steady_clock::now();
        Report r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r.suite = name;
            r.add("suite execution", false, "no exception", e.what());
        }
        if (r.suite.empty()) r.suite = name;
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cerr << "[" << r.suite << "] " << (r.all_pass() ? "pass" : "FAIL") << " ("
                  << r.checks.size() << " checks, " << ms << " ms)\n";
        all_pass = all_pass && r.all_pass();
        reports.push_back(std::move(r));
    }

    if (format == "json") {
        nlohmann::ordered_json out;
        out["schema_version"] = 1;
        out["seed"] = seed;
        out["max_weight"] = max_weight;
        out["pass"] = all_pass;
        out["suites"] = nlohmann::ordered_json::array();
        for (auto& r : reports)
            out["suites"].push_back(nlohmann::ordered_json::parse(r.to_json()));
        std::cout << out.dump(2) << "\n";
    } else {
        for (auto& r : reports) std::cout << r.to_text() << "\n";
        std::cout << (all_pass ? "ALL SUITES PASS" : "SUITE FAILURES PRESENT") << "\n";
    }
    return all_pass ? 0 : 1;
}
