#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "gcr/catalog.hpp"

using namespace gcr;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::string why = "cannot open " + path + " (tests run from the project root)";
    REQUIRE_MESSAGE(bool(in), why);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("scenario inventory") {
    auto scenarios = list_scenarios();
    CHECK(scenarios.size() >= 16);
    std::set<std::string> names;
    for (const auto& s : scenarios)
        CHECK(names.insert(s.name).second);
    for (const char* required :
         {"appendix-a1-kernel", "appendix-a2-kernel", "appendix-a3-kernel", "steenrod-o2",
          "hilton-bcom-o2", "bcom-su2-from-u2", "bcom-o2-mv-integral", "tautological-obstruction"})
        CHECK(names.count(required) == 1);

    // listing twice returns the same stable ordering
    auto again = list_scenarios();
    REQUIRE(again.size() == scenarios.size());
    for (size_t i = 0; i < again.size(); ++i)
        CHECK(again[i].name == scenarios[i].name);
}

TEST_CASE("unknown scenarios are rejected") {
    CHECK_THROWS_AS(run_scenario("no-such-scenario"), UnknownScenario);
}

TEST_CASE("catalog presentations are homogeneous and maps degree-preserving") {
    for (const auto& file : catalog_file_names()) {
        const SourceFile& f = catalog_file(file);
        CHECK(f.warnings.empty());
        for (const auto& rd : f.rings)
            CHECK(rd.pres.is_homogeneous());
        // RingMap construction already enforces degree preservation; reaching
        // the declarations at all means every map passed it.
        for (const auto& md : f.maps) {
            const auto& src = md.map.source();
            for (size_t i = 0; i < src.nvars(); ++i) {
                const Poly& img = md.map.images()[i];
                if (!img.is_zero())
                    CHECK(*img.weighted_degree().degree == src.var_degree(i));
            }
        }
    }
}

TEST_CASE("shipped data files match the embedded catalog byte for byte") {
    for (const auto& file : catalog_file_names())
        CHECK(slurp("data/" + file) == catalog_file_text(file));
    CHECK(slurp("data/spheres.table") == builtin_sphere_table_text());
}

TEST_CASE("outcome shape") {
    VerificationOutcome r = run_scenario("bcom-su2-graded-groups");
    CHECK(r.pass);
    CHECK(r.witnesses.empty());
    CHECK(!r.expected.empty());
    CHECK(!r.actual.empty());
    CHECK(r.millis >= 0.0);
}

TEST_CASE("scenario results are deterministic") {
    auto a = run_scenario("bcom-o2-mv-mod2");
    auto b = run_scenario("bcom-o2-mv-mod2");
    CHECK(a.pass == b.pass);
    CHECK(a.expected == b.expected);
    CHECK(a.actual == b.actual);
}

TEST_CASE("max-degree override is honored") {
    CatalogOptions opts;
    opts.max_degree = 6;
    auto r = run_scenario("bcom-su2-graded-groups", opts);
    CHECK(r.pass);
    CHECK(r.expected.find("H^6") != std::string::npos);
    CHECK(r.expected.find("H^7") == std::string::npos);
}

TEST_CASE("scenarios are safe to run concurrently") {
    std::vector<std::string> names = {"bcom-su2-from-u2", "steenrod-su2", "hilton-bcom-o2",
                                      "bcom-o2-mv-mod2"};
    std::vector<std::thread> threads;
    std::vector<int> results(names.size(), -1);
    for (size_t i = 0; i < names.size(); ++i)
        threads.emplace_back([&, i] { results[i] = run_scenario(names[i]).pass ? 1 : 0; });
    for (auto& t : threads)
        t.join();
    for (int r : results)
        CHECK(r == 1);
}

TEST_CASE("notation table names the decorated symbols") {
    const auto& table = notation_table();
    CHECK(!table.empty());
    bool has_xc = false;
    for (const auto& [sym, id] : table)
        if (id == "xc")
            has_xc = true;
    CHECK(has_xc);
}
