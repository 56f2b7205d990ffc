#ifndef GCR_CATALOG_HPP
#define GCR_CATALOG_HPP

#include "gcr/graded.hpp"
#include "gcr/hilton.hpp"
#include "gcr/sourcefile.hpp"

namespace gcr {

struct ScenarioInfo {
    std::string name;
    std::string procedure;  // KernelEquals, GradedGroupsEqual, ...
    std::string summary;
};

struct VerificationOutcome {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
    std::vector<std::string> witnesses;  // first counterexamples on failure
    double millis = 0.0;
};

struct CatalogOptions {
    int max_degree = -1;  // override per-scenario default depth when > 0
    Deadline deadline;
};

// Stable, documented ordering.
std::vector<ScenarioInfo> list_scenarios();

VerificationOutcome run_scenario(const std::string& name, const CatalogOptions& opts = {});

// The catalog's declaration files (also shipped under data/), keyed by
// file name; parse with parse_source to rebuild any scenario's inputs.
std::vector<std::string> catalog_file_names();
const std::string& catalog_file_text(const std::string& name);
const SourceFile& catalog_file(const std::string& name);

// Display symbol -> ASCII identifier normalization used by the catalog.
const std::vector<std::pair<std::string, std::string>>& notation_table();

}  // namespace gcr

#endif
