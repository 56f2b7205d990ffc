// Command-line front end: declaration-file commands (gb, nf, kernel,
// member, groups, hilbert, steenrod), the Hilton table and the catalog
// scenario runner. Exit codes: 0 success/pass, 1 verification failure,
// 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gcr/catalog.hpp"

using json = nlohmann::json;

namespace {

struct Options {
    std::string format = "text";
    double deadline_seconds = 0;

    gcr::Deadline deadline() const {
        return deadline_seconds > 0 ? gcr::Deadline::after(deadline_seconds) : gcr::Deadline::none();
    }
    bool json_out() const { return format == "json"; }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw gcr::Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

gcr::SourceFile load(const std::string& path) {
    gcr::SourceFile f = gcr::parse_source(slurp(path));
    for (const auto& w : f.warnings)
        std::cerr << path << ":" << w.line << ": warning: " << w.message << "\n";
    return f;
}

void emit(const Options& opt, const json& payload, const std::string& text) {
    if (opt.json_out())
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_gb(const Options& opt, const std::string& file, const std::string& ideal_name) {
    gcr::SourceFile f = load(file);
    const auto& idl = f.ideal(ideal_name);
    gcr::GroebnerBasis G =
        gcr::groebner_basis(idl.ideal, gcr::MonomialOrder::degrevlex(), opt.deadline());
    json j{{"ideal", ideal_name}, {"ring", idl.ring}, {"basis", json::array()}};
    std::string text;
    for (size_t i = 0; i < G.elems.size(); ++i) {
        j["basis"].push_back(G.elems[i].to_string());
        text += "[" + std::to_string(i + 1) + "] " + G.elems[i].to_string() + "\n";
    }
    emit(opt, j, text);
    return 0;
}

int cmd_nf(const Options& opt, const std::string& file, const std::string& ideal_name,
           const std::string& poly) {
    gcr::SourceFile f = load(file);
    const auto& idl = f.ideal(ideal_name);
    gcr::Poly p = gcr::parse_poly(idl.ideal.ring, poly);
    gcr::Poly r = gcr::normal_form(
        p, gcr::groebner_basis(idl.ideal, gcr::MonomialOrder::degrevlex(), opt.deadline()));
    emit(opt, json{{"poly", p.to_string()}, {"normal_form", r.to_string()}}, r.to_string() + "\n");
    return 0;
}

int cmd_kernel(const Options& opt, const std::string& file, const std::string& map_name) {
    gcr::SourceFile f = load(file);
    const auto& md = f.map(map_name);
    const auto& source = f.ring(md.source_ring).pres;
    gcr::Ideal K = source.relations().gens.empty()
                       ? gcr::kernel(md.map, opt.deadline())
                       : gcr::kernel_of_quotient_map(source, md.map, opt.deadline());
    json j{{"map", map_name}, {"kernel", json::array()}};
    std::string text;
    for (size_t i = 0; i < K.gens.size(); ++i) {
        j["kernel"].push_back(K.gens[i].to_string());
        text += "[" + std::to_string(i + 1) + "] " + K.gens[i].to_string() + "\n";
    }
    if (!source.relations().gens.empty()) {
        j["note"] = "source is a quotient; generators include the source relations";
        text += "# source is a quotient; generators include the source relations\n";
    }
    emit(opt, j, text);
    return 0;
}

int cmd_member(const Options& opt, const std::string& file, const std::string& ideal_name,
               const std::string& ring_name, const std::string& poly) {
    gcr::SourceFile f = load(file);
    const gcr::Ideal* I = nullptr;
    const gcr::GradedRing* ring = nullptr;
    if (!ideal_name.empty()) {
        const auto& idl = f.ideal(ideal_name);
        I = &idl.ideal;
        ring = &idl.ideal.ring;
    } else if (!ring_name.empty()) {
        const auto& rd = f.ring(ring_name);
        I = &rd.pres.relations();
        ring = &rd.pres.ambient();
    } else {
        throw CLI::ValidationError("member needs --ideal or --ring");
    }
    gcr::Poly p = gcr::parse_poly(*ring, poly);
    bool member = gcr::ideal_contains(*I, p, gcr::MonomialOrder::degrevlex(), opt.deadline());
    emit(opt, json{{"poly", p.to_string()}, {"member", member}},
         std::string(member ? "true" : "false") + "\n");
    return member ? 0 : 1;
}

int cmd_groups(const Options& opt, const std::string& file, const std::string& ring_name,
               int max_degree) {
    gcr::SourceFile f = load(file);
    const auto& pres = f.ring(ring_name).pres;
    gcr::GradedAbelianGroup g = gcr::graded_groups(pres, max_degree);
    json j{{"ring", ring_name}, {"groups", json::array()}};
    std::string text;
    for (int n = 0; n <= max_degree; ++n) {
        j["groups"].push_back({{"degree", n}, {"group", g.at(n).to_string()}});
        text += "H^" + std::to_string(n) + " = " + g.at(n).to_string() + "\n";
    }
    emit(opt, j, text);
    return 0;
}

int cmd_hilbert(const Options& opt, const std::string& file, const std::string& ring_name,
                int max_degree) {
    gcr::SourceFile f = load(file);
    const auto& pres = f.ring(ring_name).pres;
    std::vector<long> dims = gcr::hilbert_dims(pres, max_degree);
    json j{{"ring", ring_name}, {"dims", dims}};
    std::string text;
    for (int n = 0; n <= max_degree; ++n)
        text += "dim H^" + std::to_string(n) + " = " + std::to_string(dims[size_t(n)]) + "\n";
    emit(opt, j, text);
    return 0;
}

int cmd_steenrod(const Options& opt, const std::string& file, const std::string& sq_name,
                 int max_degree) {
    gcr::SourceFile f = load(file);
    const auto& sd = f.sq(sq_name);
    gcr::SteenrodReport report = gcr::verify_action(sd.action, max_degree);
    json j{{"sq", sq_name},
           {"max_degree", max_degree},
           {"pass", report.ok()},
           {"failures", json::array()}};
    std::string text;
    for (const auto& fail : report.failures) {
        j["failures"].push_back({{"family", fail.family}, {"witness", fail.witness}});
        text += "FAIL [" + fail.family + "] " + fail.witness + "\n";
    }
    text += std::string(report.ok() ? "PASS" : "FAIL") + ": Steenrod action '" + sq_name +
            "' to degree " + std::to_string(max_degree) + "\n";
    emit(opt, j, text);
    return report.ok() ? 0 : 1;
}

int cmd_hilton(const Options& opt, const std::string& spheres, int n, const std::string& table_path) {
    std::vector<int> dims;
    std::stringstream ss(spheres);
    std::string item;
    while (std::getline(ss, item, ','))
        dims.push_back(std::stoi(item));
    gcr::SphereTable table =
        table_path.empty() ? gcr::SphereTable::builtin() : gcr::SphereTable::parse(slurp(table_path));
    gcr::AbGroupExpr g = gcr::wedge_homotopy(gcr::WedgeOfSpheres(dims), n, table);
    emit(opt, json{{"spheres", dims}, {"n", n}, {"group", g.to_string()}}, g.to_string() + "\n");
    return 0;
}

int cmd_verify(const Options& opt, const std::string& scenario, bool all, int max_degree) {
    gcr::CatalogOptions copts;
    copts.deadline = opt.deadline();
    if (max_degree > 0)
        copts.max_degree = max_degree;
    else if (const char* env = std::getenv("GCR_MAX_DEGREE"))
        copts.max_degree = std::atoi(env);

    std::vector<std::string> names;
    if (all) {
        for (const auto& info : gcr::list_scenarios())
            names.push_back(info.name);
    } else if (!scenario.empty()) {
        names.push_back(scenario);
    } else {
        throw CLI::ValidationError("verify needs --scenario NAME or --all");
    }

    json results = json::array();
    std::string text;
    bool all_pass = true;
    for (const auto& name : names) {
        gcr::VerificationOutcome r = gcr::run_scenario(name, copts);
        all_pass = all_pass && r.pass;
        results.push_back({{"scenario", r.name},
                           {"status", r.pass ? "pass" : "fail"},
                           {"expected", r.expected},
                           {"actual", r.actual},
                           {"witnesses", r.witnesses},
                           {"millis", r.millis}});
        text += std::string(r.pass ? "PASS" : "FAIL") + ": " + r.name;
        if (r.pass && r.name.find("kernel") != std::string::npos)
            text += " - kernel equals " + r.expected;
        text += " (" + std::to_string(r.millis) + " ms)\n";
        for (const auto& w : r.witnesses)
            text += "    witness: " + w + "\n";
    }
    emit(opt, results, text);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded commutative ring verifier"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--deadline", opt.deadline_seconds, "cooperative timeout in seconds");

    std::string file, ideal_name, ring_name, map_name, sq_name, poly, scenario, spheres, table_path;
    int max_degree = 12, hilton_n = 0;
    bool all = false;

    auto* gb = app.add_subcommand("gb", "Groebner basis of a declared ideal");
    gb->add_option("file", file)->required();
    gb->add_option("--ideal", ideal_name)->required();

    auto* nf = app.add_subcommand("nf", "normal form of a polynomial");
    nf->add_option("file", file)->required();
    nf->add_option("--ideal", ideal_name)->required();
    nf->add_option("--poly", poly)->required();

    auto* kernel = app.add_subcommand("kernel", "kernel of a declared ring map");
    kernel->add_option("file", file)->required();
    kernel->add_option("--map", map_name)->required();

    auto* member = app.add_subcommand("member", "ideal membership test");
    member->add_option("file", file)->required();
    member->add_option("--ideal", ideal_name);
    member->add_option("--ring", ring_name, "use the ring's relations ideal");
    member->add_option("--poly", poly)->required();

    auto* groups = app.add_subcommand("groups", "graded abelian groups of a quotient ring");
    groups->add_option("file", file)->required();
    groups->add_option("--ring", ring_name)->required();
    groups->add_option("--max-degree", max_degree)->capture_default_str();

    auto* hilbert = app.add_subcommand("hilbert", "slice dimensions over a field");
    hilbert->add_option("file", file)->required();
    hilbert->add_option("--ring", ring_name)->required();
    hilbert->add_option("--max-degree", max_degree)->capture_default_str();

    auto* steenrod = app.add_subcommand("steenrod", "verify a Steenrod action");
    steenrod->add_option("file", file)->required();
    steenrod->add_option("--sq", sq_name)->required();
    steenrod->add_option("--max-degree", max_degree)->capture_default_str();

    auto* hilton = app.add_subcommand("hilton", "homotopy of a wedge of spheres");
    hilton->add_option("--spheres", spheres, "comma-separated dimensions, e.g. 2,2,3")->required();
    hilton->add_option("--n", hilton_n)->required();
    hilton->add_option("--table", table_path, "sphere homotopy table file");

    auto* verify = app.add_subcommand("verify", "run catalog scenarios");
    verify->add_option("--scenario", scenario);
    verify->add_flag("--all", all);
    verify->add_option("--max-degree", max_degree, "override scenario verification depth")
        ->default_val(0);

    auto* scenarios = app.add_subcommand("scenarios", "list catalog scenarios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gb->parsed())
            return cmd_gb(opt, file, ideal_name);
        if (nf->parsed())
            return cmd_nf(opt, file, ideal_name, poly);
        if (kernel->parsed())
            return cmd_kernel(opt, file, map_name);
        if (member->parsed())
            return cmd_member(opt, file, ideal_name, ring_name, poly);
        if (groups->parsed())
            return cmd_groups(opt, file, ring_name, max_degree);
        if (hilbert->parsed())
            return cmd_hilbert(opt, file, ring_name, max_degree);
        if (steenrod->parsed())
            return cmd_steenrod(opt, file, sq_name, max_degree);
        if (hilton->parsed())
            return cmd_hilton(opt, spheres, hilton_n, table_path);
        if (verify->parsed())
            return cmd_verify(opt, scenario, all, max_degree);
        if (scenarios->parsed()) {
            json j = json::array();
            std::string text;
            for (const auto& info : gcr::list_scenarios()) {
                j.push_back({{"name", info.name},
                             {"procedure", info.procedure},
                             {"summary", info.summary}});
                text += info.name + "  [" + info.procedure + "]  " + info.summary + "\n";
            }
            emit(opt, j, text);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gcr::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gcr::UnknownScenario& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gcr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
