#include "gcr/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <map>

namespace gcr {

namespace {

// ---------------------------------------------------------------------------
// Catalog declaration files. The same texts are shipped under data/.
// ---------------------------------------------------------------------------

const char* APPENDIX_A1 = R"(# Kernel presenting H^*(B_com U(2); Z).
# Source: free ring on the Chern classes c1, c2 and the classes y1, y2.
# Target: H^*(BS^1 v (S^2 x_W BT^2); Z) with a1, a2 the conjugation-space
# Chern classes (display symbols ~c1, ~c2).
ring P = ZZ [c1:2, c2:4, y1:4, y2:6];
ring R = ZZ [t:2, u:2, a1:2, a2:4, c:4]
  / (t*u, t*a1, t*a2, t*c, c^2, u^2, 2*u, c*u, a1*u);
map f : P -> R = (2*t + a1, t^2 + a2, 2*c, a1*c);

# Expected kernel, in the order the computer algebra listing prints it.
ideal singular_output on P = (y2^2, y1*y2, y1^2, c1*y1 - 2*y2);
# Expected kernel, in the order the presentation states it.
ideal presentation_ideal on P = (2*y2 - y1*c1, y1^2, y1*y2, y2^2);
)";

const char* APPENDIX_A2 = R"(# Kernel presenting H^*(B_com O(2); Z).
# Target: H^*(BSO(2) v (O(2) x_D8 BD4); Z); a is the Euler class of BSO(2),
# x is the coinvariant class (display symbol {x}), W1, W2, p1 the lifted
# classes (display symbols ~W1, ~W2, ~p1).
ring P = ZZ [W1:2, W2:3, p1:4, r:2, b1:4, b2:5, b3:6];
ring R = ZZ [a:2, t:1, W1:2, W2:3, x:3, p1:4]
  / (a*t, a*W1, a*W2, a*x, a*p1, 2*W1, 2*W2, 2*x, 2*p1, t^2, t*W1, t*x, x^2,
     W2^2 + p1*W1);
map f : P -> R = (W1, W2, a^2 + p1, 2*a, t*W2, x*W1, x*W2);

ideal singular_output on P =
  (2*b3, 2*b2, 2*b1, 2*W2, 2*W1, b3^2, b2*b3, b1*b3, r*b3, b2^2, b1*b2, r*b2,
   p1*b2 + W2*b3, W2*b2 - W1*b3, b1^2, r*b1, W2*b1, W1*b1, r^2 - 4*p1, W2*r,
   W1*r, W2^2 + W1*p1);
ideal presentation_ideal on P =
  (W2^2 - p1*W1, r^2 - 4*p1, b2*p1 - b3*W2, b2*W2 - b3*W1, 2*W1, 2*W2, r*W1,
   r*W2, b1*W1, b1*W2, 2*b1, 2*b2, 2*b3, r*b1, r*b2, r*b3, b1^2, b1*b2, b1*b3,
   b2^2, b2*b3, b3^2);
)";

const char* APPENDIX_A3 = R"(# Kernel presenting H^*(B_com SO(3)_1; Z).
# Target: H^*(SO(3)/SO(2) x_W BSO(2); Z) with b the lifted Pontryagin class
# (display symbol ~p1).
ring P = ZZ [p1:4, w:3, y1:4];
ring R = ZZ [b:4, U:2, x:3, y:4] / (2*U, 2*x, U^2, x*y, U*x, U*y, y^2, x^2 - b*U);
map f : P -> R = (b, x, y);

ideal singular_output on P = (2*w, y1^2, w*y1, w^3);
)";

const char* SU2_TOWER = R"(# Integral cohomology presentations of B_com U(2), B_com SU(2), E_com SU(2)
# and the quotient maps between them.
ring BcomU2 = ZZ [c1:2, c2:4, y1:4, y2:6] / (2*y2 - y1*c1, y1^2, y1*y2, y2^2);
ring BcomSU2 = ZZ [c2:4, y1:4, x2:6] / (2*x2, y1^2, x2*y1, x2^2);
ring EcomSU2 = ZZ [y1:4, x2:6] / (2*x2, y1^2, y1*x2, x2^2);

map to_su2 : BcomU2 -> BcomSU2 = (0, c2, y1, x2);
map to_ecom : BcomSU2 -> EcomSU2 = (0, y1, x2);

# Expected kernels of the induced quotient-ring maps, modulo the source
# relations.
ideal su2_kernel on BcomU2 = (c1);
ideal ecom_kernel on BcomSU2 = (c2);
)";

const char* O2_RINGS = R"(# Cohomology presentations of B_com O(2) with Z, Q and F2 coefficients.
ring BcomO2Z = ZZ [W1:2, W2:3, p1:4, r:2, b1:4, b2:5, b3:6]
  / (W2^2 - p1*W1, r^2 - 4*p1, b2*p1 - b3*W2, b2*W2 - b3*W1, 2*W1, 2*W2, r*W1,
     r*W2, b1*W1, b1*W2, 2*b1, 2*b2, 2*b3, r*b1, r*b2, r*b3, b1^2, b1*b2,
     b1*b3, b2^2, b2*b3, b3^2);
ring BcomO2Q = QQ [W1:2, W2:3, p1:4, r:2, b1:4, b2:5, b3:6]
  / (W2^2 - p1*W1, r^2 - 4*p1, b2*p1 - b3*W2, b2*W2 - b3*W1, 2*W1, 2*W2, r*W1,
     r*W2, b1*W1, b1*W2, 2*b1, 2*b2, 2*b3, r*b1, r*b2, r*b3, b1^2, b1*b2,
     b1*b3, b2^2, b2*b3, b3^2);
ring BcomO2F2 = F2 [w1:1, w2:2, r:2, s:3] / (r*w1, r^2, r*s, s^2);

# The square of the universal class r equals 4 p1 in H^*(B_com O(2); Z);
# the obstruction behind the tautological-bundle application.
ideal tautological on BcomO2Z = (r^2 - 4*p1);
)";

const char* MV_O2_INTEGRAL = R"(# Mayer-Vietoris corner data for B_com O(2) with Z coefficients.
# Corner = H^*(O(2)/D8 x BZ; Z); q and i restrict the two pushout legs.
ring BSO2 = ZZ [a:2];
ring O2Conj = ZZ [t:1, W1:2, W2:3, xc:3, p1:4]
  / (2*W1, 2*W2, 2*xc, 2*p1, W2^2 + p1*W1, t^2, t*W1, t*xc, xc^2);
ring Corner = ZZ [t:1, z:2] / (2*z, t^2);

map q : BSO2 -> Corner = (z);
map i : O2Conj -> Corner = (t, 0, 0, t*z, z^2);
)";

const char* MV_U2_INTEGRAL = R"(# Mayer-Vietoris corner data for B_com U(2) with Z coefficients.
# Corner = H^*(RP^2 x BS^1; Z).
ring BS1 = ZZ [t:2];
ring U2Conj = ZZ [a1:2, a2:4, c:4, U:2] / (2*U, U^2, c^2, a1*U, c*U);
ring Corner = ZZ [U:2, t:2] / (2*U, U^2);

map pi2 : BS1 -> Corner = (t);
map i : U2Conj -> Corner = (2*t, t^2, t*U, U);
)";

const char* MV_O2_MOD2 = R"(# Mayer-Vietoris corner data for B_com O(2) with F2 coefficients,
# used for the dimension bookkeeping dim H^n = dim ker(q*-i*)_n + [n even].
ring BSO2 = F2 [a:2];
ring O2Conj = F2 [t:1, w1:1, w2:2, uc:2] / (t^2, t*w1, t*uc, uc^2);
ring Corner = F2 [t:1, z:1] / (t^2);

map q : BSO2 -> Corner = (z^2);
map i : O2Conj -> Corner = (t, 0, z^2, t*z);
)";

const char* STEENROD_ACTIONS = R"(# Total Steenrod squares on the F2 cohomology presentations.
# Top squares forced by the instability axiom are stored explicitly.
ring BcomSO3F2 = F2 [w2:2, wb:3, y1:4] / (y1^2, wb*y1, wb^2 + w2*y1);
ring BcomU2F2 = F2 [c1:2, c2:4, y1:4, y2:6] / (y1*c1, y1^2, y1*y2, y2^2);
ring BcomSU2F2 = F2 [c2:4, y1:4, x1:5, x2:6] / (y1^2, y1*x1, x1^2, x2*y1, x1*x2, x2^2);
ring BcomO2F2 = F2 [w1:1, w2:2, r:2, s:3] / (r*w1, r^2, r*s, s^2);

sq so3 on BcomSO3F2 = (w2 -> w2 + wb + w2^2,
                       wb -> wb + w2*wb + w2*y1,
                       y1 -> y1 + w2*y1);
sq u2 on BcomU2F2 = (c1 -> c1 + c1^2,
                     c2 -> c2 + c1*c2 + c2^2,
                     y1 -> y1,
                     y2 -> y2 + c2*y1 + c1^2*y2);
sq su2 on BcomSU2F2 = (c2 -> c2 + c2^2,
                       y1 -> y1,
                       x1 -> x1 + x2,
                       x2 -> x2 + c2*y1);
sq o2 on BcomO2F2 = (w1 -> w1 + w1^2,
                     w2 -> w2 + w1*w2 + w2^2,
                     r -> r,
                     s -> s + w2*r + w1^2*s);
)";

const std::map<std::string, const char*>& files() {
    static const std::map<std::string, const char*> m = {
        {"appendix_a1.gcr", APPENDIX_A1},   {"appendix_a2.gcr", APPENDIX_A2},
        {"appendix_a3.gcr", APPENDIX_A3},   {"su2_tower.gcr", SU2_TOWER},
        {"o2_rings.gcr", O2_RINGS},         {"mv_o2_integral.gcr", MV_O2_INTEGRAL},
        {"mv_u2_integral.gcr", MV_U2_INTEGRAL}, {"mv_o2_mod2.gcr", MV_O2_MOD2},
        {"steenrod_actions.gcr", STEENROD_ACTIONS},
    };
    return m;
}

std::string ideal_to_string(const Ideal& I) {
    std::string s = "(";
    for (size_t i = 0; i < I.gens.size(); ++i) {
        if (i)
            s += ", ";
        s += I.gens[i].to_string();
    }
    return s + ")";
}

// Degree defaults per scenario family.
int depth(const CatalogOptions& o, int dflt) { return o.max_degree > 0 ? o.max_degree : dflt; }

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
};

// ---------------------------------------------------------------------------
// Scenario implementations
// ---------------------------------------------------------------------------

VerificationOutcome appendix_kernel(const std::string& name, const std::string& file,
                                    bool also_presentation, const CatalogOptions& opts) {
    VerificationOutcome out;
    out.name = name;
    Timer timer;
    const SourceFile& f = catalog_file(file);
    Ideal K = kernel(f.map("f").map, opts.deadline);
    const Ideal& expected = f.ideal("singular_output").ideal;
    auto drl = MonomialOrder::degrevlex();
    bool ok = ideal_equal(K, expected, drl, opts.deadline);
    if (also_presentation)
        ok = ok && ideal_equal(K, f.ideal("presentation_ideal").ideal, drl, opts.deadline);
    out.pass = ok;
    out.expected = ideal_to_string(expected);
    out.actual = ideal_to_string(K);
    if (!ok)
        out.witnesses.push_back("computed kernel " + out.actual + " differs from " + out.expected);
    out.millis = timer.ms();
    return out;
}

VerificationOutcome quotient_kernel(const std::string& name, const std::string& map_name,
                                    const std::string& expected_ideal, const CatalogOptions& opts) {
    VerificationOutcome out;
    out.name = name;
    Timer timer;
    const SourceFile& f = catalog_file("su2_tower.gcr");
    const auto& md = f.map(map_name);
    const QuotientPresentation& source = f.ring(md.source_ring).pres;
    Ideal K = kernel_of_quotient_map(source, md.map, opts.deadline);

    std::vector<Poly> gens = f.ideal(expected_ideal).ideal.gens;
    out.expected = ideal_to_string(Ideal(source.ambient(), gens)) + " modulo the source relations";
    for (const auto& r : source.relations().gens)
        gens.push_back(r);
    Ideal expected(source.ambient(), std::move(gens));
    out.pass = ideal_equal(K, expected, MonomialOrder::degrevlex(), opts.deadline);

    // display the kernel generators reduced modulo the source relations
    std::vector<Poly> reduced;
    for (const auto& g : K.gens) {
        Poly r = source.reduce(g);
        if (!r.is_zero() && std::find(reduced.begin(), reduced.end(), r) == reduced.end())
            reduced.push_back(r);
    }
    out.actual = ideal_to_string(Ideal(source.ambient(), reduced)) + " modulo the source relations";
    if (!out.pass)
        out.witnesses.push_back("computed kernel " + out.actual + ", expected " + out.expected);
    out.millis = timer.ms();
    return out;
}

AbGroup expected_bcom_su2_group(int n) {
    AbGroup g;
    if (n == 0)
        g.free_rank = 1;
    else if (n % 4 == 0)
        g.free_rank = 2;
    else if (n % 4 == 2 && n > 2)
        g.torsion = {2};
    return g;
}

VerificationOutcome bcom_su2_graded(const CatalogOptions& opts) {
    VerificationOutcome out;
    out.name = "bcom-su2-graded-groups";
    Timer timer;
    const int N = depth(opts, 16);
    const auto& pres = catalog_file("su2_tower.gcr").ring("BcomSU2").pres;
    GradedAbelianGroup got = graded_groups(pres, N);
    out.pass = true;
    std::string exp, act;
    for (int n = 0; n <= N; ++n) {
        AbGroup want = expected_bcom_su2_group(n);
        const AbGroup& have = got.at(n);
        if (n) {
            exp += ", ";
            act += ", ";
        }
        exp += "H^" + std::to_string(n) + "=" + want.to_string();
        act += "H^" + std::to_string(n) + "=" + have.to_string();
        if (!(want == have)) {
            out.pass = false;
            out.witnesses.push_back("degree " + std::to_string(n) + ": got " + have.to_string() +
                                    ", expected " + want.to_string());
        }
    }
    out.expected = exp;
    out.actual = act;
    out.millis = timer.ms();
    return out;
}

VerificationOutcome bcom_o2_rational(const CatalogOptions& opts) {
    VerificationOutcome out;
    out.name = "bcom-o2-rational";
    Timer timer;
    const int N = depth(opts, 12);
    const auto& pres = catalog_file("o2_rings.gcr").ring("BcomO2Q").pres;
    GradedAbelianGroup got = graded_groups(pres, N);
    out.pass = true;
    std::string exp, act;
    for (int n = 0; n <= N; ++n) {
        long want = n % 2 == 0 ? 1 : 0;  // Q[r], deg r = 2
        const AbGroup& have = got.at(n);
        if (n) {
            exp += ",";
            act += ",";
        }
        exp += std::to_string(want);
        act += std::to_string(have.free_rank);
        if (have.free_rank != want || !have.torsion.empty()) {
            out.pass = false;
            out.witnesses.push_back("degree " + std::to_string(n) + ": got " + have.to_string());
        }
    }
    out.expected = "dims " + exp;
    out.actual = "dims " + act;
    out.millis = timer.ms();
    return out;
}

GradedMapSpec mv_spec(const std::string& file, const std::string& first_map,
                      const std::string& second_map) {
    const SourceFile& f = catalog_file(file);
    const auto& m1 = f.map(first_map);
    const auto& m2 = f.map(second_map);
    return GradedMapSpec({f.ring(m1.source_ring).pres, f.ring(m2.source_ring).pres},
                         {m1.map, m2.map}, {+1, -1}, f.ring(m1.target_ring).pres);
}

VerificationOutcome mv_integral(const std::string& name, const std::string& mv_file,
                                const std::string& first_map, const std::string& second_map,
                                const std::string& pres_file, const std::string& pres_ring,
                                const CatalogOptions& opts) {
    VerificationOutcome out;
    out.name = name;
    Timer timer;
    const int N = depth(opts, 12);
    GradedMapSpec spec = mv_spec(mv_file, first_map, second_map);
    const auto& pres = catalog_file(pres_file).ring(pres_ring).pres;
    GradedAbelianGroup slices = graded_groups(pres, N);
    out.pass = true;
    std::string exp, act;
    for (int n = 0; n <= N; ++n) {
        AbGroup want = slices.at(n);
        AbGroup have = fp_group_hom_kernel(spec, n);
        if (n) {
            exp += ", ";
            act += ", ";
        }
        exp += "n" + std::to_string(n) + "=" + want.to_string();
        act += "n" + std::to_string(n) + "=" + have.to_string();
        if (!(want == have)) {
            out.pass = false;
            out.witnesses.push_back("degree " + std::to_string(n) + ": kernel " + have.to_string() +
                                    ", presentation slice " + want.to_string());
        }
    }
    out.expected = exp;
    out.actual = act;
    out.millis = timer.ms();
    return out;
}

VerificationOutcome mv_mod2(const CatalogOptions& opts) {
    VerificationOutcome out;
    out.name = "bcom-o2-mv-mod2";
    Timer timer;
    const int N = depth(opts, 12);
    GradedMapSpec spec = mv_spec("mv_o2_mod2.gcr", "q", "i");
    const auto& pres = catalog_file("o2_rings.gcr").ring("BcomO2F2").pres;
    std::vector<long> dims = hilbert_dims(pres, N);
    out.pass = true;
    std::string exp, act;
    for (int n = 2; n <= N; ++n) {
        long ker = fp_group_hom_kernel(spec, n).free_rank;
        long delta = (n % 2 == 0) ? 1 : 0;  // image of the connecting map
        long want = dims[static_cast<size_t>(n)];
        long have = ker + delta;
        if (n > 2) {
            exp += ",";
            act += ",";
        }
        exp += std::to_string(want);
        act += std::to_string(have);
        if (want != have) {
            out.pass = false;
            out.witnesses.push_back("degree " + std::to_string(n) + ": dim H = " +
                                    std::to_string(want) + " but ker + delta = " +
                                    std::to_string(have));
        }
    }
    out.expected = "dims " + exp;
    out.actual = "ker+delta " + act;
    out.millis = timer.ms();
    return out;
}

VerificationOutcome steenrod_scenario(const std::string& name, const std::string& action,
                                      const CatalogOptions& opts) {
    VerificationOutcome out;
    out.name = name;
    Timer timer;
    const int N = depth(opts, 12);
    const auto& sd = catalog_file("steenrod_actions.gcr").sq(action);
    SteenrodReport report = verify_action(sd.action, N);
    out.pass = report.ok();
    out.expected = "well-definedness, instability and Adem relations up to degree " +
                   std::to_string(N);
    out.actual = out.pass ? "all checks pass"
                          : std::to_string(report.failures.size()) + " failure(s)";
    for (const auto& f : report.failures)
        out.witnesses.push_back(f.family + ": " + f.witness);
    out.millis = timer.ms();
    return out;
}

VerificationOutcome tautological(const CatalogOptions& opts) {
    VerificationOutcome out;
    out.name = "tautological-obstruction";
    Timer timer;
    const SourceFile& f = catalog_file("o2_rings.gcr");
    const auto& presZ = f.ring("BcomO2Z").pres;
    const Poly& obstruction = f.ideal("tautological").ideal.gens.front();
    bool member =
        ideal_contains(presZ.relations(), obstruction, MonomialOrder::degrevlex(), opts.deadline);
    const auto& presQ = f.ring("BcomO2Q").pres;
    long rank2 = graded_groups(presQ, 2).at(2).free_rank;
    out.pass = member && rank2 == 1;
    out.expected = "r^2 - 4*p1 in the relations ideal; rational H^2 of rank 1";
    out.actual = std::string(member ? "member" : "NOT a member") + "; rational H^2 rank " +
                 std::to_string(rank2);
    if (!member)
        out.witnesses.push_back("r^2 - 4*p1 is not in the relations ideal");
    if (rank2 != 1)
        out.witnesses.push_back("rational H^2 has rank " + std::to_string(rank2));
    out.millis = timer.ms();
    return out;
}

const std::vector<std::pair<int, const char*>>& hilton_expected() {
    static const std::vector<std::pair<int, const char*>> rows = {
        {1, "Z/2"},
        {2, "Z^3"},
        {3, "Z^4"},
        {4, "Z^4 + (Z/2)^4"},
        {5, "Z^7 + (Z/2)^8"},
        {6, "Z^16 + (Z/2)^11 + (Z/12)^4"},
        {7, "Z^34 + (Z/2)^27 + (Z/12)^4"},
        {8, "Z^68 + (Z/2)^58 + (Z/24)^7"},
        {9, "Z^140 + (Z/2)^113 + (Z/3)^4 + (Z/24)^16"},
        {10, "Z^308 + (Z/2)^215 + (Z/3)^4 + (Z/15)^4 + (Z/24)^34"},
    };
    return rows;
}

VerificationOutcome hilton_scenario(const CatalogOptions&) {
    VerificationOutcome out;
    out.name = "hilton-bcom-o2";
    Timer timer;
    out.pass = true;
    std::string exp, act;
    for (const auto& [n, text] : hilton_expected()) {
        AbGroupExpr want = AbGroupExpr::parse(text);
        AbGroupExpr have = bcom_o2_homotopy(n);
        if (n > 1) {
            exp += "; ";
            act += "; ";
        }
        exp += "pi_" + std::to_string(n) + " = " + want.to_string();
        act += "pi_" + std::to_string(n) + " = " + have.to_string();
        if (!(want == have)) {
            out.pass = false;
            out.witnesses.push_back("pi_" + std::to_string(n) + ": got " + have.to_string() +
                                    ", expected " + want.to_string());
        }
    }
    out.expected = exp;
    out.actual = act;
    out.millis = timer.ms();
    return out;
}

}  // namespace

std::vector<std::string> catalog_file_names() {
    std::vector<std::string> names;
    for (const auto& [name, text] : files())
        names.push_back(name);
    return names;
}

const std::string& catalog_file_text(const std::string& name) {
    static std::map<std::string, std::string> cache;
    auto it = files().find(name);
    if (it == files().end())
        throw Error("no catalog file named '" + name + "'");
    auto [c, fresh] = cache.emplace(name, it->second);
    return c->second;
}

const SourceFile& catalog_file(const std::string& name) {
    static std::map<std::string, SourceFile> cache;
    auto it = cache.find(name);
    if (it != cache.end())
        return it->second;
    return cache.emplace(name, parse_source(catalog_file_text(name))).first->second;
}

const std::vector<std::pair<std::string, std::string>>& notation_table() {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"~c1", "a1"},   {"~c2", "a2"}, {"{x}", "xc"}, {"{u}", "uc"}, {"bar w", "wb"},
        {"bar r", "r"},  {"~W1", "W1"}, {"~W2", "W2"}, {"~p1", "p1"}, {"~w1", "w1"},
        {"~w2", "w2"},   {"bar c_i", "ci"}, {"bar y_i", "yi"}, {"bar x2", "x2"},
    };
    return table;
}

std::vector<ScenarioInfo> list_scenarios() {
    return {
        {"appendix-a1-kernel", "KernelEquals",
         "kernel of the B_com U(2) comparison map equals its published generator list"},
        {"appendix-a2-kernel", "KernelEquals",
         "kernel of the B_com O(2) comparison map equals its published 22-generator list"},
        {"appendix-a3-kernel", "KernelEquals",
         "kernel of the B_com SO(3)_1 comparison map equals (2w, y1^2, w*y1, w^3)"},
        {"bcom-u2-integral-presentation", "KernelEquals",
         "the B_com U(2) kernel equals the catalog presentation ideal"},
        {"bcom-su2-from-u2", "QuotientKernelEquals",
         "kernel of B_com U(2) -> B_com SU(2) is (c1) modulo relations"},
        {"ecom-su2-from-bcom-su2", "QuotientKernelEquals",
         "kernel of B_com SU(2) -> E_com SU(2) is (c2) modulo relations"},
        {"bcom-su2-graded-groups", "GradedGroupsEqual",
         "H^n(B_com SU(2); Z) matches the Z, Z^2, Z/2 pattern up to degree 16"},
        {"bcom-o2-rational", "GradedGroupsEqual",
         "H^*(B_com O(2); Q) has the dimensions of Q[r] up to degree 12"},
        {"bcom-u2-mv-integral", "MVKernelMatches",
         "ker(pi2* - i*) matches the B_com U(2) presentation slices up to degree 12"},
        {"bcom-o2-mv-integral", "MVKernelMatches",
         "ker(q* - i*) matches the B_com O(2) presentation slices up to degree 12"},
        {"bcom-o2-mv-mod2", "MVDimensionBookkeeping",
         "dim H^n(B_com O(2); F2) = dim ker(q* - i*)_n + [n even] for 2 <= n <= 12"},
        {"steenrod-so3", "SteenrodVerify", "Steenrod action on H^*(B_com SO(3)_1; F2)"},
        {"steenrod-u2", "SteenrodVerify", "Steenrod action on H^*(B_com U(2); F2)"},
        {"steenrod-su2", "SteenrodVerify", "Steenrod action on H^*(B_com SU(2); F2)"},
        {"steenrod-o2", "SteenrodVerify", "Steenrod action on H^*(B_com O(2); F2)"},
        {"tautological-obstruction", "MembershipHolds",
         "r^2 - 4*p1 holds in H^*(B_com O(2); Z) and rational H^2 has rank 1"},
        {"hilton-bcom-o2", "HiltonTableMatches",
         "pi_n(B_com O(2)) matches the catalog table for 1 <= n <= 10"},
    };
}

VerificationOutcome run_scenario(const std::string& name, const CatalogOptions& opts) {
    if (name == "appendix-a1-kernel")
        return appendix_kernel(name, "appendix_a1.gcr", true, opts);
    if (name == "appendix-a2-kernel")
        return appendix_kernel(name, "appendix_a2.gcr", true, opts);
    if (name == "appendix-a3-kernel")
        return appendix_kernel(name, "appendix_a3.gcr", false, opts);
    if (name == "bcom-u2-integral-presentation") {
        // the kernel must agree with the relations of the catalog's BcomU2
        VerificationOutcome out;
        out.name = name;
        Timer timer;
        const SourceFile& a1 = catalog_file("appendix_a1.gcr");
        Ideal K = kernel(a1.map("f").map, opts.deadline);
        const auto& pres = catalog_file("su2_tower.gcr").ring("BcomU2").pres;
        out.pass = ideal_equal(K, pres.relations(), MonomialOrder::degrevlex(), opts.deadline);
        out.expected = ideal_to_string(pres.relations());
        out.actual = ideal_to_string(K);
        if (!out.pass)
            out.witnesses.push_back("kernel differs from the presentation ideal");
        out.millis = timer.ms();
        return out;
    }
    if (name == "bcom-su2-from-u2")
        return quotient_kernel(name, "to_su2", "su2_kernel", opts);
    if (name == "ecom-su2-from-bcom-su2")
        return quotient_kernel(name, "to_ecom", "ecom_kernel", opts);
    if (name == "bcom-su2-graded-groups")
        return bcom_su2_graded(opts);
    if (name == "bcom-o2-rational")
        return bcom_o2_rational(opts);
    if (name == "bcom-u2-mv-integral")
        return mv_integral(name, "mv_u2_integral.gcr", "pi2", "i", "su2_tower.gcr", "BcomU2", opts);
    if (name == "bcom-o2-mv-integral")
        return mv_integral(name, "mv_o2_integral.gcr", "q", "i", "o2_rings.gcr", "BcomO2Z", opts);
    if (name == "bcom-o2-mv-mod2")
        return mv_mod2(opts);
    if (name == "steenrod-so3")
        return steenrod_scenario(name, "so3", opts);
    if (name == "steenrod-u2")
        return steenrod_scenario(name, "u2", opts);
    if (name == "steenrod-su2")
        return steenrod_scenario(name, "su2", opts);
    if (name == "steenrod-o2")
        return steenrod_scenario(name, "o2", opts);
    if (name == "tautological-obstruction")
        return tautological(opts);
    if (name == "hilton-bcom-o2")
        return hilton_scenario(opts);
    throw UnknownScenario(name);
}

}  // namespace gcr
