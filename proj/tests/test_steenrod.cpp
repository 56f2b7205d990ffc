#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcr/catalog.hpp"
#include "helpers.hpp"

using namespace gcr;
using test::P;

namespace {

const SteenrodAction& action(const std::string& name) {
    return catalog_file("steenrod_actions.gcr").sq(name).action;
}

Poly pp(const SteenrodAction& A, const std::string& text) {
    return parse_poly(A.presentation().ambient(), text);
}

}  // namespace

TEST_CASE("total squares from the catalog") {
    const auto& o2 = action("o2");
    CHECK(total_sq(pp(o2, "s"), o2) == pp(o2, "s + w2*r + w1^2*s"));
    CHECK(total_sq(Poly::one(o2.presentation().ambient()), o2) ==
          Poly::one(o2.presentation().ambient()));

    const auto& su2 = action("su2");
    // Cartan product Sq(y1) Sq(x1) collapses to zero modulo the relations
    CHECK(total_sq(pp(su2, "y1*x1"), su2).is_zero());
}

TEST_CASE("sq_k examples") {
    const auto& su2 = action("su2");
    CHECK(sq_k(pp(su2, "x1"), 1, su2) == pp(su2, "x2"));

    const auto& o2 = action("o2");
    CHECK(sq_k(pp(o2, "s"), 2, o2) == pp(o2, "w1^2*s"));
    CHECK(sq_k(pp(o2, "s"), 1, o2) == pp(o2, "w2*r"));

    std::mt19937 rng(99);
    for (int d = 1; d <= 6; ++d) {
        Poly f = test::random_homogeneous(o2.presentation().ambient(), d, rng, 1);
        CHECK(sq_k(f, 0, o2) == o2.presentation().reduce(f));
    }
    CHECK_THROWS_AS(sq_k(pp(o2, "w1 + w2"), 1, o2), NotHomogeneous);
}

TEST_CASE("verify_action passes on all catalog actions") {
    for (const char* name : {"so3", "u2", "su2", "o2"}) {
        auto report = verify_action(action(name), 12);
        CHECK(report.ok());
    }

    // the free unstable algebra on one 1-dimensional class
    auto F2x = test::ring({{"x", 1}}, CoeffDomain::prime_field(2));
    SteenrodAction free_action(QuotientPresentation(F2x), {P(F2x, "x + x^2")});
    CHECK(verify_action(free_action, 8).ok());
}

TEST_CASE("instability violation is reported with a witness") {
    // F2[x:1, y:2]/(x^2 + y) with Sq(y) = y: the top square Sq^2(y) should
    // be y^2 = x^4, which is nonzero in the quotient.
    auto R = test::ring({{"x", 1}, {"y", 2}}, CoeffDomain::prime_field(2));
    QuotientPresentation pres(R, test::ideal(R, {"x^2 + y"}));
    SteenrodAction bad(pres, {P(R, "x + x^2"), P(R, "y")});
    auto report = verify_action(bad, 6);
    REQUIRE(!report.ok());
    bool found = false;
    for (const auto& f : report.failures)
        if (f.family == "instability" && f.witness.find("y") != std::string::npos)
            found = true;
    CHECK(found);
}

TEST_CASE("structural violations are rejected at construction") {
    auto R = test::ring({{"x", 1}}, CoeffDomain::prime_field(2));
    QuotientPresentation pres(R);
    // missing Sq^0 term
    CHECK_THROWS(SteenrodAction(pres, {P(R, "x^2")}));
    // component above twice the degree
    CHECK_THROWS(SteenrodAction(pres, {P(R, "x + x^2 + x^3")}));
    // wrong coefficient field
    auto Zr = test::ring({{"x", 1}}, CoeffDomain::integers());
    CHECK_THROWS_AS(SteenrodAction(QuotientPresentation(Zr), {P(Zr, "x")}), NotAField);
}

TEST_CASE("Cartan formula re-verified on random pairs") {
    std::mt19937 rng(555);
    for (const char* name : {"su2", "o2"}) {
        const auto& A = action(name);
        const auto& amb = A.presentation().ambient();
        for (int trial = 0; trial < 25; ++trial) {
            Poly f = test::random_poly(amb, rng, 3, 2, 1);
            Poly g = test::random_poly(amb, rng, 3, 2, 1);
            CHECK(total_sq(f * g, A) == A.presentation().reduce(total_sq(f, A) * total_sq(g, A)));
            CHECK(total_sq(f + g, A) == A.presentation().reduce(total_sq(f, A) + total_sq(g, A)));
        }
    }
}

TEST_CASE("Sq^1 Sq^1 = 0 on standard monomials") {
    for (const char* name : {"so3", "u2", "su2", "o2"}) {
        const auto& A = action(name);
        const auto& gb = A.presentation().relations_gb();
        for (int n = 0; n <= 12; ++n)
            for (const auto& m : standard_monomials(gb, n)) {
                Poly mono = Poly::term(A.presentation().ambient(), 1, m);
                CHECK(sq_k(sq_k(mono, 1, A), 1, A).is_zero());
            }
    }
}

TEST_CASE("Sq^1 is a derivation on random homogeneous pairs") {
    std::mt19937 rng(2718);
    for (const char* name : {"so3", "u2", "su2", "o2"}) {
        const auto& A = action(name);
        const auto& amb = A.presentation().ambient();
        for (int trial = 0; trial < 30; ++trial) {
            int da = 1 + trial % 5, db = 1 + (trial / 2) % 5;
            Poly f = A.presentation().reduce(test::random_homogeneous(amb, da, rng, 1));
            Poly g = A.presentation().reduce(test::random_homogeneous(amb, db, rng, 1));
            Poly lhs = sq_k(f * g, 1, A);
            Poly rhs = A.presentation().reduce(sq_k(f, 1, A) * g + f * sq_k(g, 1, A));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("cross identities in the O(2) and U(2) actions") {
    const auto& o2 = action("o2");
    // Sq^1(s) = w2 r and Sq^3(s) = s^2 = 0; Sq^3 = Sq^1 Sq^2 forces
    // w1^2 w2 r = 0, which holds because r w1 = 0.
    CHECK(sq_k(pp(o2, "s"), 1, o2) == pp(o2, "w2*r"));
    CHECK(sq_k(pp(o2, "s"), 3, o2).is_zero());
    CHECK(sq_k(sq_k(pp(o2, "s"), 2, o2), 1, o2).is_zero());
    CHECK(o2.presentation().reduce(pp(o2, "w1^2 * (w2*r)")).is_zero());

    const auto& u2 = action("u2");
    CHECK(sq_k(pp(u2, "y2"), 2, u2) == pp(u2, "c2*y1"));
}

TEST_CASE("naturality under the U(2) -> SU(2) quotient map") {
    const auto& u2 = action("u2");
    const auto& su2 = action("su2");
    const auto& amb_su2 = su2.presentation().ambient();
    // c1 -> 0, c2 -> c2, y1 -> y1, y2 -> x2
    RingMap quot(u2.presentation().ambient(), su2.presentation(),
                 {Poly::zero(amb_su2), parse_poly(amb_su2, "c2"), parse_poly(amb_su2, "y1"),
                  parse_poly(amb_su2, "x2")});
    for (size_t i = 0; i < u2.presentation().ambient().nvars(); ++i) {
        Poly gen = Poly::var(u2.presentation().ambient(), i);
        CHECK(apply(quot, total_sq(gen, u2)) ==
              su2.presentation().reduce(total_sq(apply(quot, gen), su2)));
    }
}

TEST_CASE("deterministic report ordering") {
    auto R = test::ring({{"x", 1}, {"y", 2}}, CoeffDomain::prime_field(2));
    QuotientPresentation pres(R, test::ideal(R, {"x^2 + y"}));
    SteenrodAction bad(pres, {P(R, "x + x^2"), P(R, "y")});
    auto r1 = verify_action(bad, 8);
    auto r2 = verify_action(bad, 8);
    REQUIRE(r1.failures.size() == r2.failures.size());
    for (size_t i = 0; i < r1.failures.size(); ++i) {
        CHECK(r1.failures[i].family == r2.failures[i].family);
        CHECK(r1.failures[i].witness == r2.failures[i].witness);
    }
}
