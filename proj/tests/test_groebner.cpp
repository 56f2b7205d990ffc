#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace gcr;
using test::P;

namespace {

const auto drl = MonomialOrder::degrevlex();

// Buchberger criterion oracle: every S-polynomial (and over Z every
// GCD-polynomial) of basis pairs must have normal form zero.
void check_buchberger_criterion(const GroebnerBasis& G) {
    const auto& R = G.ring;
    bool over_z = R.domain().kind() == DomainKind::Integers;
    for (size_t i = 0; i < G.elems.size(); ++i) {
        for (size_t j = i + 1; j < G.elems.size(); ++j) {
            const Term& ti = leading_term(R, G.order, G.elems[i]);
            const Term& tj = leading_term(R, G.order, G.elems[j]);
            Monomial L = ti.m.lcm(tj.m);
            if (over_z) {
                mpz_class a = ti.c.get_num(), b = tj.c.get_num();
                mpz_class l = lcm(a, b);
                Poly s = G.elems[i].mul_term(mpq_class(l / a), ti.m.divide(L)) -
                         G.elems[j].mul_term(mpq_class(l / b), tj.m.divide(L));
                CHECK(normal_form(s, G).is_zero());
                mpz_class d, u, v;
                mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(),
                           b.get_mpz_t());
                Poly g = G.elems[i].mul_term(mpq_class(u), ti.m.divide(L)) +
                         G.elems[j].mul_term(mpq_class(v), tj.m.divide(L));
                CHECK(normal_form(g, G).is_zero());
            } else {
                Poly s = G.elems[i].mul_term(R.domain().inv(ti.c), ti.m.divide(L)) -
                         G.elems[j].mul_term(R.domain().inv(tj.c), tj.m.divide(L));
                CHECK(normal_form(s, G).is_zero());
            }
        }
    }
}

}  // namespace

TEST_CASE("basis examples") {
    auto F2 = test::ring({{"x", 1}, {"y", 1}}, CoeffDomain::prime_field(2));
    auto G = groebner_basis(test::ideal(F2, {"x^2", "x*y"}), drl);
    REQUIRE(G.elems.size() == 2);
    CHECK(std::count(G.elems.begin(), G.elems.end(), P(F2, "x^2")) == 1);
    CHECK(std::count(G.elems.begin(), G.elems.end(), P(F2, "x*y")) == 1);

    auto Zx = test::ring({{"x", 1}}, CoeffDomain::integers());
    CHECK(groebner_basis(Ideal(Zx, {}), drl).elems.empty());
    CHECK(groebner_basis(Ideal(Zx, {Poly::zero(Zx)}), drl).elems.empty());

    auto G2 = groebner_basis(test::ideal(Zx, {"2*x", "x^2"}), drl);
    REQUIRE(G2.elems.size() == 2);
    CHECK(G2.elems[0] == P(Zx, "x^2"));
    CHECK(G2.elems[1] == P(Zx, "2*x"));
}

TEST_CASE("degreewise lattice oracle agrees with the (2x, x^2) basis") {
    auto Zx = test::ring({{"x", 1}}, CoeffDomain::integers());
    Ideal I = test::ideal(Zx, {"2*x", "x^2"});
    auto G = groebner_basis(I, drl);
    // slices: degree 1 is 2Z*x, degree >= 2 is all of Z*x^d
    CHECK(test::slice_membership_oracle(I, P(Zx, "2*x")));
    CHECK(!test::slice_membership_oracle(I, P(Zx, "x")));
    CHECK(test::slice_membership_oracle(I, P(Zx, "x^2")));
    CHECK(test::slice_membership_oracle(I, P(Zx, "3*x^3")));
    CHECK(normal_form(P(Zx, "x"), G) == P(Zx, "x"));
    CHECK(!normal_form(P(Zx, "x"), G).is_zero());
    CHECK(normal_form(P(Zx, "x^2"), G).is_zero());
}

TEST_CASE("normal form examples") {
    auto Zx = test::ring({{"x", 1}}, CoeffDomain::integers());
    auto G = groebner_basis(test::ideal(Zx, {"2*x", "x^2"}), drl);
    CHECK(normal_form(Poly::zero(Zx), G).is_zero());
    CHECK(normal_form(P(Zx, "3*x"), G) == P(Zx, "x"));

    // x^3 vanishes in the SO(3) conjugation-space ring
    auto R = test::ring({{"b", 4}, {"U", 2}, {"x", 3}, {"y", 4}}, CoeffDomain::integers());
    auto GR = groebner_basis(
        test::ideal(R, {"2*U", "2*x", "U^2", "x*y", "U*x", "U*y", "y^2", "x^2-b*U"}), drl);
    CHECK(normal_form(P(R, "x^3"), GR).is_zero());
}

TEST_CASE("membership examples") {
    auto Zx = test::ring({{"x", 1}}, CoeffDomain::integers());
    CHECK(!ideal_contains(test::ideal(Zx, {"x"}), Poly::one(Zx), drl));
    CHECK(!ideal_contains(test::ideal(Zx, {"2*x", "x^2"}), P(Zx, "x"), drl));

    // r^2 - 4 p1 holds in H^*(B_com O(2); Z)
    auto O2 = test::ring({{"W1", 2}, {"W2", 3}, {"p1", 4}, {"r", 2}, {"b1", 4}, {"b2", 5}, {"b3", 6}},
                         CoeffDomain::integers());
    Ideal I = test::ideal(
        O2, {"W2^2 - p1*W1", "r^2 - 4*p1", "b2*p1 - b3*W2", "b2*W2 - b3*W1", "2*W1", "2*W2",
             "r*W1", "r*W2", "b1*W1", "b1*W2", "2*b1", "2*b2", "2*b3", "r*b1", "r*b2", "r*b3",
             "b1^2", "b1*b2", "b1*b3", "b2^2", "b2*b3", "b3^2"});
    CHECK(ideal_contains(I, P(O2, "r^2 - 4*p1"), drl));
}

TEST_CASE("ideal equality examples") {
    auto U2 = test::ring({{"c1", 2}, {"c2", 4}, {"y1", 4}, {"y2", 6}}, CoeffDomain::integers());
    CHECK(ideal_equal(test::ideal(U2, {"2*y2 - y1*c1", "y1^2", "y1*y2", "y2^2"}),
                      test::ideal(U2, {"y2^2", "y1*y2", "y1^2", "c1*y1 - 2*y2"}), drl));

    auto Zx = test::ring({{"x", 1}}, CoeffDomain::integers());
    CHECK(ideal_equal(test::ideal(Zx, {"x"}), test::ideal(Zx, {"x", "x^2"}), drl));
    CHECK(!ideal_equal(test::ideal(Zx, {"2*x"}), test::ideal(Zx, {"x"}), drl));
}

TEST_CASE("elimination examples with degreewise oracle") {
    auto Zxy = test::ring({{"x", 1}, {"y", 2}}, CoeffDomain::integers());

    // I = (y - x^2) meets Z[x] trivially
    Ideal I = test::ideal(Zxy, {"y - x^2"});
    Ideal E = eliminate(I, {"y"});
    CHECK(E.gens.empty());
    // oracle: no pure power of x lies in any slice of I up to degree 6
    for (int d = 1; d <= 6; ++d)
        CHECK(!test::slice_membership_oracle(I, P(Zxy, "x^" + std::to_string(d))));

    // I = (y - x^2, y) eliminates to (x^2)
    Ideal J = test::ideal(Zxy, {"y - x^2", "y"});
    Ideal EJ = eliminate(J, {"y"});
    CHECK(ideal_equal(EJ, test::ideal(Zxy, {"x^2"}), drl));
    CHECK(test::slice_membership_oracle(J, P(Zxy, "x^2")));

    // eliminating nothing returns the same ideal
    Ideal E0 = eliminate(J, {});
    CHECK(ideal_equal(E0, J, drl));

    CHECK_THROWS_AS(eliminate(J, {"nope"}), UnknownVariable);
}

TEST_CASE("buchberger criterion holds for computed bases") {
    auto Zxy = test::ring({{"x", 1}, {"y", 1}}, CoeffDomain::integers());
    check_buchberger_criterion(groebner_basis(test::ideal(Zxy, {"2*x+y", "3*y^2", "x*y - y^2"}), drl));

    auto F5 = test::ring({{"x", 1}, {"y", 1}, {"z", 1}}, CoeffDomain::prime_field(5));
    check_buchberger_criterion(
        groebner_basis(test::ideal(F5, {"x^2 + y*z", "y^2 - x*z", "z^2 + x*y"}), drl));

    auto Q = test::ring({{"x", 1}, {"y", 1}}, CoeffDomain::rationals());
    check_buchberger_criterion(groebner_basis(test::ideal(Q, {"2*x^2 + y", "3*x*y + y^2"}), drl));
}

TEST_CASE("normal form is idempotent and the defect is a member") {
    std::mt19937 rng(2024);
    std::vector<GradedRing> rings = {
        test::ring({{"x", 1}, {"y", 1}}, CoeffDomain::integers()),
        test::ring({{"x", 1}, {"y", 1}}, CoeffDomain::prime_field(2)),
        test::ring({{"x", 1}, {"y", 2}}, CoeffDomain::rationals()),
    };
    for (const auto& R : rings) {
        for (int trial = 0; trial < 15; ++trial) {
            std::vector<Poly> gens;
            for (int k = 0; k < 3; ++k) {
                Poly g = test::random_poly(R, rng, 3, 2, 3);
                if (!g.is_zero())
                    gens.push_back(g);
            }
            Ideal I(R, gens);
            auto G = groebner_basis(I, drl);
            Poly f = test::random_poly(R, rng, 4, 3, 5);
            Poly nf1 = normal_form(f, G);
            CHECK(normal_form(nf1, G) == nf1);
            CHECK(normal_form(f - nf1, G).is_zero());
        }
    }
}

TEST_CASE("canonicity under generator permutation") {
    std::mt19937 rng(5150);
    std::vector<GradedRing> rings = {
        test::ring({{"x", 1}, {"y", 1}}, CoeffDomain::prime_field(2)),
        test::ring({{"x", 1}, {"y", 2}}, CoeffDomain::integers()),
    };
    for (const auto& R : rings) {
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Poly> gens;
            for (int k = 0; k < 4; ++k) {
                Poly g = test::random_poly(R, rng, 3, 2, 3);
                if (!g.is_zero())
                    gens.push_back(g);
            }
            auto G1 = groebner_basis(Ideal(R, gens), drl);
            std::shuffle(gens.begin(), gens.end(), rng);
            auto G2 = groebner_basis(Ideal(R, gens), drl);
            CHECK(G1 == G2);
        }
    }
}

TEST_CASE("field slices: standard monomials match linear algebra") {
    std::mt19937 rng(86);
    auto R = test::ring({{"x", 1}, {"y", 1}, {"z", 2}}, CoeffDomain::prime_field(2));
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Poly> gens;
        for (int k = 0; k < 2; ++k) {
            Poly g = test::random_homogeneous(R, 2 + trial % 3, rng);
            if (!g.is_zero())
                gens.push_back(g);
        }
        Ideal I(R, gens);
        auto G = groebner_basis(I, drl);
        QuotientPresentation pres(R, I);
        auto dims = hilbert_dims(pres, 6);
        for (int n = 0; n <= 6; ++n)
            CHECK(dims[size_t(n)] == static_cast<long>(standard_monomials(G, n).size()));
    }
}

TEST_CASE("ideal_equal is an equivalence; union membership") {
    std::mt19937 rng(11);
    auto R = test::ring({{"x", 1}, {"y", 1}}, CoeffDomain::prime_field(2));
    for (int trial = 0; trial < 10; ++trial) {
        Ideal I(R, {test::random_poly(R, rng, 3, 2, 1), test::random_poly(R, rng, 3, 2, 1)});
        Ideal J(R, {test::random_poly(R, rng, 3, 2, 1)});
        CHECK(ideal_equal(I, I, drl));
        std::vector<Poly> uni = I.gens;
        for (const auto& g : J.gens)
            uni.push_back(g);
        Ideal U(R, uni);
        if (ideal_equal(U, I, drl))
            for (const auto& g : J.gens)
                CHECK(ideal_contains(I, g, drl));
    }
}

TEST_CASE("cooperative deadline raises Timeout") {
    auto R = test::ring({{"x", 1}, {"y", 1}, {"z", 1}, {"w", 1}}, CoeffDomain::rationals());
    Ideal I = test::ideal(R, {"x^3*y^2 - z^4", "y^3*z - w^3 + x*y*z*w", "x^4 - y*w^3", "z^3*w - x^2*y^2"});
    Deadline expired;
    expired.at = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    CHECK_THROWS_AS(groebner_basis(I, drl, expired), Timeout);
}
