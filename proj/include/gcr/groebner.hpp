#ifndef GCR_GROEBNER_HPP
#define GCR_GROEBNER_HPP

#include <chrono>
#include <optional>
#include <vector>

#include "gcr/poly.hpp"

namespace gcr {

// Cooperative deadline for long computations. Expiry surfaces as a
// Timeout error, never a wrong answer.
struct Deadline {
    std::optional<std::chrono::steady_clock::time_point> at;

    static Deadline none() { return {}; }
    static Deadline after(double seconds) {
        Deadline d;
        d.at = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(seconds));
        return d;
    }
    void poll() const {
        if (at && std::chrono::steady_clock::now() > *at)
            throw Timeout();
    }
};

struct Ideal {
    GradedRing ring;
    std::vector<Poly> gens;  // zero generators removed

    Ideal(GradedRing r, std::vector<Poly> gs);
    bool is_homogeneous() const;
};

// Over a field: the unique reduced Groebner basis (monic, tails reduced).
// Over Z: the unique reduced strong basis: positive leading coefficients,
// no leading term strongly divisible by another (monomial and coefficient
// divisibility), every non-leading term E-reduced, i.e. its coefficient
// lies in [0, lc(g)) for every g whose leading monomial divides it.
struct GroebnerBasis {
    GradedRing ring;
    MonomialOrder order;
    std::vector<Poly> elems;  // sorted by leading term, descending
    bool reduced = true;

    bool operator==(const GroebnerBasis& o) const;
};

GroebnerBasis groebner_basis(const Ideal& I, const MonomialOrder& order,
                             const Deadline& deadline = {});

// Remainder of full division by G; f - normal_form(f, G) lies in ideal(G)
// and no term of the result is reducible by G.
Poly normal_form(const Poly& f, const GroebnerBasis& G);

bool ideal_contains(const Ideal& I, const Poly& f, const MonomialOrder& order,
                    const Deadline& deadline = {});

bool ideal_equal(const Ideal& I, const Ideal& J, const MonomialOrder& order,
                 const Deadline& deadline = {});

// Generators of I intersected with the subring on the complementary
// variables, via a two-block elimination order. The result lives in the
// same ring but involves none of `vars`.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars,
                const Deadline& deadline = {});

// Monomials of the given weighted degree not divisible by any leading
// monomial of G. Field coefficients only.
std::vector<Monomial> standard_monomials(const GroebnerBasis& G, int degree);

// All monomials of the ring with the given weighted degree, in descending
// ambient DegRevLex order.
std::vector<Monomial> monomials_of_degree(const GradedRing& r, int degree);

// Leading term of f under an order (largest term).
const Term& leading_term(const GradedRing& r, const MonomialOrder& ord, const Poly& f);

}  // namespace gcr

#endif
