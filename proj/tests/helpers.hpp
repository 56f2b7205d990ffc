#ifndef GCR_TEST_HELPERS_HPP
#define GCR_TEST_HELPERS_HPP

#include <random>

#include "gcr/graded.hpp"
#include "gcr/groebner.hpp"

namespace gcr::test {

inline GradedRing ring(std::vector<std::pair<std::string, int>> vars, CoeffDomain dom) {
    return GradedRing(std::move(vars), dom);
}

inline Poly P(const GradedRing& r, const std::string& text) { return parse_poly(r, text); }

inline Ideal ideal(const GradedRing& r, std::initializer_list<const char*> gens) {
    std::vector<Poly> gs;
    for (const char* g : gens)
        gs.push_back(parse_poly(r, g));
    return Ideal(r, std::move(gs));
}

// Random sparse polynomial; exponents and coefficients kept small.
inline Poly random_poly(const GradedRing& r, std::mt19937& rng, int max_terms = 4,
                        int max_exp = 2, int max_coeff = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    std::vector<Term> terms;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Monomial m(r.nvars());
        for (size_t v = 0; v < r.nvars(); ++v)
            m.e[v] = exp(rng);
        terms.push_back({m, mpq_class(coeff(rng))});
    }
    return Poly(r, std::move(terms));
}

// Random homogeneous polynomial of the given weighted degree.
inline Poly random_homogeneous(const GradedRing& r, int degree, std::mt19937& rng,
                               int max_coeff = 3) {
    auto mons = monomials_of_degree(r, degree);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    std::vector<Term> terms;
    for (const auto& m : mons) {
        int c = coeff(rng);
        if (c != 0)
            terms.push_back({m, mpq_class(c)});
    }
    return Poly(r, std::move(terms));
}

// Degreewise lattice oracle, independent of the Groebner machinery: is the
// homogeneous f in the degree-d slice of the ideal spanned by { m * g }?
// Works over Z (exact lattice membership) and over fields (rank test).
inline bool slice_membership_oracle(const Ideal& I, const Poly& f) {
    auto info = f.weighted_degree();
    if (f.is_zero())
        return true;
    if (!info.homogeneous)
        throw Error("oracle needs a homogeneous polynomial");
    int d = *info.degree;
    auto mons = monomials_of_degree(I.ring, d);
    std::map<std::vector<int>, size_t> index;
    for (size_t i = 0; i < mons.size(); ++i)
        index[mons[i].e] = i;

    std::vector<Poly> rows;
    for (const auto& g : I.gens) {
        auto gi = g.weighted_degree();
        if (!gi.homogeneous)
            throw Error("oracle needs homogeneous generators");
        if (*gi.degree > d)
            continue;
        for (const auto& m : monomials_of_degree(I.ring, d - *gi.degree))
            rows.push_back(g.mul_term(1, m));
    }
    IntMat A(mons.size(), rows.size());
    for (size_t c = 0; c < rows.size(); ++c)
        for (const auto& t : rows[c].terms())
            A.at(index.at(t.m.e), c) = t.c.get_num();
    IntMat b(mons.size(), 1);
    for (const auto& t : f.terms())
        b.at(index.at(t.m.e), 0) = t.c.get_num();

    const auto& dom = I.ring.domain();
    if (dom.kind() == DomainKind::Integers)
        return solve_exact(A, b).has_value();
    if (dom.kind() == DomainKind::PrimeField) {
        long p = dom.characteristic();
        return rank_mod_p(A, p) == rank_mod_p(A.hstack(b), p);
    }
    return rank_rational(A) == rank_rational(A.hstack(b));
}

}  // namespace gcr::test

#endif
