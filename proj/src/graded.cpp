#include "gcr/graded.hpp"

#include <algorithm>
#include <map>

namespace gcr {

namespace {

struct MonIndex {
    std::map<std::vector<int>, size_t> idx;
    explicit MonIndex(const std::vector<Monomial>& basis) {
        for (size_t i = 0; i < basis.size(); ++i)
            idx.emplace(basis[i].e, i);
    }
    size_t of(const Monomial& m) const {
        auto it = idx.find(m.e);
        if (it == idx.end())
            throw Error("internal: monomial outside slice basis");
        return it->second;
    }
};

void fill_row(IntMat& M, size_t row, const Poly& p, const MonIndex& index) {
    mpz_class den(1);
    for (const auto& t : p.terms())
        den = lcm(den, t.c.get_den());
    for (const auto& t : p.terms()) {
        mpq_class scaled = t.c * den;
        M.at(row, index.of(t.m)) = scaled.get_num();
    }
}

}  // namespace

DegreeSlice degree_slice(const QuotientPresentation& P, int n) {
    P.require_homogeneous("degree_slice");
    DegreeSlice slice;
    slice.monomials = monomials_of_degree(P.ambient(), n);
    MonIndex index(slice.monomials);

    std::vector<Poly> rows;
    for (const auto& g : P.relations().gens) {
        int dg = *g.weighted_degree().degree;
        if (dg > n)
            continue;
        for (const auto& m : monomials_of_degree(P.ambient(), n - dg))
            rows.push_back(g.mul_term(1, m));
    }
    slice.relations = IntMat(rows.size(), slice.monomials.size());
    for (size_t r = 0; r < rows.size(); ++r)
        fill_row(slice.relations, r, rows[r], index);
    return slice;
}

namespace {

AbGroup slice_group(const QuotientPresentation& P, const DegreeSlice& s) {
    const auto& dom = P.ambient().domain();
    if (dom.kind() == DomainKind::Integers)
        return cokernel(s.monomials.size(), s.relations.transpose());
    AbGroup g;
    size_t rank = dom.kind() == DomainKind::PrimeField
                      ? rank_mod_p(s.relations, dom.characteristic())
                      : rank_rational(s.relations);
    g.free_rank = static_cast<long>(s.monomials.size()) - static_cast<long>(rank);
    return g;
}

}  // namespace

GradedAbelianGroup graded_groups(const QuotientPresentation& P, int max_n) {
    P.require_homogeneous("graded_groups");
    GradedAbelianGroup out;
    out.max_degree = max_n;
    for (int n = 0; n <= max_n; ++n)
        out.groups.push_back(slice_group(P, degree_slice(P, n)));
    return out;
}

std::vector<long> hilbert_dims(const QuotientPresentation& P, int max_n) {
    if (!P.ambient().domain().is_field())
        throw NotAField("hilbert_dims needs field coefficients");
    P.require_homogeneous("hilbert_dims");
    std::vector<long> dims;
    for (int n = 0; n <= max_n; ++n) {
        DegreeSlice s = degree_slice(P, n);
        dims.push_back(slice_group(P, s).free_rank);
    }
    return dims;
}

GradedMapSpec::GradedMapSpec(std::vector<QuotientPresentation> doms, std::vector<RingMap> ms,
                             std::vector<int> sgns, QuotientPresentation cod)
    : domains(std::move(doms)), maps(std::move(ms)), signs(std::move(sgns)), codomain(std::move(cod)) {
    if (domains.size() != maps.size() || domains.size() != signs.size())
        throw Error("graded map spec: summand counts disagree");
    for (size_t i = 0; i < domains.size(); ++i) {
        if (maps[i].source() != domains[i].ambient())
            throw RingMismatch("graded map spec: map source differs from summand ambient");
        if (!(maps[i].target() == codomain))
            throw RingMismatch("graded map spec: map target differs from codomain");
    }
}

AbGroup fp_group_hom_kernel(const GradedMapSpec& spec, int n) {
    spec.codomain.require_homogeneous("fp_group_hom_kernel");
    for (const auto& d : spec.domains)
        d.require_homogeneous("fp_group_hom_kernel");

    DegreeSlice cod = degree_slice(spec.codomain, n);
    MonIndex cod_index(cod.monomials);
    const size_t B = cod.monomials.size();

    std::vector<DegreeSlice> dom;
    size_t A = 0, Rrows = 0;
    for (const auto& d : spec.domains) {
        dom.push_back(degree_slice(d, n));
        A += dom.back().monomials.size();
        Rrows += dom.back().relations.rows();
    }

    // M: B x A, columns are the signed images of domain slice monomials.
    IntMat M(B, A);
    {
        size_t col = 0;
        for (size_t i = 0; i < spec.domains.size(); ++i) {
            const auto& images = spec.maps[i].images();
            const auto& amb = spec.codomain.ambient();
            for (const auto& m : dom[i].monomials) {
                Poly img = Poly::term(spec.domains[i].ambient(), 1, m)
                               .substitute(amb, images)
                               .scaled(spec.signs[i]);
                // scale the column integral; over a field this preserves rank
                mpz_class den(1);
                for (const auto& t : img.terms())
                    den = lcm(den, t.c.get_den());
                for (const auto& t : img.terms()) {
                    mpq_class c = t.c * den;
                    M.at(cod_index.of(t.m), col) = c.get_num();
                }
                ++col;
            }
        }
    }

    const auto& dkind = spec.codomain.ambient().domain();
    if (dkind.kind() != DomainKind::Integers) {
        // dim ker = dim domain - dim image over the field
        IntMat Rall(Rrows, A);
        size_t roff = 0, coff = 0;
        for (const auto& s : dom) {
            for (size_t r = 0; r < s.relations.rows(); ++r)
                for (size_t c = 0; c < s.relations.cols(); ++c)
                    Rall.at(roff + r, coff + c) = s.relations.at(r, c);
            roff += s.relations.rows();
            coff += s.relations.cols();
        }
        auto rank = [&](const IntMat& X) {
            return dkind.kind() == DomainKind::PrimeField ? rank_mod_p(X, dkind.characteristic())
                                                          : rank_rational(X);
        };
        long dim_dom = static_cast<long>(A) - static_cast<long>(rank(Rall));
        IntMat S_cols = cod.relations.transpose();  // B x s
        long dim_im = static_cast<long>(rank(M.hstack(S_cols))) - static_cast<long>(rank(S_cols));
        AbGroup g;
        g.free_rank = dim_dom - dim_im;
        return g;
    }

    // Over Z: L = { x : M x lies in the codomain relation lattice }, then
    // the kernel group is L modulo the domain relation lattice.
    IntMat S_cols = cod.relations.transpose();  // B x s
    IntMat MS(B, A + S_cols.cols());
    for (size_t r = 0; r < B; ++r) {
        for (size_t c = 0; c < A; ++c)
            MS.at(r, c) = M.at(r, c);
        for (size_t c = 0; c < S_cols.cols(); ++c)
            MS.at(r, A + c) = -S_cols.at(r, c);
    }
    IntMat K = kernel_basis(MS);
    IntMat Pmat(A, K.cols());
    for (size_t r = 0; r < A; ++r)
        for (size_t c = 0; c < K.cols(); ++c)
            Pmat.at(r, c) = K.at(r, c);
    IntMat L = column_lattice_basis(Pmat);  // A x l

    // Domain relation vectors, stacked block-diagonally, as columns.
    IntMat W(A, Rrows);
    {
        size_t roff = 0, coff = 0;
        for (const auto& s : dom) {
            for (size_t r = 0; r < s.relations.rows(); ++r)
                for (size_t c = 0; c < s.relations.cols(); ++c)
                    W.at(coff + c, roff + r) = s.relations.at(r, c);
            roff += s.relations.rows();
            coff += s.relations.cols();
        }
    }
    auto X = solve_exact(L, W);
    if (!X)
        throw Error("internal: domain relations do not map into the codomain relations");
    return cokernel(L.cols(), *X);
}

}  // namespace gcr
