#ifndef GCR_GRADED_HPP
#define GCR_GRADED_HPP

#include "gcr/intmatrix.hpp"
#include "gcr/ringmap.hpp"

namespace gcr {

// Abelian group structure of a graded object, one entry per computed
// degree. Degrees beyond max_degree are unknown, not zero.
struct GradedAbelianGroup {
    int max_degree = -1;
    std::vector<AbGroup> groups;  // groups[n] for 0 <= n <= max_degree

    bool known(int n) const { return n >= 0 && n <= max_degree; }
    const AbGroup& at(int n) const {
        if (!known(n))
            throw DegreeMismatch("degree " + std::to_string(n) + " was not computed");
        return groups[static_cast<size_t>(n)];
    }
};

struct DegreeSlice {
    std::vector<Monomial> monomials;  // columns
    IntMat relations;                 // one row per relation multiple m*g
};

// Degree-n monomial basis of the ambient ring together with the matrix of
// relation multiples spanning the degree-n part of the relations ideal.
// Over Q, rows are scaled integral (row span over Q is unchanged).
DegreeSlice degree_slice(const QuotientPresentation& P, int n);

// Per-degree abelian group of the quotient: Smith normal form of the
// relation matrix over Z; plain dimension count over a field.
GradedAbelianGroup graded_groups(const QuotientPresentation& P, int max_n);

// Dimensions of the degree-n slices over a field.
std::vector<long> hilbert_dims(const QuotientPresentation& P, int max_n);

// A map (+/- f_i) from a direct sum of graded quotients to a common
// codomain quotient, e.g. the Mayer-Vietoris difference q* - i*.
struct GradedMapSpec {
    std::vector<QuotientPresentation> domains;
    std::vector<RingMap> maps;  // maps[i]: domains[i].ambient -> codomain
    std::vector<int> signs;     // +1 or -1 per summand
    QuotientPresentation codomain;

    GradedMapSpec(std::vector<QuotientPresentation> doms, std::vector<RingMap> ms,
                  std::vector<int> sgns, QuotientPresentation cod);
};

// Kernel of the induced map on degree-n slices, as finitely presented
// abelian groups, exact over Z (free rank + invariant factors); over a
// field the result is the kernel dimension with no torsion.
AbGroup fp_group_hom_kernel(const GradedMapSpec& spec, int n);

}  // namespace gcr

#endif
