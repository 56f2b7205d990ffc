#ifndef GCR_STEENROD_HPP
#define GCR_STEENROD_HPP

#include "gcr/ringmap.hpp"

namespace gcr {

// Total Steenrod squares on a finitely presented graded F2-algebra: one
// polynomial Sq(x) = sum_k Sq^k(x) per generator, extended to the whole
// algebra multiplicatively (Cartan formula built in).
//
// Construction enforces the structural part of the instability axioms:
// the degree-|x| component of Sq(x) is x itself and no component exceeds
// degree 2|x|. The top-square axiom Sq^{|x|}(x) = x^2 and the remaining
// axioms are checked by verify_action, which reports violations rather
// than refusing to build the action.
class SteenrodAction {
public:
    SteenrodAction(QuotientPresentation pres, std::vector<Poly> total_squares);

    const QuotientPresentation& presentation() const { return pres_; }
    const std::vector<Poly>& total_squares() const { return squares_; }

private:
    QuotientPresentation pres_;
    std::vector<Poly> squares_;
};

// Multiplicative extension reduced to normal form modulo the relations.
Poly total_sq(const Poly& f, const SteenrodAction& A);

// Homogeneous component of total_sq(f) in degree deg(f) + k.
Poly sq_k(const Poly& f, int k, const SteenrodAction& A);

struct SteenrodReport {
    struct Failure {
        std::string family;   // "well-definedness" | "instability" | "adem"
        std::string witness;  // human-readable counterexample
    };
    int max_degree = 0;
    std::vector<Failure> failures;
    bool ok() const { return failures.empty(); }
};

// Checks well-definedness on the relations, the instability axioms on the
// generators, and every Adem relation Sq^a Sq^b (a < 2b) as operators on
// the standard monomials of degree <= max_n - a - b.
SteenrodReport verify_action(const SteenrodAction& A, int max_n);

// Binomial coefficient mod 2 by Lucas' theorem.
inline int binom_mod2(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    return (n & k) == k ? 1 : 0;
}

}  // namespace gcr

#endif
