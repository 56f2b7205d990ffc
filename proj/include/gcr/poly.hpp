#ifndef GCR_POLY_HPP
#define GCR_POLY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gcr/ring.hpp"

namespace gcr {

struct Term {
    Monomial m;
    mpq_class c;  // nonzero
};

// Sparse multivariate polynomial in canonical form: no zero coefficients,
// terms sorted descending under the ring's ambient DegRevLex order,
// coefficients canonical for the ring's domain.
class Poly {
public:
    explicit Poly(GradedRing ring) : ring_(std::move(ring)) {}
    Poly(GradedRing ring, std::vector<Term> terms);  // normalizes

    static Poly zero(const GradedRing& r) { return Poly(r); }
    static Poly constant(const GradedRing& r, const mpq_class& c);
    static Poly one(const GradedRing& r) { return constant(r, 1); }
    static Poly var(const GradedRing& r, size_t i, int exp = 1);
    static Poly term(const GradedRing& r, const mpq_class& c, const Monomial& m);

    const GradedRing& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly pow(int k) const;  // k >= 0

    Poly scaled(const mpq_class& c) const;                       // c * this
    Poly mul_term(const mpq_class& c, const Monomial& m) const;  // c*m * this

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    struct DegreeInfo {
        std::set<int> degrees;
        bool homogeneous = true;           // zero counts as homogeneous
        std::optional<int> degree;         // set when homogeneous and nonzero
    };
    DegreeInfo weighted_degree() const;
    bool is_homogeneous() const { return weighted_degree().homogeneous; }

    // Sum of the terms of weighted degree d.
    Poly homogeneous_component(int d) const;

    // Substitute images[i] for variable i; images live in `target`.
    Poly substitute(const GradedRing& target, const std::vector<Poly>& images) const;

    std::string to_string() const;

private:
    void check_same_ring(const Poly& o) const;
    GradedRing ring_;
    std::vector<Term> terms_;
};

// Parses the shared polynomial text grammar: integer literals, ring
// variables, `+ - * ^` and parentheses, with `*` mandatory between
// factors. Throws Error with a message carrying the offset on bad input.
Poly parse_poly(const GradedRing& ring, const std::string& text);

std::string monomial_to_string(const GradedRing& r, const Monomial& m);

}  // namespace gcr

#endif
