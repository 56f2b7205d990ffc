#ifndef GCR_RING_HPP
#define GCR_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gcr/domain.hpp"
#include "gcr/errors.hpp"

namespace gcr {

// A polynomial ring with named variables carrying positive weights
// (cohomological degrees) over an exact coefficient domain. Immutable;
// cheap to copy. Two rings are interchangeable iff they agree structurally.
class GradedRing {
public:
    GradedRing(std::vector<std::pair<std::string, int>> vars, CoeffDomain domain);

    size_t nvars() const { return d_->names.size(); }
    const std::string& var_name(size_t i) const { return d_->names[i]; }
    int var_degree(size_t i) const { return d_->degrees[i]; }
    const std::vector<int>& degrees() const { return d_->degrees; }
    const CoeffDomain& domain() const { return d_->domain; }

    std::optional<size_t> find_var(const std::string& name) const;
    size_t var_index(const std::string& name) const;  // throws UnknownVariable

    bool operator==(const GradedRing& o) const;
    bool operator!=(const GradedRing& o) const { return !(*this == o); }

    std::string describe() const;  // e.g. "ZZ[x:1,y:2]"

private:
    struct Data {
        std::vector<std::string> names;
        std::vector<int> degrees;
        CoeffDomain domain;
    };
    std::shared_ptr<const Data> d_;
};

// Exponent vector, one slot per ring variable.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(size_t n) : e(n, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    size_t size() const { return e.size(); }
    bool is_one() const;
    int weighted_degree(const GradedRing& r) const;

    static Monomial one(const GradedRing& r) { return Monomial(r.nvars()); }
    static Monomial var(const GradedRing& r, size_t i, int exp = 1);

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;      // this | o
    Monomial divide(const Monomial& o) const;   // o / this (requires divides)
    Monomial lcm(const Monomial& o) const;
    Monomial gcd(const Monomial& o) const;
    Monomial pow(int k) const;
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

// Total order on monomials of one ring. DegRevLex and Lex are global
// orders; Elimination(block) ranks any monomial containing a block
// variable above any block-free monomial, with DegRevLex ties inside
// and outside the block.
class MonomialOrder {
public:
    enum class Kind { DegRevLex, Lex, Elimination };

    static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, {}); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
    static MonomialOrder elimination(std::vector<bool> block) {
        return MonomialOrder(Kind::Elimination, std::move(block));
    }
    static MonomialOrder elimination(const GradedRing& r, const std::vector<std::string>& vars);

    Kind kind() const { return kind_; }
    const std::vector<bool>& block() const { return block_; }

    // <0, 0, >0 as a < b, a == b, a > b.
    int compare(const GradedRing& r, const Monomial& a, const Monomial& b) const;

    bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && block_ == o.block_; }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

private:
    MonomialOrder(Kind k, std::vector<bool> block) : kind_(k), block_(std::move(block)) {}
    Kind kind_;
    std::vector<bool> block_;  // empty unless Elimination
};

}  // namespace gcr

#endif
