#ifndef GCR_RINGMAP_HPP
#define GCR_RINGMAP_HPP

#include <memory>
#include <mutex>

#include "gcr/groebner.hpp"

namespace gcr {

// Graded ambient polynomial ring modulo an ideal. Relations need not be
// homogeneous at construction; graded operations check and reject
// inhomogeneous presentations when they run.
class QuotientPresentation {
public:
    QuotientPresentation(GradedRing ambient, Ideal relations);
    explicit QuotientPresentation(GradedRing ambient);  // free ring

    const GradedRing& ambient() const { return d_->ambient; }
    const Ideal& relations() const { return d_->relations; }

    // Groebner basis of the relations under ambient DegRevLex; cached.
    const GroebnerBasis& relations_gb() const;

    bool is_homogeneous() const { return d_->relations.is_homogeneous(); }
    void require_homogeneous(const std::string& where) const;

    Poly reduce(const Poly& f) const { return normal_form(f, relations_gb()); }

    bool operator==(const QuotientPresentation& o) const;

private:
    struct Data {
        GradedRing ambient;
        Ideal relations;
        mutable std::once_flag once;
        mutable std::unique_ptr<GroebnerBasis> gb;
        Data(GradedRing a, Ideal r) : ambient(std::move(a)), relations(std::move(r)) {}
    };
    std::shared_ptr<Data> d_;
};

// Degree-preserving homomorphism from a free graded ring into a quotient
// presentation, given by one target-ambient representative per source
// variable. Every image must be zero or homogeneous of the variable's
// weighted degree.
class RingMap {
public:
    RingMap(GradedRing source, QuotientPresentation target, std::vector<Poly> images);

    const GradedRing& source() const { return source_; }
    const QuotientPresentation& target() const { return target_; }
    const std::vector<Poly>& images() const { return images_; }

private:
    GradedRing source_;
    QuotientPresentation target_;
    std::vector<Poly> images_;
};

// Substitution followed by normal form against the target relations.
Poly apply(const RingMap& f, const Poly& p);

struct WellDefinedReport {
    struct Failure {
        Poly relation;  // source relation generator
        Poly residual;  // nonzero image in the target
    };
    std::vector<Failure> failures;
    bool ok() const { return failures.empty(); }
};

// Checks that every relation generator of source_pres maps to zero.
WellDefinedReport check_well_defined(const QuotientPresentation& source_pres, const RingMap& f);

// Kernel of f as an ideal of the free source ring, computed by
// eliminating the target ambient variables from the graph ideal
// target.relations + (x_i - image_i) in a combined ring. The returned
// generators form the reduced (strong) Groebner basis under DegRevLex.
Ideal kernel(const RingMap& f, const Deadline& deadline = {});

// Full preimage of zero for the induced map on source_pres / relations;
// requires check_well_defined to pass. The result contains
// source_pres.relations; its generators modulo the source relations
// generate the kernel of the induced quotient-ring map.
Ideal kernel_of_quotient_map(const QuotientPresentation& source_pres, const RingMap& f,
                             const Deadline& deadline = {});

}  // namespace gcr

#endif
