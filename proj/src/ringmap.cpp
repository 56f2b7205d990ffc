#include "gcr/ringmap.hpp"

namespace gcr {

QuotientPresentation::QuotientPresentation(GradedRing ambient, Ideal relations) {
    if (relations.ring != ambient)
        throw RingMismatch("relations live in a different ring");
    d_ = std::make_shared<Data>(std::move(ambient), std::move(relations));
}

QuotientPresentation::QuotientPresentation(GradedRing ambient)
    : QuotientPresentation(ambient, Ideal(ambient, {})) {}

const GroebnerBasis& QuotientPresentation::relations_gb() const {
    std::call_once(d_->once, [this] {
        d_->gb = std::make_unique<GroebnerBasis>(
            groebner_basis(d_->relations, MonomialOrder::degrevlex()));
    });
    return *d_->gb;
}

void QuotientPresentation::require_homogeneous(const std::string& where) const {
    if (!is_homogeneous())
        throw InhomogeneousIdeal(where + ": relations are not homogeneous");
}

bool QuotientPresentation::operator==(const QuotientPresentation& o) const {
    if (d_ == o.d_)
        return true;
    return ambient() == o.ambient() && relations().gens == o.relations().gens;
}

RingMap::RingMap(GradedRing source, QuotientPresentation target, std::vector<Poly> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.nvars())
        throw Error("ring map needs one image per source variable (got " +
                    std::to_string(images_.size()) + ", expected " +
                    std::to_string(source_.nvars()) + ")");
    if (source_.domain() != target_.ambient().domain())
        throw RingMismatch("ring map between different coefficient domains");
    for (size_t i = 0; i < images_.size(); ++i) {
        if (images_[i].ring() != target_.ambient())
            throw RingMismatch("image of " + source_.var_name(i) +
                               " is not in the target ambient ring");
        auto info = images_[i].weighted_degree();
        if (!info.homogeneous || (info.degree && *info.degree != source_.var_degree(i)))
            throw InhomogeneousImage("image of " + source_.var_name(i) +
                                     " is not homogeneous of degree " +
                                     std::to_string(source_.var_degree(i)));
    }
}

Poly apply(const RingMap& f, const Poly& p) {
    if (p.ring() != f.source())
        throw RingMismatch("apply: polynomial is not in the map's source ring");
    return f.target().reduce(p.substitute(f.target().ambient(), f.images()));
}

WellDefinedReport check_well_defined(const QuotientPresentation& source_pres, const RingMap& f) {
    if (source_pres.ambient() != f.source())
        throw RingMismatch("check_well_defined: presentation ambient differs from map source");
    WellDefinedReport report;
    for (const auto& r : source_pres.relations().gens) {
        Poly img = apply(f, r);
        if (!img.is_zero())
            report.failures.push_back({r, img});
    }
    return report;
}

Ideal kernel(const RingMap& f, const Deadline& deadline) {
    const GradedRing& src = f.source();
    const GradedRing& tgt = f.target().ambient();
    const size_t nt = tgt.nvars(), ns = src.nvars();

    // Combined ring with the target block first; fresh names keep the two
    // namespaces disjoint even when source and target reuse symbols.
    std::vector<std::pair<std::string, int>> vars;
    vars.reserve(nt + ns);
    for (size_t i = 0; i < nt; ++i)
        vars.emplace_back("#t#" + tgt.var_name(i), tgt.var_degree(i));
    for (size_t j = 0; j < ns; ++j)
        vars.emplace_back("#s#" + src.var_name(j), src.var_degree(j));
    GradedRing comb(vars, src.domain());

    auto lift_target = [&](const Poly& p) {
        std::vector<Term> ts;
        for (const auto& t : p.terms()) {
            Monomial m(comb.nvars());
            for (size_t i = 0; i < nt; ++i)
                m.e[i] = t.m.e[i];
            ts.push_back({std::move(m), t.c});
        }
        return Poly(comb, std::move(ts));
    };

    std::vector<Poly> gens;
    for (const auto& rel : f.target().relations().gens)
        gens.push_back(lift_target(rel));
    for (size_t j = 0; j < ns; ++j)
        gens.push_back(Poly::var(comb, nt + j) - lift_target(f.images()[j]));

    std::vector<bool> block(comb.nvars(), false);
    for (size_t i = 0; i < nt; ++i)
        block[i] = true;
    GroebnerBasis G =
        groebner_basis(Ideal(comb, std::move(gens)), MonomialOrder::elimination(block), deadline);

    std::vector<Poly> kept;
    for (const auto& g : G.elems) {
        bool in_source = true;
        for (const auto& t : g.terms())
            for (size_t i = 0; i < nt; ++i)
                if (t.m.e[i] > 0)
                    in_source = false;
        if (!in_source)
            continue;
        std::vector<Term> ts;
        for (const auto& t : g.terms()) {
            Monomial m(ns);
            for (size_t j = 0; j < ns; ++j)
                m.e[j] = t.m.e[nt + j];
            ts.push_back({std::move(m), t.c});
        }
        kept.push_back(Poly(src, std::move(ts)));
    }

    GroebnerBasis K = groebner_basis(Ideal(src, std::move(kept)), MonomialOrder::degrevlex(), deadline);
    return Ideal(src, K.elems);
}

Ideal kernel_of_quotient_map(const QuotientPresentation& source_pres, const RingMap& f,
                             const Deadline& deadline) {
    auto report = check_well_defined(source_pres, f);
    if (!report.ok())
        throw NotWellDefined("map does not kill the source relation " +
                             report.failures.front().relation.to_string() +
                             " (image " + report.failures.front().residual.to_string() + ")");
    Ideal K = kernel(f, deadline);
    GroebnerBasis KG = groebner_basis(K, MonomialOrder::degrevlex(), deadline);
    for (const auto& r : source_pres.relations().gens)
        if (!normal_form(r, KG).is_zero())
            throw Error("internal: kernel does not contain the source relations");
    return K;
}

}  // namespace gcr
