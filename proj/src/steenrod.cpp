#include "gcr/steenrod.hpp"

#include <map>

namespace gcr {

SteenrodAction::SteenrodAction(QuotientPresentation pres, std::vector<Poly> total_squares)
    : pres_(std::move(pres)), squares_(std::move(total_squares)) {
    const GradedRing& amb = pres_.ambient();
    if (amb.domain() != CoeffDomain::prime_field(2))
        throw NotAField("Steenrod actions require F2 coefficients");
    if (squares_.size() != amb.nvars())
        throw Error("need one total square per generator");
    for (size_t i = 0; i < squares_.size(); ++i) {
        if (squares_[i].ring() != amb)
            throw RingMismatch("total square of " + amb.var_name(i) +
                               " is not in the presentation's ambient ring");
        const int d = amb.var_degree(i);
        if (squares_[i].homogeneous_component(d) != Poly::var(amb, i))
            throw Error("Sq(" + amb.var_name(i) + ") must have the generator itself in degree " +
                        std::to_string(d));
        for (const auto& t : squares_[i].terms())
            if (t.m.weighted_degree(amb) > 2 * d)
                throw Error("Sq(" + amb.var_name(i) + ") has a component above degree " +
                            std::to_string(2 * d));
    }
}

Poly total_sq(const Poly& f, const SteenrodAction& A) {
    if (f.ring() != A.presentation().ambient())
        throw RingMismatch("total_sq: polynomial is not in the action's ring");
    return A.presentation().reduce(f.substitute(f.ring(), A.total_squares()));
}

Poly sq_k(const Poly& f, int k, const SteenrodAction& A) {
    auto info = f.weighted_degree();
    if (!info.homogeneous)
        throw NotHomogeneous("sq_k needs a homogeneous argument");
    if (f.is_zero())
        return f;
    return total_sq(f, A).homogeneous_component(*info.degree + k);
}

namespace {

struct SqEvaluator {
    const SteenrodAction& A;
    std::map<std::vector<int>, Poly> cache;

    const Poly& total(const Monomial& m) {
        auto it = cache.find(m.e);
        if (it != cache.end())
            return it->second;
        Poly s = total_sq(Poly::term(A.presentation().ambient(), 1, m), A);
        return cache.emplace(m.e, std::move(s)).first->second;
    }

    // Sq^k of a homogeneous polynomial.
    Poly sq(int k, const Poly& f) {
        if (f.is_zero())
            return f;
        int d = *f.weighted_degree().degree;
        Poly out = Poly::zero(f.ring());
        for (const auto& t : f.terms())
            out = out + total(t.m).homogeneous_component(d + k);
        return A.presentation().reduce(out);
    }
};

}  // namespace

SteenrodReport verify_action(const SteenrodAction& A, int max_n) {
    const QuotientPresentation& P = A.presentation();
    const GradedRing& amb = P.ambient();
    P.require_homogeneous("verify_action");

    SteenrodReport report;
    report.max_degree = max_n;
    SqEvaluator eval{A, {}};

    // (1) well-definedness: Sq maps every relation into the relations ideal
    for (const auto& r : P.relations().gens) {
        Poly img = total_sq(r, A);
        if (!img.is_zero())
            report.failures.push_back(
                {"well-definedness",
                 "Sq(" + r.to_string() + ") = " + img.to_string() + " is not in the relations ideal"});
    }

    // (2) instability: top square of each generator equals its square
    for (size_t i = 0; i < amb.nvars(); ++i) {
        const int d = amb.var_degree(i);
        Poly top = P.reduce(A.total_squares()[i].homogeneous_component(2 * d));
        Poly square = P.reduce(Poly::var(amb, i) * Poly::var(amb, i));
        if (top != square)
            report.failures.push_back(
                {"instability", "Sq^" + std::to_string(d) + "(" + amb.var_name(i) + ") = " +
                                    top.to_string() + ", expected " + amb.var_name(i) + "^2 = " +
                                    square.to_string()});
    }

    // (3) Adem relations as operators on standard monomials
    const GroebnerBasis& gb = P.relations_gb();
    std::vector<std::vector<Monomial>> std_mons;
    for (int n = 0; n <= max_n; ++n)
        std_mons.push_back(standard_monomials(gb, n));
    for (int a = 1; a <= max_n; ++a) {
        for (int b = 1; a + b <= max_n; ++b) {
            if (a >= 2 * b)
                continue;
            for (int n = 0; n + a + b <= max_n; ++n) {
                for (const auto& m : std_mons[static_cast<size_t>(n)]) {
                    Poly mono = Poly::term(amb, 1, m);
                    Poly lhs = eval.sq(a, eval.sq(b, mono));
                    Poly rhs = Poly::zero(amb);
                    for (int c = 0; 2 * c <= a; ++c)
                        if (binom_mod2(b - c - 1, a - 2 * c))
                            rhs = rhs + eval.sq(a + b - c, eval.sq(c, mono));
                    rhs = P.reduce(rhs);
                    if (lhs != rhs)
                        report.failures.push_back(
                            {"adem", "Sq^" + std::to_string(a) + " Sq^" + std::to_string(b) +
                                         " on " + mono.to_string() + ": got " + lhs.to_string() +
                                         ", Adem sum gives " + rhs.to_string()});
                }
            }
        }
    }
    return report;
}

}  // namespace gcr
