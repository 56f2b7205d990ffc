#include "gcr/groebner.hpp"

#include <algorithm>
#include <set>

namespace gcr {

Ideal::Ideal(GradedRing r, std::vector<Poly> gs) : ring(std::move(r)) {
    for (auto& g : gs) {
        if (g.ring() != ring)
            throw RingMismatch("ideal generator from a different ring");
        if (!g.is_zero())
            gens.push_back(std::move(g));
    }
}

bool Ideal::is_homogeneous() const {
    return std::all_of(gens.begin(), gens.end(),
                       [](const Poly& g) { return g.is_homogeneous(); });
}

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
    return ring == o.ring && order == o.order && elems == o.elems;
}

namespace {

// Working representation inside the engine: terms sorted descending under
// the active order.
using Terms = std::vector<Term>;

struct Engine {
    const GradedRing& ring;
    MonomialOrder ord;
    const CoeffDomain& dom;
    bool over_z;

    Engine(const GradedRing& r, MonomialOrder o)
        : ring(r), ord(std::move(o)), dom(r.domain()),
          over_z(r.domain().kind() == DomainKind::Integers) {}

    int cmp(const Monomial& a, const Monomial& b) const { return ord.compare(ring, a, b); }

    Terms from_poly(const Poly& p) const {
        Terms t(p.terms().begin(), p.terms().end());
        std::sort(t.begin(), t.end(),
                  [&](const Term& x, const Term& y) { return cmp(x.m, y.m) > 0; });
        return t;
    }

    Poly to_poly(const Terms& t) const {
        return Poly(ring, std::vector<Term>(t.begin(), t.end()));
    }

    // f += c * shift * g, merging sorted term lists.
    Terms add_scaled(const Terms& f, const Terms& g, const mpq_class& c, const Monomial& shift) const {
        Terms out;
        out.reserve(f.size() + g.size());
        size_t i = 0, j = 0;
        while (i < f.size() && j < g.size()) {
            Monomial gm = g[j].m * shift;
            int rel = cmp(f[i].m, gm);
            if (rel > 0) {
                out.push_back(f[i++]);
            } else if (rel < 0) {
                out.push_back({gm, dom.mul(g[j].c, c)});
                ++j;
            } else {
                mpq_class s = dom.add(f[i].c, dom.mul(g[j].c, c));
                if (s != 0)
                    out.push_back({f[i].m, s});
                ++i, ++j;
            }
        }
        for (; i < f.size(); ++i)
            out.push_back(f[i]);
        for (; j < g.size(); ++j)
            out.push_back({g[j].m * shift, dom.mul(g[j].c, c)});
        return out;
    }

    // Reduce every term of f against basis. Over a field a term c*m is
    // reducible iff some lm(g) | m; over Z iff additionally c is not in
    // [0, lc(g)), in which case c is replaced by c mod lc(g) (E-reduction).
    Terms reduce(Terms f, const std::vector<Terms>& basis, const Deadline& deadline,
                 const Terms* skip = nullptr) const {
        Terms rem;
        while (!f.empty()) {
            deadline.poll();
            const Term lt = f.front();
            bool reduced_step = false;
            for (const auto& g : basis) {
                if (g.empty() || &g == skip)
                    continue;
                const Term& glt = g.front();
                if (!glt.m.divides(lt.m))
                    continue;
                if (over_z) {
                    const mpz_class& a = lt.c.get_num();
                    const mpz_class& b = glt.c.get_num();  // positive
                    mpz_class q, r;
                    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                    if (q == 0)
                        continue;  // coefficient already in [0, lc)
                    f = add_scaled(f, g, mpq_class(-q), glt.m.divide(lt.m));
                } else {
                    mpq_class q = dom.mul(lt.c, dom.inv(glt.c));
                    f = add_scaled(f, g, dom.neg(q), glt.m.divide(lt.m));
                }
                reduced_step = true;
                break;
            }
            if (!reduced_step) {
                rem.push_back(f.front());
                f.erase(f.begin());
            }
        }
        return rem;
    }

    // Scale so the leading coefficient is 1 (field) or positive (Z).
    Terms normalize(Terms f) const {
        if (f.empty())
            return f;
        if (over_z) {
            if (f.front().c < 0)
                for (auto& t : f)
                    t.c = dom.neg(t.c);
        } else {
            mpq_class s = dom.inv(f.front().c);
            for (auto& t : f)
                t.c = dom.mul(t.c, s);
        }
        return f;
    }

    Terms spoly(const Terms& f, const Terms& g) const {
        const Monomial L = f.front().m.lcm(g.front().m);
        Terms s;
        if (over_z) {
            mpz_class a = f.front().c.get_num(), b = g.front().c.get_num();
            mpz_class l = ::lcm(a, b);
            s = add_scaled(Terms{}, f, mpq_class(l / a), f.front().m.divide(L));
            s = add_scaled(s, g, mpq_class(-l / b), g.front().m.divide(L));
        } else {
            s = add_scaled(Terms{}, f, dom.inv(f.front().c), f.front().m.divide(L));
            s = add_scaled(s, g, dom.neg(dom.inv(g.front().c)), g.front().m.divide(L));
        }
        return s;
    }

    // u*(L/lm f)*f + v*(L/lm g)*g with u*lc(f) + v*lc(g) = gcd; Z only.
    Terms gpoly(const Terms& f, const Terms& g) const {
        const Monomial L = f.front().m.lcm(g.front().m);
        mpz_class a = f.front().c.get_num(), b = g.front().c.get_num();
        mpz_class d, u, v;
        mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        Terms s = add_scaled(Terms{}, f, mpq_class(u), f.front().m.divide(L));
        s = add_scaled(s, g, mpq_class(v), g.front().m.divide(L));
        return s;
    }

    // Strong divisibility of leading terms: does lt(g) reduce lt(f) away
    // completely (monomial divides; over Z coefficient divides too)?
    bool lt_strong_divides(const Terms& g, const Terms& f) const {
        if (!g.front().m.divides(f.front().m))
            return false;
        if (!over_z)
            return true;
        return mpz_divisible_p(f.front().c.get_num().get_mpz_t(),
                               g.front().c.get_num().get_mpz_t()) != 0;
    }
};

struct PairKey {
    Monomial lcm;
    size_t i, j;
};

}  // namespace

GroebnerBasis groebner_basis(const Ideal& I, const MonomialOrder& order, const Deadline& deadline) {
    Engine eng(I.ring, order);

    std::vector<Terms> G;
    for (const auto& g : I.gens) {
        Terms t = eng.reduce(eng.from_poly(g), G, deadline);
        if (!t.empty())
            G.push_back(eng.normalize(std::move(t)));
    }

    auto pair_less = [&](const PairKey& a, const PairKey& b) {
        if (int c = eng.cmp(a.lcm, b.lcm))
            return c < 0;  // smallest lcm first (normal strategy)
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    };
    std::set<PairKey, decltype(pair_less)> pairs(pair_less);
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i)
            pairs.insert({G[i].front().m.lcm(G[j].front().m), i, j});
    };
    for (size_t j = 0; j < G.size(); ++j)
        push_pairs(j);

    while (!pairs.empty()) {
        deadline.poll();
        PairKey pk = *pairs.begin();
        pairs.erase(pairs.begin());
        const Terms& f = G[pk.i];
        const Terms& g = G[pk.j];

        std::vector<Terms> candidates;
        if (eng.over_z) {
            candidates.push_back(eng.spoly(f, g));
            const mpz_class &a = f.front().c.get_num(), &b = g.front().c.get_num();
            bool a_div_b = mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t());
            bool b_div_a = mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t());
            if (!a_div_b && !b_div_a)
                candidates.push_back(eng.gpoly(f, g));
        } else {
            // Buchberger's product criterion
            if (!f.front().m.coprime(g.front().m))
                candidates.push_back(eng.spoly(f, g));
        }

        for (auto& c : candidates) {
            Terms h = eng.reduce(std::move(c), G, deadline);
            if (h.empty())
                continue;
            G.push_back(eng.normalize(std::move(h)));
            push_pairs(G.size() - 1);
        }
    }

    // Minimize: drop every element whose leading term is strongly
    // divisible by another kept element's leading term.
    std::vector<char> removed(G.size(), 0);
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = 0; j < G.size() && !removed[i]; ++j) {
            if (i == j || removed[j])
                continue;
            if (!eng.lt_strong_divides(G[j], G[i]))
                continue;
            // mutual strong divisibility: keep the smaller index
            if (eng.lt_strong_divides(G[i], G[j]) && i < j)
                continue;
            removed[i] = 1;
        }
    }
    std::vector<Terms> M;
    for (size_t i = 0; i < G.size(); ++i)
        if (!removed[i])
            M.push_back(std::move(G[i]));

    // Inter-reduce tails. Leading terms are final after minimization, so a
    // single pass per element suffices.
    for (auto& g : M) {
        Terms head{g.front()};
        Terms tail(g.begin() + 1, g.end());
        tail = eng.reduce(std::move(tail), M, deadline, &g);
        head.insert(head.end(), tail.begin(), tail.end());
        g = std::move(head);
    }

    std::sort(M.begin(), M.end(), [&](const Terms& a, const Terms& b) {
        if (int c = eng.cmp(a.front().m, b.front().m))
            return c > 0;  // descending leading monomial
        return a.front().c < b.front().c;
    });

    GroebnerBasis out{I.ring, order, {}, true};
    for (const auto& g : M)
        out.elems.push_back(eng.to_poly(g));
    return out;
}

Poly normal_form(const Poly& f, const GroebnerBasis& G) {
    if (f.ring() != G.ring)
        throw RingMismatch("normal_form: polynomial from a different ring");
    Engine eng(G.ring, G.order);
    std::vector<Terms> basis;
    basis.reserve(G.elems.size());
    for (const auto& g : G.elems)
        basis.push_back(eng.from_poly(g));
    Terms r = eng.reduce(eng.from_poly(f), basis, Deadline::none());
    return eng.to_poly(r);
}

bool ideal_contains(const Ideal& I, const Poly& f, const MonomialOrder& order,
                    const Deadline& deadline) {
    if (f.ring() != I.ring)
        throw RingMismatch("ideal_contains: polynomial from a different ring");
    return normal_form(f, groebner_basis(I, order, deadline)).is_zero();
}

bool ideal_equal(const Ideal& I, const Ideal& J, const MonomialOrder& order,
                 const Deadline& deadline) {
    if (I.ring != J.ring)
        throw RingMismatch("ideal_equal: ideals from different rings");
    return groebner_basis(I, order, deadline) == groebner_basis(J, order, deadline);
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars, const Deadline& deadline) {
    std::vector<bool> block(I.ring.nvars(), false);
    for (const auto& v : vars)
        block[I.ring.var_index(v)] = true;
    GroebnerBasis G = groebner_basis(I, MonomialOrder::elimination(block), deadline);
    std::vector<Poly> kept;
    for (const auto& g : G.elems) {
        bool free_of_block = true;
        for (const auto& t : g.terms())
            for (size_t i = 0; i < block.size() && free_of_block; ++i)
                if (block[i] && t.m.e[i] > 0)
                    free_of_block = false;
        if (free_of_block)
            kept.push_back(g);
    }
    return Ideal(I.ring, std::move(kept));
}

std::vector<Monomial> monomials_of_degree(const GradedRing& r, int degree) {
    std::vector<Monomial> out;
    Monomial cur(r.nvars());
    // enumerate exponents var by var; weights are >= 1 so this terminates
    auto rec = [&](auto&& self, size_t i, int remaining) -> void {
        if (i == r.nvars()) {
            if (remaining == 0)
                out.push_back(cur);
            return;
        }
        int w = r.var_degree(i);
        for (int e = 0; e * w <= remaining; ++e) {
            cur.e[i] = e;
            self(self, i + 1, remaining - e * w);
        }
        cur.e[i] = 0;
    };
    rec(rec, 0, degree);
    MonomialOrder drl = MonomialOrder::degrevlex();
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return drl.compare(r, a, b) > 0; });
    return out;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& G, int degree) {
    if (!G.ring.domain().is_field())
        throw NotAField("standard monomials need field coefficients");
    Engine eng(G.ring, G.order);
    std::vector<Monomial> lead;
    for (const auto& g : G.elems)
        lead.push_back(leading_term(G.ring, G.order, g).m);
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(G.ring, degree)) {
        bool divisible = std::any_of(lead.begin(), lead.end(),
                                     [&](const Monomial& l) { return l.divides(m); });
        if (!divisible)
            out.push_back(m);
    }
    return out;
}

const Term& leading_term(const GradedRing& r, const MonomialOrder& ord, const Poly& f) {
    if (f.is_zero())
        throw Error("leading term of zero");
    const Term* best = &f.terms().front();
    for (const auto& t : f.terms())
        if (ord.compare(r, t.m, best->m) > 0)
            best = &t;
    return *best;
}

}  // namespace gcr
