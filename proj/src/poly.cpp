#include "gcr/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace gcr {

namespace {

struct TermCmp {
    const GradedRing* ring;
    MonomialOrder ord = MonomialOrder::degrevlex();
    bool operator()(const Monomial& a, const Monomial& b) const {
        return ord.compare(*ring, a, b) > 0;  // descending
    }
};

}  // namespace

Poly::Poly(GradedRing ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    std::map<Monomial, mpq_class, TermCmp> acc(TermCmp{&ring_});
    const auto& dom = ring_.domain();
    for (auto& t : terms) {
        if (t.m.size() != ring_.nvars())
            throw RingMismatch("term width does not match ring");
        auto [it, fresh] = acc.emplace(t.m, dom.canon(t.c));
        if (!fresh)
            it->second = dom.add(it->second, t.c);
    }
    for (auto& [m, c] : acc)
        if (c != 0)
            terms_.push_back({m, c});
}

Poly Poly::constant(const GradedRing& r, const mpq_class& c) {
    return Poly(r, {Term{Monomial::one(r), c}});
}

Poly Poly::var(const GradedRing& r, size_t i, int exp) {
    return Poly(r, {Term{Monomial::var(r, i, exp), 1}});
}

Poly Poly::term(const GradedRing& r, const mpq_class& c, const Monomial& m) {
    return Poly(r, {Term{m, c}});
}

void Poly::check_same_ring(const Poly& o) const {
    if (ring_ != o.ring_)
        throw RingMismatch();
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ring(o);
    const auto& dom = ring_.domain();
    TermCmp cmp{&ring_};
    Poly out(ring_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = cmp.ord.compare(ring_, terms_[i].m, o.terms_[j].m);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            mpq_class s = dom.add(terms_[i].c, o.terms_[j].c);
            if (s != 0)
                out.terms_.push_back({terms_[i].m, s});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i)
        out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j)
        out.terms_.push_back(o.terms_[j]);
    return out;
}

Poly Poly::operator-() const {
    Poly out(*this);
    const auto& dom = ring_.domain();
    for (auto& t : out.terms_)
        t.c = dom.neg(t.c);
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    return *this + (-o);
}

Poly Poly::mul_term(const mpq_class& c, const Monomial& m) const {
    const auto& dom = ring_.domain();
    mpq_class cc = dom.canon(c);
    Poly out(ring_);
    if (cc == 0)
        return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        mpq_class p = dom.mul(t.c, cc);
        if (p != 0)
            out.terms_.push_back({t.m * m, p});
    }
    return out;  // multiplying by a monomial preserves the term order
}

Poly Poly::scaled(const mpq_class& c) const {
    return mul_term(c, Monomial::one(ring_));
}

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(o);
    const auto& dom = ring_.domain();
    std::map<Monomial, mpq_class, TermCmp> acc(TermCmp{&ring_});
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = a.m * b.m;
            mpq_class p = dom.mul(a.c, b.c);
            auto [it, fresh] = acc.emplace(std::move(m), p);
            if (!fresh)
                it->second = dom.add(it->second, p);
        }
    }
    Poly out(ring_);
    for (auto& [m, c] : acc)
        if (c != 0)
            out.terms_.push_back({m, c});
    return out;
}

Poly Poly::pow(int k) const {
    if (k < 0)
        throw Error("negative exponent");
    Poly result = Poly::one(ring_);
    Poly base = *this;
    while (k) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

bool Poly::operator==(const Poly& o) const {
    if (ring_ != o.ring_ || terms_.size() != o.terms_.size())
        return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c)
            return false;
    return true;
}

Poly::DegreeInfo Poly::weighted_degree() const {
    DegreeInfo info;
    for (const auto& t : terms_)
        info.degrees.insert(t.m.weighted_degree(ring_));
    info.homogeneous = info.degrees.size() <= 1;
    if (info.degrees.size() == 1)
        info.degree = *info.degrees.begin();
    return info;
}

Poly Poly::homogeneous_component(int d) const {
    Poly out(ring_);
    for (const auto& t : terms_)
        if (t.m.weighted_degree(ring_) == d)
            out.terms_.push_back(t);
    return out;
}

Poly Poly::substitute(const GradedRing& target, const std::vector<Poly>& images) const {
    if (images.size() != ring_.nvars())
        throw Error("substitute: image count does not match variable count");
    Poly out = Poly::zero(target);
    for (const auto& t : terms_) {
        Poly prod = Poly::constant(target, t.c);
        for (size_t i = 0; i < ring_.nvars(); ++i)
            if (t.m.e[i] > 0)
                prod = prod * images[i].pow(t.m.e[i]);
        out = out + prod;
    }
    return out;
}

std::string monomial_to_string(const GradedRing& r, const Monomial& m) {
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m.e[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += r.var_name(i);
        if (m.e[i] > 1)
            s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

std::string Poly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        mpq_class c = t.c;
        bool neg = c < 0;
        if (neg)
            c = -c;
        if (i == 0)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        std::string ms = monomial_to_string(ring_, t.m);
        if (c == 1 && ms != "1") {
            s += ms;
        } else {
            s += c.get_str();
            if (ms != "1")
                s += "*" + ms;
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Expression parser (recursive descent).
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := nat | ident | '(' expr ')' | '-' factor
// ---------------------------------------------------------------------------

namespace {

struct ExprParser {
    const GradedRing& ring;
    const std::string& src;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error("parse error at offset " + std::to_string(pos) + ": " + msg);
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    mpz_class nat() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
            ++pos;
        if (start == pos)
            fail("expected number");
        return mpz_class(src.substr(start, pos - start));
    }

    Poly base() {
        skip_ws();
        if (pos >= src.size())
            fail("unexpected end of input");
        char c = src[pos];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Poly::constant(ring, mpq_class(nat()));
        if (c == '(') {
            ++pos;
            Poly p = expr();
            if (!eat(')'))
                fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos;
            return -factor();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
                ++pos;
            std::string name = src.substr(start, pos - start);
            if (auto i = ring.find_var(name))
                return Poly::var(ring, *i);
            throw UnknownVariable(name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Poly factor() {
        Poly p = base();
        if (eat('^')) {
            mpz_class k = nat();
            if (!k.fits_sint_p() || k < 0)
                fail("exponent out of range");
            p = p.pow(static_cast<int>(k.get_si()));
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        while (eat('*'))
            p = p * factor();
        return p;
    }

    Poly expr() {
        Poly p = term();  // unary minus handled in base()
        for (;;) {
            skip_ws();
            if (eat('+'))
                p = p + term();
            else if (eat('-'))
                p = p - term();
            else
                break;
        }
        return p;
    }
};

}  // namespace

Poly parse_poly(const GradedRing& ring, const std::string& text) {
    ExprParser p{ring, text};
    Poly result = p.expr();
    p.skip_ws();
    if (p.pos != text.size())
        p.fail("trailing input");
    return result;
}

}  // namespace gcr
