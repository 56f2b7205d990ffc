#include "gcr/ring.hpp"

#include <algorithm>
#include <set>

namespace gcr {

GradedRing::GradedRing(std::vector<std::pair<std::string, int>> vars, CoeffDomain domain) {
    auto data = std::make_shared<Data>(Data{{}, {}, domain});
    std::set<std::string> seen;
    for (auto& [name, deg] : vars) {
        if (name.empty())
            throw Error("empty variable name");
        if (deg < 1)
            throw Error("variable degree must be >= 1: " + name);
        if (!seen.insert(name).second)
            throw Error("duplicate variable: " + name);
        data->names.push_back(name);
        data->degrees.push_back(deg);
    }
    d_ = std::move(data);
}

std::optional<size_t> GradedRing::find_var(const std::string& name) const {
    for (size_t i = 0; i < d_->names.size(); ++i)
        if (d_->names[i] == name)
            return i;
    return std::nullopt;
}

size_t GradedRing::var_index(const std::string& name) const {
    if (auto i = find_var(name))
        return *i;
    throw UnknownVariable(name);
}

bool GradedRing::operator==(const GradedRing& o) const {
    if (d_ == o.d_)
        return true;
    return d_->names == o.d_->names && d_->degrees == o.d_->degrees && d_->domain == o.d_->domain;
}

std::string GradedRing::describe() const {
    std::string s = d_->domain.name() + "[";
    for (size_t i = 0; i < nvars(); ++i) {
        if (i)
            s += ",";
        s += var_name(i) + ":" + std::to_string(var_degree(i));
    }
    return s + "]";
}

bool Monomial::is_one() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

int Monomial::weighted_degree(const GradedRing& r) const {
    int d = 0;
    for (size_t i = 0; i < e.size(); ++i)
        d += e[i] * r.var_degree(i);
    return d;
}

Monomial Monomial::var(const GradedRing& r, size_t i, int exp) {
    Monomial m(r.nvars());
    m.e[i] = exp;
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m(*this);
    for (size_t i = 0; i < e.size(); ++i)
        m.e[i] += o.e[i];
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i])
            return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    Monomial m(o);
    for (size_t i = 0; i < e.size(); ++i)
        m.e[i] -= e[i];
    return m;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial m(*this);
    for (size_t i = 0; i < e.size(); ++i)
        m.e[i] = std::max(e[i], o.e[i]);
    return m;
}

Monomial Monomial::gcd(const Monomial& o) const {
    Monomial m(*this);
    for (size_t i = 0; i < e.size(); ++i)
        m.e[i] = std::min(e[i], o.e[i]);
    return m;
}

Monomial Monomial::pow(int k) const {
    Monomial m(*this);
    for (auto& x : m.e)
        x *= k;
    return m;
}

bool Monomial::coprime(const Monomial& o) const {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0 && o.e[i] > 0)
            return false;
    return true;
}

MonomialOrder MonomialOrder::elimination(const GradedRing& r, const std::vector<std::string>& vars) {
    std::vector<bool> block(r.nvars(), false);
    for (const auto& v : vars)
        block[r.var_index(v)] = true;
    return elimination(std::move(block));
}

namespace {

// Weighted degrevlex on a subset of positions given by mask (or all
// positions when mask is null). Higher weighted degree wins; ties go to
// the monomial with the *smaller* exponent in the last differing slot.
int cmp_drl(const GradedRing& r, const Monomial& a, const Monomial& b, const std::vector<bool>* mask) {
    long da = 0, db = 0;
    for (size_t i = 0; i < a.e.size(); ++i) {
        if (mask && !(*mask)[i])
            continue;
        da += static_cast<long>(a.e[i]) * r.var_degree(i);
        db += static_cast<long>(b.e[i]) * r.var_degree(i);
    }
    if (da != db)
        return da < db ? -1 : 1;
    for (size_t i = a.e.size(); i-- > 0;) {
        if (mask && !(*mask)[i])
            continue;
        if (a.e[i] != b.e[i])
            return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const GradedRing& r, const Monomial& a, const Monomial& b) const {
    if (a.size() != r.nvars() || b.size() != r.nvars())
        throw RingMismatch("monomial width does not match ring");
    switch (kind_) {
        case Kind::DegRevLex:
            return cmp_drl(r, a, b, nullptr);
        case Kind::Lex:
            for (size_t i = 0; i < a.e.size(); ++i)
                if (a.e[i] != b.e[i])
                    return a.e[i] < b.e[i] ? -1 : 1;
            return 0;
        case Kind::Elimination: {
            if (block_.size() != r.nvars())
                throw RingMismatch("elimination block does not match ring");
            std::vector<bool> outside(block_);
            outside.flip();
            if (int c = cmp_drl(r, a, b, &block_))
                return c;
            return cmp_drl(r, a, b, &outside);
        }
    }
    return 0;
}

}  // namespace gcr
