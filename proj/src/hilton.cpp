#include "gcr/hilton.hpp"

#include <algorithm>
#include <sstream>

namespace gcr {

AbGroupExpr AbGroupExpr::free_part(long rank) {
    AbGroupExpr g;
    g.free_rank = rank;
    return g;
}

AbGroupExpr AbGroupExpr::cyclic(const mpz_class& d) {
    AbGroupExpr g;
    g.add_cyclic(d);
    return g;
}

void AbGroupExpr::add_cyclic(const mpz_class& d) {
    if (d < 2)
        throw Error("cyclic order must be >= 2");
    // factor into prime powers (orders here are tiny)
    mpz_class rest = d;
    for (mpz_class p = 2; rest > 1; ++p) {
        if (rest % p != 0)
            continue;
        mpz_class q = 1;
        while (rest % p == 0) {
            q *= p;
            rest /= p;
        }
        primary[q] += 1;
    }
}

AbGroupExpr AbGroupExpr::operator+(const AbGroupExpr& o) const {
    AbGroupExpr g = *this;
    g.free_rank += o.free_rank;
    for (const auto& [q, k] : o.primary)
        g.primary[q] += k;
    return g;
}

std::string AbGroupExpr::to_string() const {
    if (is_zero())
        return "0";
    // reassemble preferred composite orders from prime powers
    static const std::vector<std::pair<mpz_class, std::vector<mpz_class>>> preferred = {
        {24, {8, 3}}, {15, {3, 5}}, {12, {4, 3}}};
    std::map<mpz_class, long> parts = primary;
    std::map<mpz_class, long> display;
    for (const auto& [d, pieces] : preferred) {
        for (;;) {
            bool have = std::all_of(pieces.begin(), pieces.end(), [&](const mpz_class& q) {
                auto it = parts.find(q);
                return it != parts.end() && it->second > 0;
            });
            if (!have)
                break;
            for (const auto& q : pieces)
                if (--parts[q] == 0)
                    parts.erase(q);
            display[d] += 1;
        }
    }
    for (const auto& [q, k] : parts)
        display[q] += k;

    std::string s;
    if (free_rank > 0) {
        s = "Z";
        if (free_rank > 1)
            s += "^" + std::to_string(free_rank);
    }
    for (const auto& [d, k] : display) {
        if (!s.empty())
            s += " + ";
        std::string cyc = "Z/" + d.get_str();
        s += k > 1 ? "(" + cyc + ")^" + std::to_string(k) : cyc;
    }
    return s;
}

AbGroupExpr AbGroupExpr::parse(const std::string& text) {
    AbGroupExpr g;
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    if (t == "0")
        return g;
    if (t.empty())
        throw Error("empty group expression");
    size_t pos = 0;
    auto number = [&]() -> long {
        size_t start = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
            ++pos;
        if (start == pos)
            throw Error("expected number in group expression: " + text);
        return std::stol(t.substr(start, pos - start));
    };
    for (;;) {
        bool paren = false;
        if (t[pos] == '(') {
            paren = true;
            ++pos;
        }
        if (pos >= t.size() || t[pos] != 'Z')
            throw Error("expected Z in group expression: " + text);
        ++pos;
        mpz_class order = 0;  // 0 marks a free summand
        if (pos < t.size() && t[pos] == '/') {
            ++pos;
            order = number();
        }
        if (paren) {
            if (pos >= t.size() || t[pos] != ')')
                throw Error("expected ')' in group expression: " + text);
            ++pos;
        }
        long mult = 1;
        if (pos < t.size() && t[pos] == '^') {
            ++pos;
            mult = number();
        }
        if (mult < 1)
            throw Error("bad multiplicity in group expression: " + text);
        if (order == 0)
            g.free_rank += mult;
        else
            for (long i = 0; i < mult; ++i)
                g.add_cyclic(order);
        if (pos == t.size())
            break;
        if (t[pos] != '+')
            throw Error("expected '+' in group expression: " + text);
        ++pos;
    }
    return g;
}

namespace {

bool is_lyndon(const std::vector<int>& w) {
    const size_t n = w.size();
    for (size_t r = 1; r < n; ++r) {
        // compare w with its rotation by r
        for (size_t i = 0; i < n; ++i) {
            int a = w[i], b = w[(i + r) % n];
            if (a != b) {
                if (a > b)
                    return false;  // rotation is smaller or equal
                break;
            }
            if (i + 1 == n)
                return false;  // equal rotation: periodic word
        }
    }
    return true;
}

}  // namespace

std::vector<LyndonWord> lyndon_basis(const std::vector<int>& weights, int max_weight) {
    for (int w : weights)
        if (w < 1)
            throw Error("letter weights must be >= 1");
    if (max_weight < 1)
        throw Error("max_weight must be >= 1");
    std::vector<LyndonWord> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int weight) -> void {
        if (!cur.empty() && is_lyndon(cur))
            out.push_back({cur, weight});
        for (int a = 0; a < static_cast<int>(weights.size()); ++a) {
            int nw = weight + weights[static_cast<size_t>(a)];
            if (nw > max_weight)
                continue;
            cur.push_back(a);
            self(self, nw);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const LyndonWord& a, const LyndonWord& b) {
        if (a.weight != b.weight)
            return a.weight < b.weight;
        return a.letters < b.letters;
    });
    return out;
}

WedgeOfSpheres::WedgeOfSpheres(std::vector<int> dimensions) : dims(std::move(dimensions)) {
    for (int d : dims)
        if (d < 2)
            throw Error("wedge summands must be simply connected (dimension >= 2)");
}

SphereTable SphereTable::parse(const std::string& text) {
    SphereTable t;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = line;
        if (auto hash = s.find('#'); hash != std::string::npos)
            s.resize(hash);
        if (s.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream ls(s);
        std::string kw;
        int n, m;
        char eq;
        if (!(ls >> kw >> n >> m >> eq) || kw != "pi" || eq != '=')
            throw Error("sphere table line " + std::to_string(lineno) +
                        ": expected `pi n m = group`");
        std::string rest;
        std::getline(ls, rest);
        if (n < m)
            throw Error("sphere table line " + std::to_string(lineno) +
                        ": entries below the diagonal are zero and must not be listed");
        AbGroupExpr g = AbGroupExpr::parse(rest);
        if (n == m && !(g == AbGroupExpr::free_part(1)))
            throw Error("sphere table line " + std::to_string(lineno) + ": pi_m(S^m) must be Z");
        auto key = std::make_pair(n, m);
        if (!t.entries_.emplace(key, g).second)
            throw Error("sphere table line " + std::to_string(lineno) + ": duplicate entry");
    }
    return t;
}

bool SphereTable::has(int n, int m) const {
    return n < m || entries_.count({n, m}) > 0;
}

AbGroupExpr SphereTable::pi(int n, int m) const {
    if (m < 2)
        throw TableRangeExceeded("pi_n(S^m) only tabulated for m >= 2");
    if (n < m)
        return AbGroupExpr::zero();
    auto it = entries_.find({n, m});
    if (it == entries_.end())
        throw TableRangeExceeded("pi_" + std::to_string(n) + "(S^" + std::to_string(m) +
                                 ") is not in the table");
    return it->second;
}

AbGroupExpr wedge_homotopy(const WedgeOfSpheres& X, int n, const SphereTable& table) {
    if (n < 1)
        throw Error("wedge_homotopy needs n >= 1");
    std::vector<int> weights;
    for (int d : X.dims)
        weights.push_back(d - 1);
    AbGroupExpr g;
    if (n < 2)
        return g;  // simply connected
    for (const auto& w : lyndon_basis(weights, n - 1))
        g = g + table.pi(n, w.weight + 1);
    return g;
}

AbGroupExpr bcom_o2_homotopy(int n, const SphereTable& table) {
    if (n < 1)
        throw Error("bcom_o2_homotopy needs n >= 1");
    AbGroupExpr g = wedge_homotopy(WedgeOfSpheres({2, 2, 3}), n, table);
    if (n == 1)
        g = g + AbGroupExpr::cyclic(2);  // pi_1(BO(2))
    if (n == 2)
        g = g + AbGroupExpr::free_part(1);  // pi_2(BO(2))
    return g;
}

const std::string& builtin_sphere_table_text() {
    // Standard table of pi_n(S^m) for 2 <= m <= 11, m <= n <= 10.
    static const std::string text = R"(# pi_n(S^m) for 2 <= m <= 11, m <= n <= 10
# line format: pi n m = group; entries with n < m are zero and omitted
pi 2 2 = Z
pi 3 2 = Z
pi 4 2 = Z/2
pi 5 2 = Z/2
pi 6 2 = Z/12
pi 7 2 = Z/2
pi 8 2 = Z/2
pi 9 2 = Z/3
pi 10 2 = Z/15
pi 3 3 = Z
pi 4 3 = Z/2
pi 5 3 = Z/2
pi 6 3 = Z/12
pi 7 3 = Z/2
pi 8 3 = Z/2
pi 9 3 = Z/3
pi 10 3 = Z/15
pi 4 4 = Z
pi 5 4 = Z/2
pi 6 4 = Z/2
pi 7 4 = Z + Z/12
pi 8 4 = (Z/2)^2
pi 9 4 = (Z/2)^2
pi 10 4 = Z/24 + Z/3
pi 5 5 = Z
pi 6 5 = Z/2
pi 7 5 = Z/2
pi 8 5 = Z/24
pi 9 5 = Z/2
pi 10 5 = Z/2
pi 6 6 = Z
pi 7 6 = Z/2
pi 8 6 = Z/2
pi 9 6 = Z/24
pi 10 6 = 0
pi 7 7 = Z
pi 8 7 = Z/2
pi 9 7 = Z/2
pi 10 7 = Z/24
pi 8 8 = Z
pi 9 8 = Z/2
pi 10 8 = Z/2
pi 9 9 = Z
pi 10 9 = Z/2
pi 10 10 = Z
)";
    return text;
}

const SphereTable& SphereTable::builtin() {
    static const SphereTable t = SphereTable::parse(builtin_sphere_table_text());
    return t;
}

}  // namespace gcr
