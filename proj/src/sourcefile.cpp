#include "gcr/sourcefile.hpp"

#include <cctype>
#include <set>

namespace gcr {

const SourceFile::RingDecl& SourceFile::ring(const std::string& name) const {
    for (const auto& r : rings)
        if (r.name == name)
            return r;
    throw Error("no ring named '" + name + "'");
}

const SourceFile::IdealDecl& SourceFile::ideal(const std::string& name) const {
    for (const auto& i : ideals)
        if (i.name == name)
            return i;
    throw Error("no ideal named '" + name + "'");
}

const SourceFile::MapDecl& SourceFile::map(const std::string& name) const {
    for (const auto& m : maps)
        if (m.name == name)
            return m;
    throw Error("no map named '" + name + "'");
}

const SourceFile::SqDecl& SourceFile::sq(const std::string& name) const {
    for (const auto& s : sqs)
        if (s.name == name)
            return s;
    throw Error("no sq action named '" + name + "'");
}

namespace {

struct Cursor {
    const std::string& src;
    size_t pos = 0;

    size_t line_of(size_t p) const {
        size_t line = 1;
        for (size_t i = 0; i < p && i < src.size(); ++i)
            if (src[i] == '\n')
                ++line;
        return line;
    }
    size_t col_of(size_t p) const {
        size_t col = 1;
        for (size_t i = 0; i < p && i < src.size(); ++i)
            col = src[i] == '\n' ? 1 : col + 1;
        return col;
    }

    [[noreturn]] void fail(const std::string& msg, size_t at) const {
        throw ParseError(line_of(at), col_of(at), msg);
    }
    [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos); }

    void skip_ws() {
        for (;;) {
            while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
                ++pos;
            if (pos < src.size() && src[pos] == '#') {
                while (pos < src.size() && src[pos] != '\n')
                    ++pos;
                continue;
            }
            break;
        }
    }

    bool at_end() {
        skip_ws();
        return pos >= src.size();
    }

    bool try_token(const std::string& tok) {
        skip_ws();
        if (src.compare(pos, tok.size(), tok) != 0)
            return false;
        // identifiers must not run into each other
        if (std::isalnum(static_cast<unsigned char>(tok.back())) && pos + tok.size() < src.size()) {
            char next = src[pos + tok.size()];
            if (std::isalnum(static_cast<unsigned char>(next)) || next == '_')
                return false;
        }
        pos += tok.size();
        return true;
    }

    void expect(const std::string& tok) {
        if (!try_token(tok))
            fail("expected '" + tok + "'");
    }

    std::string identifier() {
        skip_ws();
        size_t start = pos;
        if (pos < src.size() &&
            (std::isalpha(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        if (start == pos)
            fail("expected identifier");
        return src.substr(start, pos - start);
    }

    long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
            ++pos;
        if (start == pos)
            fail("expected integer");
        return std::stol(src.substr(start, pos - start));
    }

    // Consume a balanced chunk up to a top-level ',' or ')'; the delimiter
    // itself is not consumed.
    std::string chunk_until_delim() {
        skip_ws();
        size_t start = pos;
        int depth = 0;
        while (pos < src.size()) {
            char c = src[pos];
            if (c == '(')
                ++depth;
            else if (c == ')') {
                if (depth == 0)
                    break;
                --depth;
            } else if (c == ',' && depth == 0) {
                break;
            }
            ++pos;
        }
        if (depth != 0)
            fail("unbalanced parentheses", start);
        return src.substr(start, pos - start);
    }
};

}  // namespace

SourceFile parse_source(const std::string& text) {
    SourceFile out;
    Cursor cur{text};
    std::set<std::string> names;

    auto declare = [&](const std::string& name, size_t at) {
        if (!names.insert(name).second)
            cur.fail("duplicate name '" + name + "'", at);
    };
    auto find_ring = [&](const std::string& name, size_t at) -> const SourceFile::RingDecl& {
        for (const auto& r : out.rings)
            if (r.name == name)
                return r;
        cur.fail("ring '" + name + "' is not declared", at);
    };
    auto parse_poly_at = [&](const GradedRing& ring, size_t at) {
        std::string chunk = cur.chunk_until_delim();
        try {
            return parse_poly(ring, chunk);
        } catch (const Error& e) {
            cur.fail(e.what(), at);
        }
    };
    auto poly_list = [&](const GradedRing& ring) {
        cur.expect("(");
        std::vector<Poly> polys;
        for (;;) {
            cur.skip_ws();
            size_t at = cur.pos;
            polys.push_back(parse_poly_at(ring, at));
            if (cur.try_token(","))
                continue;
            cur.expect(")");
            break;
        }
        return polys;
    };

    while (!cur.at_end()) {
        size_t decl_at = cur.pos;
        size_t decl_line = cur.line_of(decl_at);
        if (cur.try_token("ring")) {
            size_t name_at = cur.pos;
            std::string name = cur.identifier();
            declare(name, name_at);
            cur.expect("=");
            cur.skip_ws();
            size_t dom_at = cur.pos;
            std::string dom_tok = cur.identifier();
            CoeffDomain dom = CoeffDomain::integers();
            if (dom_tok == "ZZ") {
                dom = CoeffDomain::integers();
            } else if (dom_tok == "QQ") {
                dom = CoeffDomain::rationals();
            } else if (dom_tok.size() > 1 && dom_tok[0] == 'F' &&
                       dom_tok.find_first_not_of("0123456789", 1) == std::string::npos) {
                try {
                    dom = CoeffDomain::prime_field(std::stol(dom_tok.substr(1)));
                } catch (const Error& e) {
                    cur.fail(e.what(), dom_at);
                }
            } else {
                cur.fail("expected coefficient domain ZZ, QQ or F<p>", dom_at);
            }
            cur.expect("[");
            std::vector<std::pair<std::string, int>> vars;
            for (;;) {
                std::string v = cur.identifier();
                cur.expect(":");
                size_t at = cur.pos;
                long deg = cur.integer();
                if (deg < 1)
                    cur.fail("variable degree must be >= 1", at);
                vars.emplace_back(v, static_cast<int>(deg));
                if (cur.try_token(","))
                    continue;
                cur.expect("]");
                break;
            }
            GradedRing ring = [&] {
                try {
                    return GradedRing(vars, dom);
                } catch (const Error& e) {
                    cur.fail(e.what(), decl_at);
                }
            }();
            std::vector<Poly> rels;
            if (cur.try_token("/"))
                rels = poly_list(ring);
            cur.expect(";");
            QuotientPresentation pres(ring, Ideal(ring, rels));
            for (const auto& g : pres.relations().gens)
                if (!g.is_homogeneous())
                    out.warnings.push_back({Diagnostic::Severity::Warning,
                                            "relation " + g.to_string() + " of ring '" + name +
                                                "' is not homogeneous",
                                            decl_line, 1});
            out.rings.push_back({name, std::move(pres), decl_line});
        } else if (cur.try_token("ideal")) {
            size_t name_at = cur.pos;
            std::string name = cur.identifier();
            declare(name, name_at);
            cur.expect("on");
            size_t ring_at = cur.pos;
            std::string rname = cur.identifier();
            const auto& rd = find_ring(rname, ring_at);
            cur.expect("=");
            std::vector<Poly> gens = poly_list(rd.pres.ambient());
            cur.expect(";");
            out.ideals.push_back({name, rname, Ideal(rd.pres.ambient(), std::move(gens)), decl_line});
        } else if (cur.try_token("map")) {
            size_t name_at = cur.pos;
            std::string name = cur.identifier();
            declare(name, name_at);
            cur.expect(":");
            size_t src_at = cur.pos;
            std::string sname = cur.identifier();
            const auto& sd = find_ring(sname, src_at);
            cur.expect("->");
            size_t tgt_at = cur.pos;
            std::string tname = cur.identifier();
            const auto& td = find_ring(tname, tgt_at);
            cur.expect("=");
            std::vector<Poly> images = poly_list(td.pres.ambient());
            cur.expect(";");
            try {
                RingMap map(sd.pres.ambient(), td.pres, std::move(images));
                out.maps.push_back({name, sname, tname, std::move(map), decl_line});
            } catch (const Error& e) {
                cur.fail(e.what(), decl_at);
            }
        } else if (cur.try_token("sq")) {
            size_t name_at = cur.pos;
            std::string name = cur.identifier();
            declare(name, name_at);
            cur.expect("on");
            size_t ring_at = cur.pos;
            std::string rname = cur.identifier();
            const auto& rd = find_ring(rname, ring_at);
            const GradedRing& ring = rd.pres.ambient();
            cur.expect("=");
            cur.expect("(");
            std::vector<std::optional<Poly>> squares(ring.nvars());
            for (;;) {
                size_t var_at = cur.pos;
                std::string v = cur.identifier();
                auto idx = ring.find_var(v);
                if (!idx)
                    cur.fail("ring '" + rname + "' has no variable '" + v + "'", var_at);
                if (squares[*idx])
                    cur.fail("duplicate total square for '" + v + "'", var_at);
                cur.expect("->");
                cur.skip_ws();
                squares[*idx] = parse_poly_at(ring, cur.pos);
                if (cur.try_token(","))
                    continue;
                cur.expect(")");
                break;
            }
            cur.expect(";");
            std::vector<Poly> sq;
            for (size_t i = 0; i < squares.size(); ++i) {
                if (!squares[i])
                    cur.fail("missing total square for variable '" + ring.var_name(i) + "'",
                             decl_at);
                sq.push_back(*squares[i]);
            }
            try {
                SteenrodAction action(rd.pres, std::move(sq));
                out.sqs.push_back({name, rname, std::move(action), decl_line});
            } catch (const Error& e) {
                cur.fail(e.what(), decl_at);
            }
        } else {
            cur.fail("expected a declaration (ring, ideal, map or sq)");
        }
    }
    return out;
}

std::string print_source(const SourceFile& f) {
    std::string s;
    auto poly_list = [](const std::vector<Poly>& ps) {
        std::string t = "(";
        for (size_t i = 0; i < ps.size(); ++i) {
            if (i)
                t += ", ";
            t += ps[i].to_string();
        }
        return t + ")";
    };
    for (const auto& rd : f.rings) {
        const auto& amb = rd.pres.ambient();
        s += "ring " + rd.name + " = " + amb.domain().name() + " [";
        for (size_t i = 0; i < amb.nvars(); ++i) {
            if (i)
                s += ", ";
            s += amb.var_name(i) + ":" + std::to_string(amb.var_degree(i));
        }
        s += "]";
        if (!rd.pres.relations().gens.empty())
            s += " / " + poly_list(rd.pres.relations().gens);
        s += ";\n";
    }
    for (const auto& id : f.ideals)
        s += "ideal " + id.name + " on " + id.ring + " = " + poly_list(id.ideal.gens) + ";\n";
    for (const auto& md : f.maps)
        s += "map " + md.name + " : " + md.source_ring + " -> " + md.target_ring + " = " +
             poly_list(md.map.images()) + ";\n";
    for (const auto& sd : f.sqs) {
        s += "sq " + sd.name + " on " + sd.ring + " = (";
        const auto& amb = sd.action.presentation().ambient();
        for (size_t i = 0; i < amb.nvars(); ++i) {
            if (i)
                s += ", ";
            s += amb.var_name(i) + " -> " + sd.action.total_squares()[i].to_string();
        }
        s += ");\n";
    }
    return s;
}

}  // namespace gcr
