#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcr/catalog.hpp"
#include "gcr/sourcefile.hpp"
#include "helpers.hpp"

using namespace gcr;

TEST_CASE("parsing the U(2) comparison declarations") {
    SourceFile f = parse_source(
        "ring P = ZZ [c1:2, c2:4, y1:4, y2:6];\n"
        "ring R = ZZ [t:2, u:2, a1:2, a2:4, c:4]"
        " / (t*u, t*a1, t*a2, t*c, c^2, u^2, 2*u, c*u, a1*u);\n"
        "map f : P -> R = (2*t + a1, t^2 + a2, 2*c, a1*c);\n");
    CHECK(f.rings.size() == 2);
    CHECK(f.maps.size() == 1);
    CHECK(f.ring("P").pres.ambient().nvars() == 4);
    CHECK(f.ring("R").pres.relations().gens.size() == 9);
    CHECK(f.map("f").source_ring == "P");
    CHECK(f.warnings.empty());
    CHECK(apply(f.map("f").map, parse_poly(f.ring("P").pres.ambient(), "c1*y1 - 2*y2")).is_zero());
}

TEST_CASE("empty file") {
    SourceFile f = parse_source("");
    CHECK(f.rings.empty());
    CHECK(f.maps.empty());
    SourceFile g = parse_source("# nothing but a comment\n");
    CHECK(g.rings.empty());
}

TEST_CASE("arity mismatch is a parse error") {
    CHECK_THROWS_AS(parse_source("ring P = ZZ [c1:2, c2:4, y1:4, y2:6];\n"
                                 "ring R = ZZ [t:2];\n"
                                 "map g : P -> R = (t);\n"),
                    ParseError);
}

TEST_CASE("error cases carry positions") {
    try {
        parse_source("ring A = ZZ [x:1];\nring A = ZZ [y:1];\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_source("ring B = F4 [x:1];"), ParseError);
    CHECK_THROWS_AS(parse_source("ring C = ZZ [x:0];"), ParseError);
    CHECK_THROWS_AS(parse_source("ring D = ZZ [x:1] / (q);"), ParseError);
    CHECK_THROWS_AS(parse_source("frob X = 1;"), ParseError);
    CHECK_THROWS_AS(parse_source("map f : P -> Q = (x);"), ParseError);  // undeclared rings
    CHECK_THROWS_AS(parse_source("ring E = ZZ [x:1]"), ParseError);      // missing ';'
}

TEST_CASE("inhomogeneous relations warn at parse time") {
    SourceFile f = parse_source("ring A = ZZ [x:1, y:2] / (x + y);\n");
    REQUIRE(f.warnings.size() == 1);
    CHECK(f.warnings[0].severity == Diagnostic::Severity::Warning);
    CHECK_THROWS_AS(graded_groups(f.ring("A").pres, 3), InhomogeneousIdeal);
}

TEST_CASE("ideal and sq declarations") {
    SourceFile f = parse_source(
        "ring A = F2 [x:1];\n"
        "ideal I on A = (x^2, x^3);\n"
        "sq q on A = (x -> x + x^2);\n");
    CHECK(f.ideal("I").ideal.gens.size() == 2);
    CHECK(f.sq("q").ring == "A");
    CHECK(verify_action(f.sq("q").action, 6).ok());

    // every generator needs a square
    CHECK_THROWS_AS(parse_source("ring A = F2 [x:1, y:2];\nsq q on A = (x -> x + x^2);\n"),
                    ParseError);
    // duplicate squares are rejected
    CHECK_THROWS_AS(
        parse_source("ring A = F2 [x:1];\nsq q on A = (x -> x + x^2, x -> x);\n"), ParseError);
    // actions on non-F2 rings are rejected
    CHECK_THROWS_AS(parse_source("ring A = ZZ [x:1];\nsq q on A = (x -> x + x^2);\n"), ParseError);
}

TEST_CASE("names are shared across declaration kinds") {
    CHECK_THROWS_AS(parse_source("ring A = ZZ [x:1];\nideal A on A = (x);\n"), ParseError);
}

TEST_CASE("parse of print is the identity on canonical files") {
    const char* files[] = {"appendix_a1.gcr", "appendix_a2.gcr", "appendix_a3.gcr",
                           "su2_tower.gcr",   "o2_rings.gcr",    "mv_o2_integral.gcr",
                           "mv_u2_integral.gcr", "mv_o2_mod2.gcr", "steenrod_actions.gcr"};
    for (const char* name : files) {
        const SourceFile& f = catalog_file(name);
        std::string printed = print_source(f);
        CHECK(printed == print_source(parse_source(printed)));
        SourceFile g = parse_source(printed);
        REQUIRE(g.rings.size() == f.rings.size());
        for (size_t i = 0; i < f.rings.size(); ++i) {
            CHECK(g.rings[i].name == f.rings[i].name);
            CHECK(g.rings[i].pres.ambient() == f.rings[i].pres.ambient());
            CHECK(g.rings[i].pres.relations().gens == f.rings[i].pres.relations().gens);
        }
        REQUIRE(g.maps.size() == f.maps.size());
        for (size_t i = 0; i < f.maps.size(); ++i)
            CHECK(g.maps[i].map.images() == f.maps[i].map.images());
        REQUIRE(g.ideals.size() == f.ideals.size());
        for (size_t i = 0; i < f.ideals.size(); ++i)
            CHECK(g.ideals[i].ideal.gens == f.ideals[i].ideal.gens);
        REQUIRE(g.sqs.size() == f.sqs.size());
        for (size_t i = 0; i < f.sqs.size(); ++i)
            CHECK(g.sqs[i].action.total_squares() == f.sqs[i].action.total_squares());
    }
}
