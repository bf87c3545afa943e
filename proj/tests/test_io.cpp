#include "doctest.h"

#include "rct/instance_io.hpp"

using namespace rct;

TEST_CASE("parse a small instance") {
    std::string text =
        "# sample\n"
        "rct 3 3 2\n"
        "\n"
        "e 0 1 0\n"
        "e 1 2 1\n"
        "e 0 2 0\n"
        "c 0 4\n"
        "c 4 0\n"
        "k 7\n";
    Instance inst = parse_instance(text);
    CHECK(inst.graph.num_vertices() == 3);
    CHECK(inst.graph.num_edges() == 3);
    CHECK(inst.costs.num_colors() == 2);
    CHECK(inst.costs.get(0, 1) == 4);
    CHECK(inst.budget == Cost{7});
    CHECK(inst.graph.edge(1).color == 1);
}

TEST_CASE("budget line is optional") {
    Instance inst = parse_instance("rct 2 1 1\ne 0 1 0\nc 0\n");
    CHECK_FALSE(inst.budget.has_value());
}

TEST_CASE("round trip") {
    std::string text = "rct 4 3 2\ne 0 1 0\ne 1 2 1\ne 2 3 1\nc 0 3\nc 3 1\nk 9\n";
    Instance a = parse_instance(text);
    std::string again = serialize_instance(a);
    Instance b = parse_instance(again);
    CHECK(serialize_instance(b) == again);
    CHECK(b.costs.get(1, 1) == 1);
    CHECK(b.budget == Cost{9});
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_instance("rct 2 1 1\ne 0 5 0\nc 0\n");
        FAIL("expected throw");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.kind() == ParseErrorKind::Format);
    }
}

TEST_CASE("asymmetric cost table is its own error kind") {
    try {
        parse_instance("rct 2 1 2\ne 0 1 0\nc 0 1\nc 2 0\n");
        FAIL("expected throw");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseErrorKind::AsymmetricCosts);
        CHECK(e.line() == 4);
    }
}

TEST_CASE("malformed inputs") {
    CHECK_THROWS_AS(parse_instance(""), ParseError);
    CHECK_THROWS_AS(parse_instance("graph 2 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("rct 2 1 1\ne 0 1 0\n"), ParseError);        // missing cost row
    CHECK_THROWS_AS(parse_instance("rct 2 1 1\ne 0 1 5\nc 0\n"), ParseError);   // color range
    CHECK_THROWS_AS(parse_instance("rct 2 1 1\ne 0 1 0 9\nc 0\n"), ParseError); // trailing token
    CHECK_THROWS_AS(parse_instance("rct 2 2 1\ne 0 1 0\ne 1 0 0\nc 0\n"), ParseError); // parallel
    CHECK_THROWS_AS(parse_instance("rct 2 1 1\ne 0 1 0\nc 0\nk -2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("rct 2 1 1\ne 0 1 0\nc 0\nk 1\nk 2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("rct 2 1 1\ne 0 1 0\nc -1\n"), ParseError);
}

TEST_CASE("file round trip") {
    Instance inst = parse_instance("rct 2 1 1\ne 0 1 0\nc 0\n");
    std::string path = "io_roundtrip.rct";
    write_instance_file(path, inst);
    Instance back = read_instance_file(path);
    CHECK(serialize_instance(back) == serialize_instance(inst));
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_instance_file("definitely_missing.rct"), InvalidArgument);
}
