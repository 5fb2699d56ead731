#include <doctest.h>

#include "crn/error.hpp"
#include "crn/parse.hpp"
#include "test_data.hpp"

using namespace crn;

TEST_CASE("parsing the first cascade pathway") {
    Network net = parse_network("X1 + X9 <-> X13 ; k1, k2\nX13 -> X2 + X9 ; k3");
    CHECK(net.species_count() == 4);
    CHECK(net.complex_count() == 3);
    CHECK(net.reaction_count() == 3);
    // first-appearance species order, reversible expands forward first
    CHECK(net.species_name(0) == "X1");
    CHECK(net.species_name(1) == "X9");
    CHECK(net.reactions()[0].rate_label == "k1");
    CHECK(net.reactions()[1].rate_label == "k2");
    CHECK(net.reactions()[1].source_ix == net.reactions()[0].product_ix);
}

TEST_CASE("empty input is an error") {
    CHECK_THROWS_AS(parse_network(""), ParseError);
    CHECK_THROWS_AS(parse_network("# only a comment\n\n"), ParseError);
}

TEST_CASE("integer stoichiometric coefficients") {
    Network net = parse_network("2 X2 + X4 -> X2 + X15 ; q1");
    const Reaction& rx = net.reactions()[0];
    CHECK(rx.source.coeff(net.find_species("X2")) == 2);
    CHECK(rx.source.coeff(net.find_species("X4")) == 1);
    CHECK(rx.product.coeff(net.find_species("X2")) == 1);
    // no-space form parses the same way
    Network net2 = parse_network("2X2 + X4 -> X2 + X15 ; q1");
    CHECK(net2.reactions()[0].source == rx.source);
}

TEST_CASE("zero complex") {
    Network net = parse_network("0 -> X1 ; f1\nX1 -> 0 ; f2");
    CHECK(net.complex_count() == 2);
    CHECK(net.reactions()[0].source.is_zero());
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_network("X1 -> X2 ; k1\nX3 -> ; k2"), doctest::Contains("line 2"),
                         ParseError);
    CHECK_THROWS_AS(parse_network("X1 -> X2 ; k1\nX2 -> X3 ; k1"), ParseError);   // dup label
    CHECK_THROWS_AS(parse_network("X1 + X2 -> X2 + X1 ; k1"), ParseError);        // identical sides
    CHECK_THROWS_AS(parse_network("X1 <-> X2 ; k1"), ParseError);                 // one label
    CHECK_THROWS_AS(parse_network("X1 -> X2 ; k1, k2"), ParseError);              // two labels
    CHECK_THROWS_AS(parse_network("99999999999 X1 -> X2 ; k1"), ParseError);      // overflow
    CHECK_THROWS_AS(parse_network("species X1 X9\nX1 -> X9 ; k1\nspecies X1"), ParseError);
    CHECK_THROWS_AS(parse_network("species X1 X2 X3\nX1 -> X2 ; k1"), ParseError);  // X3 unused
}

TEST_CASE("round trip: serialize then parse is identity") {
    auto check_roundtrip = [](const Network& net) {
        Network again = parse_network(serialize_network(net));
        REQUIRE(again.species_count() == net.species_count());
        REQUIRE(again.reaction_count() == net.reaction_count());
        REQUIRE(again.complex_count() == net.complex_count());
        for (int i = 0; i < net.species_count(); ++i)
            CHECK(again.species_name(i) == net.species_name(i));
        for (int i = 0; i < net.reaction_count(); ++i) {
            CHECK(again.reactions()[i].rate_label == net.reactions()[i].rate_label);
            CHECK(again.reactions()[i].source == net.reactions()[i].source);
            CHECK(again.reactions()[i].product == net.reactions()[i].product);
            CHECK(again.reactions()[i].source_ix == net.reactions()[i].source_ix);
        }
    };
    check_roundtrip(parse_network("2 X2 + X4 -> X2 + X15 ; q1\n0 -> X2 ; f1"));
    check_roundtrip(crn_test::load_network("net1.crn"));
    check_roundtrip(crn_test::load_network("net2.crn"));
    check_roundtrip(crn_test::load_network("net3.crn"));
}

TEST_CASE("golden counts for the shipped networks") {
    Network net1 = crn_test::load_network("net1.crn");
    CHECK(net1.species_count() == 22);
    CHECK(net1.reaction_count() == 30);
    CHECK(net1.complex_count() == 26);

    Network net2 = crn_test::load_network("net2.crn");
    CHECK(net2.species_count() == 21);
    CHECK(net2.reaction_count() == 30);

    Network net3 = crn_test::load_network("net3.crn");
    CHECK(net3.species_count() == 25);
    CHECK(net3.reaction_count() == 36);
    CHECK(net3.complex_count() == 32);
}

TEST_CASE("scheme parsing") {
    Network net = parse_network("X1 + X9 <-> X13 ; k1, k2\nX13 -> X2 + X9 ; k3");

    SUBCASE("groups with shifts") {
        Network two = parse_network("X1 + X9 <-> X13 ; k1, k2\nX13 -> X2 + X9 ; k3\n"
                                    "X2 + X10 -> X18 ; k4\nX18 -> X1 + X10 ; k5");
        TranslationScheme s = parse_scheme("[group 1]\nreactions = k1, k2, k3\nshift = X10\n"
                                           "[group 2]\nreactions = k4, k5\nshift = X9",
                                           two);
        REQUIRE(s.groups.size() == 2);
        CHECK(s.groups[0].reactions == std::vector<std::string>{"k1", "k2", "k3"});
        CHECK(s.groups[0].shift == Complex::single(two.find_species("X10")));
        CHECK(s.groups[1].shift == Complex::single(two.find_species("X9")));
    }

    SUBCASE("identity scheme: empty shifts") {
        TranslationScheme s = parse_scheme("[group a]\nreactions = k1, k2, k3\nshift = 0", net);
        CHECK(s.groups[0].shift.is_zero());
    }

    SUBCASE("unknown reaction label") {
        CHECK_THROWS_WITH_AS(parse_scheme("[group a]\nreactions = k99\nshift = 0", net),
                             doctest::Contains("k99"), ParseError);
    }

    SUBCASE("label in two groups") {
        CHECK_THROWS_AS(parse_scheme("[group a]\nreactions = k1, k2, k3\nshift = 0\n"
                                     "[group b]\nreactions = k3\nshift = 0",
                                     net),
                        ParseError);
    }

    SUBCASE("label missing from all groups") {
        CHECK_THROWS_AS(parse_scheme("[group a]\nreactions = k1, k2\nshift = 0", net), ParseError);
    }

    SUBCASE("unknown species in shift") {
        CHECK_THROWS_AS(parse_scheme("[group a]\nreactions = k1, k2, k3\nshift = X99", net),
                        ParseError);
    }
}

TEST_CASE("shipped schemes cover the shipped networks") {
    Network net1 = crn_test::load_network("net1.crn");
    TranslationScheme s1 = crn_test::load_scheme("sch1.scheme", net1);
    CHECK(s1.groups.size() == 10);
    Network net3 = crn_test::load_network("net3.crn");
    TranslationScheme s3 = crn_test::load_scheme("sch3.scheme", net3);
    CHECK(s3.groups.size() == 12);
}
