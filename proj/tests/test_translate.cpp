#include <doctest.h>

#include "crn/error.hpp"
#include "crn/graph.hpp"
#include "crn/parse.hpp"
#include "crn/translate.hpp"
#include "test_data.hpp"

using namespace crn;

namespace {

Complex named(const Network& net, std::initializer_list<std::pair<const char*, int>> terms) {
    Complex c;
    for (const auto& [name, coeff] : terms) c.add(net.find_species(name), coeff);
    return c;
}

}  // namespace

TEST_CASE("translating net1 produces the twenty-node cyclic network") {
    Network net = crn_test::load_network("net1.crn");
    GeneralizedNetwork g = apply_scheme(net, crn_test::load_scheme("sch1.scheme", net));

    CHECK(g.base.complex_count() == 20);
    CHECK(linkage_classes(g.base).classes.size() == 5);
    CHECK(is_weakly_reversible(g.base));
    CHECK(check_proper(g).proper);

    // node X1+X9+X10 carries kinetic complex X1+X9
    int node = g.base.find_complex(named(g.base, {{"X1", 1}, {"X9", 1}, {"X10", 1}}));
    REQUIRE(node >= 0);
    REQUIRE(g.kinetic[node].has_value());
    CHECK(*g.kinetic[node] == named(net, {{"X1", 1}, {"X9", 1}}));

    // the doubled node 2X2+X4+X11 exists and keeps the pre-translation source X2+X4
    int doubled = g.base.find_complex(named(g.base, {{"X2", 2}, {"X4", 1}, {"X11", 1}}));
    REQUIRE(doubled >= 0);
    CHECK(*g.kinetic[doubled] == named(net, {{"X2", 1}, {"X4", 1}}));
}

TEST_CASE("translated node and class counts for all three networks") {
    struct Case {
        const char* net;
        const char* scheme;
        int nodes;
        int classes;
    } cases[] = {{"net1.crn", "sch1.scheme", 20, 5},
                 {"net2.crn", "sch2.scheme", 20, 5},
                 {"net3.crn", "sch3.scheme", 24, 6}};
    for (const auto& c : cases) {
        CAPTURE(c.net);
        Network net = crn_test::load_network(c.net);
        GeneralizedNetwork g = apply_scheme(net, crn_test::load_scheme(c.scheme, net));
        CHECK(g.base.complex_count() == c.nodes);
        CHECK(static_cast<int>(linkage_classes(g.base).classes.size()) == c.classes);
        CHECK(check_proper(g).proper);
        CHECK(is_weakly_reversible(g.base));
    }
}

TEST_CASE("identity scheme keeps the network and maps every source to itself") {
    Network net = crn_test::load_network("net1.crn");
    std::string scheme_text;
    for (const Reaction& rx : net.reactions()) {
        scheme_text += "[group g" + std::to_string(rx.index) + "]\nreactions = " + rx.rate_label +
                       "\nshift = 0\n";
    }
    GeneralizedNetwork g = apply_scheme(net, parse_scheme(scheme_text, net));

    CHECK(g.base.complex_count() == net.complex_count());
    for (int i = 0; i < net.complex_count(); ++i)
        CHECK(g.base.complexes()[i] == net.complexes()[i]);
    for (const Reaction& rx : g.base.reactions()) {
        REQUIRE(g.kinetic[rx.source_ix].has_value());
        CHECK(*g.kinetic[rx.source_ix] == rx.source);
    }
    CHECK(check_proper(g).proper);
}

TEST_CASE("reaction vectors are preserved reaction by reaction") {
    Network net = crn_test::load_network("net3.crn");
    GeneralizedNetwork g = apply_scheme(net, crn_test::load_scheme("sch3.scheme", net));
    for (int i = 0; i < net.reaction_count(); ++i) {
        const Reaction& before = net.reactions()[i];
        const Reaction& after = g.base.reactions()[i];
        for (int s = 0; s < net.species_count(); ++s) {
            int orig = before.product.coeff(s) - before.source.coeff(s);
            int trans = after.product.coeff(s) - after.source.coeff(s);
            CHECK(orig == trans);
        }
    }
}

TEST_CASE("overlapping shifts break properness with the expected conflict node") {
    // Alternative shifts (+X11),(+X11),(+X2),(+X2) on groups 3a,3b,4a,4b send
    // both source complexes X2+X4 and X4+X11 to X2+X4+X11.
    Network net = crn_test::load_network("net1.crn");
    std::string scheme_text = crn_test::data_file("sch1.scheme");
    auto replace_shift = [&scheme_text](const std::string& header, const std::string& shift) {
        size_t at = scheme_text.find(header);
        REQUIRE(at != std::string::npos);
        size_t shift_at = scheme_text.find("shift = ", at);
        size_t eol = scheme_text.find('\n', shift_at);
        scheme_text.replace(shift_at, eol - shift_at, "shift = " + shift);
    };
    replace_shift("[group 3b]", "X11");
    replace_shift("[group 4a]", "X2");

    GeneralizedNetwork g = apply_scheme(net, parse_scheme(scheme_text, net));
    PropernessReport report = check_proper(g);
    CHECK_FALSE(report.proper);
    REQUIRE(report.conflicts.size() >= 1);
    Complex conflict_node;
    conflict_node.add(net.find_species("X2"), 1);
    conflict_node.add(net.find_species("X4"), 1);
    conflict_node.add(net.find_species("X11"), 1);
    bool found = false;
    for (const auto& c : report.conflicts)
        if (g.base.complexes()[c.node] == conflict_node) found = true;
    CHECK(found);
}

TEST_CASE("merging is idempotent: the zero scheme fixes a translated base") {
    Network net = crn_test::load_network("net2.crn");
    GeneralizedNetwork g = apply_scheme(net, crn_test::load_scheme("sch2.scheme", net));

    TranslationScheme zero;
    for (const Reaction& rx : g.base.reactions())
        zero.groups.push_back({"z" + std::to_string(rx.index), {rx.rate_label}, Complex()});
    GeneralizedNetwork again = apply_scheme(g.base, zero);

    REQUIRE(again.base.complex_count() == g.base.complex_count());
    for (int i = 0; i < g.base.complex_count(); ++i)
        CHECK(again.base.complexes()[i] == g.base.complexes()[i]);
    for (int i = 0; i < g.base.reaction_count(); ++i) {
        CHECK(again.base.reactions()[i].source_ix == g.base.reactions()[i].source_ix);
        CHECK(again.base.reactions()[i].product_ix == g.base.reactions()[i].product_ix);
    }
}

TEST_CASE("apply_scheme rejects incomplete schemes") {
    Network net = parse_network("A -> B ; k1\nB -> A ; k2");
    TranslationScheme partial;
    partial.groups.push_back({"g", {"k1"}, Complex()});
    CHECK_THROWS_AS(apply_scheme(net, partial), Error);
}
