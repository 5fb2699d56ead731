#include <doctest.h>

#include <algorithm>
#include <random>

#include "crn/graph.hpp"
#include "crn/parse.hpp"
#include "crn/translate.hpp"
#include "test_data.hpp"

using namespace crn;

TEST_CASE("linkage classes") {
    SUBCASE("single reaction") {
        Network net = parse_network("A -> B ; k1");
        LinkagePartition part = linkage_classes(net);
        REQUIRE(part.classes.size() == 1);
        CHECK(part.classes[0] == std::vector<int>{0, 1});
    }

    SUBCASE("net1 has six pathways") {
        Network net = crn_test::load_network("net1.crn");
        CHECK(linkage_classes(net).classes.size() == 6);
    }

    SUBCASE("translated net1 has five classes of four nodes") {
        Network net = crn_test::load_network("net1.crn");
        GeneralizedNetwork g = apply_scheme(net, crn_test::load_scheme("sch1.scheme", net));
        LinkagePartition part = linkage_classes(g.base);
        REQUIRE(part.classes.size() == 5);
        for (const auto& cls : part.classes) CHECK(cls.size() == 4);
    }
}

TEST_CASE("weak reversibility") {
    CHECK(is_weakly_reversible(parse_network("A <-> B ; k1, k2")));
    CHECK_FALSE(is_weakly_reversible(parse_network("A -> B ; k1")));
    CHECK(is_weakly_reversible(parse_network("A -> B ; k1\nB -> C ; k2\nC -> A ; k3")));

    Network net1 = crn_test::load_network("net1.crn");
    CHECK_FALSE(is_weakly_reversible(net1));
    GeneralizedNetwork g = apply_scheme(net1, crn_test::load_scheme("sch1.scheme", net1));
    CHECK(is_weakly_reversible(g.base));
}

TEST_CASE("stoichiometric rank") {
    CHECK(stoichiometric_rank(parse_network("A <-> B ; k1, k2")) == 1);

    Network net1 = crn_test::load_network("net1.crn");
    CHECK(stoichiometric_rank(net1) == 15);
    // independent route: 22 species minus 7 conservation laws
    CHECK(conservation_laws(net1).size() == 7);

    // translation preserves reaction vectors, hence the rank
    GeneralizedNetwork g = apply_scheme(net1, crn_test::load_scheme("sch1.scheme", net1));
    CHECK(stoichiometric_rank(g.base) == 15);
}

TEST_CASE("rank is invariant under reaction order and species relabeling") {
    std::mt19937_64 rng(5);
    Network net = crn_test::load_network("net2.crn");
    int base_rank = stoichiometric_rank(net);

    std::vector<int> order(net.reaction_count());
    for (int i = 0; i < net.reaction_count(); ++i) order[i] = i;
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<int> relabel(net.species_count());
        for (int i = 0; i < net.species_count(); ++i) relabel[i] = i;
        std::shuffle(relabel.begin(), relabel.end(), rng);

        Network shuffled;
        for (int s = 0; s < net.species_count(); ++s)
            shuffled.add_species("S" + std::to_string(s));
        auto remap = [&](const Complex& c) {
            Complex out;
            for (const auto& [s, e] : c.terms()) out.add(relabel[s], e);
            return out;
        };
        for (int ix : order) {
            const Reaction& rx = net.reactions()[ix];
            shuffled.add_reaction(remap(rx.source), remap(rx.product), rx.rate_label);
        }
        CHECK(stoichiometric_rank(shuffled) == base_rank);
    }
}

TEST_CASE("deficiency reports") {
    SUBCASE("two-complex reversible pair") {
        StructureReport rep = structure_report(parse_network("A <-> B ; k1, k2"));
        CHECK(rep.complexes == 2);
        CHECK(rep.linkage_class_count == 1);
        CHECK(rep.rank == 1);
        CHECK(rep.deficiency == 0);
    }

    SUBCASE("net1 original") {
        StructureReport rep = structure_report(crn_test::load_network("net1.crn"));
        CHECK(rep.species == 22);
        CHECK(rep.complexes == 26);
        CHECK(rep.linkage_class_count == 6);
        CHECK(rep.rank == 15);
        CHECK(rep.deficiency == 5);
        CHECK_FALSE(rep.weakly_reversible);
    }

    SUBCASE("translated net1 has both deficiencies zero") {
        Network net = crn_test::load_network("net1.crn");
        GeneralizedNetwork g = apply_scheme(net, crn_test::load_scheme("sch1.scheme", net));
        StructureReport rep = structure_report(g);
        CHECK(rep.complexes == 20);
        CHECK(rep.linkage_class_count == 5);
        CHECK(rep.deficiency == 0);
        REQUIRE(rep.kinetic_rank.has_value());
        CHECK(*rep.kinetic_deficiency == 0);
        CHECK(rep.weakly_reversible);
    }
}

TEST_CASE("reaction vectors are preserved by any scheme (multiset equality)") {
    Network net = crn_test::load_network("net1.crn");
    TranslationScheme scheme = crn_test::load_scheme("sch1.scheme", net);
    GeneralizedNetwork g = apply_scheme(net, scheme);

    auto vec_of = [](const Network& n, const Reaction& rx) {
        std::vector<int> v(n.species_count(), 0);
        for (const auto& [s, c] : rx.product.terms()) v[s] += c;
        for (const auto& [s, c] : rx.source.terms()) v[s] -= c;
        return v;
    };
    std::vector<std::vector<int>> orig, trans;
    for (const Reaction& rx : net.reactions()) orig.push_back(vec_of(net, rx));
    for (const Reaction& rx : g.base.reactions()) trans.push_back(vec_of(g.base, rx));
    // stronger than multiset equality: reaction-by-reaction identity
    CHECK(orig == trans);
}

TEST_CASE("conservation laws annihilate the dynamics symbolically") {
    Network net = crn_test::load_network("net3.crn");
    auto laws = conservation_laws(net);
    CHECK(static_cast<int>(laws.size()) == net.species_count() - stoichiometric_rank(net));
    for (const auto& law : laws) {
        for (const Reaction& rx : net.reactions()) {
            BigInt dot(0);
            for (const auto& [s, c] : rx.product.terms()) dot = dot + law[s] * BigInt(c);
            for (const auto& [s, c] : rx.source.terms()) dot = dot - law[s] * BigInt(c);
            CHECK(dot.is_zero());
        }
    }
}

TEST_CASE("deficiency is nonnegative on random small networks") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        Network net;
        int m = 2 + static_cast<int>(rng() % 4);
        for (int s = 0; s < m; ++s) net.add_species("S" + std::to_string(s));
        int r = 1 + static_cast<int>(rng() % 6);
        int added = 0;
        for (int i = 0; i < r; ++i) {
            Complex src, prod;
            for (int s = 0; s < m; ++s) {
                src.add(s, static_cast<int>(rng() % 3) % 2);
                prod.add(s, static_cast<int>(rng() % 3) % 2);
            }
            if (src == prod) continue;
            net.add_reaction(src, prod, "k" + std::to_string(i));
            ++added;
        }
        if (added == 0) continue;
        StructureReport rep = structure_report(net);  // throws if deficiency < 0
        CHECK(rep.deficiency >= 0);
    }
}
