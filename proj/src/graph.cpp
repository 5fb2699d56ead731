#include "crn/graph.hpp"

#include <algorithm>

#include "crn/error.hpp"
#include "crn/exact.hpp"

namespace crn {

LinkagePartition linkage_classes(const Network& net) {
    const int n = net.complex_count();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::vector<int>& p = parent;
    auto find = [&p](int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    };
    for (const Reaction& rx : net.reactions()) {
        int a = find(rx.source_ix), b = find(rx.product_ix);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }

    LinkagePartition part;
    part.class_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int root = find(i);
        if (part.class_of[root] < 0) {
            part.class_of[root] = static_cast<int>(part.classes.size());
            part.classes.emplace_back();
        }
        part.class_of[i] = part.class_of[root];
        part.classes[part.class_of[i]].push_back(i);
    }
    return part;
}

namespace {

// Iterative Tarjan; returns the SCC id of every complex.
std::vector<int> strongly_connected_components(const Network& net) {
    const int n = net.complex_count();
    std::vector<std::vector<int>> adj(n);
    for (const Reaction& rx : net.reactions()) adj[rx.source_ix].push_back(rx.product_ix);

    std::vector<int> index(n, -1), lowlink(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0, next_comp = 0;

    struct Frame {
        int v;
        size_t edge;
    };
    for (int start = 0; start < n; ++start) {
        if (index[start] >= 0) continue;
        std::vector<Frame> call{{start, 0}};
        index[start] = lowlink[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.edge < adj[f.v].size()) {
                int w = adj[f.v][f.edge++];
                if (index[w] < 0) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                if (lowlink[f.v] == index[f.v]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if (w == f.v) break;
                    }
                    ++next_comp;
                }
                int v = f.v;
                call.pop_back();
                if (!call.empty())
                    lowlink[call.back().v] = std::min(lowlink[call.back().v], lowlink[v]);
            }
        }
    }
    return comp;
}

BigMatrix reaction_vector_matrix(const Network& net) {
    BigMatrix m(net.reaction_count(), std::vector<BigInt>(net.species_count(), BigInt(0)));
    for (const Reaction& rx : net.reactions()) {
        for (const auto& [s, c] : rx.product.terms()) m[rx.index][s] = m[rx.index][s] + BigInt(c);
        for (const auto& [s, c] : rx.source.terms()) m[rx.index][s] = m[rx.index][s] - BigInt(c);
    }
    return m;
}

}  // namespace

bool is_weakly_reversible(const Network& net) {
    std::vector<int> comp = strongly_connected_components(net);
    for (const Reaction& rx : net.reactions())
        if (comp[rx.source_ix] != comp[rx.product_ix]) return false;
    return true;
}

int stoichiometric_rank(const Network& net) { return exact_rank(reaction_vector_matrix(net)); }

std::vector<std::vector<BigInt>> conservation_laws(const Network& net) {
    return integer_nullspace(reaction_vector_matrix(net));
}

StructureReport structure_report(const Network& net) {
    StructureReport rep;
    rep.species = net.species_count();
    rep.complexes = net.complex_count();
    rep.reactions = net.reaction_count();
    rep.linkage_class_count = static_cast<int>(linkage_classes(net).classes.size());
    rep.rank = stoichiometric_rank(net);
    rep.deficiency = rep.complexes - rep.linkage_class_count - rep.rank;
    if (rep.deficiency < 0) throw Error("negative deficiency: structural invariant violated");
    rep.weakly_reversible = is_weakly_reversible(net);
    return rep;
}

StructureReport structure_report(const GeneralizedNetwork& g) {
    StructureReport rep = structure_report(g.base);
    for (int u = 0; u < g.base.complex_count(); ++u) {
        if (!g.kinetic[u].has_value())
            throw Error("kinetic deficiency undefined: node '" +
                        g.base.complex_str(g.base.complexes()[u]) +
                        "' has no kinetic complex (never a reaction source)");
    }
    BigMatrix m(g.base.reaction_count(), std::vector<BigInt>(g.base.species_count(), BigInt(0)));
    for (const Reaction& rx : g.base.reactions()) {
        const Complex& ksrc = *g.kinetic[rx.source_ix];
        const Complex& kprod = *g.kinetic[rx.product_ix];
        for (const auto& [s, c] : kprod.terms()) m[rx.index][s] = m[rx.index][s] + BigInt(c);
        for (const auto& [s, c] : ksrc.terms()) m[rx.index][s] = m[rx.index][s] - BigInt(c);
    }
    rep.kinetic_rank = exact_rank(std::move(m));
    rep.kinetic_deficiency = rep.complexes - rep.linkage_class_count - *rep.kinetic_rank;
    return rep;
}

}  // namespace crn
