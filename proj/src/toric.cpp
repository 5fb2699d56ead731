#include "crn/toric.hpp"

#include <algorithm>
#include <cctype>

#include "crn/error.hpp"

namespace crn {

PolyMatrix class_laplacian(const ClassGraph& g) {
    PolyMatrix a(g.node_count, std::vector<RatePolynomial>(g.node_count));
    for (const ClassEdge& e : g.edges) {
        RatePolynomial k = RatePolynomial::variable(e.var);
        a[e.to][e.from] = a[e.to][e.from] + k;
        a[e.from][e.from] = a[e.from][e.from] - k;
    }
    return a;
}

namespace {

bool class_strongly_connected(const ClassGraph& g) {
    if (g.node_count == 0) return false;
    std::vector<std::vector<int>> fwd(g.node_count), bwd(g.node_count);
    for (const ClassEdge& e : g.edges) {
        fwd[e.from].push_back(e.to);
        bwd[e.to].push_back(e.from);
    }
    auto reaches_all = [&](const std::vector<std::vector<int>>& adj) {
        std::vector<bool> seen(g.node_count, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == g.node_count;
    };
    return reaches_all(fwd) && reaches_all(bwd);
}

RatePolynomial principal_minor(const PolyMatrix& a, int skip) {
    const int n = static_cast<int>(a.size());
    PolyMatrix sub(n - 1, std::vector<RatePolynomial>(n - 1));
    int rr = 0;
    for (int r = 0; r < n; ++r) {
        if (r == skip) continue;
        int cc = 0;
        for (int c = 0; c < n; ++c) {
            if (c == skip) continue;
            sub[rr][cc++] = a[r][c];
        }
        ++rr;
    }
    return determinant(sub);
}

}  // namespace

std::vector<RatePolynomial> class_tree_constants(const ClassGraph& g) {
    if (!class_strongly_connected(g))
        throw Error("tree constants undefined: class is not strongly connected");
    PolyMatrix a = class_laplacian(g);
    std::vector<RatePolynomial> k(g.node_count);
    const bool negate = (g.node_count - 1) % 2 != 0;
    for (int i = 0; i < g.node_count; ++i) {
        RatePolynomial minor = principal_minor(a, i);
        k[i] = negate ? -minor : minor;
        if (!k[i].all_coefficients_positive())
            throw Error("tree constant is not a positive sum: Laplacian orientation broken");
    }
    return k;
}

std::vector<RatePolynomial> class_tree_constants_bruteforce(const ClassGraph& g, int max_nodes) {
    if (g.node_count > max_nodes)
        throw Error("class too large for spanning-tree enumeration");
    if (!class_strongly_connected(g))
        throw Error("tree constants undefined: class is not strongly connected");

    const int n = g.node_count;
    std::vector<std::vector<std::pair<int, int>>> out(n);  // node -> (to, var)
    for (const ClassEdge& e : g.edges) out[e.from].push_back({e.to, e.var});

    std::vector<RatePolynomial> k(n);
    for (int root = 0; root < n; ++root) {
        std::vector<int> others;
        for (int v = 0; v < n; ++v)
            if (v != root) others.push_back(v);

        std::vector<size_t> choice(others.size(), 0);
        while (true) {
            // successor function induced by the current choice
            std::vector<int> succ(n, -1);
            for (size_t i = 0; i < others.size(); ++i)
                succ[others[i]] = out[others[i]][choice[i]].first;

            // every non-root node must reach the root without cycling
            bool valid = true;
            std::vector<int> state(n, 0);  // 0 unseen, 1 on current path, 2 reaches root
            state[root] = 2;
            for (int v = 0; v < n; ++v) {
                if (state[v] == 2) continue;
                int u = v;
                std::vector<int> path;
                while (state[u] == 0) {
                    state[u] = 1;
                    path.push_back(u);
                    u = succ[u];
                }
                if (state[u] == 1) {  // hit the current path: cycle
                    valid = false;
                    break;
                }
                for (int w : path) state[w] = 2;
            }
            if (valid) {
                Monomial prod;
                for (size_t i = 0; i < others.size(); ++i)
                    prod = prod * Monomial::var(out[others[i]][choice[i]].second);
                k[root].add_term(prod, 1);
            }

            // next combination
            size_t pos = 0;
            while (pos < choice.size()) {
                if (++choice[pos] < out[others[pos]].size()) break;
                choice[pos] = 0;
                ++pos;
            }
            if (pos == choice.size()) break;  // includes the single-node class (one empty tree)
        }
    }
    return k;
}

ClassGraph extract_class_graph(const Network& net, const LinkagePartition& part, int class_ix,
                               std::vector<int>& nodes) {
    nodes = part.classes[class_ix];
    std::vector<int> local(net.complex_count(), -1);
    for (size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<int>(i);

    ClassGraph g;
    g.node_count = static_cast<int>(nodes.size());
    for (const Reaction& rx : net.reactions()) {
        if (part.class_of[rx.source_ix] != class_ix) continue;
        g.edges.push_back({local[rx.source_ix], local[rx.product_ix], rx.index});
    }
    return g;
}

namespace {

TreeConstants tree_constants_impl(const GeneralizedNetwork& g, bool bruteforce) {
    TreeConstants tc;
    tc.partition = linkage_classes(g.base);
    tc.by_node.resize(g.base.complex_count());
    tc.enum_of.assign(g.base.complex_count(), -1);
    for (int c = 0; c < static_cast<int>(tc.partition.classes.size()); ++c) {
        std::vector<int> nodes;
        ClassGraph cg = extract_class_graph(g.base, tc.partition, c, nodes);
        std::vector<RatePolynomial> k;
        try {
            k = bruteforce ? class_tree_constants_bruteforce(cg) : class_tree_constants(cg);
        } catch (const Error& e) {
            throw Error("linkage class " + std::to_string(c + 1) + ": " + e.what());
        }
        for (size_t i = 0; i < nodes.size(); ++i) {
            tc.by_node[nodes[i]] = std::move(k[i]);
            tc.enum_of[nodes[i]] = static_cast<int>(tc.enumeration.size());
            tc.enumeration.push_back(nodes[i]);
        }
    }
    return tc;
}

}  // namespace

TreeConstants tree_constants(const GeneralizedNetwork& g) { return tree_constants_impl(g, false); }

TreeConstants tree_constants_bruteforce(const GeneralizedNetwork& g) {
    return tree_constants_impl(g, true);
}

void require_toric_hypotheses(const GeneralizedNetwork& g) {
    std::vector<std::string> failed;
    if (!check_proper(g).proper) failed.push_back("translation is not proper");
    if (!is_weakly_reversible(g.base)) failed.push_back("translation is not weakly reversible");
    if (failed.empty()) {
        StructureReport rep = structure_report(g);
        if (rep.deficiency != 0)
            failed.push_back("structural deficiency is " + std::to_string(rep.deficiency) +
                             ", not 0");
        if (*rep.kinetic_deficiency != 0)
            failed.push_back("kinetic deficiency is " + std::to_string(*rep.kinetic_deficiency) +
                             ", not 0");
    }
    if (!failed.empty()) {
        std::string msg = "steady-state basis hypothesis violated: ";
        for (size_t i = 0; i < failed.size(); ++i) msg += (i ? "; " : "") + failed[i];
        throw Error(msg);
    }
}

std::vector<BasisBinomial> steady_state_basis(const GeneralizedNetwork& g,
                                              const TreeConstants& tc) {
    require_toric_hypotheses(g);

    std::vector<BasisBinomial> basis;
    for (int c = 0; c < static_cast<int>(tc.partition.classes.size()); ++c) {
        const std::vector<int>& nodes = tc.partition.classes[c];
        const int count = static_cast<int>(nodes.size());
        std::vector<std::pair<int, int>> pairs;  // local positions
        for (int i = 0; i + 1 < count; i += 2) pairs.emplace_back(i, i + 1);
        for (int i = 3; i < count; i += 2) pairs.emplace_back(i, 1);
        if (count % 2 == 1 && count > 1) pairs.emplace_back(count - 1, 1);

        for (auto [pi, pj] : pairs) {
            int u = nodes[pi], v = nodes[pj];
            BasisBinomial b;
            b.class_index = c;
            b.i_node = u;
            b.j_node = v;
            b.i_enum = tc.enum_of[u] + 1;
            b.j_enum = tc.enum_of[v] + 1;
            b.lhs_coeff = tc.by_node[u];
            b.rhs_coeff = tc.by_node[v];
            b.lhs_mono = *g.kinetic[v];
            b.rhs_mono = *g.kinetic[u];
            Monomial common = Monomial::gcd(b.lhs_coeff.content(), b.rhs_coeff.content());
            if (!common.is_one()) {
                b.lhs_coeff = b.lhs_coeff.divided_by_monomial(common);
                b.rhs_coeff = b.rhs_coeff.divided_by_monomial(common);
            }
            basis.push_back(std::move(b));
        }
    }
    return basis;
}

std::string concentration_monomial_str(const Complex& c, const Network& net) {
    if (c.is_zero()) return "1";
    std::string out;
    for (const auto& [s, e] : c.terms()) {
        if (!out.empty()) out += "*";
        std::string sym = net.species_name(s);
        std::transform(sym.begin(), sym.end(), sym.begin(),
                       [](unsigned char ch) { return std::tolower(ch); });
        out += sym;
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string rate_polynomial_str(const RatePolynomial& p, const Network& net) {
    return p.str([&net](int v) { return net.reactions()[v].rate_label; });
}

std::string basis_line(const BasisBinomial& b, const Network& net) {
    auto coeff_str = [&](const RatePolynomial& p) {
        std::string s = rate_polynomial_str(p, net);
        return p.term_count() > 1 ? "(" + s + ")" : s;
    };
    return coeff_str(b.lhs_coeff) + "*" + concentration_monomial_str(b.lhs_mono, net) + " - " +
           coeff_str(b.rhs_coeff) + "*" + concentration_monomial_str(b.rhs_mono, net);
}

}  // namespace crn
