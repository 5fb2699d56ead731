#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crn/graph.hpp"
#include "crn/polynomial.hpp"
#include "crn/translate.hpp"

namespace crn {

// One linkage class viewed as a labeled directed multigraph. Node ids are
// local (0..node_count-1); `var` is the polynomial variable of the edge's
// rate constant (the reaction index).
struct ClassEdge {
    int from = -1;
    int to = -1;
    int var = -1;
};

struct ClassGraph {
    int node_count = 0;
    std::vector<ClassEdge> edges;
};

// Column-based Laplacian of the class: entry (i,j), i != j, sums the labels
// of edges j -> i; the diagonal (j,j) holds minus the total outflow of j.
// The tree-constant vector spans its kernel.
PolyMatrix class_laplacian(const ClassGraph& g);

// Tree constant of each node: the sum over directed spanning trees oriented
// toward the node of the product of edge labels, computed as the signed
// principal minor of the Laplacian. Throws when the class is not strongly
// connected (some constant would vanish).
std::vector<RatePolynomial> class_tree_constants(const ClassGraph& g);

// Independent route: explicit enumeration of all rooted spanning trees.
// Refuses classes with more than `max_nodes` nodes.
std::vector<RatePolynomial> class_tree_constants_bruteforce(const ClassGraph& g, int max_nodes = 8);

// Tree constants of a whole translated network, indexed by translated
// complex. `enumeration` lists node indices grouped by linkage class
// (classes by smallest node, ascending inside), matching the order in which
// basis binomials are emitted; `enum_of` is its inverse.
struct TreeConstants {
    LinkagePartition partition;
    std::vector<RatePolynomial> by_node;
    std::vector<int> enumeration;
    std::vector<int> enum_of;
};

TreeConstants tree_constants(const GeneralizedNetwork& g);
TreeConstants tree_constants_bruteforce(const GeneralizedNetwork& g);

// Extracts the labeled digraph of one linkage class; `nodes` receives the
// translated complex index of each local node, ascending.
ClassGraph extract_class_graph(const Network& net, const LinkagePartition& part, int class_ix,
                               std::vector<int>& nodes);

// One element of the binomial steady-state basis:
//   lhs_coeff * x^lhs_mono - rhs_coeff * x^rhs_mono
// built from a node pair (i, j) as K_i * x^(kinetic_j) - K_j * x^(kinetic_i)
// and simplified by the greatest common monomial factor of both coefficient
// polynomials.
struct BasisBinomial {
    RatePolynomial lhs_coeff;
    RatePolynomial rhs_coeff;
    Complex lhs_mono;
    Complex rhs_mono;
    int class_index = -1;
    int i_node = -1;  // translated complex indices
    int j_node = -1;
    int i_enum = -1;  // 1-based positions in the kinetic-complex enumeration
    int j_enum = -1;
};

// Throws unless the translation is proper, weakly reversible, and of
// structural and kinetic deficiency zero; the message names every failed
// hypothesis.
void require_toric_hypotheses(const GeneralizedNetwork& g);

// Emits node_count-1 binomials per linkage class along a fixed spanning tree
// of node pairs: consecutive pairs (1,2), (3,4), ... first, then cross pairs
// tying each later pair (and any leftover node) back to node 2. Calls
// require_toric_hypotheses first.
std::vector<BasisBinomial> steady_state_basis(const GeneralizedNetwork& g,
                                              const TreeConstants& tc);

// "(k2 + k3)*x13 - k1*x1*x9" style rendering. Rate symbols come from the
// network's rate labels; concentration symbols are lowercased species names.
std::string basis_line(const BasisBinomial& b, const Network& net);
std::string concentration_monomial_str(const Complex& c, const Network& net);
std::string rate_polynomial_str(const RatePolynomial& p, const Network& net);

}  // namespace crn
