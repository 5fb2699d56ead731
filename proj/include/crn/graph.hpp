#pragma once

#include <optional>
#include <vector>

#include "crn/bigint.hpp"
#include "crn/network.hpp"
#include "crn/translate.hpp"

namespace crn {

// Partition of complex indices into connected components of the undirected
// reaction graph. Classes are ordered by their smallest complex index; within
// a class, indices are ascending.
struct LinkagePartition {
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;  // complex index -> class index
};

LinkagePartition linkage_classes(const Network& net);

// True iff every linkage class is strongly connected in the directed graph.
bool is_weakly_reversible(const Network& net);

// Rank over the rationals of the reaction-vector matrix, computed exactly.
int stoichiometric_rank(const Network& net);

// Primitive integer basis of the left null space of the stoichiometric
// matrix: vectors w with w . rhs(x) == 0 identically.
std::vector<std::vector<BigInt>> conservation_laws(const Network& net);

struct StructureReport {
    int species = 0;
    int complexes = 0;
    int reactions = 0;
    int linkage_class_count = 0;
    int rank = 0;
    int deficiency = 0;
    bool weakly_reversible = false;
    std::optional<int> kinetic_rank;        // generalized networks only
    std::optional<int> kinetic_deficiency;
};

StructureReport structure_report(const Network& net);

// Adds the kinetic-order rank and kinetic deficiency, computed from the
// differences of kinetic complexes across reactions. Throws when some node
// has no kinetic complex (the translation is not weakly reversible), since
// the kinetic deficiency is undefined in that case.
StructureReport structure_report(const GeneralizedNetwork& g);

}  // namespace crn
