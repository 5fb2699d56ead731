#pragma once

#include <optional>
#include <vector>

#include "crn/network.hpp"

namespace crn {

// Result of applying a translation scheme. `base` is the translated network:
// every reaction's source and product shifted by its group's complex,
// identical translated complexes merged into one node, rate labels kept.
//
// `origin[u]` lists the distinct pre-translation source complexes (indices
// into `original.complexes()`) of the reactions whose translated source is
// node u; empty for nodes that are never sources. `kinetic[u]` is the
// pre-translation source complex attached to node u, well defined exactly
// when the translation is proper (it is set to the smallest-index origin
// otherwise, and check_proper reports the conflict).
struct GeneralizedNetwork {
    Network original;
    Network base;
    std::vector<std::optional<Complex>> kinetic;  // by translated complex index
    std::vector<std::vector<int>> origin;         // sorted original complex indices
};

struct PropernessConflict {
    int node = -1;                   // translated complex index
    std::vector<int> origin_sources; // >= 2 distinct original complex indices
};

struct PropernessReport {
    bool proper = false;
    std::vector<PropernessConflict> conflicts;
};

// Shifts every reaction by its group's complex and merges repeated translated
// complexes. Reaction vectors are preserved reaction by reaction (the shift
// cancels in product - source). Throws when the scheme does not cover every
// reaction exactly once.
GeneralizedNetwork apply_scheme(const Network& net, const TranslationScheme& scheme);

PropernessReport check_proper(const GeneralizedNetwork& g);

}  // namespace crn
