#include "crn/translate.hpp"

#include <algorithm>
#include <map>

#include "crn/error.hpp"

namespace crn {

GeneralizedNetwork apply_scheme(const Network& net, const TranslationScheme& scheme) {
    // reaction index -> shift complex, checking exact cover
    std::vector<const Complex*> shift_of(net.reaction_count(), nullptr);
    for (const SchemeGroup& grp : scheme.groups) {
        for (const std::string& label : grp.reactions) {
            int ix = net.find_reaction(label);
            if (ix < 0) throw Error("scheme names unknown reaction label: " + label);
            if (shift_of[ix]) throw Error("reaction label in two groups: " + label);
            shift_of[ix] = &grp.shift;
        }
    }
    for (const Reaction& rx : net.reactions())
        if (!shift_of[rx.index])
            throw Error("scheme does not cover reaction: " + rx.rate_label);

    GeneralizedNetwork g;
    g.original = net;
    for (const Species& sp : net.species()) g.base.add_species(sp.name);

    for (const Reaction& rx : net.reactions()) {
        const Complex& t = *shift_of[rx.index];
        g.base.add_reaction(rx.source + t, rx.product + t, rx.rate_label);
    }

    g.origin.resize(g.base.complex_count());
    g.kinetic.resize(g.base.complex_count());
    for (const Reaction& rx : net.reactions()) {
        int node = g.base.reactions()[rx.index].source_ix;
        auto& srcs = g.origin[node];
        if (std::find(srcs.begin(), srcs.end(), rx.source_ix) == srcs.end())
            srcs.push_back(rx.source_ix);
    }
    for (int u = 0; u < g.base.complex_count(); ++u) {
        auto& srcs = g.origin[u];
        std::sort(srcs.begin(), srcs.end());
        if (!srcs.empty()) g.kinetic[u] = net.complexes()[srcs.front()];
    }
    return g;
}

PropernessReport check_proper(const GeneralizedNetwork& g) {
    PropernessReport report;
    for (int u = 0; u < g.base.complex_count(); ++u) {
        if (g.origin[u].size() > 1) report.conflicts.push_back({u, g.origin[u]});
    }
    report.proper = report.conflicts.empty();
    return report;
}

}  // namespace crn
