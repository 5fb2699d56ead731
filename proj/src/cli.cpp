#include "crn/cli.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "crn/error.hpp"
#include "crn/graph.hpp"
#include "crn/numeric.hpp"
#include "crn/parse.hpp"
#include "crn/toric.hpp"
#include "crn/translate.hpp"

namespace crn {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json complex_json(const Complex& c, const Network& net) {
    json out = json::object();
    for (const auto& [s, e] : c.terms()) out[net.species_name(s)] = e;
    return out;
}

json polynomial_json(const RatePolynomial& p, const Network& net) {
    json terms = json::array();
    for (const auto& [m, coeff] : p.terms()) {
        json vars = json::object();
        for (const auto& [v, e] : m.factors()) vars[net.reactions()[v].rate_label] = e;
        terms.push_back({{"coeff", coeff}, {"vars", vars}});
    }
    return terms;
}

json structure_json(const StructureReport& rep) {
    json out{{"species", rep.species},
             {"complexes", rep.complexes},
             {"reactions", rep.reactions},
             {"linkage_classes", rep.linkage_class_count},
             {"rank", rep.rank},
             {"deficiency", rep.deficiency},
             {"weakly_reversible", rep.weakly_reversible}};
    if (rep.kinetic_rank) {
        out["kinetic_rank"] = *rep.kinetic_rank;
        out["kinetic_deficiency"] = *rep.kinetic_deficiency;
    }
    return out;
}

void structure_text(std::ostringstream& out, const StructureReport& rep) {
    out << "species (m):         " << rep.species << "\n"
        << "complexes (n):       " << rep.complexes << "\n"
        << "reactions (r):       " << rep.reactions << "\n"
        << "linkage classes (l): " << rep.linkage_class_count << "\n"
        << "rank (s):            " << rep.rank << "\n"
        << "deficiency:          " << rep.deficiency << "\n"
        << "weakly reversible:   " << (rep.weakly_reversible ? "yes" : "no") << "\n";
    if (rep.kinetic_rank) {
        out << "kinetic rank (sK):   " << *rep.kinetic_rank << "\n"
            << "kinetic deficiency:  " << *rep.kinetic_deficiency << "\n";
    }
}

struct Inputs {
    Network net;
    TranslationScheme scheme;
    bool has_scheme = false;
};

Inputs load(const RunConfig& cfg, bool scheme_required) {
    Inputs in;
    in.net = parse_network(read_file(cfg.network_path));
    if (!cfg.scheme_path.empty()) {
        in.scheme = parse_scheme(read_file(cfg.scheme_path), in.net);
        in.has_scheme = true;
    } else if (scheme_required) {
        throw ParseError("this command requires a scheme file", 0);
    }
    return in;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

RunResult cmd_analyze(const RunConfig& cfg) {
    Inputs in = load(cfg, false);
    StructureReport base = structure_report(in.net);

    json j{{"command", "analyze"}, {"network", cfg.network_path}, {"structure", structure_json(base)}};
    std::ostringstream text;
    text << "network: " << cfg.network_path << "\n";
    structure_text(text, base);

    if (in.has_scheme) {
        GeneralizedNetwork g = apply_scheme(in.net, in.scheme);
        PropernessReport prop = check_proper(g);
        StructureReport trep;
        bool kinetic_defined = true;
        try {
            trep = structure_report(g);
        } catch (const Error&) {
            trep = structure_report(g.base);
            kinetic_defined = false;
        }
        json tj = structure_json(trep);
        tj["proper"] = prop.proper;
        if (!kinetic_defined) tj["kinetic_deficiency"] = nullptr;
        j["scheme"] = cfg.scheme_path;
        j["translation"] = tj;

        text << "\ntranslation: " << cfg.scheme_path << "\n";
        structure_text(text, trep);
        if (!kinetic_defined) text << "kinetic deficiency:  undefined\n";
        text << "proper:              " << (prop.proper ? "yes" : "no") << "\n";
    }

    RunResult res;
    res.output = cfg.format == RunConfig::Format::json ? j.dump(2) + "\n" : text.str();
    return res;
}

RunResult cmd_translate(const RunConfig& cfg) {
    Inputs in = load(cfg, true);
    GeneralizedNetwork g = apply_scheme(in.net, in.scheme);
    PropernessReport prop = check_proper(g);
    LinkagePartition part = linkage_classes(g.base);

    json nodes = json::array();
    for (int u = 0; u < g.base.complex_count(); ++u) {
        json node{{"index", u},
                  {"complex", complex_json(g.base.complexes()[u], g.base)},
                  {"class", part.class_of[u]}};
        node["kinetic"] =
            g.kinetic[u] ? complex_json(*g.kinetic[u], g.base) : json(nullptr);
        nodes.push_back(node);
    }
    json conflicts = json::array();
    for (const auto& c : prop.conflicts) {
        json sources = json::array();
        for (int ix : c.origin_sources)
            sources.push_back(g.original.complex_str(g.original.complexes()[ix]));
        conflicts.push_back({{"node", g.base.complex_str(g.base.complexes()[c.node])},
                             {"original_sources", sources}});
    }
    json j{{"command", "translate"},
           {"network", cfg.network_path},
           {"scheme", cfg.scheme_path},
           {"proper", prop.proper},
           {"conflicts", conflicts},
           {"network_dsl", serialize_network(g.base)},
           {"nodes", nodes}};

    std::ostringstream text;
    text << serialize_network(g.base) << "\n";
    for (int u = 0; u < g.base.complex_count(); ++u) {
        text << "node " << u << " [class " << part.class_of[u]
             << "]: " << g.base.complex_str(g.base.complexes()[u]) << "  ~  kinetic: "
             << (g.kinetic[u] ? g.base.complex_str(*g.kinetic[u]) : std::string("(none)")) << "\n";
    }
    text << "proper: " << (prop.proper ? "yes" : "no") << "\n";
    for (const auto& c : prop.conflicts) {
        text << "conflict at node " << g.base.complex_str(g.base.complexes()[c.node]) << ":";
        for (int ix : c.origin_sources)
            text << " " << g.original.complex_str(g.original.complexes()[ix]);
        text << "\n";
    }

    RunResult res;
    res.exit_code = prop.proper ? 0 : 1;
    res.output = cfg.format == RunConfig::Format::json ? j.dump(2) + "\n" : text.str();
    return res;
}

RunResult cmd_basis(const RunConfig& cfg) {
    Inputs in = load(cfg, true);
    GeneralizedNetwork g = apply_scheme(in.net, in.scheme);
    require_toric_hypotheses(g);
    TreeConstants tc = tree_constants(g);
    std::vector<BasisBinomial> basis = steady_state_basis(g, tc);

    json items = json::array();
    std::ostringstream text;
    for (const BasisBinomial& b : basis) {
        std::string line = basis_line(b, g.base);
        items.push_back({{"class", b.class_index},
                         {"pair", {b.i_enum, b.j_enum}},
                         {"lhs", {{"coeff", polynomial_json(b.lhs_coeff, g.base)},
                                  {"monomial", complex_json(b.lhs_mono, g.base)}}},
                         {"rhs", {{"coeff", polynomial_json(b.rhs_coeff, g.base)},
                                  {"monomial", complex_json(b.rhs_mono, g.base)}}},
                         {"text", line}});
        text << line << "\n";
    }
    json j{{"command", "basis"},
           {"network", cfg.network_path},
           {"scheme", cfg.scheme_path},
           {"count", basis.size()},
           {"binomials", items}};

    RunResult res;
    res.output = cfg.format == RunConfig::Format::json ? j.dump(2) + "\n" : text.str();
    return res;
}

RunResult cmd_verify(const RunConfig& cfg) {
    Inputs in = load(cfg, true);
    GeneralizedNetwork g = apply_scheme(in.net, in.scheme);
    require_toric_hypotheses(g);
    TreeConstants tc = tree_constants(g);
    std::vector<BasisBinomial> basis = steady_state_basis(g, tc);
    VerificationReport rep = verify_basis(in.net, g, basis, cfg.trials, cfg.tol, cfg.seed);

    json per_trial = json::array();
    for (const TrialResult& t : rep.per_trial) {
        per_trial.push_back({{"converged", t.converged},
                             {"residual_ode", t.residual_ode},
                             {"residual_basis_max", t.residual_basis_max}});
    }
    json j{{"command", "verify"},
           {"network", cfg.network_path},
           {"scheme", cfg.scheme_path},
           {"trials", rep.trials},
           {"seed", rep.seed},
           {"tolerances",
            {{"basis", rep.tol}, {"residual_floor", rep.residual_floor},
             {"min_converged", rep.min_converged}}},
           {"per_trial", per_trial},
           {"converged_count", rep.converged_count},
           {"pass", rep.pass}};
    if (!rep.note.empty()) j["note"] = rep.note;

    std::ostringstream text;
    text << "trials: " << rep.trials << "  seed: " << rep.seed << "  tol: " << fmt_double(rep.tol)
         << "\n";
    for (int i = 0; i < static_cast<int>(rep.per_trial.size()); ++i) {
        const TrialResult& t = rep.per_trial[i];
        text << "trial " << i << ": "
             << (t.converged ? "converged, basis residual " + fmt_double(t.residual_basis_max)
                             : "inconclusive")
             << "\n";
    }
    text << "converged: " << rep.converged_count << "/" << rep.trials << "\n";
    if (!rep.note.empty()) text << "note: " << rep.note << "\n";
    text << (rep.pass ? "PASS" : "FAIL") << "\n";

    RunResult res;
    res.exit_code = rep.pass ? 0 : 1;
    res.output = cfg.format == RunConfig::Format::json ? j.dump(2) + "\n" : text.str();
    return res;
}

RunResult cmd_oracle(const RunConfig& cfg) {
    Inputs in = load(cfg, true);
    GeneralizedNetwork g = apply_scheme(in.net, in.scheme);
    TreeConstants sym = tree_constants(g);
    TreeConstants brute = tree_constants_bruteforce(g);

    bool all_match = true;
    json classes = json::array();
    std::ostringstream text;
    for (int c = 0; c < static_cast<int>(sym.partition.classes.size()); ++c) {
        bool match = true;
        for (int node : sym.partition.classes[c])
            if (sym.by_node[node] != brute.by_node[node]) match = false;
        all_match = all_match && match;
        classes.push_back({{"class", c},
                           {"nodes", sym.partition.classes[c].size()},
                           {"match", match}});
        text << "class " << c << " (" << sym.partition.classes[c].size() << " nodes): "
             << (match ? "match" : "MISMATCH") << "\n";
    }
    json j{{"command", "oracle"},
           {"network", cfg.network_path},
           {"scheme", cfg.scheme_path},
           {"classes", classes},
           {"all_match", all_match}};
    text << (all_match ? "PASS" : "FAIL") << "\n";

    RunResult res;
    res.exit_code = all_match ? 0 : 1;
    res.output = cfg.format == RunConfig::Format::json ? j.dump(2) + "\n" : text.str();
    return res;
}

}  // namespace

RunResult run(const RunConfig& config) {
    try {
        switch (config.command) {
            case RunConfig::Command::analyze: return cmd_analyze(config);
            case RunConfig::Command::translate: return cmd_translate(config);
            case RunConfig::Command::basis: return cmd_basis(config);
            case RunConfig::Command::verify: return cmd_verify(config);
            case RunConfig::Command::oracle: return cmd_oracle(config);
        }
        return {2, "error: unknown command\n"};
    } catch (const ParseError& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    } catch (const Error& e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace crn
