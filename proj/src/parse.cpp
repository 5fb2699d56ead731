#include "crn/parse.hpp"

#include <cctype>
#include <functional>
#include <limits>
#include <set>

#include "crn/error.hpp"

namespace crn {

namespace {

constexpr long long kMaxCoeff = 1000000000;  // overflow guard for stoichiometric coefficients

struct Cursor {
    std::string_view s;
    size_t pos = 0;
    int line;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    bool eat(std::string_view tok) {
        skip_ws();
        if (s.substr(pos, tok.size()) == tok) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string parse_ident(Cursor& c) {
    c.skip_ws();
    if (c.pos >= c.s.size() || !ident_start(c.s[c.pos]))
        throw ParseError("expected identifier", c.line);
    size_t start = c.pos;
    while (c.pos < c.s.size() && ident_char(c.s[c.pos])) ++c.pos;
    return std::string(c.s.substr(start, c.pos - start));
}

long long parse_integer(Cursor& c) {
    c.skip_ws();
    size_t start = c.pos;
    long long v = 0;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
        v = v * 10 + (c.s[c.pos] - '0');
        if (v > kMaxCoeff) throw ParseError("stoichiometric coefficient overflow", c.line);
        ++c.pos;
    }
    if (c.pos == start) throw ParseError("expected integer", c.line);
    return v;
}

// complex := term ("+" term)* | "0" ;  term := [integer] identifier
Complex parse_complex(Cursor& c, const std::function<int(const std::string&)>& species_id) {
    c.skip_ws();
    if (c.peek() == '0') {
        size_t save = c.pos;
        ++c.pos;
        // lone "0" only; "0" followed by ident chars is a syntax error anyway
        if (c.pos < c.s.size() && ident_char(c.s[c.pos]))
            throw ParseError("species names cannot start with a digit", c.line);
        c.skip_ws();
        if (c.peek() == '+') {
            c.pos = save;
            throw ParseError("zero complex cannot carry terms", c.line);
        }
        return Complex();
    }
    Complex result;
    while (true) {
        long long coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) coeff = parse_integer(c);
        if (coeff == 0) throw ParseError("zero stoichiometric coefficient", c.line);
        std::string name = parse_ident(c);
        int id = species_id(name);
        if (result.coeff(id) + coeff > kMaxCoeff)
            throw ParseError("stoichiometric coefficient overflow", c.line);
        result.add(id, static_cast<int>(coeff));
        if (!c.eat("+")) break;
    }
    return result;
}

std::string_view strip_comment(std::string_view line) {
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    return line;
}

std::string_view trim(std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
}

// Splits text into (line_number, stripped content) pairs, skipping blanks.
std::vector<std::pair<int, std::string_view>> significant_lines(std::string_view text) {
    std::vector<std::pair<int, std::string_view>> out;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        ++line_no;
        std::string_view line = trim(strip_comment(text.substr(pos, eol - pos)));
        if (!line.empty()) out.emplace_back(line_no, line);
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    return out;
}

}  // namespace

Network parse_network(std::string_view text) {
    Network net;
    bool saw_reaction = false;
    for (auto [line_no, line] : significant_lines(text)) {
        Cursor c{line, 0, line_no};

        // optional species ordering header
        if (line.substr(0, 7) == "species" &&
            (line.size() == 7 || !ident_char(line[7]))) {
            c.pos = 7;
            while (!c.done()) {
                c.eat(",");
                if (c.done()) break;
                std::string name = parse_ident(c);
                if (net.find_species(name) >= 0)
                    throw ParseError("duplicate species name: " + name, line_no);
                net.add_species(name);
            }
            continue;
        }

        size_t semi = line.find(';');
        if (semi == std::string_view::npos)
            throw ParseError("expected ';' before rate labels", line_no);

        Cursor body{line.substr(0, semi), 0, line_no};
        auto intern = [&net](const std::string& n) { return net.intern_species(n); };
        Complex lhs = parse_complex(body, intern);
        bool reversible;
        if (body.eat("<->")) {
            reversible = true;
        } else if (body.eat("->")) {
            reversible = false;
        } else {
            throw ParseError("expected '->' or '<->'", line_no);
        }
        Complex rhs = parse_complex(body, intern);
        if (!body.done()) throw ParseError("trailing input after reaction", line_no);

        Cursor labels{line.substr(semi + 1), 0, line_no};
        std::string fwd = parse_ident(labels);
        std::string bwd;
        if (labels.eat(",")) bwd = parse_ident(labels);
        if (!labels.done()) throw ParseError("trailing input after rate labels", line_no);
        if (reversible && bwd.empty())
            throw ParseError("reversible reaction needs two labels", line_no);
        if (!reversible && !bwd.empty())
            throw ParseError("irreversible reaction takes one label", line_no);

        if (lhs == rhs) throw ParseError("reaction with identical sides", line_no);
        try {
            net.add_reaction(lhs, rhs, fwd);
            if (reversible) net.add_reaction(rhs, lhs, bwd);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), line_no);
        }
        saw_reaction = true;
    }
    if (!saw_reaction) throw ParseError("no reactions", 0);
    try {
        net.validate();
    } catch (const Error& e) {
        throw ParseError(e.what(), 0);
    }
    return net;
}

TranslationScheme parse_scheme(std::string_view text, const Network& net) {
    TranslationScheme scheme;
    std::set<std::string> seen_labels;
    SchemeGroup* group = nullptr;
    bool shift_set = false;

    auto close_group = [&](int line_no) {
        if (group && group->reactions.empty())
            throw ParseError("group '" + group->name + "' lists no reactions", line_no);
    };

    for (auto [line_no, line] : significant_lines(text)) {
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError("unterminated group header", line_no);
            std::string_view inner = trim(line.substr(1, line.size() - 2));
            if (inner.substr(0, 5) != "group")
                throw ParseError("expected '[group <name>]'", line_no);
            std::string name(trim(inner.substr(5)));
            if (name.empty()) throw ParseError("group needs a name", line_no);
            close_group(line_no);
            scheme.groups.push_back({name, {}, Complex()});
            group = &scheme.groups.back();
            shift_set = false;
            continue;
        }
        if (!group) throw ParseError("expected '[group <name>]' header", line_no);

        size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no);
        std::string_view key = trim(line.substr(0, eq));
        std::string_view value = trim(line.substr(eq + 1));
        Cursor c{value, 0, line_no};

        if (key == "reactions") {
            while (!c.done()) {
                std::string label = parse_ident(c);
                if (net.find_reaction(label) < 0)
                    throw ParseError("unknown reaction label: " + label, line_no);
                if (!seen_labels.insert(label).second)
                    throw ParseError("reaction label in two groups: " + label, line_no);
                group->reactions.push_back(label);
                if (!c.eat(",")) break;
            }
            if (!c.done()) throw ParseError("trailing input after reaction list", line_no);
        } else if (key == "shift") {
            if (shift_set) throw ParseError("duplicate shift for group", line_no);
            group->shift = parse_complex(c, [&](const std::string& n) {
                int id = net.find_species(n);
                if (id < 0) throw ParseError("unknown species in shift: " + n, line_no);
                return id;
            });
            if (!c.done()) throw ParseError("trailing input after shift", line_no);
            shift_set = true;
        } else {
            throw ParseError("unknown key: " + std::string(key), line_no);
        }
    }
    close_group(0);
    if (scheme.groups.empty()) throw ParseError("scheme defines no groups", 0);

    for (const Reaction& rx : net.reactions())
        if (!seen_labels.count(rx.rate_label))
            throw ParseError("reaction label missing from all groups: " + rx.rate_label, 0);
    return scheme;
}

std::string serialize_network(const Network& net) {
    std::string out = "species";
    for (const Species& sp : net.species()) out += " " + sp.name;
    out += "\n";
    for (const Reaction& rx : net.reactions()) {
        out += net.complex_str(rx.source) + " -> " + net.complex_str(rx.product) + " ; " +
               rx.rate_label + "\n";
    }
    return out;
}

}  // namespace crn
