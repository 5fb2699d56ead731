#include "crn/network.hpp"

#include <algorithm>

#include "crn/error.hpp"

namespace crn {

Complex Complex::single(int species, int coeff) {
    Complex c;
    c.add(species, coeff);
    return c;
}

void Complex::add(int species, int coeff) {
    if (coeff == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), species,
                               [](const auto& t, int s) { return t.first < s; });
    if (it != terms_.end() && it->first == species) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
        else if (it->second < 0) throw Error("Complex: negative coefficient");
    } else {
        if (coeff < 0) throw Error("Complex: negative coefficient");
        terms_.insert(it, {species, coeff});
    }
}

int Complex::coeff(int species) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), species,
                               [](const auto& t, int s) { return t.first < s; });
    return (it != terms_.end() && it->first == species) ? it->second : 0;
}

Complex Complex::operator+(const Complex& o) const {
    Complex r = *this;
    for (const auto& [s, c] : o.terms_) r.add(s, c);
    return r;
}

int Network::find_species(std::string_view name) const {
    auto it = species_by_name_.find(name);
    return it == species_by_name_.end() ? -1 : it->second;
}

int Network::find_reaction(std::string_view rate_label) const {
    auto it = reaction_by_label_.find(rate_label);
    return it == reaction_by_label_.end() ? -1 : it->second;
}

int Network::add_species(const std::string& name) {
    if (species_by_name_.count(name)) throw Error("duplicate species name: " + name);
    int id = static_cast<int>(species_.size());
    species_.push_back({id, name});
    species_by_name_.emplace(name, id);
    return id;
}

int Network::intern_species(const std::string& name) {
    int id = find_species(name);
    return id >= 0 ? id : add_species(name);
}

int Network::find_complex(const Complex& c) const {
    auto it = complex_index_.find(c);
    return it == complex_index_.end() ? -1 : it->second;
}

int Network::intern_complex(const Complex& c) {
    auto it = complex_index_.find(c);
    if (it != complex_index_.end()) return it->second;
    int ix = static_cast<int>(complexes_.size());
    complexes_.push_back(c);
    complex_index_.emplace(c, ix);
    return ix;
}

void Network::add_reaction(Complex source, Complex product, std::string rate_label) {
    if (source == product) throw Error("reaction with identical sides: " + rate_label);
    if (reaction_by_label_.count(rate_label)) throw Error("duplicate rate label: " + rate_label);
    Reaction rx;
    rx.index = static_cast<int>(reactions_.size());
    rx.source_ix = intern_complex(source);
    rx.product_ix = intern_complex(product);
    rx.source = std::move(source);
    rx.product = std::move(product);
    rx.rate_label = std::move(rate_label);
    reaction_by_label_.emplace(rx.rate_label, rx.index);
    reactions_.push_back(std::move(rx));
}

void Network::validate() const {
    if (reactions_.empty()) throw Error("network has no reactions");
    std::vector<bool> used(species_.size(), false);
    for (const Complex& c : complexes_)
        for (const auto& [s, _] : c.terms()) used[s] = true;
    for (const Species& sp : species_)
        if (!used[sp.id]) throw Error("species never appears in a complex: " + sp.name);
}

std::string Network::complex_str(const Complex& c) const {
    if (c.is_zero()) return "0";
    std::string out;
    for (const auto& [s, coeff] : c.terms()) {
        if (!out.empty()) out += " + ";
        if (coeff != 1) out += std::to_string(coeff) + " ";
        out += species_[s].name;
    }
    return out;
}

}  // namespace crn
