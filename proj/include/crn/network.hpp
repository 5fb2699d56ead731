#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crn {

struct Species {
    int id = -1;
    std::string name;
};

// Formal nonnegative-integer combination of species. The empty combination is
// the zero complex. Terms are kept sorted by species id with no zero entries,
// so equality is plain member equality.
class Complex {
public:
    Complex() = default;

    static Complex single(int species, int coeff = 1);

    void add(int species, int coeff);
    int coeff(int species) const;
    bool is_zero() const { return terms_.empty(); }
    int species_count() const { return static_cast<int>(terms_.size()); }
    const std::vector<std::pair<int, int>>& terms() const { return terms_; }

    Complex operator+(const Complex& o) const;

    bool operator==(const Complex& o) const { return terms_ == o.terms_; }
    bool operator!=(const Complex& o) const { return terms_ != o.terms_; }
    bool operator<(const Complex& o) const { return terms_ < o.terms_; }

private:
    std::vector<std::pair<int, int>> terms_;
};

struct Reaction {
    Complex source;
    Complex product;
    std::string rate_label;
    int index = -1;       // position in the network's reaction list
    int source_ix = -1;   // resolved complex indices
    int product_ix = -1;
};

// A chemical reaction network: species, reactions, and the deduplicated list
// of complexes appearing on reaction sides, in first-appearance order
// (scanning reactions in list order, source before product).
class Network {
public:
    const std::vector<Species>& species() const { return species_; }
    const std::vector<Reaction>& reactions() const { return reactions_; }
    const std::vector<Complex>& complexes() const { return complexes_; }

    int species_count() const { return static_cast<int>(species_.size()); }
    int reaction_count() const { return static_cast<int>(reactions_.size()); }
    int complex_count() const { return static_cast<int>(complexes_.size()); }

    const std::string& species_name(int id) const { return species_[id].name; }
    int find_species(std::string_view name) const;
    int find_reaction(std::string_view rate_label) const;

    // Declares a species; returns its id. Throws on duplicate name.
    int add_species(const std::string& name);
    // Returns existing id or declares the species.
    int intern_species(const std::string& name);

    // Appends a reaction, interning its complexes. Throws when source equals
    // product or the rate label is already taken.
    void add_reaction(Complex source, Complex product, std::string rate_label);

    int intern_complex(const Complex& c);
    int find_complex(const Complex& c) const;  // -1 when absent

    // Full-invariant check: at least one reaction, every species used.
    void validate() const;

    std::string complex_str(const Complex& c) const;  // "X1 + 2 X2", "0"

private:
    std::vector<Species> species_;
    std::vector<Reaction> reactions_;
    std::vector<Complex> complexes_;
    std::map<std::string, int, std::less<>> species_by_name_;
    std::map<std::string, int, std::less<>> reaction_by_label_;
    std::map<Complex, int> complex_index_;
};

// One translation group: a set of reactions shifted by a common complex.
struct SchemeGroup {
    std::string name;
    std::vector<std::string> reactions;  // rate labels
    Complex shift;
};

struct TranslationScheme {
    std::vector<SchemeGroup> groups;
};

}  // namespace crn
