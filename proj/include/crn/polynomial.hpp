#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "crn/bigint.hpp"

namespace crn {

// Power product of rate-constant symbols. Variables are small integer ids
// (reaction indices); factors are sorted by variable with positive exponents.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(int v, int exp = 1);

    bool is_one() const { return factors_.empty(); }
    int degree() const;
    int exponent(int v) const;
    const std::vector<std::pair<int, int>>& factors() const { return factors_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;         // this | o
    Monomial divided_into(const Monomial& o) const; // o / this, exact
    static Monomial gcd(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
    bool operator!=(const Monomial& o) const { return factors_ != o.factors_; }

    // Graded lexicographic: higher total degree first, ties broken by the
    // exponent vector with lower variable ids more significant.
    static int cmp(const Monomial& a, const Monomial& b);

private:
    std::vector<std::pair<int, int>> factors_;
};

struct MonomialGradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::cmp(a, b) > 0; }
};

// Multivariate polynomial in rate-constant symbols with exact integer
// coefficients. Terms are kept in descending graded-lex order, which is also
// the canonical display order; no zero coefficients are stored.
class RatePolynomial {
public:
    using TermMap = std::map<Monomial, long long, MonomialGradedLexGreater>;

    RatePolynomial() = default;
    explicit RatePolynomial(long long constant);
    static RatePolynomial variable(int v);

    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const TermMap& terms() const { return terms_; }
    bool all_coefficients_positive() const;

    void add_term(const Monomial& m, long long coeff);

    RatePolynomial operator-() const;
    RatePolynomial operator+(const RatePolynomial& o) const;
    RatePolynomial operator-(const RatePolynomial& o) const;
    RatePolynomial operator*(const RatePolynomial& o) const;

    bool operator==(const RatePolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const RatePolynomial& o) const { return terms_ != o.terms_; }

    // Exact quotient; throws if the division leaves a remainder. Used by the
    // fraction-free determinant.
    static RatePolynomial divide_exact(const RatePolynomial& num, const RatePolynomial& den);

    // Per-variable minimum exponent across all terms (the monomial content).
    Monomial content() const;
    RatePolynomial divided_by_monomial(const Monomial& m) const;

    double eval(const std::vector<double>& values) const;
    Rational eval_exact(const std::vector<Rational>& values) const;

    // Expanded canonical form, e.g. "k2*k4*k6 + k3*k4*k6". `name` maps a
    // variable id to its display name.
    std::string str(const std::function<std::string(int)>& name) const;

private:
    TermMap terms_;
};

using PolyMatrix = std::vector<std::vector<RatePolynomial>>;

// Determinant of a square polynomial matrix: cofactor expansion for small
// dimensions, fraction-free (Bareiss) elimination over the polynomial ring
// for the rest.
RatePolynomial determinant(const PolyMatrix& m);
RatePolynomial determinant_minor_expansion(const PolyMatrix& m);
RatePolynomial determinant_bareiss(PolyMatrix m);

}  // namespace crn
