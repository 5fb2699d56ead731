#include "crn/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "crn/error.hpp"

namespace crn {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("polynomial coefficient overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("polynomial coefficient overflow");
    return r;
}

}  // namespace

Monomial Monomial::var(int v, int exp) {
    Monomial m;
    if (exp < 0) throw Error("negative exponent");
    if (exp > 0) m.factors_.push_back({v, exp});
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::exponent(int v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const auto& f, int x) { return f.first < x; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            r.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.push_back({a->first, a->second + b->second});
            ++a;
            ++b;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (const auto& [v, e] : factors_)
        if (o.exponent(v) < e) return false;
    return true;
}

Monomial Monomial::divided_into(const Monomial& o) const {
    Monomial r;
    auto a = o.factors_.begin();
    for (; a != o.factors_.end(); ++a) {
        int e = a->second - exponent(a->first);
        if (e < 0) throw Error("monomial division not exact");
        if (e > 0) r.factors_.push_back({a->first, e});
    }
    if (!divides(o)) throw Error("monomial division not exact");
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (const auto& [v, e] : a.factors_) {
        int g = std::min(e, b.exponent(v));
        if (g > 0) r.factors_.push_back({v, g});
    }
    return r;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // lexicographic with smaller variable ids more significant
    auto ia = a.factors_.begin(), ib = b.factors_.begin();
    while (ia != a.factors_.end() && ib != b.factors_.end()) {
        if (ia->first != ib->first) return ia->first < ib->first ? 1 : -1;
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    if (ia != a.factors_.end()) return 1;
    if (ib != b.factors_.end()) return -1;
    return 0;
}

RatePolynomial::RatePolynomial(long long constant) {
    if (constant != 0) terms_.emplace(Monomial(), constant);
}

RatePolynomial RatePolynomial::variable(int v) {
    RatePolynomial p;
    p.terms_.emplace(Monomial::var(v), 1);
    return p;
}

bool RatePolynomial::all_coefficients_positive() const {
    for (const auto& [m, c] : terms_)
        if (c <= 0) return false;
    return !terms_.empty();
}

void RatePolynomial::add_term(const Monomial& m, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

RatePolynomial RatePolynomial::operator-() const {
    RatePolynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

RatePolynomial RatePolynomial::operator+(const RatePolynomial& o) const {
    RatePolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

RatePolynomial RatePolynomial::operator-(const RatePolynomial& o) const {
    RatePolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

RatePolynomial RatePolynomial::operator*(const RatePolynomial& o) const {
    RatePolynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, checked_mul(ca, cb));
    return r;
}

RatePolynomial RatePolynomial::divide_exact(const RatePolynomial& num, const RatePolynomial& den) {
    if (den.is_zero()) throw Error("polynomial division by zero");
    RatePolynomial rem = num, quot;
    const auto& [dm, dc] = *den.terms_.begin();  // leading term
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.begin();
        if (rc % dc != 0 || !dm.divides(rm)) throw Error("polynomial division not exact");
        Monomial qm = dm.divided_into(rm);
        long long qc = rc / dc;
        quot.add_term(qm, qc);
        RatePolynomial t;
        t.add_term(qm, qc);
        rem = rem - t * den;
    }
    return quot;
}

Monomial RatePolynomial::content() const {
    if (terms_.empty()) return Monomial();
    auto it = terms_.begin();
    Monomial g = it->first;
    for (++it; it != terms_.end(); ++it) {
        g = Monomial::gcd(g, it->first);
        if (g.is_one()) break;
    }
    return g;
}

RatePolynomial RatePolynomial::divided_by_monomial(const Monomial& m) const {
    RatePolynomial r;
    for (const auto& [mono, c] : terms_) r.terms_.emplace(m.divided_into(mono), c);
    return r;
}

double RatePolynomial::eval(const std::vector<double>& values) const {
    double sum = 0.0;
    for (const auto& [m, c] : terms_) {
        double prod = static_cast<double>(c);
        for (const auto& [v, e] : m.factors()) prod *= std::pow(values.at(v), e);
        sum += prod;
    }
    return sum;
}

Rational RatePolynomial::eval_exact(const std::vector<Rational>& values) const {
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        Rational prod(c);
        for (const auto& [v, e] : m.factors())
            for (int i = 0; i < e; ++i) prod = prod * values.at(v);
        sum = sum + prod;
    }
    return sum;
}

std::string RatePolynomial::str(const std::function<std::string(int)>& name) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        long long coeff = c;
        if (first) {
            if (coeff < 0) {
                out += "-";
                coeff = -coeff;
            }
        } else {
            out += coeff < 0 ? " - " : " + ";
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        std::string factors;
        for (const auto& [v, e] : m.factors()) {
            if (!factors.empty()) factors += "*";
            factors += name(v);
            if (e > 1) factors += "^" + std::to_string(e);
        }
        if (factors.empty()) {
            out += std::to_string(coeff);
        } else {
            if (coeff != 1) out += std::to_string(coeff) + "*";
            out += factors;
        }
    }
    return out;
}

RatePolynomial determinant_minor_expansion(const PolyMatrix& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return RatePolynomial(1);
    if (n == 1) return m[0][0];
    RatePolynomial det;
    for (int j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix sub(n - 1, std::vector<RatePolynomial>(n - 1));
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub[r - 1][cc++] = m[r][c];
            }
        }
        RatePolynomial term = m[0][j] * determinant_minor_expansion(sub);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

RatePolynomial determinant_bareiss(PolyMatrix m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return RatePolynomial(1);
    RatePolynomial prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r) {
                if (!m[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            }
            if (piv < 0) return RatePolynomial();  // singular
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c)
                m[r][c] = RatePolynomial::divide_exact(m[r][c] * m[k][k] - m[r][k] * m[k][c], prev);
            m[r][k] = RatePolynomial();
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

RatePolynomial determinant(const PolyMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw Error("determinant of non-square matrix");
    if (m.size() <= 3) return determinant_minor_expansion(m);
    return determinant_bareiss(m);
}

}  // namespace crn
