#include "crn/bigint.hpp"

#include <algorithm>
#include <stdexcept>

#include "crn/error.hpp"

namespace crn {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid UB on LLONG_MIN
    unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                 : static_cast<unsigned long long>(v);
    while (u != 0) {
        mag_.push_back(static_cast<uint32_t>(u & 0xffffffffULL));
        u >>= 32;
    }
}

BigInt::BigInt(int sign, std::vector<uint32_t> mag) : sign_(sign), mag_(std::move(mag)) {
    trim(mag_);
    if (mag_.empty()) sign_ = 0;
}

void BigInt::trim(std::vector<uint32_t>& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r[i] = static_cast<uint32_t>(s & 0xffffffffULL);
        carry = s >> 32;
    }
    trim(r);
    return r;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += (1LL << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(s);
    }
    trim(r);
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        size_t pos = i + b.size();
        while (carry != 0) {
            uint64_t cur = r[pos] + carry;
            r[pos] = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++pos;
        }
    }
    trim(r);
    return r;
}

namespace {

int bit_length(const std::vector<uint32_t>& m) {
    if (m.empty()) return 0;
    uint32_t top = m.back();
    int bits = 0;
    while (top != 0) {
        ++bits;
        top >>= 1;
    }
    return static_cast<int>(m.size() - 1) * 32 + bits;
}

bool test_bit(const std::vector<uint32_t>& m, int i) {
    return (m[static_cast<size_t>(i) / 32] >> (i % 32)) & 1u;
}

// r = (r << 1) | bit, in place
void shl1_or(std::vector<uint32_t>& r, bool bit) {
    uint32_t carry = bit ? 1u : 0u;
    for (auto& limb : r) {
        uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
    }
    if (carry) r.push_back(carry);
}

}  // namespace

// Schoolbook binary long division on magnitudes. Matrix entries in this
// project stay small (a few hundred bits at most), so O(bits * limbs) is fine.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (b.empty()) throw Error("BigInt: division by zero");
    q.assign(a.size(), 0);
    r.clear();
    for (int i = bit_length(a) - 1; i >= 0; --i) {
        shl1_or(r, test_bit(a, i));
        if (cmp_mag(r, b) >= 0) {
            r = sub_mag(r, b);
            q[static_cast<size_t>(i) / 32] |= (1u << (i % 32));
        }
    }
    trim(q);
    trim(r);
}

BigInt BigInt::operator-() const { return BigInt(-sign_, mag_); }

BigInt BigInt::abs() const { return BigInt(sign_ == 0 ? 0 : 1, mag_); }

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    if (sign_ == o.sign_) return BigInt(sign_, add_mag(mag_, o.mag_));
    int c = cmp_mag(mag_, o.mag_);
    if (c == 0) return BigInt();
    if (c > 0) return BigInt(sign_, sub_mag(mag_, o.mag_));
    return BigInt(o.sign_, sub_mag(o.mag_, mag_));
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (sign_ == 0 || o.sign_ == 0) return BigInt();
    return BigInt(sign_ * o.sign_, mul_mag(mag_, o.mag_));
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q = BigInt(a.sign_ * b.sign_, std::move(qm));
    r = BigInt(a.sign_, std::move(rm));
}

BigInt BigInt::div_exact(const BigInt& d) const {
    BigInt q, r;
    divmod(*this, d, q, r);
    if (!r.is_zero()) throw Error("BigInt: inexact division");
    return q;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    return x;
}

BigInt BigInt::lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    return (a * b).abs().div_exact(gcd(a, b));
}

int BigInt::cmp(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    int c = cmp_mag(mag_, o.mag_);
    return sign_ >= 0 ? c : -c;
}

bool BigInt::fits_ll() const {
    if (mag_.size() > 2) return false;
    unsigned long long u = 0;
    for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    if (sign_ >= 0) return u <= 0x7fffffffffffffffULL;
    return u <= 0x8000000000000000ULL;
}

long long BigInt::to_ll() const {
    if (!fits_ll()) throw Error("BigInt: value does not fit in long long");
    unsigned long long u = 0;
    for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    if (sign_ >= 0) return static_cast<long long>(u);
    return -static_cast<long long>(u - 1) - 1;
}

double BigInt::to_double() const {
    double v = 0.0;
    for (size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -v : v;
}

std::string BigInt::str() const {
    if (sign_ == 0) return "0";
    std::string digits;
    std::vector<uint32_t> cur = mag_;
    const std::vector<uint32_t> ten = {10u};
    while (!cur.empty()) {
        std::vector<uint32_t> q, r;
        divmod_mag(cur, ten, q, r);
        digits.push_back(static_cast<char>('0' + (r.empty() ? 0 : r[0])));
        cur = std::move(q);
    }
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("Rational: zero denominator");
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw Error("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

std::string Rational::str() const {
    if (den_ == BigInt(1)) return num_.str();
    return num_.str() + "/" + den_.str();
}

}  // namespace crn
