#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace crn {

// Signed arbitrary-precision integer. Magnitude is stored little-endian in
// 32-bit limbs with no trailing zero limbs; sign() is -1, 0 or +1.
//
// Only the operations needed for fraction-free elimination and rational
// arithmetic are provided: ring ops, comparison, truncated divmod, exact
// division and gcd.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;

    // Truncated division (C semantics): a == q*b + r, |r| < |b|, sign(r) == sign(a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    // Quotient of an exact division; throws if a remainder is left.
    BigInt div_exact(const BigInt& d) const;

    static BigInt gcd(const BigInt& a, const BigInt& b);  // nonnegative
    static BigInt lcm(const BigInt& a, const BigInt& b);

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const { return cmp(o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }
    bool operator>(const BigInt& o) const { return cmp(o) > 0; }
    bool operator>=(const BigInt& o) const { return cmp(o) >= 0; }

    BigInt abs() const;

    // Narrowing accessors; to_ll throws when the value does not fit.
    long long to_ll() const;
    bool fits_ll() const;
    double to_double() const;

    std::string str() const;

private:
    int cmp(const BigInt& o) const;

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
    static void trim(std::vector<uint32_t>& m);

    BigInt(int sign, std::vector<uint32_t> mag);

    int sign_ = 0;
    std::vector<uint32_t> mag_;
};

// Rational number over BigInt, always normalized: gcd(num, den) == 1, den > 0,
// zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    double to_double() const;
    std::string str() const;

private:
    BigInt num_, den_;
};

}  // namespace crn
