#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace eiscong {

/// Arbitrary-precision signed integer.
using Int = mpz_class;

/// Reduced fraction: gcd(|num|, den) = 1 and den >= 1 after every
/// construction and arithmetic operation. Zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(const Int& n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}

    Rational(const Int& num, const Int& den) {
        if (den == 0)
            throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// "num" when integral, "num/den" otherwise.
    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    /// Parses "int" or "int/int". Throws std::invalid_argument on anything else.
    static Rational parse(const std::string& text);

private:
    explicit Rational(const mpq_class& v) : v_(v) {}
    mpq_class v_;
};

inline Rational Rational::parse(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("Rational: empty literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: bad literal '" + text + "'");
    }
}

}  // namespace eiscong
