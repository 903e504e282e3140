#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "muimage/errors.hpp"

namespace muimage {

// Arbitrary-precision signed integer.
using Integer = boost::multiprecision::cpp_int;

// Exact rational number, always kept in lowest terms with positive
// denominator. Thin wrapper over boost::multiprecision::cpp_rational that
// adds division-by-zero checks and integer exponentiation.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                 // NOLINT: implicit by design
    Rational(long long n) : v_(n) {}           // NOLINT
    Rational(const Integer& n) : v_(n) {}      // NOLINT
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        v_ = num;
        v_ /= boost::multiprecision::cpp_rational(den);
    }
    Rational(long long num, long long den) : Rational(Integer(num), Integer(den)) {}

    Integer numerator() const { return boost::multiprecision::numerator(v_); }
    Integer denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // Non-negative integer power by binary exponentiation. 0^0 == 1.
    Rational pow(unsigned e) const {
        Rational result(1);
        Rational base = *this;
        while (e > 0) {
            if (e & 1u) result *= base;
            base *= base;
            e >>= 1u;
        }
        return result;
    }

    // "p" when integral, otherwise "p/q".
    std::string str() const { return v_.str(); }

private:
    boost::multiprecision::cpp_rational v_;
};

}  // namespace muimage
