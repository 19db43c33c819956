#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

#include "tqf/arith.hpp"

namespace tqf {

using bigint = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision integer parts, always kept in
// lowest terms with positive denominator. Equality is literal.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(i64 n) : num_(n), den_(1) {}
    Rational(bigint n) : num_(std::move(n)), den_(1) {}
    Rational(bigint n, bigint d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(i64 n, i64 d) : num_(n), den_(d) { normalize(); }

    const bigint& num() const { return num_; }
    const bigint& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    // throws unless the value is an integer
    bigint as_integer() const {
        if (den_ != 1) throw std::domain_error("rational is not an integer: " + str());
        return num_;
    }
    i64 as_i64() const {
        bigint v = as_integer();
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("integer exceeds 64-bit range");
        return v.convert_to<i64>();
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("division by zero rational");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    // "num/den", or plain "num" for integers
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(bigint(s));
        return Rational(bigint(s.substr(0, slash)), bigint(s.substr(slash + 1)));
    }

  private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        bigint g = boost::multiprecision::gcd(num_ < 0 ? bigint(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    bigint num_, den_;
};

inline Rational pow2_rational(int e) {
    // 2^e for possibly negative e
    if (e >= 0) return Rational(bigint(1) << e);
    return Rational(bigint(1), bigint(1) << (-e));
}

}  // namespace tqf
