#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pfe {

// Exact arbitrary-precision rational, the coefficient field for everything
// in this library. Always stored canonically: lowest terms, positive
// denominator. Backed by GMP's mpq_class.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(mpq_class v);
    explicit Rational(const mpz_class& z) : v_(z) {}

    // Strict text form: [+-]?digits(/digits)?  Throws std::invalid_argument
    // on malformed input or a zero denominator.
    static Rational parse(std::string_view text);

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    // Integer power; a negative exponent inverts (error on zero base).
    Rational pow(long e) const;

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }

    // "a" when the denominator is 1, otherwise "a/b".
    std::string str() const;

    const mpq_class& raw() const { return v_; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

Rational factorial(unsigned long n);
Rational binomial(unsigned long n, unsigned long k);

// (x)_n = x(x-1)...(x-n+1), with (x)_0 = 1.
Rational falling_factorial(const Rational& x, unsigned long n);

// (x)_{n,lambda} = x(x-lambda)...(x-(n-1)lambda); lambda = 0 gives x^n.
Rational degenerate_falling_factorial(const Rational& x, unsigned long n,
                                      const Rational& lambda);

}  // namespace pfe
