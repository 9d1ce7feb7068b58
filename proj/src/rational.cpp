#include "pfe/rational.hpp"

#include <cctype>
#include <ostream>

namespace pfe {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&](const char* why) {
        throw std::invalid_argument("Rational::parse: " + std::string(why) + " in \"" +
                                    std::string(text) + "\"");
    };
    std::string_view rest = text;
    if (!rest.empty() && (rest[0] == '+' || rest[0] == '-')) {
        if (rest[0] == '+') text.remove_prefix(1);  // mpq_set_str rejects '+'
        rest.remove_prefix(1);
    }
    size_t digits = 0;
    while (digits < rest.size() && std::isdigit(static_cast<unsigned char>(rest[digits])))
        ++digits;
    if (digits == 0) fail("missing digits");
    rest.remove_prefix(digits);
    if (!rest.empty()) {
        if (rest[0] != '/') fail("unexpected character");
        rest.remove_prefix(1);
        size_t den_digits = 0;
        while (den_digits < rest.size() &&
               std::isdigit(static_cast<unsigned char>(rest[den_digits])))
            ++den_digits;
        if (den_digits == 0 || den_digits != rest.size()) fail("malformed denominator");
        mpz_class den(std::string(rest), 10);
        if (den == 0) fail("zero denominator");
    }
    mpq_class v(std::string(text), 10);
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("Rational: zero to a negative power");
        return Rational(0);
    }
    mpq_class base = v_;
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), n);
    if (invert) {
        mpq_inv(out.get_mpq_t(), out.get_mpq_t());
    }
    out.canonicalize();
    Rational r;
    r.v_ = std::move(out);
    return r;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

Rational falling_factorial(const Rational& x, unsigned long n) {
    Rational acc(1);
    for (unsigned long j = 0; j < n; ++j) acc *= x - Rational(static_cast<long>(j));
    return acc;
}

Rational degenerate_falling_factorial(const Rational& x, unsigned long n,
                                      const Rational& lambda) {
    Rational acc(1);
    for (unsigned long j = 0; j < n; ++j)
        acc *= x - Rational(static_cast<long>(j)) * lambda;
    return acc;
}

}  // namespace pfe
