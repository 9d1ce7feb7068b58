#include "pfe/polynomial.hpp"

#include <sstream>

namespace pfe {

XPolynomial::XPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

void XPolynomial::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XPolynomial XPolynomial::constant(Rational c) {
    return XPolynomial({std::move(c)});
}

XPolynomial XPolynomial::variable() {
    return XPolynomial({Rational(0), Rational(1)});
}

XPolynomial XPolynomial::monomial(unsigned n, Rational c) {
    std::vector<Rational> v(n + 1);
    v[n] = std::move(c);
    return XPolynomial(std::move(v));
}

XPolynomial XPolynomial::falling(unsigned n) {
    XPolynomial acc = constant(Rational(1));
    for (unsigned j = 0; j < n; ++j)
        acc = acc * XPolynomial({Rational(-static_cast<long>(j)), Rational(1)});
    return acc;
}

XPolynomial XPolynomial::degenerate_falling(unsigned n, const Rational& lambda) {
    XPolynomial acc = constant(Rational(1));
    for (unsigned j = 0; j < n; ++j)
        acc = acc * XPolynomial({-Rational(static_cast<long>(j)) * lambda, Rational(1)});
    return acc;
}

Rational XPolynomial::coeff(size_t j) const {
    return j < c_.size() ? c_[j] : Rational(0);
}

Rational XPolynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t j = c_.size(); j-- > 0;) acc = acc * x + c_[j];
    return acc;
}

XPolynomial XPolynomial::derivative(unsigned k) const {
    std::vector<Rational> d = c_;
    for (unsigned step = 0; step < k; ++step) {
        if (d.empty()) break;
        std::vector<Rational> next;
        next.reserve(d.size() - 1);
        for (size_t j = 1; j < d.size(); ++j)
            next.push_back(Rational(static_cast<long>(j)) * d[j]);
        d = std::move(next);
    }
    return XPolynomial(std::move(d));
}

XPolynomial XPolynomial::shifted(const Rational& c) const {
    // b_j = sum_{i>=j} a_i C(i,j) c^{i-j}
    if (c_.empty()) return {};
    std::vector<Rational> b(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        Rational cp(1);
        for (size_t k = 0; k <= i; ++k) {
            size_t j = i - k;  // power of c is k
            b[j] += c_[i] * binomial(i, j) * cp;
            cp *= c;
        }
    }
    return XPolynomial(std::move(b));
}

XPolynomial& XPolynomial::operator+=(const XPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    normalize();
    return *this;
}

XPolynomial& XPolynomial::operator-=(const XPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
    normalize();
    return *this;
}

XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return XPolynomial(std::move(r));
}

XPolynomial operator*(const Rational& s, const XPolynomial& p) {
    std::vector<Rational> r = p.c_;
    for (auto& c : r) c *= s;
    return XPolynomial(std::move(r));
}

XPolynomial XPolynomial::pow(unsigned e) const {
    XPolynomial acc = constant(Rational(1));
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

std::string XPolynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t j = c_.size(); j-- > 0;) {
        if (c_[j].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[j].str();
        if (j >= 1) os << "*x";
        if (j >= 2) os << "^" << j;
        first = false;
    }
    return os.str();
}

}  // namespace pfe
