#include "quiverkac/polynomial.hpp"

#include <numeric>
#include <sstream>

namespace qk {

namespace {

// exact rational on long long; values here stay tiny
struct Rational {
    long long num = 0, den = 1;

    Rational() = default;
    Rational(long long n) : num(n) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }
    Rational operator+(const Rational& r) const { return {num * r.den + r.num * den, den * r.den}; }
    Rational operator-(const Rational& r) const { return {num * r.den - r.num * den, den * r.den}; }
    Rational operator*(const Rational& r) const { return {num * r.num, den * r.den}; }
    bool is_integer() const { return den == 1; }
};

}  // namespace

IntPolynomial::IntPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::constant(long long c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(long long c, int deg) {
    std::vector<long long> v(deg + 1, 0);
    v[deg] = c;
    return IntPolynomial(std::move(v));
}

long long IntPolynomial::eval(long long q) const {
    long long acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
    std::vector<long long> out(std::max(c_.size(), rhs.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < rhs.c_.size(); ++i) out[i] += rhs.c_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
    std::vector<long long> out(std::max(c_.size(), rhs.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < rhs.c_.size(); ++i) out[i] -= rhs.c_[i];
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::pretty() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        long long c = c_[d];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        long long a = c < 0 ? -c : c;
        if (a != 1 || d == 0) os << a;
        if (d >= 1) os << "q";
        if (d >= 2) os << "^" << d;
        first = false;
    }
    return os.str();
}

IntPolynomial interpolate(const std::vector<std::pair<long long, long long>>& points,
                          int degree_bound) {
    if (degree_bound < 0) throw DomainError("negative degree bound");
    size_t need = static_cast<size_t>(degree_bound) + 1;
    if (points.size() < need)
        throw DomainError("interpolation needs " + std::to_string(need) + " points, got " +
                          std::to_string(points.size()));
    for (size_t i = 0; i < need; ++i)
        for (size_t j = i + 1; j < need; ++j)
            if (points[i].first == points[j].first)
                throw DomainError("duplicate interpolation abscissa q=" +
                                  std::to_string(points[i].first));

    // Lagrange: coefficients accumulated as exact rationals
    std::vector<Rational> acc(need, Rational(0));
    for (size_t i = 0; i < need; ++i) {
        // numerator polynomial prod_{j!=i} (q - x_j), denominator prod (x_i - x_j)
        std::vector<Rational> numer = {Rational(1)};
        Rational denom(1);
        for (size_t j = 0; j < need; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(numer.size() + 1, Rational(0));
            for (size_t t = 0; t < numer.size(); ++t) {
                next[t + 1] = next[t + 1] + numer[t];
                next[t] = next[t] - numer[t] * Rational(points[j].first);
            }
            numer = std::move(next);
            denom = denom * Rational(points[i].first - points[j].first);
        }
        Rational scale = Rational(points[i].second) * Rational(denom.den, denom.num);
        for (size_t t = 0; t < numer.size(); ++t) acc[t] = acc[t] + numer[t] * scale;
    }

    std::vector<long long> coeffs(need);
    for (size_t t = 0; t < need; ++t) {
        if (!acc[t].is_integer())
            throw NonIntegerCoefficients("coefficient of q^" + std::to_string(t) + " is " +
                                         std::to_string(acc[t].num) + "/" +
                                         std::to_string(acc[t].den));
        coeffs[t] = acc[t].num;
    }
    IntPolynomial p(std::move(coeffs));
    for (size_t i = need; i < points.size(); ++i)
        if (p.eval(points[i].first) != points[i].second)
            throw SurplusMismatch("interpolant " + p.pretty() + " disagrees at q=" +
                                  std::to_string(points[i].first) + ": expected " +
                                  std::to_string(points[i].second) + ", got " +
                                  std::to_string(p.eval(points[i].first)));
    return p;
}

}  // namespace qk
