#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace cacti {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(long n, long r) {
    if (r < 0 || r > n) return 0;
    BigInt num = 1;
    for (long i = 0; i < r; ++i) num *= n - i;
    return num / factorial(r);
}

inline BigInt double_factorial_odd(long m) {
    // (2m-1)!! = number of perfect pairings of 2m items
    BigInt r = 1;
    for (long i = 2 * m - 1; i > 1; i -= 2) r *= i;
    return r;
}

inline BigInt int_pow(BigInt base, long exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    BigInt r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

inline Rational rat_pow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("0 to a negative power");
        Rational inv = Rational(1) / base;
        return rat_pow(inv, -exp);
    }
    Rational r = 1;
    for (long i = 0; i < exp; ++i) r *= base;
    return r;
}

/// Serializes as "num/den", denominator always present and positive.
inline std::string rat_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Accepts "num", "-num" or "num/den".
inline Rational rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num) / Rational(den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

/// Exact complex rationals, used for traces of the model matrices.
struct ComplexRational {
    Rational re, im;

    ComplexRational() : re(0), im(0) {}
    ComplexRational(Rational r) : re(std::move(r)), im(0) {}
    ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool operator==(const ComplexRational& o) const { return re == o.re && im == o.im; }

    ComplexRational operator+(const ComplexRational& o) const { return {re + o.re, im + o.im}; }
    ComplexRational operator-(const ComplexRational& o) const { return {re - o.re, im - o.im}; }
    ComplexRational operator*(const ComplexRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ComplexRational& operator+=(const ComplexRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ComplexRational& operator*=(const ComplexRational& o) { return *this = *this * o; }
};

}  // namespace cacti
