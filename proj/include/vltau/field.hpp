#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace vltau {

/// Exact rational number, always kept in canonical form (gcd 1, positive
/// denominator). mpq_class does the heavy lifting; rat() is the checked
/// constructor used throughout.
using Rational = mpq_class;

Rational rat(long num, long den = 1);
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);
long to_long(const Rational& r);

/// Exact square root in Q, or nullopt when r is not a perfect square.
std::optional<Rational> sqrt_rational(const Rational& r);

/// Element re + im*sqrt(-3) of the quadratic field Q(sqrt(-3)).
/// The cube root of unity is xi() = (-1 + sqrt(-3))/2.
struct FieldElem {
    Rational re;
    Rational im;

    FieldElem() : re(0), im(0) {}
    FieldElem(const Rational& r) : re(r), im(0) {}
    FieldElem(long r) : re(r), im(0) {}
    FieldElem(const Rational& r, const Rational& i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_rational() const { return im == 0; }

    /// Field norm re^2 + 3*im^2 (= z * conj(z)).
    Rational norm() const { return re * re + 3 * im * im; }
    FieldElem conj() const { return {re, -im}; }

    FieldElem operator-() const { return {-re, -im}; }
    FieldElem operator+(const FieldElem& o) const { return {re + o.re, im + o.im}; }
    FieldElem operator-(const FieldElem& o) const { return {re - o.re, im - o.im}; }
    FieldElem operator*(const FieldElem& o) const {
        return {re * o.re - 3 * im * o.im, re * o.im + im * o.re};
    }
    FieldElem inverse() const {
        Rational n = norm();
        if (n == 0) throw std::domain_error("FieldElem: division by zero");
        return {re / n, -im / n};
    }
    FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }

    FieldElem& operator+=(const FieldElem& o) { re += o.re; im += o.im; return *this; }
    FieldElem& operator-=(const FieldElem& o) { re -= o.re; im -= o.im; return *this; }
    FieldElem& operator*=(const FieldElem& o) { *this = *this * o; return *this; }

    bool operator==(const FieldElem& o) const { return re == o.re && im == o.im; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
};

/// xi = exp(2 pi i / 3) = (-1 + sqrt(-3))/2.
FieldElem xi();
FieldElem xi_pow(int e);
/// The generator sqrt(-3) itself.
FieldElem sqrt_m3();

/// Square root of c in Q(sqrt(-3)) with the canonical sign choice
/// (re > 0, or re = 0 and im >= 0), or nullopt when none exists.
std::optional<FieldElem> sqrt_in_field(const FieldElem& c);

/// Canonical text form "p/q" / "p/q+r/s*sqrt(-3)" used in reports and config.
std::string to_string(const FieldElem& x);
FieldElem parse_field_elem(const std::string& s);

}  // namespace vltau
