#include "vltau/field.hpp"

#include <cctype>

namespace vltau {

Rational rat(long num, long den) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& s) {
    std::string t = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
    Rational r;
    if (r.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

long to_long(const Rational& r) {
    if (!is_integer(r)) throw std::domain_error("to_long: not an integer");
    return mpz_get_si(r.get_num().get_mpz_t());
}

std::optional<Rational> sqrt_rational(const Rational& r) {
    if (r < 0) return std::nullopt;
    const mpz_class& num = r.get_num();
    const mpz_class& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rational(sn, sd);
}

FieldElem xi() { return {rat(-1, 2), rat(1, 2)}; }

FieldElem xi_pow(int e) {
    e = ((e % 3) + 3) % 3;
    if (e == 0) return FieldElem(1);
    if (e == 1) return xi();
    return {rat(-1, 2), rat(-1, 2)};
}

FieldElem sqrt_m3() { return {Rational(0), Rational(1)}; }

std::optional<FieldElem> sqrt_in_field(const FieldElem& c) {
    // Solve (p + q sqrt(-3))^2 = c: p^2 - 3 q^2 = c.re, 2 p q = c.im.
    auto canonical = [](FieldElem x) {
        if (x.re < 0 || (x.re == 0 && x.im < 0)) return -x;
        return x;
    };
    if (c.im == 0) {
        if (auto p = sqrt_rational(c.re)) return canonical({*p, Rational(0)});
        if (auto q = sqrt_rational(-c.re / 3)) return canonical({Rational(0), *q});
        return std::nullopt;
    }
    // p != 0 here; p^2 is the positive root of 4 t^2 - 4 c.re t - 3 c.im^2.
    auto s = sqrt_rational(c.norm());
    if (!s) return std::nullopt;
    auto p = sqrt_rational((c.re + *s) / 2);
    if (!p || *p == 0) return std::nullopt;
    return canonical({*p, c.im / (2 * *p)});
}

std::string to_string(const FieldElem& x) {
    if (x.im == 0) return to_string(x.re);
    std::string im_part;
    if (x.im == 1) im_part = "sqrt(-3)";
    else if (x.im == -1) im_part = "-sqrt(-3)";
    else im_part = to_string(x.im) + "*sqrt(-3)";
    if (x.re == 0) return im_part;
    if (x.im > 0) return to_string(x.re) + "+" + im_part;
    return to_string(x.re) + im_part;
}

FieldElem parse_field_elem(const std::string& input) {
    std::string s;
    for (char ch : input)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty field element");

    // Split into at most two signed terms; the radical marker is "sqrt(-3)".
    // Find a '+'/'-' that separates terms (not leading, not inside "(-3)").
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '(' && s[i - 1] != '*' &&
            s[i - 1] != '+' && s[i - 1] != '-') {
            split = i;
            break;
        }
    }
    auto parse_term = [](const std::string& t) -> FieldElem {
        auto pos = t.find("sqrt(-3)");
        if (pos == std::string::npos) return FieldElem(parse_rational(t));
        std::string coeff = t.substr(0, pos);
        if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
        if (coeff.empty() || coeff == "+") coeff = "1";
        else if (coeff == "-") coeff = "-1";
        return {Rational(0), parse_rational(coeff)};
    };
    if (split == std::string::npos) return parse_term(s);
    FieldElem a = parse_term(s.substr(0, split));
    FieldElem b = parse_term(s.substr(split));  // keeps its sign
    return a + b;
}

}  // namespace vltau
