#pragma once

#include <map>

#include "vltau/catalog.hpp"
#include "vltau/report.hpp"

namespace vltau {

/// Truncated formal series sum c_r q^r with rational exponents and integer
/// coefficients, reliable for exponents <= valid_to.
struct QSeries {
    std::map<Rational, mpz_class> c;
    Rational valid_to = 0;

    void add(const Rational& e, const mpz_class& coeff);
    mpz_class at(const Rational& e) const;
    QSeries truncated(const Rational& bound) const;
    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    bool agree(const QSeries& o) const;  // equal up to min(valid_to)
    Rational leading_exponent() const;
    bool nonnegative() const;
};

std::string to_string(const QSeries& s);

/// Graded dimension of V_coset: lattice theta function times the rank-2
/// partition generating function.
QSeries coset_character(const CosetLabel& c, const Rational& N);

enum class EigenSel { MkPart, WkPart, MtPart, WtPart };

/// Graded dimension of the (omega~2)- or (omega^1, omega^2)-eigenspace
/// inside V_coset, optionally refined by tau-eigenvalue.
QSeries eigenspace_character(const Catalog& cat, const CosetLabel& c, EigenSel sel,
                             const Rational& N,
                             std::optional<int> tau_eps = std::nullopt);

/// Truncated irreducible Virasoro character ch L(c,h) (grading from h, no
/// c/24 shift) via the alternating-sum formula for the minimal series.
QSeries minimal_model_character(const Rational& cc, const Rational& h,
                                const Rational& N);

/// Characters of the twisted free-field halves: ch M_T(eps), ch W_T(eps)
/// solved exactly from the partition-counted twisted-sector characters and
/// the coset decompositions.
struct TwistedChars {
    QSeries mt[3], wt[3];  // tau-eigenvalue components
    QSeries full;          // ch of S[tau] x T
    QSeries mt_total, wt_total;
};

TwistedChars twisted_free_characters(const Rational& N);

Report verify_decompositions(const Catalog& cat, const Rational& N);
Report verify_twisted_characters(const Rational& N);

}  // namespace vltau
