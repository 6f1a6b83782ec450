#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "vltau/field.hpp"

namespace vltau {

/// Lattice vector (m*beta1 + n*beta2)/6 in L^perp, with Gram matrix
/// <beta_i,beta_i> = 4, <beta_1,beta_2> = -2. Denominator 6 covers every
/// coset representative that occurs (halves, thirds, sixths).
struct LatticeVec {
    long m = 0;
    long n = 0;

    LatticeVec() = default;
    LatticeVec(long m_, long n_) : m(m_), n(n_) {}

    LatticeVec operator+(const LatticeVec& o) const { return {m + o.m, n + o.n}; }
    LatticeVec operator-(const LatticeVec& o) const { return {m - o.m, n - o.n}; }
    LatticeVec operator-() const { return {-m, -n}; }
    bool operator==(const LatticeVec& o) const { return m == o.m && n == o.n; }
    bool operator!=(const LatticeVec& o) const { return !(*this == o); }
    bool operator<(const LatticeVec& o) const {
        return m != o.m ? m < o.m : n < o.n;
    }
    bool is_zero() const { return m == 0 && n == 0; }
};

LatticeVec beta1();
LatticeVec beta2();
LatticeVec beta0();

Rational pairing(const LatticeVec& a, const LatticeVec& b);
Rational norm(const LatticeVec& a);

/// Members of L^perp are exactly the (m,n)/6 with m+n = 0 mod 3.
bool in_dual(const LatticeVec& a);
bool in_L(const LatticeVec& a);

enum class Klein : uint8_t { O = 0, A = 1, B = 2, C = 3 };

/// Coset label (i,j) of L^(i,j) = L_i + L^j in L^perp / L.
struct CosetLabel {
    Klein klein = Klein::O;
    int ternary = 0;

    bool operator==(const CosetLabel& o) const {
        return klein == o.klein && ternary == o.ternary;
    }
    bool operator<(const CosetLabel& o) const {
        return klein != o.klein ? klein < o.klein : ternary < o.ternary;
    }
};

CosetLabel coset_of(const LatticeVec& a);
LatticeVec coset_representative(const CosetLabel& c);
std::vector<CosetLabel> all_cosets();
std::string to_string(const CosetLabel& c);

/// Isometry of L given by an integer matrix in the basis (beta1, beta2).
struct Isometry {
    // column images: beta1 -> (a,c), beta2 -> (b,d)
    long a = 1, b = 0, c = 0, d = 1;
    std::string name = "id";

    LatticeVec apply(const LatticeVec& v) const {
        return {a * v.m + b * v.n, c * v.m + d * v.n};
    }
    Isometry compose(const Isometry& o) const {  // this after o
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d,
                name + "." + o.name};
    }
    bool same_matrix(const Isometry& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool preserves_gram() const;
};

Isometry iso_identity();
Isometry iso_tau();
Isometry iso_sigma();
Isometry iso_theta();

std::string to_string(const LatticeVec& v);

/// All lattice points of the coset with <v,v> <= max_norm.
std::vector<LatticeVec> lattice_points(const CosetLabel& c, const Rational& max_norm);

}  // namespace vltau
