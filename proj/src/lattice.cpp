#include "vltau/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace vltau {

LatticeVec beta1() { return {6, 0}; }
LatticeVec beta2() { return {0, 6}; }
LatticeVec beta0() { return {-6, -6}; }

Rational pairing(const LatticeVec& a, const LatticeVec& b) {
    // (1/36) (m1,n1) [[4,-2],[-2,4]] (m2,n2)^T
    return rat(2 * a.m * b.m - a.m * b.n - a.n * b.m + 2 * a.n * b.n, 18);
}

Rational norm(const LatticeVec& a) { return pairing(a, a); }

bool in_dual(const LatticeVec& a) { return ((a.m + a.n) % 3 + 3) % 3 == 0; }
bool in_L(const LatticeVec& a) { return a.m % 6 == 0 && a.n % 6 == 0; }

CosetLabel coset_of(const LatticeVec& a) {
    if (!in_dual(a)) throw std::domain_error("coset_of: not in dual lattice");
    int pm = ((a.m % 2) + 2) % 2, pn = ((a.n % 2) + 2) % 2;
    Klein k;
    if (pm == 0 && pn == 0) k = Klein::O;
    else if (pm == 0 && pn == 1) k = Klein::A;
    else if (pm == 1 && pn == 1) k = Klein::B;
    else k = Klein::C;
    int t = (((a.n - a.m) % 3) + 3) % 3;
    return {k, t};
}

LatticeVec coset_representative(const CosetLabel& c) {
    LatticeVec k;
    switch (c.klein) {
        case Klein::O: k = {0, 0}; break;
        case Klein::A: k = {0, 3}; break;   // beta2/2
        case Klein::B: k = {-3, -3}; break; // beta0/2
        case Klein::C: k = {3, 0}; break;   // beta1/2
    }
    LatticeVec t;
    if (c.ternary == 1) t = {-2, 2};       // (-beta1+beta2)/3
    else if (c.ternary == 2) t = {2, -2};
    return k + t;
}

std::vector<CosetLabel> all_cosets() {
    std::vector<CosetLabel> v;
    for (int k = 0; k < 4; ++k)
        for (int j = 0; j < 3; ++j) v.push_back({static_cast<Klein>(k), j});
    return v;
}

std::string to_string(const CosetLabel& c) {
    static const char* kn = "0abc";
    return std::string("(") + kn[static_cast<int>(c.klein)] + "," +
           std::to_string(c.ternary) + ")";
}

bool Isometry::preserves_gram() const {
    LatticeVec b1 = apply(beta1()), b2 = apply(beta2());
    return pairing(b1, b1) == 4 && pairing(b2, b2) == 4 && pairing(b1, b2) == -2;
}

Isometry iso_identity() { return {1, 0, 0, 1, "id"}; }
Isometry iso_tau() { return {0, -1, 1, -1, "tau"}; }
Isometry iso_sigma() { return {0, 1, 1, 0, "sigma"}; }
Isometry iso_theta() { return {-1, 0, 0, -1, "theta"}; }

std::string to_string(const LatticeVec& v) {
    return "(" + std::to_string(v.m) + "," + std::to_string(v.n) + ")/6";
}

std::vector<LatticeVec> lattice_points(const CosetLabel& c, const Rational& max_norm) {
    // <v,v> = (m^2 - m n + n^2)/9 >= (m^2 + n^2)/18, so |m|,|n| <= sqrt(18 N).
    std::vector<LatticeVec> out;
    if (max_norm < 0) return out;
    double nb = mpq_get_d(max_norm.get_mpq_t());
    long bound = static_cast<long>(std::sqrt(18.0 * nb)) + 2;
    LatticeVec rep = coset_representative(c);
    for (long m = -bound; m <= bound; ++m) {
        for (long n = -bound; n <= bound; ++n) {
            LatticeVec v{m, n};
            if (!in_dual(v)) continue;
            if (!(coset_of(v) == c)) continue;
            if (norm(v) <= max_norm) out.push_back(v);
        }
    }
    (void)rep;
    return out;
}

}  // namespace vltau
