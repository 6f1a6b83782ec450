#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vltau/field.hpp"
#include "vltau/lattice.hpp"

namespace vltau {

/// Vector c1*beta1 + c2*beta2 in h = C (x) L.
struct VecH {
    FieldElem c1, c2;

    VecH() = default;
    VecH(FieldElem a, FieldElem b) : c1(std::move(a)), c2(std::move(b)) {}
    VecH operator+(const VecH& o) const { return {c1 + o.c1, c2 + o.c2}; }
    VecH operator-(const VecH& o) const { return {c1 - o.c1, c2 - o.c2}; }
    VecH operator*(const FieldElem& s) const { return {c1 * s, c2 * s}; }
};

VecH vec_beta1();
VecH vec_beta2();
VecH vec_beta0();
VecH vec_of(const LatticeVec& v);  // (m beta1 + n beta2)/6 as VecH

FieldElem pairing(const VecH& a, const VecH& b);
FieldElem pairing(const VecH& a, const LatticeVec& b);

/// Multiset of Heisenberg creation factors beta_b(-mode), mode >= 1,
/// b in {0,1} for beta1/beta2, stored sorted by (mode desc, basis asc).
struct HeisMono {
    std::vector<std::pair<int, int>> f;  // (mode, basis)

    int degree() const {
        int d = 0;
        for (auto& [m, b] : f) d += m;
        return d;
    }
    void push(int mode, int basis);
    bool operator==(const HeisMono& o) const { return f == o.f; }
};

struct FockKey {
    HeisMono mono;
    LatticeVec lam;
    bool operator==(const FockKey& o) const { return lam == o.lam && mono == o.mono; }
};

struct FockKeyHash {
    size_t operator()(const FockKey& k) const {
        size_t h = std::hash<long>()(k.lam.m * 1000003 + k.lam.n);
        for (auto& [m, b] : k.mono.f) h = h * 0x9e3779b97f4a7c15ull + (size_t(m) << 1 | b);
        return h;
    }
};

/// Finite linear combination of basis vectors (Heisenberg monomial, e^lam),
/// lam in L^perp, coefficients in Q(sqrt(-3)). Zero coefficients never stored.
struct FockState {
    std::unordered_map<FockKey, FieldElem, FockKeyHash> t;

    bool is_zero() const { return t.empty(); }
    size_t size() const { return t.size(); }

    void add(const FockKey& k, const FieldElem& c);
    FockState& operator+=(const FockState& o);
    FockState& operator-=(const FockState& o);
    FockState operator+(const FockState& o) const;
    FockState operator-(const FockState& o) const;
    FockState operator*(const FieldElem& s) const;
    FockState operator-() const { return *this * FieldElem(-1); }
    bool operator==(const FockState& o) const;
};

/// e^lam with coefficient 1.
FockState exp_state(const LatticeVec& lam);
FockState vacuum();

bool is_homogeneous(const FockState& w);
/// L(0)-eigenvalue <lam,lam>/2 + sum of modes; throws on inhomogeneous input.
Rational weight(const FockState& w);
/// Weight of a single basis term.
Rational term_weight(const FockKey& k);

/// Action of the Heisenberg mode v(n): n<0 creation, n=0 multiplication by
/// <v,lam>, n>0 annihilation via [v(m),u(n)] = m<v,u> delta_{m+n,0}.
FockState heis_apply(const VecH& v, int n, const FockState& w);

/// Natural lift of a lattice isometry: g on every factor and on e^lam.
FockState apply_automorphism_state(const Isometry& g, const FockState& w);

/// Basis of the weight-wt subspace of V_coset, optionally cut to the
/// tau-eigenspace with eigenvalue xi^eps.
std::vector<FockState> graded_basis(const CosetLabel& coset, const Rational& wt,
                                    std::optional<int> tau_eps = std::nullopt);

/// Exact coordinates of target in span (fraction-free elimination), or
/// nullopt when target is outside the span.
std::optional<std::vector<FieldElem>> express_in_span(
    const FockState& target, const std::vector<FockState>& span);

std::string to_string(const FockState& w);
std::string to_string(const FockKey& k);

}  // namespace vltau
