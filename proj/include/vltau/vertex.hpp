#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "vltau/fock.hpp"

namespace vltau {

/// Generalized binomial coefficient, top an arbitrary integer.
Rational binom(long top, long k);

/// Exact coefficient of z^{-n-1} in Y(u,z)w for u in V_L (trivial cocycle,
/// all pairings <L, L^perp> integral). Finite for finite w.
FockState mode_apply(const FockState& u, int n, const FockState& w);

/// Memo for repeated applications of a fixed named operator to basis terms.
struct OpCache {
    struct Key {
        int op;
        int n;
        FockKey term;
        bool operator==(const Key& o) const {
            return op == o.op && n == o.n && term == o.term;
        }
    };
    struct KeyHash {
        size_t operator()(const Key& k) const {
            return FockKeyHash()(k.term) * 1000003u + size_t(k.op) * 8191u + size_t(k.n + 64);
        }
    };
    std::unordered_map<Key, FockState, KeyHash> memo;

    // graded-basis machinery for whole-operator matrices on V_L
    using SparseMat = std::vector<std::vector<std::pair<int, FieldElem>>>;  // columns
    std::map<long, std::vector<FockKey>> basis;
    std::map<long, std::unordered_map<FockKey, int, FockKeyHash>> index;
    std::map<std::tuple<int, int, long>, SparseMat> mats;  // (op, mode, weight)
    std::map<std::tuple<int, int, long>, SparseMat> quads;  // (op, m+n, weight)

    const std::vector<FockKey>& graded(long wt);
    /// Matrix of u_{mode} from weight wt to weight wt + wt(u) - mode - 1.
    const SparseMat& op_matrix(int op_id, const FockState& u, int mode, long wt);
    /// Cached application of u_{mode} to a single graded-basis term.
    const FockState& term_apply(int op_id, const FockState& u, int mode,
                                const FockKey& term);
};

/// A fixed vector u with a mode-shift convention: apply(k, w) = u_{k+shift} w.
/// Weight-2 generators use shift 1 (L(n) = u_{n+1}), weight-3 use shift 2.
struct ShiftedOp {
    FockState state;
    int shift = 0;
    int cache_id = -1;  // >= 0 enables caching

    FockState apply(int k, const FockState& w, OpCache* cache = nullptr) const;
};

/// The four commutator families of V_L^tau in one bundle.
struct W3Gens {
    FockState w1;  // conformal vector of central charge 6/5
    FockState w2;  // conformal vector of central charge 4/5
    FockState J;
    FockState K;
};

enum class Family { L1, L2, J, K };

/// Checks the Borcherds identity instance (l,m,n) on (u,v,w) exactly.
bool borcherds_check(const FockState& u, const FockState& v, const FockState& w,
                     int l, int m, int n);

/// Checks [A(m), B(n)] against the closed-form right-hand side on every
/// basis state of V_L of weight <= max_wt. Cross-family brackets are zero.
bool commutator_check(const W3Gens& gens, Family a, Family b, int m, int n,
                      const Rational& max_wt, OpCache* cache = nullptr,
                      std::string* diag = nullptr);

/// Checks u_p v_q w against the associativity expansion with minimal
/// regularity constants k, N.
bool formula1_check(const FockState& u, const FockState& v, const FockState& w,
                    int p, int q);

}  // namespace vltau
