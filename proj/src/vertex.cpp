#include "vltau/vertex.hpp"

#include <sstream>
#include <stdexcept>

namespace vltau {

Rational binom(long top, long k) {
    if (k < 0) return rat(0);
    Rational r(1);
    for (long i = 0; i < k; ++i) r *= rat(top - i, i + 1);
    return r;
}

namespace {

void partitions_of(int r, int max_part, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (r == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(r, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(r - p, p, cur, out);
        cur.pop_back();
    }
}

// Backtracking enumeration of one u-term applied to one w-term. Annihilation
// and zero modes act on the original w-factors; creation modes are chosen
// last against the exact remaining z-power budget.
struct TermApply {
    const std::vector<std::pair<int, int>>& factors;  // (n_i >= 1, basis)
    LatticeVec beta_u, lam, mu;
    long h_out, target_z;
    FockState& out;
    VecH vb[2] = {vec_beta1(), vec_beta2()};
    VecH vbu;
    FieldElem pair_lam[2];  // <beta_i, lam>
    FieldElem pair_bu[2];   // <beta_u, beta_i>
    Rational gram[2][2];

    std::vector<std::pair<int, int>> slots;  // original w-factors
    std::vector<bool> removed;
    std::vector<int> deferred;  // factor indices awaiting creation modes

    TermApply(const std::vector<std::pair<int, int>>& f, const LatticeVec& bu,
              const FockKey& wk, long h, long tz, FockState& o)
        : factors(f), beta_u(bu), lam(wk.lam), mu(bu + wk.lam), h_out(h),
          target_z(tz), out(o), vbu(vec_of(bu)), slots(wk.mono.f),
          removed(wk.mono.f.size(), false) {
        pair_lam[0] = pairing(vb[0], lam);
        pair_lam[1] = pairing(vb[1], lam);
        pair_bu[0] = pairing(vbu, vb[0]);
        pair_bu[1] = pairing(vbu, vb[1]);
        gram[0][0] = gram[1][1] = 4;
        gram[0][1] = gram[1][0] = -2;
    }

    void factor_phase(size_t idx, const FieldElem& coeff, long zpow) {
        if (idx == factors.size()) {
            eplus_phase(0, coeff, zpow);
            return;
        }
        auto [ni, bi] = factors[idx];
        // zero mode
        if (!pair_lam[bi].is_zero()) {
            FieldElem c = coeff * pair_lam[bi];
            if (ni % 2 == 0) c = -c;  // binom(-1, ni-1) = (-1)^{ni-1}
            factor_phase(idx + 1, c, zpow - ni);
        }
        // annihilation against remaining original slots
        for (size_t s = 0; s < slots.size(); ++s) {
            if (removed[s]) continue;
            auto [m, b] = slots[s];
            const Rational& g = gram[bi][b];
            removed[s] = true;
            factor_phase(idx + 1,
                         coeff * FieldElem(g * m * binom(-m - 1, ni - 1)),
                         zpow - m - ni);
            removed[s] = false;
        }
        // creation: mode picked in the budget phase
        deferred.push_back(static_cast<int>(idx));
        factor_phase(idx + 1, coeff, zpow);
        deferred.pop_back();
    }

    void eplus_phase(size_t from, const FieldElem& coeff, long zpow) {
        budget_phase(coeff, zpow);
        if (beta_u.is_zero()) return;
        for (size_t s = from; s < slots.size(); ++s) {
            if (removed[s]) continue;
            auto [m, b] = slots[s];
            if (pair_bu[b].is_zero()) continue;
            removed[s] = true;
            eplus_phase(s + 1, coeff * pair_bu[b] * FieldElem(-1), zpow - m);
            removed[s] = false;
        }
    }

    // distribute the exact leftover z-power over creation modes and E^-
    void budget_phase(const FieldElem& coeff, long zpow) {
        long base_n = 0;
        for (int idx : deferred) base_n += factors[idx].first;
        long budget = target_z - zpow;  // = sum d_i + R, all >= 0
        if (budget < 0) return;
        long rem_deg = 0;
        for (size_t s = 0; s < slots.size(); ++s)
            if (!removed[s]) rem_deg += slots[s].first;
        if (rem_deg + base_n + budget != h_out)
            throw std::logic_error("mode_apply: weight bookkeeping violated");
        std::vector<int> extra(deferred.size(), 0);
        creation_phase(0, budget, coeff, extra);
    }

    void creation_phase(size_t di, long budget, const FieldElem& coeff,
                        std::vector<int>& extra) {
        if (di == deferred.size()) {
            emit(budget, coeff, extra);
            return;
        }
        auto [ni, bi] = factors[deferred[di]];
        for (long d = 0; d <= budget; ++d) {
            extra[di] = static_cast<int>(d);
            FieldElem c = coeff * FieldElem(binom(ni + d - 1, ni - 1));
            creation_phase(di + 1, budget - d, c, extra);
        }
        extra[di] = 0;
    }

    // expansion of exp(sum_r beta_u(-r) z^r / r) at a fixed power r > 0,
    // cached per (beta_u, r)
    static const std::vector<std::pair<HeisMono, FieldElem>>& eminus(
        const LatticeVec& bu, long r) {
        static std::map<std::tuple<long, long, long>,
                        std::vector<std::pair<HeisMono, FieldElem>>>
            cache;
        auto key = std::make_tuple(bu.m, bu.n, r);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        std::vector<std::vector<int>> parts_r;
        std::vector<int> cur;
        partitions_of(static_cast<int>(r), static_cast<int>(r), cur, parts_r);
        FockState acc;
        VecH v = vec_of(bu);
        for (auto& pi : parts_r) {
            Rational c(1);
            int run = 1;
            for (size_t i = 0; i < pi.size(); ++i) {
                c /= pi[i];
                if (i + 1 < pi.size() && pi[i + 1] == pi[i]) {
                    ++run;
                    c /= run;
                } else {
                    run = 1;
                }
            }
            FockState term;
            term.add(FockKey{{}, {0, 0}}, FieldElem(c));
            for (int part : pi) term = heis_apply(v, -part, term);
            acc += term;
        }
        std::vector<std::pair<HeisMono, FieldElem>> flat;
        for (auto& [k, c] : acc.t) flat.push_back({k.mono, c});
        return cache.emplace(key, std::move(flat)).first->second;
    }

    void emit(long r, const FieldElem& coeff, const std::vector<int>& extra) {
        if (r > 0 && beta_u.is_zero()) return;
        FockKey base;
        base.lam = mu;
        for (size_t s = 0; s < slots.size(); ++s)
            if (!removed[s]) base.mono.push(slots[s].first, slots[s].second);
        for (size_t di = 0; di < deferred.size(); ++di) {
            auto [ni, bi] = factors[deferred[di]];
            base.mono.push(ni + extra[di], bi);
        }
        if (r == 0) {
            out.add(base, coeff);
            return;
        }
        for (auto& [mono, c] : eminus(beta_u, r)) {
            FockKey k = base;
            for (auto& [md, bs] : mono.f) k.mono.push(md, bs);
            out.add(k, coeff * c);
        }
    }
};

// u-term = factors (n_i, b_i) over e^{beta_u}, applied to w-term over e^{lam}.
void mode_apply_term(const std::vector<std::pair<int, int>>& factors,
                     const LatticeVec& beta_u, int n, const FockKey& wk,
                     const FieldElem& coeff0, const Rational& wt_u,
                     FockState& out) {
    Rational zb = pairing(vec_of(beta_u), wk.lam).re;
    if (!is_integer(zb)) throw std::domain_error("mode_apply: fractional mode");
    long base_z = to_long(zb);

    LatticeVec mu = beta_u + wk.lam;
    Rational w_out = wt_u + term_weight(wk) - n - 1;
    Rational h_out_q = w_out - norm(mu) / 2;
    if (h_out_q < 0 || !is_integer(h_out_q)) return;

    TermApply ta(factors, beta_u, wk, to_long(h_out_q), -n - 1 - base_z, out);
    ta.factor_phase(0, coeff0, 0);
}

}  // namespace

FockState mode_apply(const FockState& u, int n, const FockState& w) {
    FockState out;
    for (auto& [uk, uc] : u.t) {
        if (!in_L(uk.lam)) throw std::domain_error("mode_apply: operator not in V_L");
        Rational wt_u = term_weight(uk);
        for (auto& [wk, wc] : w.t)
            mode_apply_term(uk.mono.f, uk.lam, n, wk, uc * wc, wt_u, out);
    }
    return out;
}

const std::vector<FockKey>& OpCache::graded(long wt) {
    auto it = basis.find(wt);
    if (it != basis.end()) return it->second;
    std::vector<FockKey> keys;
    std::unordered_map<FockKey, int, FockKeyHash> idx;
    if (wt >= 0) {
        for (auto& st : graded_basis({Klein::O, 0}, rat(wt))) {
            const FockKey& k = st.t.begin()->first;
            idx.emplace(k, static_cast<int>(keys.size()));
            keys.push_back(k);
        }
    }
    index.emplace(wt, std::move(idx));
    return basis.emplace(wt, std::move(keys)).first->second;
}

const FockState& OpCache::term_apply(int op_id, const FockState& u, int mode,
                                     const FockKey& term) {
    Key key{op_id, mode, term};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    FockState single;
    single.t.emplace(term, FieldElem(1));
    return memo.emplace(key, mode_apply(u, mode, single)).first->second;
}

const OpCache::SparseMat& OpCache::op_matrix(int op_id, const FockState& u, int mode,
                                             long wt) {
    auto key = std::make_tuple(op_id, mode, wt);
    auto it = mats.find(key);
    if (it != mats.end()) return it->second;
    long tw = wt + to_long(weight(u)) - mode - 1;
    const auto& src = graded(wt);
    SparseMat m(src.size());
    if (tw >= 0) {
        graded(tw);
        const auto& tidx = index.at(tw);
        for (size_t j = 0; j < src.size(); ++j) {
            const FockState& img = term_apply(op_id, u, mode, src[j]);
            for (auto& [k, c] : img.t) m[j].push_back({tidx.at(k), c});
        }
    }
    return mats.emplace(key, std::move(m)).first->second;
}

FockState ShiftedOp::apply(int k, const FockState& w, OpCache* cache) const {
    int n = k + shift;
    if (!cache || cache_id < 0) return mode_apply(state, n, w);
    FockState out;
    for (auto& [wk, wc] : w.t) {
        OpCache::Key key{cache_id, n, wk};
        auto it = cache->memo.find(key);
        if (it == cache->memo.end()) {
            FockState single;
            single.t.emplace(wk, FieldElem(1));
            it = cache->memo.emplace(key, mode_apply(state, n, single)).first;
        }
        out += it->second * wc;
    }
    return out;
}

bool borcherds_check(const FockState& u, const FockState& v, const FockState& w,
                     int l, int m, int n) {
    if (u.is_zero() || v.is_zero() || w.is_zero()) return true;
    Rational wu = weight(u), wv = weight(v), ww = weight(w);

    // sum_i binom(m,i) (u_{l+i} v)_{m+n-i} w
    FockState lhs;
    for (int i = 0; wu + wv - (l + i) - 1 >= 0; ++i) {
        Rational bi = binom(m, i);
        if (bi == 0) continue;
        FockState uv = mode_apply(u, l + i, v);
        if (!uv.is_zero()) lhs += mode_apply(uv, m + n - i, w) * FieldElem(bi);
    }

    // sum_i (-1)^i binom(l,i) (u_{l+m-i} v_{n+i} - (-1)^l v_{l+n-i} u_{m+i}) w
    FockState rhs;
    int lpar = ((l % 2) + 2) % 2;
    for (int i = 0;; ++i) {
        if (l >= 0 && i > l) break;
        bool alive = false;
        Rational bi = binom(l, i);
        if (wv + ww - (n + i) - 1 >= 0) {
            alive = true;
            if (bi != 0) {
                FockState vw = mode_apply(v, n + i, w);
                if (!vw.is_zero())
                    rhs += mode_apply(u, l + m - i, vw) *
                           FieldElem(bi * rat(i % 2 == 0 ? 1 : -1));
            }
        }
        if (wu + ww - (m + i) - 1 >= 0) {
            alive = true;
            if (bi != 0) {
                FockState uw = mode_apply(u, m + i, w);
                if (!uw.is_zero()) {
                    int par = (i + lpar) % 2;  // (-1)^i (-1)^l with overall minus
                    rhs += mode_apply(v, l + n - i, uw) *
                           FieldElem(bi * rat(par == 0 ? -1 : 1));
                }
            }
        }
        if (!alive) break;
    }
    return lhs == rhs;
}

namespace {

// accumulating sparse matrix: columns of (row -> coefficient)
using AccMat = std::vector<std::map<int, FieldElem>>;

AccMat to_acc(const OpCache::SparseMat& m) {
    AccMat a(m.size());
    for (size_t j = 0; j < m.size(); ++j)
        for (auto& [i, c] : m[j]) a[j][i] = c;
    return a;
}

void acc_add(AccMat& a, const AccMat& b, const FieldElem& scale) {
    for (size_t j = 0; j < a.size(); ++j)
        for (auto& [i, c] : b[j]) {
            FieldElem nv = a[j].count(i) ? a[j][i] + c * scale : c * scale;
            if (nv.is_zero()) a[j].erase(i);
            else a[j][i] = nv;
        }
}

// (outer after inner) on column vectors
AccMat compose(const OpCache::SparseMat& outer, const OpCache::SparseMat& inner) {
    AccMat r(inner.size());
    for (size_t j = 0; j < inner.size(); ++j)
        for (auto& [mid, c] : inner[j])
            for (auto& [i, c2] : outer[mid]) {
                FieldElem nv = r[j].count(i) ? r[j][i] + c * c2 : c * c2;
                if (nv.is_zero()) r[j].erase(i);
                else r[j][i] = nv;
            }
    return r;
}

bool acc_equal(const AccMat& a, const AccMat& b) {
    if (a.size() != b.size()) return false;
    for (size_t j = 0; j < a.size(); ++j)
        if (a[j] != b[j]) return false;
    return true;
}

}  // namespace

bool commutator_check(const W3Gens& gens, Family a, Family b, int m, int n,
                      const Rational& max_wt, OpCache* cache, std::string* diag) {
    OpCache local;
    if (!cache) cache = &local;
    struct Op {
        const FockState* st;
        int shift;
        int id;
    };
    auto mk = [&](Family f) -> Op {
        switch (f) {
            case Family::L1: return {&gens.w1, 1, 0};
            case Family::L2: return {&gens.w2, 1, 1};
            case Family::J: return {&gens.J, 2, 2};
            default: return {&gens.K, 2, 3};
        }
    };
    Op A = mk(a), B = mk(b), L1 = mk(Family::L1), L2 = mk(Family::L2);
    // mode k in the L(n)/J(n) convention maps weight wt to wt - k
    auto mat = [&](const Op& o, int k, long wt) -> const OpCache::SparseMat& {
        return cache->op_matrix(o.id, *o.st, k + o.shift, wt);
    };
    // o2(k2) applied lazily after an inner matrix whose target weight is mid
    auto compose_lazy = [&](const Op& o2, int k2, const OpCache::SparseMat& inner,
                            long mid) {
        AccMat r(inner.size());
        long tw = mid - k2;
        if (tw < 0) return r;
        const auto& mid_basis = cache->graded(mid);
        cache->graded(tw);
        const auto& tidx = cache->index.at(tw);
        for (size_t j = 0; j < inner.size(); ++j)
            for (auto& [i, c] : inner[j]) {
                const FockState& img =
                    cache->term_apply(o2.id, *o2.st, k2 + o2.shift, mid_basis[i]);
                for (auto& [k, c2] : img.t) {
                    int row = tidx.at(k);
                    FieldElem nv = c * c2;
                    auto g = r[j].find(row);
                    if (g != r[j].end()) nv += g->second;
                    if (nv.is_zero()) {
                        if (g != r[j].end()) r[j].erase(row);
                    } else {
                        r[j][row] = nv;
                    }
                }
            }
        return r;
    };
    int s = m + n;

    for (long wt = 0; Rational(wt) <= max_wt; ++wt) {
        size_t dim = cache->graded(wt).size();
        AccMat lhs = compose_lazy(A, m, mat(B, n, wt), wt - n);
        acc_add(lhs, compose_lazy(B, n, mat(A, m, wt), wt - m), FieldElem(-1));

        AccMat rhs(dim);
        auto fam_pair = [&](Family x, Family y) {
            return (a == x && b == y) || (a == y && b == x);
        };
        auto add_delta = [&](const Rational& c) {
            if (s != 0) return;
            for (size_t j = 0; j < dim; ++j) {
                FieldElem nv = (rhs[j].count(static_cast<int>(j))
                                    ? rhs[j][static_cast<int>(j)]
                                    : FieldElem(0)) +
                               FieldElem(c);
                if (nv.is_zero()) rhs[j].erase(static_cast<int>(j));
                else rhs[j][static_cast<int>(j)] = nv;
            }
        };
        // normal-ordered sum_k L(k) L(s-k), cached per (op, s, wt)
        auto quad_sum_mat = [&](const Op& L) -> const OpCache::SparseMat& {
            auto key = std::make_tuple(L.id, s, wt);
            auto it = cache->quads.find(key);
            if (it != cache->quads.end()) return it->second;
            AccMat q(dim);
            for (int k = s - static_cast<int>(wt); k <= -2; ++k)
                acc_add(q, compose_lazy(L, k, mat(L, s - k, wt), wt - (s - k)),
                        FieldElem(1));
            for (int k = -1; k <= static_cast<int>(wt); ++k)
                acc_add(q, compose_lazy(L, s - k, mat(L, k, wt), wt - k),
                        FieldElem(1));
            OpCache::SparseMat sq(q.size());
            for (size_t j = 0; j < q.size(); ++j)
                for (auto& [i, c] : q[j]) sq[j].push_back({i, c});
            return cache->quads.emplace(key, std::move(sq)).first->second;
        };

        if (a == Family::L1 && b == Family::L1) {
            acc_add(rhs, to_acc(mat(L1, s, wt)), FieldElem(rat(m - n)));
            add_delta(rat(m) * rat(m * m - 1) / 12 * rat(6, 5));
        } else if (a == Family::L2 && b == Family::L2) {
            acc_add(rhs, to_acc(mat(L2, s, wt)), FieldElem(rat(m - n)));
            add_delta(rat(m) * rat(m * m - 1) / 12 * rat(4, 5));
        } else if (fam_pair(Family::L1, Family::J)) {
            int mm = (a == Family::L1) ? m : n, nn = (a == Family::L1) ? n : m;
            Rational c = rat(2 * mm - nn) * (a == Family::L1 ? 1 : -1);
            acc_add(rhs, to_acc(mat(mk(Family::J), s, wt)), FieldElem(c));
        } else if (fam_pair(Family::L2, Family::K)) {
            int mm = (a == Family::L2) ? m : n, nn = (a == Family::L2) ? n : m;
            Rational c = rat(2 * mm - nn) * (a == Family::L2 ? 1 : -1);
            acc_add(rhs, to_acc(mat(mk(Family::K), s, wt)), FieldElem(c));
        } else if (a == Family::J && b == Family::J) {
            Rational c1 = rat(m - n) * (22 * rat(s + 2) * rat(s + 3) +
                                        35 * rat(m + 2) * rat(n + 2));
            acc_add(rhs, to_acc(mat(L1, s, wt)), FieldElem(c1));
            acc_add(rhs, to_acc(quad_sum_mat(L1)), FieldElem(rat(-120 * (m - n))));
            add_delta(rat(-7, 10) * rat(m) * rat(m * m - 1) * rat(m * m - 4));
        } else if (a == Family::K && b == Family::K) {
            Rational c1 = rat(m - n) * (46 * rat(s + 2) * rat(s + 3) +
                                        65 * rat(m + 2) * rat(n + 2));
            acc_add(rhs, to_acc(mat(L2, s, wt)), FieldElem(-c1));
            acc_add(rhs, to_acc(quad_sum_mat(L2)), FieldElem(rat(240 * (m - n))));
            add_delta(rat(13, 15) * rat(m) * rat(m * m - 1) * rat(m * m - 4));
        }
        // remaining cross pairs commute: rhs stays 0

        if (!acc_equal(lhs, rhs)) {
            if (diag) {
                std::ostringstream os;
                os << "bracket mismatch at m=" << m << " n=" << n << " wt=" << wt;
                *diag = os.str();
            }
            return false;
        }
    }
    return true;
}

bool formula1_check(const FockState& u, const FockState& v, const FockState& w,
                    int p, int q) {
    auto max_nonzero_mode = [&](const FockState& x) -> int {
        long hi = to_long(weight(x) + weight(w));  // x_j w = 0 once weight < 0
        for (long j = hi; j >= 0; --j)
            if (!mode_apply(x, static_cast<int>(j), w).is_zero())
                return static_cast<int>(j);
        return -1;
    };
    int k = max_nonzero_mode(u) + 1;
    int maxv = max_nonzero_mode(v);
    int N = std::max(0, maxv - q);

    FockState lhs = mode_apply(u, p, mode_apply(v, q, w));
    FockState rhs;
    Rational wu = weight(u), wv = weight(v);
    for (int i = 0; i <= N; ++i) {
        for (int j = 0; j <= k; ++j) {
            Rational c = binom(p - k, i) * binom(k, j);
            if (c == 0) continue;
            int inner = p - k - i + j;
            if (wu + wv - inner - 1 < 0) continue;
            FockState uv = mode_apply(u, inner, v);
            if (uv.is_zero()) continue;
            rhs += mode_apply(uv, q + k + i - j, w) * FieldElem(c);
        }
    }
    return lhs == rhs;
}

}  // namespace vltau
