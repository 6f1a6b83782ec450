#include "vltau/fock.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "vltau/linalg.hpp"

namespace vltau {

VecH vec_beta1() { return {FieldElem(1), FieldElem(0)}; }
VecH vec_beta2() { return {FieldElem(0), FieldElem(1)}; }
VecH vec_beta0() { return {FieldElem(-1), FieldElem(-1)}; }
VecH vec_of(const LatticeVec& v) { return {FieldElem(rat(v.m, 6)), FieldElem(rat(v.n, 6))}; }

FieldElem pairing(const VecH& a, const VecH& b) {
    // Gram [[4,-2],[-2,4]] in the beta basis.
    return a.c1 * b.c1 * FieldElem(4) + a.c2 * b.c2 * FieldElem(4) -
           (a.c1 * b.c2 + a.c2 * b.c1) * FieldElem(2);
}

FieldElem pairing(const VecH& a, const LatticeVec& b) { return pairing(a, vec_of(b)); }

void HeisMono::push(int mode, int basis) {
    auto it = std::lower_bound(
        f.begin(), f.end(), std::make_pair(mode, basis),
        [](const std::pair<int, int>& x, const std::pair<int, int>& y) {
            return x.first != y.first ? x.first > y.first : x.second < y.second;
        });
    f.insert(it, {mode, basis});
}

void FockState::add(const FockKey& k, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = t.find(k);
    if (it == t.end()) {
        t.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

FockState& FockState::operator+=(const FockState& o) {
    for (auto& [k, c] : o.t) add(k, c);
    return *this;
}

FockState& FockState::operator-=(const FockState& o) {
    for (auto& [k, c] : o.t) add(k, -c);
    return *this;
}

FockState FockState::operator+(const FockState& o) const {
    FockState r = *this;
    r += o;
    return r;
}

FockState FockState::operator-(const FockState& o) const {
    FockState r = *this;
    r -= o;
    return r;
}

FockState FockState::operator*(const FieldElem& s) const {
    FockState r;
    if (s.is_zero()) return r;
    for (auto& [k, c] : t) r.t.emplace(k, c * s);
    return r;
}

bool FockState::operator==(const FockState& o) const {
    if (t.size() != o.t.size()) return false;
    for (auto& [k, c] : t) {
        auto it = o.t.find(k);
        if (it == o.t.end() || !(it->second == c)) return false;
    }
    return true;
}

FockState exp_state(const LatticeVec& lam) {
    if (!in_dual(lam)) throw std::domain_error("exp_state: not in dual lattice");
    FockState s;
    s.t.emplace(FockKey{{}, lam}, FieldElem(1));
    return s;
}

FockState vacuum() { return exp_state({0, 0}); }

Rational term_weight(const FockKey& k) {
    return norm(k.lam) / 2 + k.mono.degree();
}

bool is_homogeneous(const FockState& w) {
    bool first = true;
    Rational wt;
    for (auto& [k, c] : w.t) {
        Rational tw = term_weight(k);
        if (first) {
            wt = tw;
            first = false;
        } else if (tw != wt) {
            return false;
        }
    }
    return true;
}

Rational weight(const FockState& w) {
    if (w.is_zero()) throw std::domain_error("weight: zero state");
    bool first = true;
    Rational wt;
    for (auto& [k, c] : w.t) {
        Rational tw = term_weight(k);
        if (first) {
            wt = tw;
            first = false;
        } else if (tw != wt) {
            throw std::domain_error("weight: inhomogeneous state");
        }
    }
    return wt;
}

namespace {

// One creation factor appended to every term.
FockState create_basis(const FockState& w, int basis, int mode) {
    FockState r;
    for (auto& [k, c] : w.t) {
        FockKey nk = k;
        nk.mono.push(mode, basis);
        r.add(nk, c);
    }
    return r;
}

// Annihilation v(mode), mode > 0: contract with each matching factor.
FockState annihilate(const FockState& w, const VecH& v, int mode) {
    FockState r;
    FieldElem pair_b[2] = {pairing(v, vec_beta1()), pairing(v, vec_beta2())};
    for (auto& [k, c] : w.t) {
        for (size_t i = 0; i < k.mono.f.size(); ++i) {
            auto [m, b] = k.mono.f[i];
            if (m != mode) continue;
            if (pair_b[b].is_zero()) continue;
            FockKey nk;
            nk.lam = k.lam;
            nk.mono.f = k.mono.f;
            nk.mono.f.erase(nk.mono.f.begin() + i);
            r.add(nk, c * pair_b[b] * FieldElem(mode));
        }
    }
    return r;
}

FockState zero_mode(const FockState& w, const VecH& v) {
    FockState r;
    for (auto& [k, c] : w.t) {
        FieldElem p = pairing(v, k.lam);
        if (!p.is_zero()) r.add(k, c * p);
    }
    return r;
}

}  // namespace

FockState heis_apply(const VecH& v, int n, const FockState& w) {
    if (n == 0) return zero_mode(w, v);
    if (n > 0) return annihilate(w, v, n);
    FockState r;
    if (!v.c1.is_zero()) r += create_basis(w, 0, -n) * v.c1;
    if (!v.c2.is_zero()) r += create_basis(w, 1, -n) * v.c2;
    return r;
}

FockState apply_automorphism_state(const Isometry& g, const FockState& w) {
    VecH gb[2] = {vec_of(g.apply(beta1())), vec_of(g.apply(beta2()))};
    FockState r;
    for (auto& [k, c] : w.t) {
        FockState term = exp_state(g.apply(k.lam)) * c;
        for (auto& [m, b] : k.mono.f) term = heis_apply(gb[b], -m, term);
        r += term;
    }
    return r;
}

namespace {

// All 2-colored Heisenberg monomials of total degree d.
void monos_of_degree(int d, int max_mode, HeisMono cur, std::vector<HeisMono>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (int m = std::min(d, max_mode); m >= 1; --m) {
        for (int b = 0; b < 2; ++b) {
            // keep canonical order: next factor must not precede the last one
            if (!cur.f.empty()) {
                auto [lm, lb] = cur.f.back();
                if (m > lm || (m == lm && b < lb)) continue;
            }
            HeisMono next = cur;
            next.f.push_back({m, b});
            monos_of_degree(d - m, m, next, out);
        }
    }
}

}  // namespace

std::vector<FockState> graded_basis(const CosetLabel& coset, const Rational& wt,
                                    std::optional<int> tau_eps) {
    std::vector<FockState> basis;
    for (const auto& lam : lattice_points(coset, 2 * wt)) {
        Rational d = wt - norm(lam) / 2;
        if (d < 0 || !is_integer(d)) continue;
        std::vector<HeisMono> monos;
        monos_of_degree(static_cast<int>(to_long(d)), static_cast<int>(to_long(d)) > 0
                                                          ? static_cast<int>(to_long(d))
                                                          : 1,
                        {}, monos);
        for (auto& m : monos) {
            FockState s;
            HeisMono sorted;
            for (auto& [mode, b] : m.f) sorted.push(mode, b);
            s.t.emplace(FockKey{sorted, lam}, FieldElem(1));
            basis.push_back(std::move(s));
        }
    }
    if (!tau_eps) return basis;

    // tau-eigenspace: project each basis vector with (1/3) sum xi^{-eps k} tau^k
    // and extract an independent set of the images.
    Isometry tau = iso_tau();
    std::vector<FockState> images;
    for (auto& v : basis) {
        FockState p = v * (xi_pow(0) * FieldElem(rat(1, 3)));
        FockState tv = apply_automorphism_state(tau, v);
        p += tv * (xi_pow(-*tau_eps) * FieldElem(rat(1, 3)));
        FockState t2v = apply_automorphism_state(tau, tv);
        p += t2v * (xi_pow(-2 * *tau_eps) * FieldElem(rat(1, 3)));
        if (!p.is_zero()) images.push_back(std::move(p));
    }
    // independent subset via incremental echelon elimination
    std::vector<FockState> result;
    std::map<std::string, int> keyidx;
    auto intern = [&](const FockKey& k) {
        auto s = to_string(k);
        auto it = keyidx.find(s);
        if (it != keyidx.end()) return it->second;
        int idx = static_cast<int>(keyidx.size());
        keyidx.emplace(s, idx);
        return idx;
    };
    std::vector<std::map<int, FieldElem>> rows;
    std::vector<int> pivots;
    for (auto& img : images) {
        std::map<int, FieldElem> row;
        for (auto& [k, c] : img.t) row[intern(k)] = c;
        for (size_t r = 0; r < rows.size(); ++r) {
            auto f = row.find(pivots[r]);
            if (f == row.end()) continue;
            FieldElem factor = f->second;
            for (auto& [col, val] : rows[r]) {
                FieldElem nv = -factor * val;
                auto g = row.find(col);
                if (g != row.end()) nv += g->second;
                if (nv.is_zero()) {
                    if (g != row.end()) row.erase(g);
                } else {
                    row[col] = nv;
                }
            }
        }
        if (row.empty()) continue;
        int piv = row.begin()->first;
        FieldElem inv = row.begin()->second.inverse();
        for (auto& [col, val] : row) val = val * inv;
        rows.push_back(std::move(row));
        pivots.push_back(piv);
        result.push_back(img);
    }
    return result;
}

std::optional<std::vector<FieldElem>> express_in_span(
    const FockState& target, const std::vector<FockState>& span) {
    std::map<std::string, size_t> keyidx;
    std::vector<const FockKey*> keys;
    auto intern = [&](const FockKey& k) {
        auto s = to_string(k);
        auto it = keyidx.find(s);
        if (it != keyidx.end()) return it->second;
        size_t idx = keyidx.size();
        keyidx.emplace(s, idx);
        return idx;
    };
    for (const auto& v : span)
        for (auto& [k, c] : v.t) intern(k);
    for (auto& [k, c] : target.t) intern(k);

    size_t nrows = keyidx.size(), ncols = span.size();
    Mat a(nrows, Vec(ncols, FieldElem(0)));
    Vec b(nrows, FieldElem(0));
    for (size_t j = 0; j < span.size(); ++j)
        for (auto& [k, c] : span[j].t) a[intern(k)][j] = c;
    for (auto& [k, c] : target.t) b[intern(k)] = c;
    return solve(a, b);
}

std::string to_string(const FockKey& k) {
    std::ostringstream os;
    for (auto& [m, b] : k.mono.f) os << "b" << (b + 1) << "(-" << m << ")";
    if (!k.mono.f.empty()) os << ".";
    os << "e[" << to_string(k.lam) << "]";
    return os.str();
}

std::string to_string(const FockState& w) {
    if (w.is_zero()) return "0";
    std::vector<std::pair<std::string, const FieldElem*>> items;
    for (auto& [k, c] : w.t) items.push_back({to_string(k), &c});
    std::sort(items.begin(), items.end(),
              [](auto& x, auto& y) { return x.first < y.first; });
    std::ostringstream os;
    bool first = true;
    for (auto& [s, c] : items) {
        if (!first) os << " + ";
        os << s << " * (" << to_string(*c) << ")";
        first = false;
    }
    return os.str();
}

}  // namespace vltau
