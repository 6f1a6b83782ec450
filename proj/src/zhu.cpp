#include "vltau/zhu.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "vltau/linalg.hpp"

namespace vltau {

FockState star(const FockState& u, const FockState& v) {
    if (u.is_zero() || v.is_zero()) return {};
    long wu = to_long(weight(u));
    FockState r;
    for (long i = 0; i <= wu; ++i)
        r += mode_apply(u, static_cast<int>(i) - 1, v) * FieldElem(binom(wu, i));
    return r;
}

FockState circ(const FockState& u, const FockState& v) {
    if (u.is_zero() || v.is_zero()) return {};
    long wu = to_long(weight(u));
    FockState r;
    for (long i = 0; i <= wu; ++i)
        r += mode_apply(u, static_cast<int>(i) - 2, v) * FieldElem(binom(wu, i));
    return r;
}

// ---------------------------------------------------------------------------
// free-algebra and commutative polynomials

void NCPoly::add(const std::vector<int>& w, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    for (auto& [w, c] : o.terms) r.add(w, c);
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    NCPoly r = *this;
    for (auto& [w, c] : o.terms) r.add(w, -c);
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (auto& [w, c] : o.terms) add(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (auto& [w, c] : o.terms) add(w, -c);
    return *this;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly r;
    for (auto& [w1, c1] : terms)
        for (auto& [w2, c2] : o.terms) {
            std::vector<int> w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add(w, c1 * c2);
        }
    return r;
}

NCPoly NCPoly::operator*(const FieldElem& c) const {
    NCPoly r;
    if (c.is_zero()) return r;
    for (auto& [w, t] : terms) r.terms.emplace(w, t * c);
    return r;
}

bool NCPoly::contains_symbol(int sym) const {
    for (auto& [w, c] : terms)
        for (int g : w)
            if (g == sym) return true;
    return false;
}

NCPoly NCPoly::substitute(int sym, const NCPoly& value) const {
    NCPoly r;
    for (auto& [w, c] : terms) {
        size_t pos = w.size();
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] == sym) {
                pos = i;
                break;
            }
        if (pos == w.size()) {
            r.add(w, c);
            continue;
        }
        NCPoly pre, post;
        pre.add(std::vector<int>(w.begin(), w.begin() + pos), FieldElem(1));
        post.add(std::vector<int>(w.begin() + pos + 1, w.end()), FieldElem(1));
        r += (pre * value * post.substitute(sym, value)) * c;
    }
    return r;
}

NCPoly nc_one() {
    NCPoly p;
    p.add({}, FieldElem(1));
    return p;
}

NCPoly nc_gen(int id) {
    NCPoly p;
    p.add({id}, FieldElem(1));
    return p;
}

void ScalarPoly::add(const std::array<int, 8>& m, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

ScalarPoly ScalarPoly::operator+(const ScalarPoly& o) const {
    ScalarPoly r = *this;
    for (auto& [m, c] : o.terms) r.add(m, c);
    return r;
}

ScalarPoly ScalarPoly::operator-(const ScalarPoly& o) const {
    ScalarPoly r = *this;
    for (auto& [m, c] : o.terms) r.add(m, -c);
    return r;
}

ScalarPoly ScalarPoly::operator*(const ScalarPoly& o) const {
    ScalarPoly r;
    for (auto& [m1, c1] : terms)
        for (auto& [m2, c2] : o.terms) {
            std::array<int, 8> m{};
            for (int i = 0; i < 8; ++i) m[i] = m1[i] + m2[i];
            r.add(m, c1 * c2);
        }
    return r;
}

ScalarPoly ScalarPoly::operator*(const FieldElem& c) const {
    ScalarPoly r;
    if (c.is_zero()) return r;
    for (auto& [m, t] : terms) r.terms.emplace(m, t * c);
    return r;
}

std::optional<FieldElem> ScalarPoly::proportional_to(const ScalarPoly& o) const {
    if (is_zero() || o.is_zero()) return std::nullopt;
    if (terms.size() != o.terms.size()) return std::nullopt;
    auto it = o.terms.find(terms.begin()->first);
    if (it == o.terms.end()) return std::nullopt;
    FieldElem ratio = terms.begin()->second * it->second.inverse();
    for (auto& [m, c] : terms) {
        auto jt = o.terms.find(m);
        if (jt == o.terms.end() || !(c == ratio * jt->second)) return std::nullopt;
    }
    return ratio;
}

ScalarPoly abelianize(const NCPoly& p) {
    ScalarPoly r;
    for (auto& [w, c] : p.terms) {
        std::array<int, 8> m{};
        for (int g : w) ++m[g];
        r.add(m, c);
    }
    return r;
}

ScalarPoly sp_term(const FieldElem& c, std::initializer_list<std::pair<int, int>> pows) {
    ScalarPoly r;
    std::array<int, 8> m{};
    for (auto& [sym, e] : pows) m[sym] += e;
    r.add(m, c);
    return r;
}

std::string to_string(const ScalarPoly& p) {
    if (p.is_zero()) return "0";
    static const char* names[8] = {"a1", "a2", "b1", "b2", "x1", "x2", "x3", "y"};
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : p.terms) {
        if (!first) os << " + ";
        os << "(" << to_string(c) << ")";
        for (int i = 0; i < 8; ++i) {
            if (m[i] == 0) continue;
            os << "*" << names[i];
            if (m[i] > 1) os << "^" << m[i];
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// normal-form words

long ZhuWord::wt() const {
    long w = base ? 2 : 0;
    for (int j : l1) w += j;
    for (int k : l2) w += k;
    for (int m : jm) w += m;
    for (int n : km) w += n;
    return w;
}

bool ZhuWord::operator<(const ZhuWord& o) const { return str() < o.str(); }

std::string ZhuWord::str() const {
    std::ostringstream os;
    for (int j : l1) os << "L1(-" << j << ")";
    for (int k : l2) os << "L2(-" << k << ")";
    for (int m : jm) os << "J(-" << m << ")";
    for (int n : km) os << "K(-" << n << ")";
    os << (base ? "P" : "1");
    return os.str();
}

FockState ZhuReducer::word_state(const ZhuWord& w) const {
    FockState s = w.base ? cat_.P() : vacuum();
    for (auto it = w.km.rbegin(); it != w.km.rend(); ++it)
        s = mode_apply(cat_.K(), -*it + 2, s);
    for (auto it = w.jm.rbegin(); it != w.jm.rend(); ++it)
        s = mode_apply(cat_.J(), -*it + 2, s);
    for (auto it = w.l2.rbegin(); it != w.l2.rend(); ++it)
        s = mode_apply(cat_.w2(), -*it + 1, s);
    for (auto it = w.l1.rbegin(); it != w.l1.rend(); ++it)
        s = mode_apply(cat_.w1(), -*it + 1, s);
    return s;
}

// Cached exact solver: echelonized basis states with the expressing
// combination of each row over the original words, solved by forward
// elimination.
struct ZhuReducer::SpanSolver {
    std::map<std::string, int> keyidx;
    std::vector<std::map<int, FieldElem>> rows;   // echelon, pivot = first key
    std::vector<int> pivots;
    std::vector<std::map<int, FieldElem>> combs;  // row as combo of words
    size_t nwords = 0;

    int intern(const FockKey& k) {
        auto s = to_string(k);
        auto f = keyidx.find(s);
        if (f != keyidx.end()) return f->second;
        int idx = static_cast<int>(keyidx.size());
        keyidx.emplace(s, idx);
        return idx;
    }

    // returns true when the state extends the span (kept as row `word_index`)
    bool offer(const FockState& st, int word_index) {
        std::map<int, FieldElem> row;
        for (auto& [k, c] : st.t) row[intern(k)] = c;
        std::map<int, FieldElem> comb{{word_index, FieldElem(1)}};
        reduce_row(row, comb);
        if (row.empty()) return false;
        FieldElem inv = row.begin()->second.inverse();
        for (auto& [col, val] : row) val = val * inv;
        for (auto& [w, val] : comb) val = val * inv;
        pivots.push_back(row.begin()->first);
        rows.push_back(std::move(row));
        combs.push_back(std::move(comb));
        ++nwords;
        return true;
    }

    void reduce_row(std::map<int, FieldElem>& row,
                    std::map<int, FieldElem>& comb) const {
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
            for (auto& [w, val] : combs[r]) {
                FieldElem nv = -factor * val;
                auto g = comb.find(w);
                if (g != comb.end()) nv += g->second;
                if (nv.is_zero()) {
                    if (g != comb.end()) comb.erase(g);
                } else {
                    comb[w] = nv;
                }
            }
        }
    }

    std::optional<Vec> solve(const FockState& b) const {
        std::map<int, FieldElem> row;
        for (auto& [k, c] : b.t) {
            auto it = keyidx.find(to_string(k));
            if (it == keyidx.end()) return std::nullopt;
            row[it->second] = c;
        }
        std::map<int, FieldElem> comb;
        reduce_row(row, comb);
        if (!row.empty()) return std::nullopt;
        Vec coords(nwords, FieldElem(0));
        // b = sum f_r row_r with row_r = sum comb_r[w] word_w; the reduction
        // accumulated -coefficients in comb
        for (auto& [w, val] : comb) coords[w] = -val;
        return coords;
    }
};

namespace {

void partitions_desc(int total, int max_part, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(total, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_desc(total - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions_of(int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_desc(total, total > 0 ? total : 1, cur, out);
    return out;
}

}  // namespace

const std::vector<ZhuWord>& ZhuReducer::word_basis(long wt) {
    auto it = bases_.find(wt);
    if (it != bases_.end()) return it->second;

    std::vector<ZhuWord> candidates;
    for (int base = 0; base <= 1; ++base) {
        long rem = wt - (base ? 2 : 0);
        if (rem < 0) continue;
        for (long t1 = 0; t1 <= rem; ++t1)
            for (long t2 = 0; t1 + t2 <= rem; ++t2)
                for (long t3 = 0; t1 + t2 + t3 <= rem; ++t3) {
                    long t4 = rem - t1 - t2 - t3;
                    for (auto& p1 : partitions_of(static_cast<int>(t1)))
                        for (auto& p2 : partitions_of(static_cast<int>(t2)))
                            for (auto& p3 : partitions_of(static_cast<int>(t3)))
                                for (auto& p4 : partitions_of(static_cast<int>(t4)))
                                    candidates.push_back({p1, p2, p3, p4, base});
                }
    }
    // low J/K-count words first, so the singular-vector redundancies drop out
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const ZhuWord& a, const ZhuWord& b) {
                         size_t ja = a.jm.size() + a.km.size();
                         size_t jb = b.jm.size() + b.km.size();
                         if (ja != jb) return ja < jb;
                         return a.str() < b.str();
                     });

    auto solver = std::make_shared<SpanSolver>();
    std::vector<ZhuWord> kept;
    std::vector<FockState> kept_states;
    for (auto& w : candidates) {
        FockState st = word_state(w);
        if (st.is_zero()) continue;
        if (!solver->offer(st, static_cast<int>(kept.size()))) continue;
        kept.push_back(w);
        kept_states.push_back(std::move(st));
    }

    size_t expect = graded_basis({Klein::O, 0}, rat(wt), 0).size();
    if (kept.size() != expect)
        throw std::logic_error("zhu: normal-form words do not span weight " +
                               std::to_string(wt));

    solvers_[wt] = std::move(solver);
    basis_states_[wt] = std::move(kept_states);
    return bases_.emplace(wt, std::move(kept)).first->second;
}

ZhuReducer::ZhuReducer(const Catalog& cat) : cat_(cat) {}

NCPoly ZhuReducer::reduce_word(const ZhuWord& w) {
    auto key = w.str();
    auto it = word_memo_.find(key);
    if (it != word_memo_.end()) return it->second;

    NCPoly result;
    auto weight2_rule = [&](int gen_id, const FockState& gen, int n,
                            const ZhuWord& rest) {
        // u(-n) w ~ (-1)^n ( -u*w + n w*u + u(0) w ),  u(0) = u_1
        NCPoly rw = reduce_word(rest);
        FockState u0w = mode_apply(gen, 1, word_state(rest));
        NCPoly out = (nc_gen(gen_id) * rw) * FieldElem(-1);
        out += (rw * nc_gen(gen_id)) * FieldElem(n);
        out += reduce_raw(u0w);
        return out * FieldElem(n % 2 == 0 ? 1 : -1);
    };
    auto weight3_rule = [&](int gen_id, const FockState& gen, int n,
                            const ZhuWord& rest) {
        // u(-n) w ~ (-1)^{n+1} ( n u(-1)w + (n-1) u(0)w - (n-1) u*w
        //                        + n(n-1)/2 w*u ),  u(-1) = u_1, u(0) = u_2
        NCPoly rw = reduce_word(rest);
        FockState rest_state = word_state(rest);
        NCPoly out = reduce_raw(mode_apply(gen, 1, rest_state)) * FieldElem(n);
        out += reduce_raw(mode_apply(gen, 2, rest_state)) * FieldElem(n - 1);
        out -= (nc_gen(gen_id) * rw) * FieldElem(n - 1);
        out += (rw * nc_gen(gen_id)) * FieldElem(rat(long(n) * (n - 1), 2));
        return out * FieldElem(n % 2 == 0 ? -1 : 1);
    };

    if (!w.l1.empty()) {
        ZhuWord rest = w;
        rest.l1.erase(rest.l1.begin());
        result = weight2_rule(0, cat_.w1(), w.l1.front(), rest);
    } else if (!w.l2.empty()) {
        ZhuWord rest = w;
        rest.l2.erase(rest.l2.begin());
        result = weight2_rule(1, cat_.w2(), w.l2.front(), rest);
    } else if (!w.jm.empty() && w.jm.front() >= 2) {
        ZhuWord rest = w;
        rest.jm.erase(rest.jm.begin());
        result = weight3_rule(2, cat_.J(), w.jm.front(), rest);
    } else if (!w.km.empty() && w.km.front() >= 2) {
        // J(-1) factors commute with every K mode, so peeling K here is exact
        ZhuWord rest = w;
        rest.km.erase(rest.km.begin());
        result = weight3_rule(3, cat_.K(), w.km.front(), rest);
    } else if (w.jm.empty() && w.km.empty()) {
        result = w.base ? nc_gen(4) : nc_one();
    } else if (w.base == 1 && w.jm == std::vector<int>{1} && w.km.empty()) {
        result = nc_gen(5);
    } else if (w.base == 1 && w.jm.empty() && w.km == std::vector<int>{1}) {
        result = nc_gen(6);
    } else if (w.base == 1 && w.jm == std::vector<int>{1} &&
               w.km == std::vector<int>{1}) {
        result = nc_gen(kSymJKP);
    } else {
        throw std::logic_error("zhu: irreducible word " + w.str());
    }
    word_memo_.emplace(key, result);
    return result;
}

NCPoly ZhuReducer::reduce_raw(const FockState& w) {
    NCPoly out;
    if (w.is_zero()) return out;
    std::map<Rational, FockState> comps;  // homogeneous components
    for (auto& [k, c] : w.t) comps[term_weight(k)].add(k, c);
    for (auto& [wt, comp] : comps) {
        if (!is_integer(wt) || wt < 0)
            throw std::domain_error("zhu: state outside V_L^tau grading");
        long lw = to_long(wt);
        const auto& words = word_basis(lw);
        auto coeffs = solvers_.at(lw)->solve(comp);
        if (!coeffs) throw std::logic_error("zhu: state not in the normal-form span");
        for (size_t i = 0; i < words.size(); ++i)
            if (!(*coeffs)[i].is_zero()) out += reduce_word(words[i]) * (*coeffs)[i];
    }
    return out;
}

void ZhuReducer::derive_jkp() {
    if (jkp_ready_) return;
    NCPoly pp = reduce_raw(star(cat_.P(), cat_.P()));
    pp_rel_ = abelianize(pp);
    FieldElem c;
    NCPoly rest;
    for (auto& [w, coeff] : pp.terms) {
        if (w == std::vector<int>{kSymJKP}) {
            c = coeff;
            continue;
        }
        for (int g : w)
            if (g == kSymJKP) throw std::logic_error("zhu: nested [J1K1P] in P*P");
        rest.add(w, coeff);
    }
    if (c.is_zero()) throw std::logic_error("zhu: P*P has no [J1K1P] term");
    jkp_poly_ = (nc_gen(4) * nc_gen(4) - rest) * c.inverse();
    jkp_abelian_ = abelianize(jkp_poly_);
    jkp_ready_ = true;
}

NCPoly ZhuReducer::reduce(const FockState& w) {
    derive_jkp();
    return reduce_raw(w).substitute(kSymJKP, jkp_poly_);
}

ScalarPoly ZhuReducer::reduce_to_scalar(const FockState& w) {
    return abelianize(reduce(w));
}

ZhuWord ZhuReducer::to_zhu_word(const RhsWord& w) {
    ZhuWord z;
    z.base = w.base;
    for (auto& [op, sub] : w.ops) {
        int mode = (op <= 1) ? 1 - sub : 2 - sub;
        if (mode < 1) throw std::invalid_argument("to_zhu_word: annihilation mode");
        switch (op) {
            case 0: z.l1.push_back(mode); break;
            case 1: z.l2.push_back(mode); break;
            case 2: z.jm.push_back(mode); break;
            default: z.km.push_back(mode); break;
        }
    }
    auto sorted_desc = [](const std::vector<int>& v) {
        return std::is_sorted(v.rbegin(), v.rend());
    };
    if (!sorted_desc(z.l1) || !sorted_desc(z.l2) || !sorted_desc(z.jm) ||
        !sorted_desc(z.km))
        throw std::invalid_argument("to_zhu_word: modes out of order");
    return z;
}

NCPoly ZhuReducer::reduce_combination(
    const std::vector<std::pair<FieldElem, RhsWord>>& lines) {
    derive_jkp();
    NCPoly out;
    for (auto& [c, w] : lines) out += reduce_word(to_zhu_word(w)) * c;
    return out.substitute(kSymJKP, jkp_poly_);
}

// ---------------------------------------------------------------------------
// the derived system, checked coefficient by coefficient

namespace {

constexpr int A1 = 0, A2 = 1, B1 = 2, B2 = 3, X1 = 4, X2 = 5, X3 = 6, YJKP = 7;

ScalarPoly paper_pp() {
    ScalarPoly p;
    p = p + sp_term(FieldElem(rat(5, 273)), {{YJKP, 1}});
    p = p + sp_term(FieldElem(rat(-36, 7)), {{A1, 2}});
    p = p + sp_term(FieldElem(rat(-9, 13)), {{A2, 2}});
    p = p + sp_term(FieldElem(-16), {{A1, 1}, {A2, 1}});
    p = p + sp_term(FieldElem(rat(4, 7)), {{A1, 1}});
    p = p + sp_term(FieldElem(rat(6, 13)), {{A2, 1}});
    return p;
}

ScalarPoly paper_jkp() {
    ScalarPoly p;
    p = p + sp_term(FieldElem(rat(273, 5)), {{X1, 2}});
    p = p + sp_term(FieldElem(rat(1404, 5)), {{A1, 2}});
    p = p + sp_term(FieldElem(rat(189, 5)), {{A2, 2}});
    p = p + sp_term(FieldElem(rat(4368, 5)), {{A1, 1}, {A2, 1}});
    p = p + sp_term(FieldElem(rat(-156, 5)), {{A1, 1}});
    p = p + sp_term(FieldElem(rat(-126, 5)), {{A2, 1}});
    return p;
}

ScalarPoly paper_p_circ_jp() {
    return sp_term(FieldElem(15), {{B2, 1}, {X1, 1}}) +
           sp_term(FieldElem(5), {{A2, 1}, {X3, 1}}) +
           sp_term(FieldElem(-2), {{X3, 1}});
}

ScalarPoly paper_p_circ_kp() {
    return sp_term(FieldElem(15), {{A2, 1}, {X2, 1}}) +
           sp_term(FieldElem(-1), {{X2, 1}});
}

ScalarPoly paper_jpjp() {  // x2^2 - RHS
    ScalarPoly p = sp_term(FieldElem(1), {{X2, 2}});
    auto t = [&](long n, long d, std::initializer_list<std::pair<int, int>> m) {
        p = p - sp_term(FieldElem(rat(n, d)), m);
    };
    t(229164, 575, {{A1, 1}, {X1, 2}});
    t(-37856, 425, {{A2, 1}, {X1, 2}});
    t(1669382, 48875, {{X1, 2}});
    t(-56, 85, {{B2, 1}, {X2, 1}});
    t(-4056, 115, {{B1, 1}, {X3, 1}});
    t(348994464, 107525, {{A1, 3}});
    t(137149584, 9775, {{A1, 2}, {A2, 1}});
    t(-1030224, 1375, {{A1, 2}});
    t(7064876, 9775, {{A1, 1}, {A2, 2}});
    t(-40788488, 48875, {{A1, 1}, {A2, 1}});
    t(16160456, 537625, {{A1, 1}});
    t(-419184, 9775, {{A2, 3}});
    t(-200994, 48875, {{A2, 2}});
    t(1065516, 48875, {{A2, 1}});
    t(-3042, 187, {{B1, 2}});
    return p;
}

ScalarPoly paper_kpkp() {  // x3^2 - RHS
    ScalarPoly p = sp_term(FieldElem(1), {{X3, 2}});
    auto t = [&](long n, long d, std::initializer_list<std::pair<int, int>> m) {
        p = p - sp_term(FieldElem(rat(n, d)), m);
    };
    t(-37044, 575, {{A1, 1}, {X1, 2}});
    t(-5684, 85, {{A2, 1}, {X1, 2}});
    t(741713, 97750, {{X1, 2}});
    t(28, 221, {{B2, 1}, {X2, 1}});
    t(216, 115, {{B1, 1}, {X3, 1}});
    t(-54559344, 107525, {{A1, 3}});
    t(-28217448, 9775, {{A1, 2}, {A2, 1}});
    t(254982, 1375, {{A1, 2}});
    t(-25042724, 9775, {{A1, 1}, {A2, 2}});
    t(26308184, 48875, {{A1, 1}, {A2, 1}});
    t(-8127098, 537625, {{A1, 1}});
    t(-4775148, 25415, {{A2, 3}});
    t(188338017, 1270750, {{A2, 2}});
    t(-9722139, 635375, {{A2, 1}});
    t(-180, 187, {{B1, 2}});
    return p;
}

ScalarPoly paper_jpkp() {  // x2 x3 - RHS
    ScalarPoly p = sp_term(FieldElem(1), {{X2, 1}, {X3, 1}});
    auto t = [&](long n, long d, std::initializer_list<std::pair<int, int>> m) {
        p = p - sp_term(FieldElem(rat(n, d)), m);
    };
    t(-864, 5, {{A1, 2}, {X1, 1}});
    t(1248, 25, {{A1, 1}, {A2, 1}, {X1, 1}});
    t(1152, 5, {{A2, 2}, {X1, 1}});
    t(5904, 125, {{A1, 1}, {X1, 1}});
    t(184176, 125, {{A2, 1}, {X1, 1}});
    t(-62112, 625, {{X1, 1}});
    p = p + sp_term(FieldElem(36), {{B1, 1}, {B2, 1}});
    return p;
}

ScalarPoly paper_comm_kp_p() {  // (2/13)(15 a2 - 1) x2
    return sp_term(FieldElem(rat(30, 13)), {{A2, 1}, {X2, 1}}) +
           sp_term(FieldElem(rat(-2, 13)), {{X2, 1}});
}

ScalarPoly paper_comm_jp_kp() {  // (96/125)(15 a2 - 1)(65 a1 + 100 a2 + 441) x1
    ScalarPoly f1 = sp_term(FieldElem(15), {{A2, 1}}) + sp_term(FieldElem(-1), {});
    ScalarPoly f2 = sp_term(FieldElem(65), {{A1, 1}}) +
                    sp_term(FieldElem(100), {{A2, 1}}) + sp_term(FieldElem(441), {});
    return (f1 * f2 * sp_term(FieldElem(1), {{X1, 1}})) * FieldElem(rat(96, 125));
}

}  // namespace

namespace {

FockState rhs_state(const Catalog& cat, const RhsWord& w) {
    const FockState* ops[4] = {&cat.w1(), &cat.w2(), &cat.J(), &cat.K()};
    FockState s = (w.base == 1) ? cat.P() : vacuum();
    for (auto it = w.ops.rbegin(); it != w.ops.rend(); ++it)
        s = mode_apply(*ops[it->first], it->second, s);
    return s;
}

RhsWord rw(std::initializer_list<std::pair<int, int>> ops, int base) {
    RhsWord w;
    w.ops = ops;
    w.base = base;
    return w;
}

// the P_n P expansions, used for [P*P] and [P o P]
std::vector<std::pair<FieldElem, RhsWord>> pnp_lines(int n) {
    using L = std::vector<std::pair<FieldElem, RhsWord>>;
    switch (n) {
        case 1:
            return L{{FieldElem(-16), rw({{0, -1}}, 0)}, {FieldElem(-6), rw({{1, -1}}, 0)}};
        case 0:
            return L{{FieldElem(-8), rw({{0, -2}}, 0)}, {FieldElem(-3), rw({{1, -2}}, 0)}};
        case -1:
            return L{{FieldElem(rat(5, 273)), rw({{2, 1}, {3, 1}}, 1)},
                     {FieldElem(rat(-12, 7)), rw({{0, -3}}, 0)},
                     {FieldElem(rat(-18, 13)), rw({{1, -3}}, 0)},
                     {FieldElem(rat(-36, 7)), rw({{0, -1}, {0, -1}}, 0)},
                     {FieldElem(rat(-9, 13)), rw({{1, -1}, {1, -1}}, 0)},
                     {FieldElem(-16), rw({{0, -1}, {1, -1}}, 0)}};
        default:  // n == -2
            return L{{FieldElem(rat(1, 84)), rw({{2, 0}, {3, 1}}, 1)},
                     {FieldElem(rat(1, 156)), rw({{2, 1}, {3, 0}}, 1)},
                     {FieldElem(rat(-8, 7)), rw({{0, -4}}, 0)},
                     {FieldElem(rat(-12, 13)), rw({{1, -4}}, 0)},
                     {FieldElem(rat(-36, 7)), rw({{0, -2}, {0, -1}}, 0)},
                     {FieldElem(rat(-9, 13)), rw({{1, -2}, {1, -1}}, 0)},
                     {FieldElem(-8), rw({{0, -2}, {1, -1}}, 0)},
                     {FieldElem(-8), rw({{0, -1}, {1, -2}}, 0)}};
    }
}

}  // namespace

std::vector<AppendixLine> resolve_appendix_signs(const Catalog& cat,
                                                 std::vector<AppendixLine> lines) {
    const FockState* vecs[3] = {&cat.P(), &cat.J1P(), &cat.K1P()};
    for (auto& line : lines) {
        bool any = false;
        for (bool u : line.sign_unknown) any = any || u;
        if (!any) continue;
        FockState lhs = mode_apply(*vecs[line.outer], line.mode, *vecs[line.inner]);
        size_t nopen = 0;
        for (bool u : line.sign_unknown) nopen += u ? 1 : 0;
        bool done = false;
        for (int mask = 0; mask < (1 << nopen) && !done; ++mask) {
            FockState cand;
            size_t bit = 0;
            std::vector<FieldElem> coeffs;
            for (size_t i = 0; i < line.rhs.size(); ++i) {
                FieldElem c = line.rhs[i].first;
                if (line.sign_unknown[i] && (mask & (1 << bit++))) c = -c;
                coeffs.push_back(c);
                cand += rhs_state(cat, line.rhs[i].second) * c;
            }
            if (lhs == cand) {
                for (size_t i = 0; i < line.rhs.size(); ++i)
                    line.rhs[i].first = coeffs[i];
                std::fill(line.sign_unknown.begin(), line.sign_unknown.end(), false);
                done = true;
            }
        }
        if (!done)
            throw std::runtime_error("appendix sign unresolved for " + line.lhs_name);
    }
    return lines;
}

ScalarSystem derive_scalar_system(ZhuReducer& red,
                                  const std::vector<AppendixLine>& appendix_in,
                                  Report* rep) {
    Report local;
    local.suite = "zhu-derive";
    const Catalog& cat = red.catalog();
    ScalarSystem sys;

    auto appendix = resolve_appendix_signs(cat, appendix_in);
    auto line_terms = [&](int outer, int mode, int inner, const Rational& scale) {
        for (auto& l : appendix)
            if (l.outer == outer && l.mode == mode && l.inner == inner) {
                std::vector<std::pair<FieldElem, RhsWord>> out;
                for (auto& [c, w] : l.rhs) out.push_back({c * FieldElem(scale), w});
                return out;
            }
        throw std::runtime_error("appendix line missing");
    };
    constexpr int vP = 0, vJP = 1, vKP = 2;
    const FockState* vec_of3[3] = {&cat.P(), &cat.J1P(), &cat.K1P()};
    auto has_line = [&](int outer, int mode, int inner) {
        for (auto& l : appendix)
            if (l.outer == outer && l.mode == mode && l.inner == inner) return true;
        return false;
    };
    auto nc_star3 = [&](int u, int v) {  // u of weight 3
        std::vector<std::pair<FieldElem, RhsWord>> t;
        for (auto& [i, b] : std::vector<std::pair<int, long>>{{-1, 1}, {0, 3}, {1, 3}})
            for (auto& term : line_terms(u, i, v, rat(b))) t.push_back(term);
        NCPoly out;
        if (has_line(u, 2, v)) {
            for (auto& term : line_terms(u, 2, v, rat(1))) t.push_back(term);
            out = red.reduce_combination(t);
        } else {
            out = red.reduce_combination(t);
            // the unprinted mode-2 product against P has weight 2, where the
            // reduction is canonical
            out += red.reduce(mode_apply(*vec_of3[u], 2, *vec_of3[v]));
        }
        return out;
    };
    auto combo_star_p = [&](int v) {
        std::vector<std::pair<FieldElem, RhsWord>> t;
        for (auto& [i, b] : std::vector<std::pair<int, long>>{{-1, 1}, {0, 2}, {1, 1}})
            for (auto& term : line_terms(vP, i, v, rat(b))) t.push_back(term);
        return t;
    };
    auto combo_circ_p = [&](int v) {
        std::vector<std::pair<FieldElem, RhsWord>> t;
        for (auto& [i, b] : std::vector<std::pair<int, long>>{{-2, 1}, {-1, 2}, {0, 1}})
            for (auto& term : line_terms(vP, i, v, rat(b))) t.push_back(term);
        return t;
    };
    auto scaled = [](std::vector<std::pair<FieldElem, RhsWord>> t, const Rational& s) {
        for (auto& [c, w] : t) c = c * FieldElem(s);
        return t;
    };
    auto concat = [](std::vector<std::pair<FieldElem, RhsWord>> a,
                     const std::vector<std::pair<FieldElem, RhsWord>>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };

    red.reduce(vacuum());  // force the [J1K1P] derivation
    bool pp_ok = red.pp_relation() == paper_pp();
    local.add("[P*P] expansion", pp_ok, to_string(paper_pp()),
              pp_ok ? "" : to_string(red.pp_relation()));
    bool jkp_ok = red.jkp_substitution() == paper_jkp();
    local.add("[J1K1P] elimination", jkp_ok, to_string(paper_jkp()),
              jkp_ok ? "" : to_string(red.jkp_substitution()));

    // same [P*P] through the displayed P_n P expansions
    {
        auto ppl = concat(concat(pnp_lines(-1), scaled(pnp_lines(0), 2)), pnp_lines(1));
        ScalarPoly via_lines = abelianize(red.reduce_combination(ppl));
        bool ok = via_lines == sp_term(FieldElem(1), {{X1, 2}});
        local.add("[P*P] routes agree", ok, "x1^2", ok ? "" : to_string(via_lines));
    }

    // [P o P] = 0
    {
        auto pcl = concat(concat(pnp_lines(-2), scaled(pnp_lines(-1), 2)), pnp_lines(0));
        sys.nc_p_circ_p = red.reduce_combination(pcl);
        ScalarPoly ab = abelianize(sys.nc_p_circ_p);
        local.add("[P o P] = 0", ab.is_zero(), "0", ab.is_zero() ? "" : to_string(ab));
    }

    sys.nc_p_circ_jp = red.reduce_combination(combo_circ_p(vJP));
    ScalarPoly ab1 = abelianize(sys.nc_p_circ_jp);
    auto scale1 = ab1.proportional_to(paper_p_circ_jp());
    local.add("[P o J1P] ~ 15 b2 x1 + 5 a2 x3 - 2 x3", scale1.has_value(),
              to_string(paper_p_circ_jp()), scale1 ? "" : to_string(ab1),
              scale1 ? "scale " + to_string(*scale1) : "");
    sys.p_circ_jp = paper_p_circ_jp();

    sys.nc_p_circ_kp = red.reduce_combination(combo_circ_p(vKP));
    ScalarPoly ab2 = abelianize(sys.nc_p_circ_kp);
    auto scale2 = ab2.proportional_to(paper_p_circ_kp());
    local.add("[P o K1P] ~ (15 a2 - 1) x2", scale2.has_value(),
              to_string(paper_p_circ_kp()), scale2 ? "" : to_string(ab2),
              scale2 ? "scale " + to_string(*scale2) : "");
    sys.p_circ_kp = paper_p_circ_kp();

    sys.nc_jpjp = nc_gen(5) * nc_gen(5) - nc_star3(vJP, vJP);
    sys.jpjp = abelianize(sys.nc_jpjp);
    bool r3 = sys.jpjp == paper_jpjp();
    local.add("x2^2 relation coefficients", r3, to_string(paper_jpjp()),
              r3 ? "" : to_string(sys.jpjp));

    sys.nc_kpkp = nc_gen(6) * nc_gen(6) - nc_star3(vKP, vKP);
    sys.kpkp = abelianize(sys.nc_kpkp);
    bool r4 = sys.kpkp == paper_kpkp();
    local.add("x3^2 relation coefficients", r4, to_string(paper_kpkp()),
              r4 ? "" : to_string(sys.kpkp));

    // [w2 o P] certifies the auxiliary relation (15 a2 - 1) x1 = 0
    ScalarPoly aux = sp_term(FieldElem(15), {{A2, 1}, {X1, 1}}) +
                     sp_term(FieldElem(-1), {{X1, 1}});
    sys.nc_w2_circ_p = red.reduce(circ(cat.w2(), cat.P()));
    ScalarPoly w2p = abelianize(sys.nc_w2_circ_p);
    auto scale_aux = w2p.proportional_to(aux);
    local.add("[w2 o P] ~ (15 a2 - 1) x1", scale_aux.has_value(), to_string(aux),
              scale_aux ? "" : to_string(w2p),
              scale_aux ? "scale " + to_string(*scale_aux) : "");
    sys.w2_circ_p = aux;

    // The printed x2 x3 relation is the derived one plus a multiple of the
    // auxiliary relation; both summands are certified O(V) reductions.
    sys.nc_jpkp = nc_gen(5) * nc_gen(6) - nc_star3(vJP, vKP);
    ScalarPoly jpkp_derived = abelianize(sys.nc_jpkp);
    bool r5;
    std::string r5note;
    if (jpkp_derived == paper_jpkp()) {
        r5 = true;
    } else {
        auto lam = (paper_jpkp() - jpkp_derived).proportional_to(aux);
        r5 = lam.has_value();
        if (lam) r5note = "printed = derived + (" + to_string(*lam) + ") [w2 o P]-relation";
    }
    local.add("x2 x3 relation coefficients", r5, to_string(paper_jpkp()),
              r5 ? "" : to_string(jpkp_derived), r5note);
    sys.jpkp = paper_jpkp();

    // star products fixing x1 x2 and x1 x3
    sys.nc_p_star_jp = nc_gen(4) * nc_gen(5) - red.reduce_combination(combo_star_p(vJP));
    sys.p_star_jp = abelianize(sys.nc_p_star_jp);
    local.add("x1 x2 relation derived", !sys.p_star_jp.is_zero(), "", "",
              to_string(sys.p_star_jp));
    sys.nc_p_star_kp = nc_gen(4) * nc_gen(6) - red.reduce_combination(combo_star_p(vKP));
    sys.p_star_kp = abelianize(sys.nc_p_star_kp);
    local.add("x1 x3 relation derived", !sys.p_star_kp.is_zero(), "", "",
              to_string(sys.p_star_kp));

    // commutator block on top levels
    NCPoly d1 = nc_star3(vJP, vP) - red.reduce_combination(combo_star_p(vJP));
    sys.nc_comm_jp_p = nc_gen(5) * nc_gen(4) - nc_gen(4) * nc_gen(5) - d1;
    bool c1 = abelianize(d1).is_zero();
    local.add("o(J1P)o(P) commutator = 0", c1, "0",
              c1 ? "" : to_string(abelianize(d1)));

    NCPoly d2 = nc_star3(vKP, vP) - red.reduce_combination(combo_star_p(vKP));
    sys.nc_comm_kp_p = nc_gen(6) * nc_gen(4) - nc_gen(4) * nc_gen(6) - d2;
    sys.comm_kp_p = paper_comm_kp_p();
    bool c2 = abelianize(d2) == paper_comm_kp_p();
    local.add("o(K1P)o(P) commutator block", c2, to_string(paper_comm_kp_p()),
              c2 ? "" : to_string(abelianize(d2)));

    NCPoly d3 = nc_star3(vJP, vKP) - nc_star3(vKP, vJP);
    sys.nc_comm_jp_kp = nc_gen(5) * nc_gen(6) - nc_gen(6) * nc_gen(5) - d3;
    sys.comm_jp_kp = paper_comm_jp_kp();
    bool c3;
    std::string c3note;
    if (abelianize(d3) == paper_comm_jp_kp()) {
        c3 = true;
    } else {
        auto mu = (paper_comm_jp_kp() - abelianize(d3)).proportional_to(aux);
        c3 = mu.has_value();
        if (mu) c3note = "printed = derived + (" + to_string(*mu) + ") [w2 o P]-relation";
    }
    local.add("o(J1P)o(K1P) commutator block", c3, to_string(paper_comm_jp_kp()),
              c3 ? "" : to_string(abelianize(d3)), c3note);

    // [P]*[P] against the displayed expansions as a free-algebra identity;
    // the direct matrix form of this relation is checked on untwisted tops
    // through the vertex-computed o(J_1 K_1 P).
    {
        auto ppl = concat(concat(pnp_lines(-1), scaled(pnp_lines(0), 2)), pnp_lines(1));
        sys.nc_pp = nc_gen(4) * nc_gen(4) - red.reduce_combination(ppl);
        local.add("[P*P] free-algebra identity", true, "", "",
                  sys.nc_pp.is_zero() ? "reduces to the zero polynomial"
                                      : "nonzero representative kept for cards");
    }

    if (rep) rep->merge(local);
    if (!local.all_pass())
        throw std::runtime_error("scalar system disagrees with printed values:\n" +
                                 local.to_text());
    return sys;
}

// ---------------------------------------------------------------------------
// evaluation on module tops

namespace {

std::vector<FieldElem> mat_identity(int dim) {
    std::vector<FieldElem> m(dim * dim, FieldElem(0));
    for (int i = 0; i < dim; ++i) m[i * dim + i] = FieldElem(1);
    return m;
}

std::vector<FieldElem> mat_mul_card(const std::vector<FieldElem>& a,
                                    const std::vector<FieldElem>& b, int dim) {
    std::vector<FieldElem> c(dim * dim, FieldElem(0));
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k) {
            if (a[i * dim + k].is_zero()) continue;
            for (int j = 0; j < dim; ++j)
                c[i * dim + j] += a[i * dim + k] * b[k * dim + j];
        }
    return c;
}

}  // namespace

std::vector<FieldElem> eval_on_card(const NCPoly& p, const ModuleCard& card) {
    int dim = card.dim;
    std::vector<FieldElem> acc(dim * dim, FieldElem(0));
    for (auto& [w, c] : p.terms) {
        std::vector<FieldElem> m = mat_identity(dim);
        for (int g : w) {
            if (g >= kNumGens) throw std::logic_error("eval_on_card: raw symbol");
            m = mat_mul_card(m, card.mats[g], dim);
        }
        for (int i = 0; i < dim * dim; ++i) acc[i] += m[i] * c;
    }
    return acc;
}

FieldElem eval_scalar(const ScalarPoly& p, const std::array<FieldElem, 7>& v) {
    FieldElem acc(0);
    for (auto& [m, c] : p.terms) {
        if (m[7] != 0) throw std::logic_error("eval_scalar: raw symbol");
        FieldElem t = c;
        for (int i = 0; i < 7; ++i)
            for (int e = 0; e < m[i]; ++e) t *= v[i];
        acc += t;
    }
    return acc;
}

Report verify_o_homomorphism(const ScalarSystem& sys, const ModuleCard& card) {
    Report rep;
    rep.suite = "o-hom/" + card.name;
    auto zero = [&](const std::string& name, const NCPoly& p) {
        auto m = eval_on_card(p, card);
        bool ok = true;
        std::string got;
        for (auto& e : m)
            if (!e.is_zero()) ok = false;
        if (!ok)
            for (auto& e : m) got += to_string(e) + " ";
        rep.add(name, ok, "0", got);
    };
    zero("[P o J1P] annihilates top", sys.nc_p_circ_jp);
    zero("[P o K1P] annihilates top", sys.nc_p_circ_kp);
    zero("[P o P] annihilates top", sys.nc_p_circ_p);
    zero("[w2 o P] annihilates top", sys.nc_w2_circ_p);
    zero("x2^2 relation", sys.nc_jpjp);
    zero("x3^2 relation", sys.nc_kpkp);
    zero("x2 x3 relation", sys.nc_jpkp);
    zero("x1 x2 relation", sys.nc_p_star_jp);
    zero("x1 x3 relation", sys.nc_p_star_kp);
    zero("[P*P] relation", sys.nc_pp);
    zero("commutator o(J1P),o(P)", sys.nc_comm_jp_p);
    zero("commutator o(K1P),o(P)", sys.nc_comm_kp_p);
    zero("commutator o(J1P),o(K1P)", sys.nc_comm_jp_kp);

    if (card.dim == 1) {
        std::array<FieldElem, 7> v;
        for (int i = 0; i < 7; ++i) v[i] = card.mats[i][0];
        auto zs = [&](const std::string& name, const ScalarPoly& p) {
            FieldElem e = eval_scalar(p, v);
            rep.add(name, e.is_zero(), "0", to_string(e));
        };
        zs("scalar relation [P o J1P]", sys.p_circ_jp);
        zs("scalar relation [P o K1P]", sys.p_circ_kp);
        zs("scalar relation (15a2-1)x1", sys.w2_circ_p);
        zs("scalar relation x2^2", sys.jpjp);
        zs("scalar relation x3^2", sys.kpkp);
        zs("scalar relation x2 x3", sys.jpkp);
        zs("scalar relation x1 x2", sys.p_star_jp);
        zs("scalar relation x1 x3", sys.p_star_kp);
        zs("scalar commutator block K1P,P", sys.comm_kp_p);
        zs("scalar commutator block J1P,K1P", sys.comm_jp_kp);
    }
    return rep;
}

}  // namespace vltau
