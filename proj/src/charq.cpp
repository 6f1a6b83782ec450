#include "vltau/charq.hpp"

#include <algorithm>
#include <sstream>

#include "vltau/linalg.hpp"

namespace vltau {

void QSeries::add(const Rational& e, const mpz_class& coeff) {
    if (coeff == 0 || e > valid_to) return;
    auto it = c.find(e);
    if (it == c.end()) {
        c.emplace(e, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) c.erase(it);
    }
}

mpz_class QSeries::at(const Rational& e) const {
    auto it = c.find(e);
    return it == c.end() ? mpz_class(0) : it->second;
}

QSeries QSeries::truncated(const Rational& bound) const {
    QSeries r;
    r.valid_to = std::min(valid_to, bound);
    for (auto& [e, v] : c)
        if (e <= r.valid_to) r.c.emplace(e, v);
    return r;
}

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries r = truncated(std::min(valid_to, o.valid_to));
    for (auto& [e, v] : o.c) r.add(e, v);
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
    QSeries r = truncated(std::min(valid_to, o.valid_to));
    for (auto& [e, v] : o.c) r.add(e, -v);
    return r;
}

Rational QSeries::leading_exponent() const {
    if (c.empty()) throw std::domain_error("leading_exponent of zero series");
    return c.begin()->first;
}

QSeries QSeries::operator*(const QSeries& o) const {
    QSeries r;
    Rational la = c.empty() ? valid_to : c.begin()->first;
    Rational lb = o.c.empty() ? o.valid_to : o.c.begin()->first;
    r.valid_to = std::min(valid_to + lb, o.valid_to + la);
    for (auto& [e1, v1] : c) {
        if (e1 > r.valid_to) break;
        for (auto& [e2, v2] : o.c) {
            if (e1 + e2 > r.valid_to) break;
            r.add(e1 + e2, v1 * v2);
        }
    }
    return r;
}

bool QSeries::agree(const QSeries& o) const {
    Rational bound = std::min(valid_to, o.valid_to);
    for (auto& [e, v] : c)
        if (e <= bound && o.at(e) != v) return false;
    for (auto& [e, v] : o.c)
        if (e <= bound && at(e) != v) return false;
    return true;
}

bool QSeries::nonnegative() const {
    for (auto& [e, v] : c)
        if (v < 0) return false;
    return true;
}

std::string to_string(const QSeries& s) {
    std::ostringstream os;
    size_t n = 0;
    for (auto& [e, v] : s.c) {
        if (n++) os << " + ";
        os << v.get_str() << "*q^(" << to_string(e) << ")";
        if (n > 12) {
            os << " + ...";
            break;
        }
    }
    if (s.c.empty()) os << "0";
    os << "  [to q^" << to_string(s.valid_to) << "]";
    return os.str();
}

namespace {

// division u / d, exact over integers; throws if a coefficient fails to divide
QSeries q_div(const QSeries& u, const QSeries& d) {
    if (d.c.empty()) throw std::domain_error("q_div: zero divisor");
    Rational e0 = d.c.begin()->first;
    mpz_class c0 = d.c.begin()->second;
    QSeries q, rem = u;
    q.valid_to = std::min(u.valid_to, d.valid_to) - e0;
    while (!rem.c.empty()) {
        Rational e = rem.c.begin()->first - e0;
        if (e > q.valid_to) break;
        mpz_class v = rem.c.begin()->second;
        if (v % c0 != 0) throw std::runtime_error("q_div: non-integer quotient");
        mpz_class cq = v / c0;
        q.add(e, cq);
        for (auto& [ed, vd] : d.c) rem.add(e + ed, -cq * vd);
    }
    return q;
}

// rank-r partition generating function: prod (1 - q^n)^{-r}, integer exponents
QSeries partition_series(int colors, const Rational& N) {
    QSeries r;
    r.valid_to = N;
    r.add(0, 1);
    long bound = to_long(Rational(N.get_num() / N.get_den()));
    for (int rep = 0; rep < colors; ++rep) {
        for (long n = 1; n <= bound; ++n) {
            // multiply by 1/(1-q^n): cumulative sums over residues
            QSeries next;
            next.valid_to = N;
            for (auto& [e, v] : r.c) {
                for (Rational ee = e; ee <= N; ee += n) next.add(ee, v);
            }
            r = std::move(next);
        }
    }
    return r;
}

}  // namespace

QSeries coset_character(const CosetLabel& c, const Rational& N) {
    QSeries theta;
    theta.valid_to = N;
    for (auto& lam : lattice_points(c, 2 * N)) theta.add(norm(lam) / 2, 1);
    return theta * partition_series(2, N);
}

namespace {

// coordinates of several states over one basis, single elimination
std::optional<Mat> express_many(const std::vector<FockState>& targets,
                                const std::vector<FockState>& span) {
    std::map<std::string, size_t> keyidx;
    auto intern = [&](const FockKey& k) {
        auto s = to_string(k);
        auto it = keyidx.find(s);
        if (it != keyidx.end()) return it->second;
        size_t idx = keyidx.size();
        keyidx.emplace(s, idx);
        return idx;
    };
    for (auto& v : span)
        for (auto& [k, c] : v.t) intern(k);
    for (auto& t : targets)
        for (auto& [k, c] : t.t) intern(k);
    size_t rows = keyidx.size(), n = span.size(), m = targets.size();
    Mat aug(rows, Vec(n + m, FieldElem(0)));
    for (size_t j = 0; j < n; ++j)
        for (auto& [k, c] : span[j].t) aug[intern(k)][j] = c;
    for (size_t j = 0; j < m; ++j)
        for (auto& [k, c] : targets[j].t) aug[intern(k)][n + j] = c;
    auto pivots = rref(aug);
    Mat coords(n, Vec(m, FieldElem(0)));
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= static_cast<int>(n)) return std::nullopt;  // outside span
        for (size_t j = 0; j < m; ++j) coords[pivots[r]][j] = aug[r][n + j];
    }
    return coords;
}

}  // namespace

QSeries eigenspace_character(const Catalog& cat, const CosetLabel& c, EigenSel sel,
                             const Rational& N, std::optional<int> tau_eps) {
    QSeries out;
    out.valid_to = N;
    if (sel == EigenSel::WkPart) out.valid_to = N - rat(2, 5);
    if (sel == EigenSel::WtPart) out.valid_to = N - rat(3, 5);
    Rational frac = norm(coset_representative(c)) / 2;
    frac = frac - to_long(Rational(frac.get_num() / frac.get_den()));  // mod 1
    for (Rational wt = frac; wt <= N; wt += 1) {
        auto basis = graded_basis(c, wt, tau_eps);
        if (basis.empty()) continue;
        size_t n = basis.size();
        auto columns_of = [&](const FockState& op, int mode) {
            std::vector<FockState> imgs;
            for (auto& b : basis) imgs.push_back(mode_apply(op, mode, b));
            auto m = express_many(imgs, basis);
            if (!m) throw std::logic_error("eigenspace_character: not invariant");
            return *m;
        };
        Mat stacked;
        if (sel == EigenSel::MkPart || sel == EigenSel::WkPart) {
            Mat m = columns_of(cat.w2(), 1);
            if (sel == EigenSel::WkPart)
                for (size_t i = 0; i < n; ++i) m[i][i] -= FieldElem(rat(2, 5));
            stacked = std::move(m);
        } else {
            Mat m1 = columns_of(cat.omega1(), 1);
            Mat m2 = columns_of(cat.omega2(), 1);
            if (sel == EigenSel::WtPart)
                for (size_t i = 0; i < n; ++i) m2[i][i] -= FieldElem(rat(3, 5));
            stacked = std::move(m1);
            for (auto& row : m2) stacked.push_back(row);
        }
        size_t dim = nullspace(stacked).size();
        // intrinsic grading: subtract the eigenvalue carried by the
        // complementary factor (so W-pieces start at 3/5, 1/10, 2/5, 1/15)
        Rational offset = 0;
        if (sel == EigenSel::WkPart) offset = rat(2, 5);
        if (sel == EigenSel::WtPart) offset = rat(3, 5);
        if (dim) out.add(wt - offset, static_cast<long>(dim));
    }
    return out;
}

QSeries minimal_model_character(const Rational& cc, const Rational& h,
                                const Rational& N) {
    long p, pp;
    if (cc == rat(1, 2)) {
        p = 3;
        pp = 4;
    } else if (cc == rat(7, 10)) {
        p = 4;
        pp = 5;
    } else if (cc == rat(4, 5)) {
        p = 5;
        pp = 6;
    } else {
        throw std::invalid_argument("minimal_model_character: unknown central charge");
    }
    long r0 = 0, s0 = 0;
    for (long r = 1; r < p && !r0; ++r)
        for (long s = 1; s < pp && !r0; ++s)
            if (rat((pp * r - p * s) * (pp * r - p * s) - (pp - p) * (pp - p),
                    4 * p * pp) == h) {
                r0 = r;
                s0 = s;
            }
    if (!r0) throw std::invalid_argument("minimal_model_character: unknown weight");

    QSeries alt;
    alt.valid_to = N;
    for (long n = -16; n <= 16; ++n) {
        Rational a = rat((2 * p * pp * n + pp * r0 - p * s0) *
                                 (2 * p * pp * n + pp * r0 - p * s0) -
                             (pp - p) * (pp - p),
                         4 * p * pp);
        Rational b = rat((2 * p * pp * n + pp * r0 + p * s0) *
                                 (2 * p * pp * n + pp * r0 + p * s0) -
                             (pp - p) * (pp - p),
                         4 * p * pp);
        if (a <= N) alt.add(a, 1);
        if (b <= N) alt.add(b, -1);
    }
    return alt * partition_series(1, N);
}

TwistedChars twisted_free_characters(const Rational& N) {
    Rational nb = N + 1;  // headroom for the divisions
    // charge-graded character of the polynomial algebra on h1(-1/3-n), h2(-2/3-n)
    QSeries comp[3];
    for (int i = 0; i < 3; ++i) comp[i].valid_to = nb;
    comp[0].add(0, 1);
    // h1 carries tau-charge 1 with modes in -2/3 - Z>=0, h2 charge 2 with
    // modes in -1/3 - Z>=0
    for (int gen = 0; gen < 2; ++gen) {
        int charge = gen + 1;
        for (Rational w = rat(3 - charge, 3); w <= nb; w += 1) {
            // multiply by sum_j q^{j w} xi-charge j*charge
            QSeries next[3];
            for (int i = 0; i < 3; ++i) next[i].valid_to = nb;
            for (int i = 0; i < 3; ++i) {
                for (auto& [e, v] : comp[i].c) {
                    Rational ee = e;
                    int ch = i;
                    while (ee <= nb) {
                        next[ch].add(ee, v);
                        ee += w;
                        ch = (ch + charge) % 3;
                    }
                }
            }
            for (int i = 0; i < 3; ++i) comp[i] = std::move(next[i]);
        }
    }
    TwistedChars tc;
    QSeries feps[3];
    for (int eps = 0; eps < 3; ++eps) {
        feps[eps].valid_to = nb + rat(1, 9);
        for (auto& [e, v] : comp[eps].c) feps[eps].add(e + rat(1, 9), v);
        tc.full = tc.full.c.empty() && eps == 0 ? feps[eps] : tc.full + feps[eps];
    }

    QSeries mt0 = minimal_model_character(rat(4, 5), rat(0), nb) +
                  minimal_model_character(rat(4, 5), rat(3), nb);
    QSeries wt0 = minimal_model_character(rat(4, 5), rat(2, 5), nb) +
                  minimal_model_character(rat(4, 5), rat(7, 5), nb);
    QSeries mt1 = minimal_model_character(rat(4, 5), rat(2, 3), nb);
    QSeries wt1 = minimal_model_character(rat(4, 5), rat(1, 15), nb);
    QSeries det = mt0 * wt1 - wt0 * mt1;

    for (int eps = 0; eps < 3; ++eps) {
        const QSeries& f0 = feps[eps];
        const QSeries& f1 = feps[(eps + 1) % 3];
        tc.mt[eps] = q_div(f0 * wt1 - f1 * wt0, det);
        tc.wt[eps] = q_div(mt0 * f1 - mt1 * f0, det);
        tc.mt_total = eps == 0 ? tc.mt[eps] : tc.mt_total + tc.mt[eps];
        tc.wt_total = eps == 0 ? tc.wt[eps] : tc.wt_total + tc.wt[eps];
    }
    return tc;
}

Report verify_twisted_characters(const Rational& N) {
    Report rep;
    rep.suite = "chars-twisted";
    TwistedChars tc = twisted_free_characters(N);

    for (int eps = 0; eps < 3; ++eps) {
        rep.add("ch M_T(" + std::to_string(eps) + ") has nonnegative integers",
                tc.mt[eps].nonnegative());
        rep.add("ch W_T(" + std::to_string(eps) + ") has nonnegative integers",
                tc.wt[eps].nonnegative());
        // support classes mod 1: M_T(eps) in 1/9 + 2 eps/3, W_T(eps) in
        // 2/45 + c_eps with c = (2/3, 1/3, 0)
        Rational moff = rat(1, 9) + rat(2 * eps, 3);
        Rational woff = rat(2, 45) + rat((2 - eps) % 3, 3);
        bool msup = true, wsup = true;
        for (auto& [e, v] : tc.mt[eps].c) {
            Rational d = e - moff;
            msup = msup && is_integer(d) && d >= 0;
        }
        for (auto& [e, v] : tc.wt[eps].c) {
            Rational d = e - woff;
            wsup = wsup && is_integer(d) && d >= 0;
        }
        rep.add("ch M_T(" + std::to_string(eps) + ") support class", msup,
                to_string(moff) + " + Z", to_string(tc.mt[eps]));
        rep.add("ch W_T(" + std::to_string(eps) + ") support class", wsup,
                to_string(woff) + " + Z", to_string(tc.wt[eps]));
    }

    // leading exponents match the twisted top-level weights
    const Rational mlead[3] = {rat(1, 9), rat(7, 9), rat(13, 9)};
    const Rational wlead[3] = {rat(32, 45), rat(17, 45), rat(2, 45)};
    for (int eps = 0; eps < 3; ++eps) {
        rep.add("M_T(" + std::to_string(eps) + ") minimal weight",
                tc.mt[eps].leading_exponent() == mlead[eps], to_string(mlead[eps]),
                to_string(tc.mt[eps].leading_exponent()));
        rep.add("W_T(" + std::to_string(eps) + ") minimal weight",
                tc.wt[eps].leading_exponent() == wlead[eps], to_string(wlead[eps]),
                to_string(tc.wt[eps].leading_exponent()));
    }

    // displayed heads: four terms each
    {
        bool ok = true;
        Rational h = rat(1, 9);
        const Rational steps[4] = {rat(0), rat(2, 3), rat(1), rat(4, 3)};
        for (auto& s : steps) ok = ok && tc.mt_total.at(h + s) == 1;
        for (auto& [e, v] : tc.mt_total.c)
            if (e <= h + rat(4, 3)) {
                bool listed = false;
                for (auto& s : steps) listed = listed || e == h + s;
                ok = ok && listed;
            }
        rep.add("ch M_T head: q^{1/9}(1 + q^{2/3} + q + q^{4/3})", ok, "",
                to_string(tc.mt_total.truncated(h + rat(4, 3))));
    }
    {
        bool ok = true;
        Rational h = rat(2, 45);
        const Rational steps[4] = {rat(0), rat(1, 3), rat(2, 3), rat(1)};
        for (auto& s : steps) ok = ok && tc.wt_total.at(h + s) == 1;
        for (auto& [e, v] : tc.wt_total.c)
            if (e <= h + 1) {
                bool listed = false;
                for (auto& s : steps) listed = listed || e == h + s;
                ok = ok && listed;
            }
        rep.add("ch W_T head: q^{2/45}(1 + q^{1/3} + q^{2/3} + q)", ok, "",
                to_string(tc.wt_total.truncated(h + 1)));
    }

    // reconstruction of the full twisted-sector character
    QSeries mt0 = minimal_model_character(rat(4, 5), rat(0), N + 1) +
                  minimal_model_character(rat(4, 5), rat(3), N + 1);
    QSeries wt0 = minimal_model_character(rat(4, 5), rat(2, 5), N + 1) +
                  minimal_model_character(rat(4, 5), rat(7, 5), N + 1);
    QSeries rebuilt = tc.mt_total * mt0 + tc.wt_total * wt0;
    rep.add("ch S[tau] = ch M_T ch M_t^0 + ch W_T ch W_t^0",
            rebuilt.agree(tc.full), to_string(tc.full.truncated(rat(3))),
            to_string(rebuilt.truncated(rat(3))));
    return rep;
}

Report verify_decompositions(const Catalog& cat, const Rational& N) {
    Report rep;
    rep.suite = "chars-decompositions";

    // Virasoro factor characters
    auto L = [&](long cn, long cd, long hn, long hd) {
        return minimal_model_character(rat(cn, cd), rat(hn, hd), N);
    };

    // Klein-side eigenspace characters from V_{L_i}
    std::map<Klein, QSeries> mk, wk;
    for (Klein i : {Klein::O, Klein::A, Klein::C}) {
        mk[i] = eigenspace_character(cat, {i, 0}, EigenSel::MkPart, N);
        wk[i] = eigenspace_character(cat, {i, 0}, EigenSel::WkPart, N);
    }
    // ternary-side from V_{L^j}
    std::map<int, QSeries> mt, wt;
    for (int j : {0, 1, 2}) {
        mt[j] = eigenspace_character(cat, {Klein::O, j}, EigenSel::MtPart, N);
        wt[j] = eigenspace_character(cat, {Klein::O, j}, EigenSel::WtPart, N);
    }

    auto chk = [&](const std::string& n, const QSeries& a, const QSeries& b) {
        bool ok = a.agree(b);
        rep.add(n, ok, ok ? "" : to_string(b), ok ? "" : to_string(a));
    };

    // the Virasoro decompositions of the Klein-side pieces
    chk("M_k^0 = L(1/2,0)L(7/10,0) + L(1/2,1/2)L(7/10,3/2)", mk[Klein::O],
        L(1, 2, 0, 1) * L(7, 10, 0, 1) + L(1, 2, 1, 2) * L(7, 10, 3, 2));
    chk("M_k^a = L(1/2,1/16)L(7/10,7/16)", mk[Klein::A],
        L(1, 2, 1, 16) * L(7, 10, 7, 16));
    chk("M_k^c = L(1/2,1/2)L(7/10,0) + L(1/2,0)L(7/10,3/2)", mk[Klein::C],
        L(1, 2, 1, 2) * L(7, 10, 0, 1) + L(1, 2, 0, 1) * L(7, 10, 3, 2));
    chk("W_k^0 = L(1/2,0)L(7/10,3/5) + L(1/2,1/2)L(7/10,1/10)", wk[Klein::O],
        L(1, 2, 0, 1) * L(7, 10, 3, 5) + L(1, 2, 1, 2) * L(7, 10, 1, 10));
    chk("W_k^a = L(1/2,1/16)L(7/10,3/80)", wk[Klein::A],
        L(1, 2, 1, 16) * L(7, 10, 3, 80));
    chk("W_k^c = L(1/2,1/2)L(7/10,3/5) + L(1/2,0)L(7/10,1/10)", wk[Klein::C],
        L(1, 2, 1, 2) * L(7, 10, 3, 5) + L(1, 2, 0, 1) * L(7, 10, 1, 10));

    // ternary-side pieces
    chk("M_t^0 = L(4/5,0) + L(4/5,3)", mt[0], L(4, 5, 0, 1) + L(4, 5, 3, 1));
    chk("M_t^j = L(4/5,2/3)", mt[1], L(4, 5, 2, 3));
    chk("M_t^1 = M_t^2", mt[1], mt[2]);
    chk("W_t^0 = L(4/5,2/5) + L(4/5,7/5)", wt[0], L(4, 5, 2, 5) + L(4, 5, 7, 5));
    chk("W_t^j = L(4/5,1/15)", wt[1], L(4, 5, 1, 15));
    chk("W_t^1 = W_t^2", wt[1], wt[2]);

    // V_{L^{(i,j)}} = M_k^i M_t^j + W_k^i W_t^j  (M_k^b = M_k^a)
    for (auto& c : all_cosets()) {
        Klein i = c.klein == Klein::B ? Klein::A : c.klein;
        QSeries lhs = coset_character(c, N);
        QSeries rhs = mk[i] * mt[c.ternary] + wk[i] * wt[c.ternary];
        chk("ch V_" + to_string(c) + " decomposition", lhs, rhs);
    }

    // tau-refined decomposition of V_L
    QSeries vl_total = coset_character({Klein::O, 0}, N);
    QSeries sum_eps;
    for (int eps = 0; eps < 3; ++eps) {
        QSeries lhs;
        lhs.valid_to = N;
        for (Rational w = 0; w <= N; w += 1) {
            size_t d = graded_basis({Klein::O, 0}, w, eps).size();
            if (d) lhs.add(w, static_cast<long>(d));
        }
        QSeries meps = eigenspace_character(cat, {Klein::O, 0}, EigenSel::MkPart, N, eps);
        QSeries weps = eigenspace_character(cat, {Klein::O, 0}, EigenSel::WkPart, N, eps);
        QSeries rhs = meps * mt[0] + weps * wt[0];
        chk("ch V_L(" + std::to_string(eps) + ") = ch M(eps) ch M_t^0 + ch W(eps) ch W_t^0",
            lhs, rhs);
        sum_eps = eps == 0 ? lhs : sum_eps + lhs;
    }
    chk("sum over eigenvalues recovers ch V_L", sum_eps, vl_total);
    return rep;
}

}  // namespace vltau
