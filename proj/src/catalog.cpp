#include "vltau/catalog.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vltau {

namespace {

FockState e_plus_minus(const LatticeVec& b, int sign_minus) {
    // sign_minus 0: e^b + e^{-b}; 1: e^b - e^{-b}
    FockState s = exp_state(b);
    s += exp_state(-b) * FieldElem(sign_minus ? -1 : 1);
    return s;
}

LatticeVec beta_of(int i) {
    if (i == 0) return beta0();
    return i == 1 ? beta1() : beta2();
}

}  // namespace

FockState Catalog::x_alpha(int i) const { return e_plus_minus(beta_of(i), 0); }
FockState Catalog::y_alpha(int i) const { return e_plus_minus(beta_of(i), 1); }

FockState Catalog::w_alpha(int i) const {
    // (1/2) a_i(-1)^2 - x(a_i) = (1/4) b_i(-1)^2 - x(a_i)
    VecH b = vec_of(beta_of(i));
    FockState s = heis_apply(b, -1, heis_apply(b, -1, vacuum())) * FieldElem(rat(1, 4));
    s -= x_alpha(i);
    return s;
}

Catalog::Catalog() {
    // omega = (1/12) sum_i b_i(-1)^2
    for (int i = 0; i < 3; ++i) {
        VecH b = vec_of(beta_of(i));
        omega_ += heis_apply(b, -1, heis_apply(b, -1, vacuum())) * FieldElem(rat(1, 12));
    }
    w1_ = (w_alpha(1) + w_alpha(2) + w_alpha(0)) * FieldElem(rat(1, 5));
    w2_ = omega_ - w1_;
    omega1_ = w_alpha(1) * FieldElem(rat(1, 4));
    omega2_ = w1_ - omega1_;

    VecH d12 = vec_of(beta1() - beta2());
    VecH d20 = vec_of(beta2() - beta0());
    VecH d01 = vec_of(beta0() - beta1());

    // J = -(1/6)(b1(-2)(b2-b0)(-1) + b2(-2)(b0-b1)(-1) + b0(-2)(b1-b2)(-1))
    //     - (b2-b0)(-1) y(a1) - (b0-b1)(-1) y(a2) - (b1-b2)(-1) y(a0)
    FockState j6;
    j6 += heis_apply(vec_of(beta1()), -2, heis_apply(d20, -1, vacuum()));
    j6 += heis_apply(vec_of(beta2()), -2, heis_apply(d01, -1, vacuum()));
    j6 += heis_apply(vec_of(beta0()), -2, heis_apply(d12, -1, vacuum()));
    J_ = j6 * FieldElem(rat(-1, 6));
    J_ -= heis_apply(d20, -1, y_alpha(1));
    J_ -= heis_apply(d01, -1, y_alpha(2));
    J_ -= heis_apply(d12, -1, y_alpha(0));

    // K = -(1/9)(b1-b2)(-1)(b2-b0)(-1)(b0-b1)(-1)
    //     + (b2-b0)(-1) x(a1) + (b0-b1)(-1) x(a2) + (b1-b2)(-1) x(a0)
    K_ = heis_apply(d12, -1, heis_apply(d20, -1, heis_apply(d01, -1, vacuum()))) *
         FieldElem(rat(-1, 9));
    K_ += heis_apply(d20, -1, x_alpha(1));
    K_ += heis_apply(d01, -1, x_alpha(2));
    K_ += heis_apply(d12, -1, x_alpha(0));

    P_ = y_alpha(1) + y_alpha(2) + y_alpha(0);
    J1P_ = mode_apply(J_, 1, P_);
    K1P_ = mode_apply(K_, 1, P_);
}

FockState Catalog::build(const std::string& name) const {
    if (name == "omega") return omega_;
    if (name == "w1") return w1_;
    if (name == "w2") return w2_;
    if (name == "omega1") return omega1_;
    if (name == "omega2") return omega2_;
    if (name == "J") return J_;
    if (name == "K") return K_;
    if (name == "P") return P_;
    if (name == "J1P") return J1P_;
    if (name == "K1P") return K1P_;
    if (name.rfind("x(a", 0) == 0) return x_alpha(name[3] - '0');
    if (name.rfind("y(a", 0) == 0) return y_alpha(name[3] - '0');
    if (name.rfind("w(a", 0) == 0) return w_alpha(name[3] - '0');
    if (name.rfind("v2_", 0) == 0) {
        int eps = name[3] - '0';
        FockState s = heis_apply(vec_beta1(), -1, vacuum());
        s -= heis_apply(vec_beta2(), -1, vacuum()) * xi_pow(eps);
        return s;
    }
    if (name.rfind("v3_", 0) == 0) {
        int j = name[3] - '0';
        long s = (j % 2 == 0) ? 1 : -1;
        FockState r;
        r += exp_state({2 * s, -2 * s});
        r += exp_state({2 * s, 4 * s});
        r += exp_state({-4 * s, -2 * s});
        return r;
    }
    if (name.rfind("v4_", 0) == 0) {  // v4_j_eps
        int j = name[3] - '0', eps = name[5] - '0';
        long s = (j % 2 == 0) ? 1 : -1;
        FockState r;
        r += exp_state({2 * s, -2 * s});
        r += exp_state({2 * s, 4 * s}) * xi_pow(2 * eps);
        r += exp_state({-4 * s, -2 * s}) * xi_pow(eps);
        return r;
    }
    if (name == "v5_1") return e_plus_minus({3, 0}, 1);
    if (name == "v5_2") return e_plus_minus({3, 0}, 0);
    if (name.rfind("v6_", 0) == 0) {
        int j = name[3] - '0';
        long s = (j % 2 == 0) ? -1 : 1;
        return exp_state({s, 2 * s});
    }
    throw std::invalid_argument("catalog: unknown vector " + name);
}

namespace {

std::string diff_detail(const FockState& got, const FockState& want) {
    FockState d = got - want;
    return "residual " + to_string(d);
}

}  // namespace

Report Catalog::verify_structure_constants(OpCache* cache) const {
    (void)cache;
    Report rep;
    rep.suite = "structure";
    auto m = [&](const FockState& u, int n, const FockState& v) {
        return mode_apply(u, n, v);
    };
    auto check = [&](const std::string& name, const FockState& got,
                     const FockState& want) {
        bool ok = got == want;
        rep.add(name, ok, ok ? "" : to_string(want), ok ? "" : to_string(got),
                ok ? "" : diff_detail(got, want));
    };
    const FockState one = vacuum();

    // J_n J
    check("J5J = -84.1", m(J_, 5, J_), one * FieldElem(-84));
    check("J4J = 0", m(J_, 4, J_), FockState{});
    check("J3J = -420.w1", m(J_, 3, J_), w1_ * FieldElem(-420));
    check("J2J = -210.(w1)0 w1", m(J_, 2, J_), m(w1_, 0, w1_) * FieldElem(-210));
    check("J1J = 9.(w1)0^2 w1 - 240.(w1)-1 w1", m(J_, 1, J_),
          m(w1_, 0, m(w1_, 0, w1_)) * FieldElem(9) - m(w1_, -1, w1_) * FieldElem(240));
    check("J0J = 22.(w1)0^3 w1 - 120.(w1)0 (w1)-1 w1", m(J_, 0, J_),
          m(w1_, 0, m(w1_, 0, m(w1_, 0, w1_))) * FieldElem(22) -
              m(w1_, 0, m(w1_, -1, w1_)) * FieldElem(120));

    // K_n K
    check("K5K = 104.1", m(K_, 5, K_), one * FieldElem(104));
    check("K4K = 0", m(K_, 4, K_), FockState{});
    check("K3K = 780.w2", m(K_, 3, K_), w2_ * FieldElem(780));
    check("K2K = 390.(w2)0 w2", m(K_, 2, K_), m(w2_, 0, w2_) * FieldElem(390));
    check("K1K = -27.(w2)0^2 w2 + 480.(w2)-1 w2", m(K_, 1, K_),
          m(w2_, 0, m(w2_, 0, w2_)) * FieldElem(-27) + m(w2_, -1, w2_) * FieldElem(480));
    check("K0K = -46.(w2)0^3 w2 + 240.(w2)0 (w2)-1 w2", m(K_, 0, K_),
          m(w2_, 0, m(w2_, 0, m(w2_, 0, w2_))) * FieldElem(-46) +
              m(w2_, 0, m(w2_, -1, w2_)) * FieldElem(240));

    // P_n P
    check("P1P = -16.w1 - 6.w2", m(P_, 1, P_),
          w1_ * FieldElem(-16) + w2_ * FieldElem(-6));
    check("P0P = -8.(w1)-2 1 - 3.(w2)-2 1", m(P_, 0, P_),
          m(w1_, -2, one) * FieldElem(-8) + m(w2_, -2, one) * FieldElem(-3));
    {
        FockState want = m(J_, 1, K1P_) * FieldElem(rat(5, 273));
        want -= m(w1_, -3, one) * FieldElem(rat(12, 7));
        want -= m(w2_, -3, one) * FieldElem(rat(18, 13));
        want -= m(w1_, -1, m(w1_, -1, one)) * FieldElem(rat(36, 7));
        want -= m(w2_, -1, m(w2_, -1, one)) * FieldElem(rat(9, 13));
        want -= m(w1_, -1, m(w2_, -1, one)) * FieldElem(16);
        check("P-1P (five-term line)", m(P_, -1, P_), want);
    }
    {
        FockState want = m(J_, 0, K1P_) * FieldElem(rat(1, 84));
        want += m(J_, 1, mode_apply(K_, 0, P_)) * FieldElem(rat(1, 156));
        want -= m(w1_, -4, one) * FieldElem(rat(8, 7));
        want -= m(w2_, -4, one) * FieldElem(rat(12, 13));
        want -= m(w1_, -2, m(w1_, -1, one)) * FieldElem(rat(36, 7));
        want -= m(w2_, -2, m(w2_, -1, one)) * FieldElem(rat(9, 13));
        want -= m(w1_, -2, m(w2_, -1, one)) * FieldElem(8);
        want -= m(w1_, -1, m(w2_, -2, one)) * FieldElem(8);
        check("P-2P (eight-term line)", m(P_, -2, P_), want);
    }

    for (int n = 2; n <= 5; ++n) {
        check("J" + std::to_string(n) + "P = 0", m(J_, n, P_), FockState{});
        check("K" + std::to_string(n) + "P = 0", m(K_, n, P_), FockState{});
    }
    return rep;
}

Report Catalog::verify_singular_vectors(OpCache* cache) const {
    (void)cache;
    Report rep;
    rep.suite = "singular";
    // 5 J(-1)^2 P + 2496 L1(-2) P - 195 L1(-1)^2 P, modes J(-1)=J_1, L1(-2)=(w1)_{-1}
    FockState s1 = mode_apply(J_, 1, J1P_) * FieldElem(5);
    s1 += mode_apply(w1_, -1, P_) * FieldElem(2496);
    s1 -= mode_apply(w1_, 0, mode_apply(w1_, 0, P_)) * FieldElem(195);
    rep.add("W(0) singular vector", s1.is_zero(), "0", to_string(s1));

    FockState s2 = mode_apply(K_, 1, K1P_);
    s2 -= mode_apply(w2_, -1, P_) * FieldElem(210);
    rep.add("W_t^0 singular vector", s2.is_zero(), "0", to_string(s2));

    FockState ctrl = mode_apply(K_, 1, K1P_);
    rep.add("control: K(-1)^2 P != 0", !ctrl.is_zero(), "nonzero", to_string(ctrl));
    return rep;
}

std::vector<AppendixLine> parse_appendix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<AppendixLine> lines;
    std::string raw;
    auto vec_code = [](const std::string& s) {
        if (s == "P") return 0;
        if (s == "J1P") return 1;
        if (s == "K1P") return 2;
        throw std::invalid_argument("appendix: unknown vector " + s);
    };
    while (std::getline(in, raw)) {
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::istringstream is(raw);
        std::string outer, inner, eq;
        int mode;
        if (!(is >> outer)) continue;
        if (!(is >> mode >> inner >> eq) || eq != "=")
            throw std::invalid_argument("appendix: bad line: " + raw);
        AppendixLine line;
        line.outer = vec_code(outer);
        line.inner = vec_code(inner);
        line.mode = mode;
        line.lhs_name = outer + "_" + std::to_string(mode) + "(" + inner + ")";

        std::string tok;
        FieldElem coeff;
        bool unknown = false, have_coeff = false;
        RhsWord word;
        auto flush = [&]() {
            if (!have_coeff) return;
            line.rhs.push_back({coeff, word});
            line.sign_unknown.push_back(unknown);
            word = RhsWord{};
            unknown = false;
            have_coeff = false;
        };
        while (is >> tok) {
            if (tok == ";") {
                flush();
            } else if (tok == "one" || tok == "P") {
                word.base = (tok == "P") ? 1 : 0;
            } else if (tok.find('_') != std::string::npos) {
                auto us = tok.find('_');
                std::string op = tok.substr(0, us);
                int md = std::stoi(tok.substr(us + 1));
                int code;
                if (op == "w1") code = 0;
                else if (op == "w2") code = 1;
                else if (op == "J") code = 2;
                else if (op == "K") code = 3;
                else throw std::invalid_argument("appendix: unknown op " + op);
                word.ops.push_back({code, md});
            } else {
                // coefficient, possibly with unknown-sign marker
                std::string c = tok;
                if (!c.empty() && c[0] == '?') {
                    unknown = true;
                    c = c.substr(1);
                }
                coeff = parse_field_elem(c);
                have_coeff = true;
            }
        }
        flush();
        if (line.rhs.empty() && raw.find('=') == std::string::npos) continue;
        lines.push_back(std::move(line));
    }
    return lines;
}

Report Catalog::verify_appendix_b(const std::string& data_file, OpCache* cache) const {
    (void)cache;
    Report rep;
    rep.suite = "appendix-b";
    const FockState* vecs[3] = {&P_, &J1P_, &K1P_};
    const FockState* ops[4] = {&w1_, &w2_, &J_, &K_};
    auto word_state = [&](const RhsWord& w) {
        FockState s = (w.base == 1) ? P_ : vacuum();
        for (auto it = w.ops.rbegin(); it != w.ops.rend(); ++it)
            s = mode_apply(*ops[it->first], it->second, s);
        return s;
    };
    for (const auto& line : parse_appendix_file(data_file)) {
        FockState lhs = mode_apply(*vecs[line.outer], line.mode, *vecs[line.inner]);
        FockState fixed;  // sum of sign-certain terms
        std::vector<size_t> open;
        for (size_t i = 0; i < line.rhs.size(); ++i) {
            if (line.sign_unknown[i]) {
                open.push_back(i);
            } else {
                fixed += word_state(line.rhs[i].second) * line.rhs[i].first;
            }
        }
        if (open.empty()) {
            bool ok = lhs == fixed;
            rep.add(line.lhs_name, ok, ok ? "" : to_string(fixed),
                    ok ? "" : to_string(lhs));
            continue;
        }
        // resolve missing signs by direct computation (at most one per line here)
        bool resolved = false;
        std::string note;
        for (int mask = 0; mask < (1 << open.size()); ++mask) {
            FockState cand = fixed;
            for (size_t b = 0; b < open.size(); ++b) {
                FieldElem c = line.rhs[open[b]].first;
                if (mask & (1 << b)) c = -c;
                cand += word_state(line.rhs[open[b]].second) * c;
            }
            if (lhs == cand) {
                resolved = true;
                note = "resolved sign:";
                for (size_t b = 0; b < open.size(); ++b)
                    note += std::string(" ") + ((mask & (1 << b)) ? "-" : "+") +
                            to_string(line.rhs[open[b]].first);
                break;
            }
        }
        rep.add(line.lhs_name, resolved, resolved ? "" : "some sign choice matches",
                resolved ? "" : "no sign choice matches", note);
    }
    return rep;
}

Report Catalog::verify_section4_untwisted(OpCache* cache) const {
    (void)cache;
    Report rep;
    rep.suite = "section4";
    struct Op {
        const char* name;
        const FockState* st;
        int mode;
    };
    const Op op7[7] = {{"(w1)1", &w1_, 1}, {"(w2)1", &w2_, 1}, {"J2", &J_, 2},
                       {"K2", &K_, 2},     {"P1", &P_, 1},     {"(J1P)2", &J1P_, 2},
                       {"(K1P)2", &K1P_, 2}};

    auto eig = [&](const std::string& vec, const FockState& v,
                   const FieldElem ev[7]) {
        for (int i = 0; i < 7; ++i) {
            FockState got = mode_apply(*op7[i].st, op7[i].mode, v);
            FockState want = v * ev[i];
            bool ok = got == want;
            rep.add(vec + ": " + op7[i].name, ok,
                    ok ? "" : to_string(ev[i]) + " * v", ok ? "" : to_string(got));
        }
    };

    {  // V_L(0): vacuum, everything acts as 0
        FieldElem ev[7] = {0, 0, 0, 0, 0, 0, 0};
        eig("V_L(0) vacuum", vacuum(), ev);
    }
    for (int eps = 1; eps <= 2; ++eps) {
        FieldElem sg((eps % 2 == 0) ? 1 : -1);  // (-1)^eps
        FieldElem ev[7] = {FieldElem(rat(3, 5)),
                           FieldElem(rat(2, 5)),
                           sqrt_m3() * FieldElem(-2) * sg,
                           0,
                           0,
                           0,
                           sqrt_m3() * FieldElem(12) * sg};
        eig("V_L(" + std::to_string(eps) + ") v2", build("v2_" + std::to_string(eps)),
            ev);
    }
    for (int j = 1; j <= 2; ++j) {
        FieldElem sj((j % 2 == 0) ? 1 : -1);
        FieldElem ev[7] = {0, FieldElem(rat(2, 3)), 0, sj * FieldElem(rat(-52, 9)),
                           0, 0, 0};
        eig("V_L(0," + std::to_string(j) + ")(0) v3", build("v3_" + std::to_string(j)),
            ev);
    }
    for (int j = 1; j <= 2; ++j) {
        for (int eps = 1; eps <= 2; ++eps) {
            FieldElem sj((j % 2 == 0) ? 1 : -1), se((eps % 2 == 0) ? 1 : -1);
            FieldElem ev[7] = {FieldElem(rat(3, 5)),
                               FieldElem(rat(1, 15)),
                               se * FieldElem(-2) * sqrt_m3(),
                               sj * FieldElem(rat(2, 9)),
                               sj * se * FieldElem(-1) * sqrt_m3(),
                               sj * FieldElem(-24),
                               se * FieldElem(-2) * sqrt_m3()};
            eig("V_L(0," + std::to_string(j) + ")(" + std::to_string(eps) + ") v4",
                build("v4_" + std::to_string(j) + "_" + std::to_string(eps)), ev);
        }
    }
    {  // V_L(c,0): 2-dim top
        FockState v51 = build("v5_1"), v52 = build("v5_2");
        auto chk = [&](const std::string& n, const FockState& got,
                       const FockState& want) {
            bool ok = got == want;
            rep.add("V_L(c,0): " + n, ok, ok ? "" : to_string(want),
                    ok ? "" : to_string(got));
        };
        chk("(w1)1 v51 = 1/2 v51", mode_apply(w1_, 1, v51), v51 * FieldElem(rat(1, 2)));
        chk("(w1)1 v52 = 1/10 v52", mode_apply(w1_, 1, v52),
            v52 * FieldElem(rat(1, 10)));
        chk("(w2)1 v51 = 0", mode_apply(w2_, 1, v51), FockState{});
        chk("(w2)1 v52 = 2/5 v52", mode_apply(w2_, 1, v52), v52 * FieldElem(rat(2, 5)));
        chk("J2 v51 = 0", mode_apply(J_, 2, v51), FockState{});
        chk("J2 v52 = 0", mode_apply(J_, 2, v52), FockState{});
        chk("K2 v51 = 0", mode_apply(K_, 2, v51), FockState{});
        chk("K2 v52 = 0", mode_apply(K_, 2, v52), FockState{});
        chk("P1 v51 = -v52", mode_apply(P_, 1, v51), -v52);
        chk("P1 v52 = v51", mode_apply(P_, 1, v52), v51);
        chk("(J1P)2 v5j = 0", mode_apply(J1P_, 2, v51) + mode_apply(J1P_, 2, v52),
            FockState{});
        chk("(K1P)2 v5j = 0", mode_apply(K1P_, 2, v51) + mode_apply(K1P_, 2, v52),
            FockState{});
    }
    for (int j = 1; j <= 2; ++j) {
        FieldElem sj((j % 2 == 0) ? 1 : -1);
        FieldElem ev[7] = {FieldElem(rat(1, 10)), FieldElem(rat(1, 15)), 0,
                           sj * FieldElem(rat(2, 9)), 0, sj * FieldElem(2), 0};
        eig("V_L(c," + std::to_string(j) + ") v6", build("v6_" + std::to_string(j)),
            ev);
    }
    return rep;
}

Report Catalog::verify_conformal_orthogonality(OpCache* cache) const {
    (void)cache;
    Report rep;
    rep.suite = "conformal";
    auto chkeq = [&](const std::string& n, const FockState& a, const FockState& b) {
        bool ok = a == b;
        rep.add(n, ok, ok ? "" : to_string(b), ok ? "" : to_string(a));
    };
    chkeq("omega = w1 + w2", omega_, w1_ + w2_);
    chkeq("w1 = omega1 + omega2", w1_, omega1_ + omega2_);

    struct CV {
        const char* name;
        const FockState* v;
        Rational c;
    };
    const CV cvs[4] = {{"omega1", &omega1_, rat(1, 2)},
                       {"omega2", &omega2_, rat(7, 10)},
                       {"w2", &w2_, rat(4, 5)},
                       {"w1", &w1_, rat(6, 5)}};
    for (auto& cv : cvs) {
        chkeq(std::string(cv.name) + " L(0) self", mode_apply(*cv.v, 1, *cv.v),
              *cv.v * FieldElem(2));
        chkeq(std::string(cv.name) + " central charge",
              mode_apply(*cv.v, 3, *cv.v), vacuum() * FieldElem(cv.c / 2));
    }
    const CV orth[3] = {{"omega1", &omega1_, 0}, {"omega2", &omega2_, 0},
                        {"w2", &w2_, 0}};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == b) continue;
            chkeq(std::string(orth[a].name) + "_1 " + orth[b].name + " = 0",
                  mode_apply(*orth[a].v, 1, *orth[b].v), FockState{});
            chkeq(std::string(orth[a].name) + "_3 " + orth[b].name + " = 0",
                  mode_apply(*orth[a].v, 3, *orth[b].v), FockState{});
        }
    chkeq("omega_3 omega = 1 (c=2)", mode_apply(omega_, 3, omega_), vacuum());
    return rep;
}

Report Catalog::verify_automorphism_actions() const {
    Report rep;
    rep.suite = "automorphisms";
    Isometry tau = iso_tau(), sig = iso_sigma(), th = iso_theta();
    auto chk = [&](const std::string& n, const FockState& got, const FockState& want) {
        bool ok = got == want;
        rep.add(n, ok, ok ? "" : to_string(want), ok ? "" : to_string(got));
    };
    for (auto& [name, st] : std::vector<std::pair<std::string, const FockState*>>{
             {"w1", &w1_}, {"w2", &w2_}, {"J", &J_}, {"K", &K_}, {"P", &P_}})
        chk("tau fixes " + name, apply_automorphism_state(tau, *st), *st);
    chk("sigma J = -J", apply_automorphism_state(sig, J_), -J_);
    chk("sigma K = -K", apply_automorphism_state(sig, K_), -K_);
    chk("sigma P = P", apply_automorphism_state(sig, P_), P_);
    chk("theta J = J", apply_automorphism_state(th, J_), J_);
    chk("theta K = -K", apply_automorphism_state(th, K_), -K_);
    chk("theta P = -P", apply_automorphism_state(th, P_), -P_);
    chk("sigma J1P = -J1P", apply_automorphism_state(sig, J1P_), -J1P_);
    chk("sigma K1P = -K1P", apply_automorphism_state(sig, K1P_), -K1P_);

    // tau-eigenvalues of the section-4 untwisted top vectors
    for (int eps = 1; eps <= 2; ++eps) {
        FockState v = build("v2_" + std::to_string(eps));
        chk("tau v2_" + std::to_string(eps), apply_automorphism_state(tau, v),
            v * xi_pow(eps));
    }
    for (int j = 1; j <= 2; ++j) {
        FockState v = build("v3_" + std::to_string(j));
        chk("tau v3_" + std::to_string(j), apply_automorphism_state(tau, v), v);
        for (int eps = 1; eps <= 2; ++eps) {
            FockState v4 = build("v4_" + std::to_string(j) + "_" + std::to_string(eps));
            chk("tau v4_" + std::to_string(j) + "_" + std::to_string(eps),
                apply_automorphism_state(tau, v4), v4 * xi_pow(eps));
        }
    }
    return rep;
}

}  // namespace vltau
