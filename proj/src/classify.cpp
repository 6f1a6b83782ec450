#include "vltau/classify.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "vltau/linalg.hpp"

namespace vltau {

ScalarPoly sp_substitute(const ScalarPoly& p, int sym, const FieldElem& v) {
    ScalarPoly out;
    for (auto& [m, c] : p.terms) {
        FieldElem nc = c;
        for (int e = 0; e < m[sym]; ++e) nc *= v;
        auto nm = m;
        nm[sym] = 0;
        out.add(nm, nc);
    }
    return out;
}

ScalarPoly sp_substitute(const ScalarPoly& p, int sym, const ScalarPoly& q) {
    ScalarPoly out;
    for (auto& [m, c] : p.terms) {
        ScalarPoly term = sp_term(c, {});
        auto nm = m;
        int e = nm[sym];
        nm[sym] = 0;
        ScalarPoly base;
        base.add(nm, FieldElem(1));
        term = term * base;
        for (int i = 0; i < e; ++i) term = term * q;
        out = out + term;
    }
    return out;
}

namespace {

using nlohmann::json;

std::vector<FieldElem> parse_mat(const json& j) {
    std::vector<FieldElem> m;
    for (auto& e : j) m.push_back(parse_field_elem(e.get<std::string>()));
    return m;
}

}  // namespace

Classifier::Classifier(const Catalog& cat, const std::string& config_dir) : cat_(cat) {
    {
        std::ifstream in(config_dir + "/module_cards.json");
        if (!in) throw std::runtime_error("cannot open module_cards.json");
        json j;
        in >> j;
        for (auto& jc : j["cards"]) {
            CardMeta m;
            m.card.name = jc["name"].get<std::string>();
            m.card.dim = jc["dim"].get<int>();
            m.card.min_weight = parse_rational(jc["min_weight"].get<std::string>());
            m.card.provenance = jc["provenance"].get<std::string>();
            const char* keys[7] = {"o_w1", "o_w2", "o_J", "o_K", "o_P", "o_J1P", "o_K1P"};
            for (int i = 0; i < 7; ++i) m.card.mats[i] = parse_mat(jc[keys[i]]);
            m.m_pair = {jc["m_pair"][0].get<std::string>(), jc["m_pair"][1].get<std::string>()};
            m.w_pair = {jc["w_pair"][0].get<std::string>(), jc["w_pair"][1].get<std::string>()};
            m.top_part = jc["top_part"].get<std::string>();
            m.sigma_partner = jc["sigma_partner"].get<std::string>();
            if (jc.contains("top_vectors"))
                for (auto& tv : jc["top_vectors"]) m.top_vectors.push_back(tv.get<std::string>());
            cards_.push_back(std::move(m));
        }
    }
    {
        std::ifstream in(config_dir + "/quadruplets.json");
        if (!in) throw std::runtime_error("cannot open quadruplets.json");
        json j;
        in >> j;
        auto load = [&](const char* key, const char* an, const char* bn,
                        std::vector<SimpleFactor>& out) {
            for (auto& js : j[key]) {
                SimpleFactor s;
                s.name = js["name"].get<std::string>();
                s.w_family = js["family"].get<std::string>() == "W";
                s.a = parse_field_elem(js[an].get<std::string>());
                std::string b = js[bn].get<std::string>();
                if (b == "symbolic") {
                    s.b_symbolic = true;
                } else {
                    s.b = parse_field_elem(b);
                }
                s.a_prov = js["prov"][an].get<std::string>();
                s.b_prov = js["prov"][bn].get<std::string>();
                s.w_partner = js["w_partner"].get<std::string>();
                s.contragredient = js["contragredient"].get<std::string>();
                out.push_back(std::move(s));
            }
        };
        load("m0_simples", "a1", "b1", m0_);
        load("mt0_simples", "a2", "b2", mt_);
    }
}

std::vector<Quadruplet> Classifier::enumerate_quadruplets() const {
    std::vector<Quadruplet> out;
    for (bool w_type : {false, true}) {
        for (auto& s1 : m0_) {
            if (s1.w_family != w_type) continue;
            for (auto& s2 : mt_) {
                if (s2.w_family != w_type) continue;
                Quadruplet q;
                q.m1 = s1.name;
                q.m2 = s2.name;
                q.w_type = w_type;
                q.a1 = s1.a;
                q.a2 = s2.a;
                q.b1 = s1.b;
                q.b1_symbolic = s1.b_symbolic;
                q.b2 = s2.b;
                out.push_back(std::move(q));
            }
        }
    }
    return out;
}

Report Classifier::verify_roster_derived() const {
    Report rep;
    rep.suite = "quadruplet-roster";
    auto eig_of = [&](const FockState& v, const FockState& op, int mode) {
        auto c = express_in_span(mode_apply(op, mode, v), {v});
        if (!c) throw std::runtime_error("not an eigenvector");
        return (*c)[0];
    };
    auto check_entry = [&](const std::string& name, const FieldElem& a,
                           const FieldElem& b, const FockState& top, bool mt_side) {
        FieldElem ca = eig_of(top, mt_side ? cat_.w2() : cat_.w1(), 1);
        FieldElem cb = eig_of(top, mt_side ? cat_.K() : cat_.J(), 2);
        bool ok = ca == a && cb == b;
        rep.add(name + " recomputed", ok,
                "(" + to_string(a) + ", " + to_string(b) + ")",
                "(" + to_string(ca) + ", " + to_string(cb) + ")");
    };
    auto find1 = [&](const std::string& n) -> const SimpleFactor& {
        for (auto& s : m0_)
            if (s.name == n) return s;
        throw std::runtime_error("roster: " + n);
    };
    auto find2 = [&](const std::string& n) -> const SimpleFactor& {
        for (auto& s : mt_)
            if (s.name == n) return s;
        throw std::runtime_error("roster: " + n);
    };

    // M(eps): tau-eigenspace of ker (w2)_1 in weight 2 of V_L
    for (int eps = 1; eps <= 2; ++eps) {
        auto basis = graded_basis({Klein::O, 0}, rat(2), eps);
        auto full = graded_basis({Klein::O, 0}, rat(2));
        Mat cols(full.size(), Vec(basis.size(), FieldElem(0)));
        for (size_t j = 0; j < basis.size(); ++j) {
            auto c = express_in_span(mode_apply(cat_.w2(), 1, basis[j]), full);
            for (size_t i = 0; i < full.size(); ++i) cols[i][j] = (*c)[i];
        }
        auto null_coeffs = nullspace(cols);
        bool one = null_coeffs.size() == 1;
        rep.add("M(" + std::to_string(eps) + ") top is one-dimensional", one, "1",
                std::to_string(null_coeffs.size()));
        if (!one) continue;
        FockState top;
        for (size_t i = 0; i < basis.size(); ++i) top += basis[i] * null_coeffs[0][i];
        auto& s = find1("M(" + std::to_string(eps) + ")");
        check_entry(s.name, s.a, s.b, top, false);
    }
    {
        auto& s = find1("M(0)");
        check_entry(s.name, s.a, s.b, vacuum(), false);
    }
    for (int eps = 1; eps <= 2; ++eps) {
        auto& s = find1("W(" + std::to_string(eps) + ")");
        check_entry(s.name, s.a, s.b,
                    graded_basis({Klein::O, 0}, rat(1), eps).at(0), false);
    }
    {
        auto& s = find1("W(0)");
        check_entry(s.name, s.a, s.b, cat_.P(), false);
    }
    {
        auto& s = find1("Mk^c");
        check_entry(s.name, s.a, s.b, cat_.build("v5_1"), false);
        auto& t = find1("Wk^c");
        check_entry(t.name, t.a, t.b, cat_.build("v5_2"), false);
    }
    {
        auto& s = find2("Mt0");
        check_entry(s.name, s.a, s.b, vacuum(), true);
        auto& t = find2("Wt0");
        check_entry(t.name, t.a, t.b, cat_.build("v2_1"), true);
    }
    for (int j = 1; j <= 2; ++j) {
        auto& s = find2("Mt" + std::to_string(j));
        check_entry(s.name, s.a, s.b, cat_.build("v3_" + std::to_string(j)), true);
        auto& t = find2("Wt" + std::to_string(j));
        check_entry(t.name, t.a, t.b, cat_.build("v4_" + std::to_string(j) + "_1"), true);
    }
    return rep;
}

Report Classifier::verify_cards_untwisted(const NCPoly* jkp_nc) const {
    Report rep;
    rep.suite = "cards-untwisted";
    for (auto& m : cards_) {
        if (m.top_vectors.empty()) continue;
        std::vector<FockState> tops;
        for (auto& n : m.top_vectors)
            tops.push_back(n == "1" ? vacuum() : cat_.build(n));
        const FockState* ops[7] = {&cat_.w1(), &cat_.w2(), &cat_.J(), &cat_.K(),
                                   &cat_.P(), &cat_.J1P(), &cat_.K1P()};
        const int modes[7] = {1, 1, 2, 2, 1, 2, 2};
        static const char* names[7] = {"o(w1)", "o(w2)", "o(J)", "o(K)",
                                       "o(P)", "o(J1P)", "o(K1P)"};
        int dim = m.card.dim;
        bool all_ok = true;
        std::string bad;
        for (int k = 0; k < 7; ++k) {
            std::vector<FieldElem> mat(dim * dim, FieldElem(0));
            bool ok = true;
            for (int j = 0; j < dim && ok; ++j) {
                auto c = express_in_span(mode_apply(*ops[k], modes[k], tops[j]), tops);
                if (!c) {
                    ok = false;
                    break;
                }
                for (int i = 0; i < dim; ++i) mat[i * dim + j] = (*c)[i];
            }
            if (!ok || mat != m.card.mats[k]) {
                all_ok = false;
                bad += std::string(names[k]) + " ";
            }
        }
        rep.add(m.card.name + ": matrices recomputed from vertex action", all_ok, "",
                "", all_ok ? "" : "mismatch in " + bad);

        // min weight and L(0)-consistency
        bool wt_ok = true;
        for (auto& t : tops) wt_ok = wt_ok && (weight(t) == m.card.min_weight);
        rep.add(m.card.name + ": top weight", wt_ok, to_string(m.card.min_weight));

        // the P*P relation with o(J_1 K_1 P) computed directly
        if (jkp_nc) {
            FockState jkp = mode_apply(cat_.J(), 1, mode_apply(cat_.K(), 1, cat_.P()));
            std::vector<FieldElem> direct(dim * dim, FieldElem(0));
            bool ok = true;
            for (int j = 0; j < dim && ok; ++j) {
                auto c = express_in_span(mode_apply(jkp, 3, tops[j]), tops);
                if (!c) ok = false;
                else
                    for (int i = 0; i < dim; ++i) direct[i * dim + j] = (*c)[i];
            }
            auto via_pp = eval_on_card(*jkp_nc, m.card);
            bool match = ok && via_pp == direct;
            std::string got;
            if (!match)
                for (auto& e : via_pp) got += to_string(e) + " ";
            rep.add(m.card.name + ": P*P relation with direct o(J1K1P)", match, "",
                    got);
        }
    }
    return rep;
}


// ---------------------------------------------------------------------------
// exact solver for the scalar system

namespace {

constexpr int SB1 = 2, SX1 = 4, SX2 = 5, SX3 = 6;

bool has_active(const ScalarPoly& p, const std::vector<int>& vars) {
    for (auto& [m, c] : p.terms)
        for (int v : vars)
            if (m[v]) return true;
    return false;
}

int degree_in(const ScalarPoly& p, int v) {
    int d = 0;
    for (auto& [m, c] : p.terms) d = std::max(d, m[v]);
    return d;
}

bool univariate_in(const ScalarPoly& p, int v, const std::vector<int>& vars) {
    for (auto& [m, c] : p.terms)
        for (int u : vars)
            if (u != v && m[u]) return false;
    return true;
}

std::vector<ScalarPoly> coeffs_in(const ScalarPoly& p, int v) {
    std::vector<ScalarPoly> cs(static_cast<size_t>(degree_in(p, v)) + 1);
    for (auto& [m, c] : p.terms) {
        auto nm = m;
        int e = nm[v];
        nm[v] = 0;
        cs[e].add(nm, c);
    }
    return cs;
}

FieldElem const_value(const ScalarPoly& p) {
    if (p.is_zero()) return FieldElem(0);
    if (p.terms.size() != 1 || p.terms.begin()->first != std::array<int, 8>{})
        throw std::logic_error("solver: expected constant");
    return p.terms.begin()->second;
}

FieldElem eval_at(const ScalarPoly& p, const std::map<int, FieldElem>& assign) {
    FieldElem acc(0);
    for (auto& [m, c] : p.terms) {
        FieldElem t = c;
        for (int i = 0; i < 8; ++i)
            for (int e = 0; e < m[i]; ++e) t *= assign.at(i);
        acc += t;
    }
    return acc;
}

// dense univariate polynomials over the field, index = exponent
using UniPoly = std::vector<FieldElem>;

UniPoly to_unipoly(const ScalarPoly& p, int v) {
    UniPoly u(static_cast<size_t>(degree_in(p, v)) + 1, FieldElem(0));
    for (auto& [m, c] : p.terms) u[m[v]] += c;
    while (u.size() > 1 && u.back().is_zero()) u.pop_back();
    return u;
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    while (a.size() >= b.size() && !(a.size() == 1 && a[0].is_zero())) {
        FieldElem f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        while (a.size() > 1 && a.back().is_zero()) a.pop_back();
        if (a.size() < b.size()) break;
        if (a.size() == 1 && a[0].is_zero()) break;
    }
    return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    auto is_null = [](const UniPoly& p) { return p.size() == 1 && p[0].is_zero(); };
    while (!is_null(b)) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    // monic normalization
    if (!a.back().is_zero()) {
        FieldElem inv = a.back().inverse();
        for (auto& c : a) c = c * inv;
    }
    return a;
}

std::vector<std::map<int, FieldElem>> solve_rec(std::vector<ScalarPoly> eqs,
                                                std::vector<int> vars,
                                                bool& field_limited) {
    std::vector<std::map<int, FieldElem>> out;
    std::vector<ScalarPoly> live;
    for (auto& e : eqs) {
        if (e.is_zero()) continue;
        if (!has_active(e, vars)) return out;  // nonzero constant: inconsistent
        live.push_back(e);
    }
    if (vars.empty()) {
        out.push_back({});
        return out;
    }
    if (live.empty())
        throw std::runtime_error("solver: underdetermined system");

    auto recurse_value = [&](int v, const FieldElem& val) {
        std::vector<ScalarPoly> next;
        for (auto& e : live) next.push_back(sp_substitute(e, v, val));
        auto nv = vars;
        nv.erase(std::find(nv.begin(), nv.end(), v));
        for (auto& s : solve_rec(next, nv, field_limited)) {
            s[v] = val;
            out.push_back(std::move(s));
        }
    };

    // univariate equations: take the gcd of all equations in one variable
    for (int v : vars) {
        std::vector<UniPoly> uni;
        for (auto& e : live)
            if (univariate_in(e, v, vars)) uni.push_back(to_unipoly(e, v));
        if (uni.empty()) continue;
        UniPoly g = uni[0];
        for (size_t i = 1; i < uni.size(); ++i) g = uni_gcd(g, uni[i]);
        if (g.size() == 1) return out;  // no common root at all
        if (g.size() == 2) {
            recurse_value(v, -g[0] / g[1]);
            return out;
        }
        if (g.size() == 3) {
            FieldElem disc = g[1] * g[1] - FieldElem(4) * g[2] * g[0];
            auto s = sqrt_in_field(disc);
            if (!s) {
                if (!disc.is_zero()) field_limited = true;
                return out;
            }
            FieldElem inv = (FieldElem(2) * g[2]).inverse();
            recurse_value(v, (-g[1] + *s) * inv);
            if (!s->is_zero()) recurse_value(v, (-g[1] - *s) * inv);
            return out;
        }
        continue;  // common factor of degree > 2: try another variable or rule
    }
    // equation linear in some variable with constant leading coefficient
    for (auto& e : live) {
        for (int v : vars) {
            if (degree_in(e, v) != 1) continue;
            auto cs = coeffs_in(e, v);
            bool const_lead = !has_active(cs[1], vars);
            if (!const_lead) continue;
            FieldElem c1 = const_value(cs[1]);
            ScalarPoly q = cs[0] * (-c1.inverse());
            std::vector<ScalarPoly> next;
            for (auto& f : live) {
                if (&f == &e) continue;
                next.push_back(sp_substitute(f, v, q));
            }
            auto nv = vars;
            nv.erase(std::find(nv.begin(), nv.end(), v));
            for (auto& s : solve_rec(next, nv, field_limited)) {
                std::map<int, FieldElem> full = s;
                for (int i = 0; i < 8; ++i)
                    if (!full.count(i)) full[i] = FieldElem(0);
                s[v] = eval_at(q, full);
                out.push_back(std::move(s));
            }
            return out;
        }
    }
    throw std::runtime_error("solver: no applicable rule");
}

}  // namespace

SolveResult Classifier::solve_system(const Quadruplet& q, const ScalarSystem& sys) const {
    std::vector<ScalarPoly> eqs = {sys.p_circ_jp, sys.p_circ_kp, sys.jpjp,
                                   sys.kpkp, sys.jpkp};
    std::vector<ScalarPoly> filters = eqs;
    filters.push_back(sys.w2_circ_p);
    filters.push_back(sys.p_star_jp);
    filters.push_back(sys.p_star_kp);

    auto specialize = [&](ScalarPoly p) {
        p = sp_substitute(p, 0, q.a1);
        p = sp_substitute(p, 1, q.a2);
        p = sp_substitute(p, 3, q.b2);
        if (!q.b1_symbolic) p = sp_substitute(p, SB1, q.b1);
        return p;
    };
    for (auto& e : eqs) e = specialize(e);
    for (auto& f : filters) f = specialize(f);

    std::vector<int> vars = {SX1, SX2, SX3};
    if (q.b1_symbolic) vars.push_back(SB1);

    SolveResult res;
    auto sols = solve_rec(eqs, vars, res.field_limited);

    // exact filter through the extended certified system, then dedupe
    std::vector<Solution> uniq;
    for (auto& s : sols) {
        std::map<int, FieldElem> full = s;
        for (int i = 0; i < 8; ++i)
            if (!full.count(i)) full[i] = FieldElem(0);
        bool ok = true;
        for (auto& f : filters)
            if (!eval_at(f, full).is_zero()) ok = false;
        if (!ok) continue;
        Solution sol;
        sol.x1 = full[SX1];
        sol.x2 = full[SX2];
        sol.x3 = full[SX3];
        if (q.b1_symbolic) {
            sol.b1 = full[SB1];
            sol.has_b1 = true;
        }
        bool dup = false;
        for (auto& u : uniq)
            dup = dup || (u.x1 == sol.x1 && u.x2 == sol.x2 && u.x3 == sol.x3 &&
                          (!sol.has_b1 || u.b1 == sol.b1));
        if (!dup) uniq.push_back(std::move(sol));
    }
    res.solutions = std::move(uniq);
    return res;
}

Report Classifier::classify_all(const ScalarSystem& sys) const {
    Report rep;
    rep.suite = "classification";

    struct Expected {
        bool solvable = false;
        FieldElem x1, x2, x3;
        std::string module;
    };
    std::map<std::pair<std::string, std::string>, Expected> expect;
    for (auto& m : cards_) {
        if (m.card.dim == 1) {
            auto key = (m.top_part == "M")
                           ? std::make_pair(m.m_pair[0], m.m_pair[1])
                           : std::make_pair(m.w_pair[0], m.w_pair[1]);
            Expected e;
            e.solvable = true;
            e.x1 = m.card.mats[4][0];
            e.x2 = m.card.mats[5][0];
            e.x3 = m.card.mats[6][0];
            e.module = m.card.name;
            expect[key] = e;
        }
    }

    int solvable = 0, rejected = 0, mismatches = 0, symbolic_rejected = 0;
    bool symbolic_field_limited = false;
    for (auto& q : enumerate_quadruplets()) {
        SolveResult r = solve_system(q, sys);
        auto it = expect.find({q.m1, q.m2});
        std::string label = q.m1 + " x " + q.m2;
        if (it != expect.end()) {
            bool ok = r.solutions.size() == 1 &&
                      r.solutions[0].x1 == it->second.x1 &&
                      r.solutions[0].x2 == it->second.x2 &&
                      r.solutions[0].x3 == it->second.x3;
            if (ok) ++solvable;
            else ++mismatches;
            std::string got = r.solutions.empty()
                                  ? "no solution"
                                  : "(" + to_string(r.solutions[0].x1) + ", " +
                                        to_string(r.solutions[0].x2) + ", " +
                                        to_string(r.solutions[0].x3) + ")" +
                                        (r.solutions.size() > 1 ? " (+more)" : "");
            rep.add(label + " -> " + it->second.module, ok,
                    "(" + to_string(it->second.x1) + ", " + to_string(it->second.x2) +
                        ", " + to_string(it->second.x3) + ")",
                    got);
        } else {
            bool ok = r.solutions.empty();
            if (ok) ++rejected;
            else ++mismatches;
            if (q.b1_symbolic && ok) {
                ++symbolic_rejected;
                symbolic_field_limited = symbolic_field_limited || r.field_limited;
            }
            std::string note = q.b1_symbolic
                                   ? (r.field_limited
                                          ? "rejected for every b1 in Q(sqrt(-3)); "
                                            "a branch used field-membership of a "
                                            "square root"
                                          : "rejected for every complex b1")
                                   : "";
            rep.add(label + " -> rejected", ok, "no solution",
                    ok ? "" : std::to_string(r.solutions.size()) + " solutions", note);
        }
    }
    rep.add("survivors = 23", solvable == 23, "23", std::to_string(solvable));
    rep.add("rejected = 37", rejected == 37, "37", std::to_string(rejected));
    rep.add("all survivors match the top-level tables", mismatches == 0, "0",
            std::to_string(mismatches));
    rep.add("symbolic-b1 quadruplets rejected = 6", symbolic_rejected == 6, "6",
            std::to_string(symbolic_rejected));
    rep.add("total simple modules = 30", cards_.size() == 30, "30",
            std::to_string(cards_.size()));
    return rep;
}

Report Classifier::zhu_algebra_structure() const {
    Report rep;
    rep.suite = "zhu-structure";
    long dim = 0;
    int ones = 0, twos = 0;
    std::string two_names;
    for (auto& m : cards_) {
        dim += static_cast<long>(m.card.dim) * m.card.dim;
        if (m.card.dim == 1) ++ones;
        if (m.card.dim == 2) {
            ++twos;
            two_names += m.card.name + " ";
        }
    }
    rep.add("dim A(V_L^tau) = 51", dim == 51, "51", std::to_string(dim));
    rep.add("23 one-dimensional blocks", ones == 23, "23", std::to_string(ones));
    rep.add("7 blocks Mat_2", twos == 7, "7", std::to_string(twos), two_names);

    // L(0)-consistency: o(w1) + o(w2) = min_weight on every top
    bool l0 = true;
    for (auto& m : cards_) {
        int d = m.card.dim;
        for (int i = 0; i < d && l0; ++i)
            for (int j = 0; j < d && l0; ++j) {
                FieldElem want =
                    (i == j) ? FieldElem(m.card.min_weight) : FieldElem(0);
                l0 = m.card.mats[0][i * d + j] + m.card.mats[1][i * d + j] == want;
            }
    }
    rep.add("a1 + a2 equals the minimal weight on all 30 cards", l0);
    return rep;
}

Report Classifier::sigma_permutation_check() const {
    Report rep;
    rep.suite = "sigma";
    auto find_card = [&](const std::string& n) -> const CardMeta& {
        for (auto& m : cards_)
            if (m.card.name == n) return m;
        throw std::runtime_error("sigma: unknown card " + n);
    };
    for (auto& m : cards_) {
        const CardMeta& p = find_card(m.sigma_partner);
        bool ok = p.sigma_partner == m.card.name && p.card.dim == m.card.dim &&
                  p.card.min_weight == m.card.min_weight;
        if (ok) {
            for (int k = 0; k < 7 && ok; ++k) {
                // sigma fixes w1, w2, P and negates J, K, J1P, K1P
                bool flip = (k == 2 || k == 3 || k == 5 || k == 6);
                for (size_t i = 0; i < m.card.mats[k].size() && ok; ++i) {
                    FieldElem want = flip ? -m.card.mats[k][i] : m.card.mats[k][i];
                    ok = p.card.mats[k][i] == want;
                }
            }
        }
        rep.add(m.card.name + " <-> " + m.sigma_partner, ok);
    }
    return rep;
}

Report Classifier::contragredient_check() const {
    Report rep;
    rep.suite = "contragredient";
    auto check_list = [&](const std::vector<SimpleFactor>& list) {
        for (auto& s : list) {
            const SimpleFactor* d = nullptr;
            for (auto& t : list)
                if (t.name == s.contragredient) d = &t;
            bool ok = d && d->a == s.a && d->contragredient == s.name;
            if (ok) {
                if (s.b_symbolic || d->b_symbolic)
                    ok = s.b_symbolic && d->b_symbolic;
                else
                    ok = d->b == -s.b;
            }
            rep.add(s.name + "' = " + s.contragredient, ok);
        }
    };
    check_list(m0_);
    check_list(mt_);
    return rep;
}

Report Classifier::o_homomorphism_all(const ScalarSystem& sys) const {
    Report rep;
    rep.suite = "o-homomorphism";
    int pass = 0;
    for (auto& m : cards_) {
        Report r = verify_o_homomorphism(sys, m.card);
        if (r.all_pass()) ++pass;
        rep.merge(r);
    }
    rep.add("all 30 cards pass", pass == static_cast<int>(cards_.size()),
            std::to_string(cards_.size()), std::to_string(pass));
    return rep;
}

}  // namespace vltau
