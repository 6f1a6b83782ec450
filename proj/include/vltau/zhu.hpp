#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "vltau/catalog.hpp"
#include "vltau/report.hpp"

namespace vltau {

/// u * v = sum_i binom(wt u, i) u_{i-1} v  (u homogeneous).
FockState star(const FockState& u, const FockState& v);
/// u o v = sum_i binom(wt u, i) u_{i-2} v; O(V) is spanned by these.
FockState circ(const FockState& u, const FockState& v);

/// Generator ids: 0 w1, 1 w2, 2 J, 3 K, 4 P, 5 J1P, 6 K1P,
/// 7 the transient symbol for [J_1 K_1 P] eliminated via the P*P relation.
constexpr int kNumGens = 7;
constexpr int kSymJKP = 7;

/// Element of the free associative algebra on the generator classes.
struct NCPoly {
    std::map<std::vector<int>, FieldElem> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const std::vector<int>& w, const FieldElem& c);
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const NCPoly& o) const;
    NCPoly operator*(const FieldElem& c) const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    bool contains_symbol(int sym) const;
    NCPoly substitute(int sym, const NCPoly& value) const;
};

NCPoly nc_one();
NCPoly nc_gen(int id);

/// Commutative image: exponent vectors over the 8 symbols (7 = [J1K1P]).
struct ScalarPoly {
    std::map<std::array<int, 8>, FieldElem> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const std::array<int, 8>& m, const FieldElem& c);
    ScalarPoly operator+(const ScalarPoly& o) const;
    ScalarPoly operator-(const ScalarPoly& o) const;
    ScalarPoly operator*(const ScalarPoly& o) const;
    ScalarPoly operator*(const FieldElem& c) const;
    bool operator==(const ScalarPoly& o) const { return terms == o.terms; }
    /// Proportionality t = c * o (both nonzero); returns c.
    std::optional<FieldElem> proportional_to(const ScalarPoly& o) const;
};

ScalarPoly abelianize(const NCPoly& p);
ScalarPoly sp_term(const FieldElem& c, std::initializer_list<std::pair<int, int>> pows);
std::string to_string(const ScalarPoly& p);

/// Normal-form spanning word L1(-j..) L2(-k..) J(-m..) K(-n..) base,
/// modes sorted descending, base 0 = vacuum or 1 = P.
struct ZhuWord {
    std::vector<int> l1, l2, jm, km;
    int base = 0;

    long wt() const;
    bool operator<(const ZhuWord& o) const;
    std::string str() const;
};

/// Zhu-reduction engine: rewrites classes [w] into the free algebra on the
/// seven generator classes, eliminating modes by the weight-2/weight-3
/// pullback rules and [J_1 K_1 P] by the P*P relation.
class ZhuReducer {
  public:
    explicit ZhuReducer(const Catalog& cat);

    /// Class of a state in the free algebra, [J1K1P] already eliminated.
    NCPoly reduce(const FockState& w);
    /// Commutative evaluation (symbols a1,a2,b1,b2,x1,x2,x3).
    ScalarPoly reduce_to_scalar(const FockState& w);

    /// Reduce an explicit combination of normal-form words term by term
    /// (the printed-product route; no re-expression of the summed state).
    NCPoly reduce_combination(const std::vector<std::pair<FieldElem, RhsWord>>& lines);
    static ZhuWord to_zhu_word(const RhsWord& w);

    /// [P*P] with the [J1K1P] symbol still present (the P*P relation itself).
    const ScalarPoly& pp_relation() { derive_jkp(); return pp_rel_; }
    /// [J1K1P] as a polynomial in the seven symbols.
    const ScalarPoly& jkp_substitution() { derive_jkp(); return jkp_abelian_; }
    const NCPoly& jkp_nc() { derive_jkp(); return jkp_poly_; }

    FockState word_state(const ZhuWord& w) const;
    /// Independent normal-form words spanning the tau-invariant weight piece.
    const std::vector<ZhuWord>& word_basis(long wt);

    const Catalog& catalog() const { return cat_; }

  private:
    struct SpanSolver;

    NCPoly reduce_raw(const FockState& w);  // keeps the [J1K1P] symbol
    NCPoly reduce_word(const ZhuWord& w);
    void derive_jkp();

    const Catalog& cat_;
    NCPoly jkp_poly_;
    ScalarPoly jkp_abelian_, pp_rel_;
    bool jkp_ready_ = false;
    std::map<std::string, NCPoly> word_memo_;
    std::map<long, std::vector<ZhuWord>> bases_;
    std::map<long, std::vector<FockState>> basis_states_;
    std::map<long, std::shared_ptr<SpanSolver>> solvers_;
};

/// The derived relation set: every member is zero in A(V_L^tau).
struct ScalarSystem {
    // abelian relations, paper normalization
    ScalarPoly p_circ_jp;   // 15 b2 x1 + 5 a2 x3 - 2 x3
    ScalarPoly p_circ_kp;   // (15 a2 - 1) x2
    ScalarPoly jpjp;        // x2^2 - (...)
    ScalarPoly kpkp;        // x3^2 - (...)
    ScalarPoly jpkp;        // x2 x3 - (...)
    // auxiliary certified relations
    ScalarPoly w2_circ_p;   // (15 a2 - 1) x1, from [w2 o P]
    ScalarPoly p_star_jp;   // x1 x2 - (...), from [P * J1P]
    ScalarPoly p_star_kp;   // x1 x3 - (...)
    // operator-ordered forms for matrix validation on module tops
    NCPoly nc_p_circ_jp, nc_p_circ_kp, nc_p_circ_p, nc_w2_circ_p;
    NCPoly nc_pp, nc_jpjp, nc_kpkp, nc_jpkp;  // g_i g_j - reduce(star(..))
    NCPoly nc_p_star_jp, nc_p_star_kp;
    NCPoly nc_comm_jp_p, nc_comm_kp_p, nc_comm_jp_kp;
    // abelian commutator block of the M-submodule lemma
    ScalarPoly comm_kp_p, comm_jp_kp;
};

/// Resolve the two sign-damaged coefficients by direct computation.
std::vector<AppendixLine> resolve_appendix_signs(const Catalog& cat,
                                                 std::vector<AppendixLine> lines);

/// Derive the system from the verified product expansions and check every
/// coefficient against the printed values; throws on any mismatch.
ScalarSystem derive_scalar_system(ZhuReducer& red,
                                  const std::vector<AppendixLine>& appendix,
                                  Report* rep = nullptr);

/// Top-level data of one simple module: matrices of the seven generators.
struct ModuleCard {
    std::string name;
    int dim = 1;
    Rational min_weight;
    // o(w1), o(w2), o(J), o(K), o(P), o(J1P), o(K1P); row-major dim x dim
    std::array<std::vector<FieldElem>, 7> mats;
    std::string provenance;
};

/// Evaluate an NC polynomial on the card's matrices (symbol 7 must be gone).
std::vector<FieldElem> eval_on_card(const NCPoly& p, const ModuleCard& card);
/// Evaluate a scalar polynomial at the card's scalars (dim-1 cards only).
FieldElem eval_scalar(const ScalarPoly& p, const std::array<FieldElem, 7>& v);

Report verify_o_homomorphism(const ScalarSystem& sys, const ModuleCard& card);

}  // namespace vltau
