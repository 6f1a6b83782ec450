#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "vltau/zhu.hpp"

namespace vltau {

ScalarPoly sp_substitute(const ScalarPoly& p, int sym, const FieldElem& v);
ScalarPoly sp_substitute(const ScalarPoly& p, int sym, const ScalarPoly& q);

/// Roster entry for one simple module of M(0) or of M_t^0.
struct SimpleFactor {
    std::string name;
    bool w_family = false;
    FieldElem a, b;  // (a1,b1) resp. (a2,b2) on the top level
    bool b_symbolic = false;
    std::string a_prov, b_prov;
    std::string w_partner, contragredient;
};

/// Candidate top-level scalars (a1,a2,b1,b2) of a simple M^0-module pair.
struct Quadruplet {
    std::string m1, m2;
    bool w_type = false;
    FieldElem a1, a2, b1, b2;
    bool b1_symbolic = false;
};

struct CardMeta {
    ModuleCard card;
    std::array<std::string, 2> m_pair, w_pair;
    std::string top_part;  // "M", "W", or "both"
    std::string sigma_partner;
    std::vector<std::string> top_vectors;  // untwisted cards only
};

struct Solution {
    FieldElem x1, x2, x3;
    FieldElem b1;  // meaningful for symbolic quadruplets
    bool has_b1 = false;
};

struct SolveResult {
    std::vector<Solution> solutions;
    bool field_limited = false;  // a rejection hinged on Q(sqrt(-3))-membership
};

class Classifier {
  public:
    Classifier(const Catalog& cat, const std::string& config_dir);

    const std::vector<CardMeta>& cards() const { return cards_; }
    const std::vector<SimpleFactor>& m0_simples() const { return m0_; }
    const std::vector<SimpleFactor>& mt0_simples() const { return mt_; }

    /// 60 candidates: 30 M x M and 30 W x W pairings.
    std::vector<Quadruplet> enumerate_quadruplets() const;
    /// Recompute the derived roster entries by diagonalization.
    Report verify_roster_derived() const;
    /// Recompute untwisted card matrices from their top vectors; when the
    /// eliminated [J1K1P] polynomial is supplied, also check the P*P relation
    /// against the direct vertex-computed o(J_1 K_1 P).
    Report verify_cards_untwisted(const NCPoly* jkp_nc = nullptr) const;

    SolveResult solve_system(const Quadruplet& q, const ScalarSystem& sys) const;
    Report classify_all(const ScalarSystem& sys) const;
    Report zhu_algebra_structure() const;
    Report sigma_permutation_check() const;
    Report contragredient_check() const;
    /// verify_o_homomorphism over all 30 cards.
    Report o_homomorphism_all(const ScalarSystem& sys) const;

  private:
    const Catalog& cat_;
    std::vector<CardMeta> cards_;
    std::vector<SimpleFactor> m0_, mt_;
};

}  // namespace vltau
