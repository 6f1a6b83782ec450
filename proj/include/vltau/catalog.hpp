#pragma once

#include <string>
#include <vector>

#include "vltau/report.hpp"
#include "vltau/vertex.hpp"

namespace vltau {

/// Named vectors of V_L and V_L^tau. alpha-coordinates rescale to the beta
/// basis via alpha = beta/sqrt(2); vectors printed with bare alpha(-1)
/// (the weight-1 tops) are stored up to that harmless global scale.
///   x(a_i) = e^{b_i} + e^{-b_i}, y(a_i) = e^{b_i} - e^{-b_i},
///   w(a_i) = (1/4) b_i(-1)^2 - x(a_i).
class Catalog {
  public:
    Catalog();

    const FockState& omega() const { return omega_; }
    const FockState& w1() const { return w1_; }       // omega~1, c = 6/5
    const FockState& w2() const { return w2_; }       // omega~2, c = 4/5
    const FockState& omega1() const { return omega1_; }  // c = 1/2
    const FockState& omega2() const { return omega2_; }  // c = 7/10
    const FockState& J() const { return J_; }
    const FockState& K() const { return K_; }
    const FockState& P() const { return P_; }
    const FockState& J1P() const { return J1P_; }
    const FockState& K1P() const { return K1P_; }

    FockState x_alpha(int i) const;  // i = 0,1,2
    FockState y_alpha(int i) const;
    FockState w_alpha(int i) const;

    /// Build any named vector; throws on unknown name. Names: omega, w1, w2,
    /// omega1, omega2, J, K, P, J1P, K1P, x(a0..2), y(..), w(..),
    /// v2_eps (eps=1,2), v3_j, v4_j_eps, v5_1, v5_2, v6_j.
    FockState build(const std::string& name) const;

    W3Gens gens() const { return {w1_, w2_, J_, K_}; }

    Report verify_structure_constants(OpCache* cache = nullptr) const;
    Report verify_singular_vectors(OpCache* cache = nullptr) const;
    Report verify_appendix_b(const std::string& data_file,
                             OpCache* cache = nullptr) const;
    Report verify_section4_untwisted(OpCache* cache = nullptr) const;
    Report verify_conformal_orthogonality(OpCache* cache = nullptr) const;
    Report verify_automorphism_actions() const;

  private:
    FockState omega_, w1_, w2_, omega1_, omega2_, J_, K_, P_, J1P_, K1P_;
};

/// Parsed right-hand-side word: ops applied right to left to the base.
struct RhsWord {
    // op 0..3 -> w1, w2, J, K with absolute mode subscripts
    std::vector<std::pair<int, int>> ops;  // (op, mode)
    int base = 0;                          // 0 = vacuum, 1 = P
};

struct AppendixLine {
    std::string lhs_name;
    int outer = 0;  // which vector acts: 0 = P, 1 = J1P, 2 = K1P
    int mode = 0;
    int inner = 0;  // argument vector, same encoding
    std::vector<std::pair<FieldElem, RhsWord>> rhs;
    std::vector<bool> sign_unknown;  // per rhs term
};

std::vector<AppendixLine> parse_appendix_file(const std::string& path);

}  // namespace vltau
