#pragma once

#include <cstdint>

#include "vltau/classify.hpp"

namespace vltau {

/// Commutator families checked as operators on the full graded basis of V_L
/// up to max_wt, all |m|,|n| <= mode_bound.
Report suite_commutators(const Catalog& cat, const Rational& max_wt,
                         int mode_bound = 3);

/// Seeded random Borcherds-identity instances across untwisted modules.
Report suite_borcherds(const Catalog& cat, int checks, uint64_t seed);

/// g(u_n w) = (g u)_n (g w) for g in {tau, sigma, theta}.
Report suite_equivariance(const Catalog& cat, int checks, uint64_t seed);

/// reduce(u o v) evaluates to zero on every one-dimensional card.
Report suite_ov_annihilation(const Catalog& cat, ZhuReducer& red,
                             const Classifier& cls, int checks, uint64_t seed);

/// [u*v] and [v*u] agree on one-dimensional tops (generator pairs), and
/// reduce([u*v]) evaluates to the product of the generator scalars.
Report suite_star_commutativity(const Catalog& cat, ZhuReducer& red,
                                const Classifier& cls);

}  // namespace vltau
