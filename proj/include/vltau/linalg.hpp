#pragma once

#include <optional>
#include <vector>

#include "vltau/field.hpp"

namespace vltau {

using Vec = std::vector<FieldElem>;
using Mat = std::vector<Vec>;  // row-major

/// Reduced row echelon form in place; returns pivot column per row.
std::vector<int> rref(Mat& a);

int rank(Mat a);

/// Solve A x = b exactly; nullopt when inconsistent. When the system is
/// underdetermined, free variables are set to 0.
std::optional<Vec> solve(const Mat& a, const Vec& b);

/// Basis of the null space of A (columns = unknowns).
std::vector<Vec> nullspace(const Mat& a);

Mat mat_mul(const Mat& a, const Mat& b);

}  // namespace vltau
