#pragma once

#include <optional>
#include <vector>

#include "grassring.hpp"
#include "rational.hpp"

namespace grasscoh {

/// Solution space of a relation-derived linear system, recorded as
/// generator-image assignments (one GrassClass per c_j).
struct AssignmentSpace {
    int dimension = 0;
    std::vector<std::vector<GrassClass>> basis;  // each entry: images of c_1..c_k
};

/// Nullspace of the system sum_j w_{r,j} * reduce(dh_r/dc_j) * X_j = 0 over
/// the defining relations r = n-k+1..n, where the unknown X_j ranges over
/// H^{2j - offset} (no unknown when that degree is negative or odd). The
/// weight w_{r,j} is lambda^{r-j} when lambda is given, otherwise 1.
AssignmentSpace relation_nullspace(const RingContext& ctx, int offset,
                                   const std::optional<Rational>& lambda);

}  // namespace grasscoh
