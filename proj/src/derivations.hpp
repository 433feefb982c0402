#pragma once

#include "grassring.hpp"
#include "relsystem.hpp"

namespace grasscoh {

/// Space of Q-linear derivations of the Grassmannian ring lowering degree by
/// `drop`, recorded by generator images D(c_1)..D(c_k).
struct DerivationSpace {
    RingContext ctx;
    int drop;
    int dimension;
    std::vector<std::vector<GrassClass>> basis;
};

/// Exact nullspace of the Leibniz constraints D(h_r) = sum_j (dh_r/dc_j) D(c_j)
/// = 0 over the defining relations. The equal-rank theorem predicts dimension
/// 0 for every drop > 0; drop <= 0 is rejected.
DerivationSpace derivation_space(const RingContext& ctx, int drop);

}  // namespace grasscoh
