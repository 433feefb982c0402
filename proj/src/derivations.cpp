#include "derivations.hpp"

#include <stdexcept>

namespace grasscoh {

DerivationSpace derivation_space(const RingContext& ctx, int drop) {
    if (drop <= 0) throw std::invalid_argument("degree drop must be positive");
    AssignmentSpace sol = relation_nullspace(ctx, drop, std::nullopt);
    return DerivationSpace{ctx, drop, sol.dimension, std::move(sol.basis)};
}

}  // namespace grasscoh
