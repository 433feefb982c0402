#include "relsystem.hpp"

#include <utility>

#include "linalg.hpp"

namespace grasscoh {

AssignmentSpace relation_nullspace(const RingContext& ctx, int offset,
                                   const std::optional<Rational>& lambda) {
    const int k = ctx.k();
    const int n = ctx.n();
    const BoxShape box = ctx.box();

    // Unknown columns: one per Schubert coefficient of each X_j.
    struct Column {
        int j;  // generator index, 1-based
        Partition p;
    };
    std::vector<Column> columns;
    for (int j = 1; j <= k; ++j) {
        int deg = 2 * j - offset;
        if (deg < 0 || deg % 2 != 0) continue;
        for (const Partition& p : partitions_in_box(box, deg / 2)) columns.push_back({j, p});
    }
    AssignmentSpace out;
    if (columns.empty()) return out;

    // Precompute lambda powers lambda^0..lambda^n when weighted.
    std::vector<Rational> pow(static_cast<std::size_t>(n) + 1, Rational(1));
    if (lambda)
        for (int i = 1; i <= n; ++i) pow[i] = pow[i - 1] * *lambda;

    // Rows: for each relation h_r, the coordinates of the residue in the
    // degree-(2r - offset) Schubert basis.
    std::vector<std::vector<Rational>> rows;
    for (int r = n - k + 1; r <= n; ++r) {
        int res_deg = 2 * r - offset;
        if (res_deg < 0 || res_deg % 2 != 0) continue;
        std::vector<Partition> targets = partitions_in_box(box, res_deg / 2);
        if (targets.empty()) continue;
        ChernPolynomial hr = h_polynomial(k, r);
        // Column contributions: reduce(dh_r/dc_j) * weight * sigma_p.
        std::vector<std::vector<Rational>> block(targets.size(),
                                                 std::vector<Rational>(columns.size(), Rational(0)));
        for (std::size_t c = 0; c < columns.size(); ++c) {
            const Column& col = columns[c];
            // c_j does not appear in h_r when j > r (weighted degree r), so the
            // lambda exponent r - j is nonnegative whenever the term survives.
            ChernPolynomial dhr = hr.partial_derivative(col.j);
            if (dhr.is_zero()) continue;
            GrassClass contrib = reduce_polynomial(ctx, dhr) * sigma(ctx, col.p);
            if (lambda) contrib = contrib * pow[r - col.j];
            for (std::size_t t = 0; t < targets.size(); ++t)
                block[t][c] = contrib.coeff(targets[t]);
        }
        for (auto& row : block) rows.push_back(std::move(row));
    }

    RatMatrix sys(static_cast<int>(rows.size()), static_cast<int>(columns.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < columns.size(); ++c)
            sys.at(static_cast<int>(i), static_cast<int>(c)) = rows[i][c];

    for (const std::vector<Rational>& v : nullspace(sys)) {
        std::vector<GrassClass> images(k, grass_zero(ctx));
        for (std::size_t c = 0; c < columns.size(); ++c)
            if (v[c] != 0) images[columns[c].j - 1].add_term(columns[c].p, v[c]);
        out.basis.push_back(std::move(images));
    }
    out.dimension = static_cast<int>(out.basis.size());
    return out;
}

}  // namespace grasscoh
