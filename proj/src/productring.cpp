#include "productring.hpp"

#include <algorithm>

#include "linalg.hpp"

namespace grasscoh {

ProductClass::ProductClass(ProductContext ctx, GrassClass even, GrassClass upart)
    : ctx_(ctx), even_(std::move(even)), upart_(std::move(upart)) {
    if (even_.ctx() != ctx_.inner() || upart_.ctx() != ctx_.inner())
        throw std::invalid_argument("part context mismatch");
}

ProductClass ProductClass::operator+(const ProductClass& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("product context mismatch");
    return ProductClass(ctx_, even_ + o.even_, upart_ + o.upart_);
}

ProductClass ProductClass::operator-(const ProductClass& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("product context mismatch");
    return ProductClass(ctx_, even_ - o.even_, upart_ - o.upart_);
}

ProductClass ProductClass::operator*(const ProductClass& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("product context mismatch");
    // No Koszul signs: the Grassmannian factor is evenly graded and u appears
    // at most once.
    return ProductClass(ctx_, even_ * o.even_, even_ * o.upart_ + o.even_ * upart_);
}

ProductClass ProductClass::operator*(const Rational& s) const {
    return ProductClass(ctx_, even_ * s, upart_ * s);
}

ProductClass ProductClass::operator-() const { return *this * Rational(-1); }

bool ProductClass::is_homogeneous(int* degree_out) const {
    int de = -1, du = -1;
    if (!even_.is_homogeneous(&de) || !upart_.is_homogeneous(&du)) return false;
    int deg = -1;
    if (de >= 0) deg = de;
    if (du >= 0) {
        int q = du + ctx_.m();
        if (deg >= 0 && q != deg) return false;
        deg = q;
    }
    if (degree_out) *degree_out = deg;
    return true;
}

int ProductClass::degree() const {
    int d = -1;
    if (!is_homogeneous(&d)) throw std::domain_error("class is not homogeneous");
    return d;
}

std::string ProductClass::str() const {
    if (is_zero()) return "0";
    if (upart_.is_zero()) return even_.str();
    std::string utail = "u*(" + upart_.str() + ")";
    if (even_.is_zero()) return utail;
    return even_.str() + " + " + utail;
}

ProductClass product_zero(const ProductContext& ctx) { return ProductClass(ctx); }

ProductClass product_unit(const ProductContext& ctx) {
    return ProductClass(ctx, grass_unit(ctx.inner()), grass_zero(ctx.inner()));
}

ProductClass product_u(const ProductContext& ctx) {
    return ProductClass(ctx, grass_zero(ctx.inner()), grass_unit(ctx.inner()));
}

ProductClass embed(const ProductContext& ctx, const GrassClass& g) {
    return ProductClass(ctx, g, grass_zero(ctx.inner()));
}

namespace {

GrassClass scale_by_weight_sign(const GrassClass& g, int extra_sign) {
    GrassClass out(g.ctx());
    for (const auto& [p, c] : g.coeffs()) {
        int sign = (p.weight() % 2 == 0 ? 1 : -1) * extra_sign;
        out.add_term(p, c * sign);
    }
    return out;
}

}  // namespace

ProductClass theta_star(const ProductClass& x) {
    int u_sign = x.ctx().m() % 2 == 1 ? 1 : -1;
    return ProductClass(x.ctx(), scale_by_weight_sign(x.even_part(), 1),
                        scale_by_weight_sign(x.u_part(), u_sign));
}

std::vector<ProductClass> fixed_subring_basis(const ProductContext& ctx, int degree) {
    std::vector<ProductClass> out;
    if (degree < 0 || degree > ctx.total_dimension()) return out;
    const RingContext& inner = ctx.inner();
    int u_sign = ctx.m() % 2 == 1 ? 1 : -1;
    if (degree % 2 == 0) {
        for (const Partition& p : partitions_in_box(inner.box(), degree / 2)) {
            if (p.weight() % 2 == 0) out.push_back(embed(ctx, sigma(inner, p)));
        }
    }
    int uw = degree - ctx.m();
    if (uw >= 0 && uw % 2 == 0) {
        for (const Partition& p : partitions_in_box(inner.box(), uw / 2)) {
            int sign = (p.weight() % 2 == 0 ? 1 : -1) * u_sign;
            if (sign == 1)
                out.push_back(ProductClass(ctx, grass_zero(inner), sigma(inner, p)));
        }
    }
    return out;
}

namespace {

// Canonical coordinates of the degree-q slice: first {sigma_p}, then
// {u*sigma_p}, each in canonical partition order.
struct SliceBasis {
    std::vector<Partition> grass;  // 2|p| = q
    std::vector<Partition> ufrag;  // m + 2|p| = q
    int size() const { return static_cast<int>(grass.size() + ufrag.size()); }
};

SliceBasis slice_basis(const ProductContext& ctx, int q) {
    SliceBasis b;
    if (q >= 0 && q % 2 == 0) b.grass = partitions_in_box(ctx.inner().box(), q / 2);
    int uw = q - ctx.m();
    if (uw >= 0 && uw % 2 == 0) b.ufrag = partitions_in_box(ctx.inner().box(), uw / 2);
    return b;
}

std::vector<Rational> coordinates(const ProductClass& x, const SliceBasis& b) {
    std::vector<Rational> v;
    v.reserve(b.size());
    for (const Partition& p : b.grass) v.push_back(x.even_part().coeff(p));
    for (const Partition& p : b.ufrag) v.push_back(x.u_part().coeff(p));
    return v;
}

}  // namespace

std::vector<int> subalgebra_span_dims(const ProductContext& ctx,
                                      const std::vector<ProductClass>& generators,
                                      int max_degree) {
    for (const auto& g : generators) {
        if (!g.is_homogeneous(nullptr))
            throw std::invalid_argument("generators must be homogeneous");
        if (g.ctx() != ctx) throw std::invalid_argument("generator context mismatch");
    }
    // Per-degree row-echelon spans; worklist of elements whose products with
    // generators have not been expanded yet.
    std::vector<SliceBasis> bases(max_degree + 1);
    for (int q = 0; q <= max_degree; ++q) bases[q] = slice_basis(ctx, q);
    std::vector<std::vector<std::vector<Rational>>> rows(max_degree + 1);
    std::vector<ProductClass> worklist;

    auto try_insert = [&](const ProductClass& x) -> bool {
        int q = -1;
        if (!x.is_homogeneous(&q) || x.is_zero() || q > max_degree) return false;
        auto& span = rows[q];
        std::vector<Rational> v = coordinates(x, bases[q]);
        // Reduce against existing echelon rows (each row normalized with
        // leading 1 at its pivot).
        for (const auto& row : span) {
            int pivot = -1;
            for (std::size_t i = 0; i < row.size(); ++i)
                if (row[i] != 0) { pivot = static_cast<int>(i); break; }
            if (pivot >= 0 && v[pivot] != 0) {
                Rational f = v[pivot];
                for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * row[i];
            }
        }
        int pivot = -1;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) { pivot = static_cast<int>(i); break; }
        if (pivot < 0) return false;
        Rational inv = Rational(1) / v[pivot];
        for (auto& e : v) e *= inv;
        span.push_back(std::move(v));
        return true;
    };

    ProductClass unit = product_unit(ctx);
    if (try_insert(unit)) worklist.push_back(unit);
    for (const auto& g : generators)
        if (try_insert(g)) worklist.push_back(g);

    while (!worklist.empty()) {
        ProductClass x = worklist.back();
        worklist.pop_back();
        for (const auto& g : generators) {
            if (g.is_zero()) continue;
            int dx = x.degree(), dg = g.degree();
            if (dx + dg > max_degree) continue;
            ProductClass prod = x * g;
            if (try_insert(prod)) worklist.push_back(prod);
        }
    }

    std::vector<int> dims(max_degree + 1, 0);
    for (int q = 0; q <= max_degree; ++q) dims[q] = static_cast<int>(rows[q].size());
    return dims;
}

std::vector<SliceIndex> slice_indices(const ProductContext& ctx, int q) {
    SliceBasis b = slice_basis(ctx, q);
    std::vector<SliceIndex> out;
    out.reserve(b.size());
    for (const Partition& p : b.grass) out.push_back({p, false});
    for (const Partition& p : b.ufrag) out.push_back({p, true});
    return out;
}

Rational coefficient_of(const ProductClass& x, const SliceIndex& idx) {
    return idx.uflag ? x.u_part().coeff(idx.p) : x.even_part().coeff(idx.p);
}

ProductClass evaluate(const ChernPolynomial& poly, const std::vector<ProductClass>& images,
                      const ProductClass& u_image, bool check_degrees) {
    if (images.empty()) throw std::invalid_argument("no generator images");
    const ProductContext& ctx = images.front().ctx();
    if (static_cast<int>(images.size()) != poly.num_c_vars())
        throw std::invalid_argument("image count does not match polynomial arity");
    for (const auto& im : images)
        if (im.ctx() != ctx) throw std::invalid_argument("image context mismatch");
    if (u_image.ctx() != ctx) throw std::invalid_argument("u image context mismatch");
    if (check_degrees) {
        int d = -1;
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (!images[i].is_homogeneous(&d) || (d != -1 && d != 2 * static_cast<int>(i + 1)))
                throw std::invalid_argument("image of c_" + std::to_string(i + 1) +
                                            " is not homogeneous of degree " + std::to_string(2 * (i + 1)));
        }
        if (!u_image.is_homogeneous(&d) || (d != -1 && d != ctx.m()))
            throw std::invalid_argument("u image is not homogeneous of degree m");
    }
    ProductClass acc = product_zero(ctx);
    for (const auto& [mono, coeff] : poly.terms()) {
        ProductClass term = product_unit(ctx) * coeff;
        for (std::size_t i = 0; i < images.size(); ++i)
            for (int e = 0; e < mono.c_exp[i]; ++e) term = term * images[i];
        for (int e = 0; e < mono.u_exp; ++e) term = term * u_image;
        acc = acc + term;
    }
    return acc;
}

}  // namespace grasscoh
