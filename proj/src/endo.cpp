#include "endo.hpp"

#include <stdexcept>

namespace grasscoh {

GradedEndo::GradedEndo(ProductContext ctx, std::vector<ProductClass> c_images,
                       ProductClass u_image)
    : ctx_(ctx), c_images_(std::move(c_images)), u_image_(std::move(u_image)) {
    if (static_cast<int>(c_images_.size()) != ctx_.inner().k())
        throw std::invalid_argument("need one image per Chern generator");
    int d = -1;
    for (std::size_t i = 0; i < c_images_.size(); ++i) {
        const ProductClass& im = c_images_[i];
        if (im.ctx() != ctx_) throw std::invalid_argument("image context mismatch");
        if (!im.is_homogeneous(&d) || (d != -1 && d != 2 * static_cast<int>(i + 1)))
            throw std::invalid_argument("image of c_" + std::to_string(i + 1) +
                                        " must be homogeneous of degree " +
                                        std::to_string(2 * (i + 1)));
    }
    if (u_image_.ctx() != ctx_) throw std::invalid_argument("u image context mismatch");
    if (!u_image_.is_homogeneous(&d) || (d != -1 && d != ctx_.m()))
        throw std::invalid_argument("u image must be homogeneous of degree m");
}

const char* Classification::kind_name(Kind k) {
    switch (k) {
        case Kind::adams: return "adams";
        case Kind::complement: return "complement";
        case Kind::u_family: return "u_family";
        case Kind::sphere_to_grass: return "sphere_to_grass";
        case Kind::unclassified: return "unclassified";
    }
    return "unclassified";
}

const char* Classification::u_kind_name(UKind k) {
    switch (k) {
        case UKind::scalar: return "scalar";
        case UKind::grass_square_zero: return "grass_square_zero";
        case UKind::zero: return "zero";
    }
    return "zero";
}

namespace {

// Reduced class of c_i: the Schubert class of the single column (1^i).
GrassClass chern_class(const RingContext& ctx, int i) {
    return sigma(ctx, Partition(std::vector<int>(i, 1)));
}

ProductClass slice_class(const ProductContext& ctx, const SliceIndex& idx) {
    GrassClass g = sigma(ctx.inner(), idx.p);
    return idx.uflag ? ProductClass(ctx, grass_zero(ctx.inner()), g) : embed(ctx, g);
}

Rational int_pow(const Rational& x, int e) {
    Rational out = 1;
    for (int i = 0; i < e; ++i) out *= x;
    return out;
}

}  // namespace

GradedEndo make_adams(const ProductContext& ctx, const Rational& lambda, const Rational& mu) {
    std::vector<ProductClass> images;
    for (int i = 1; i <= ctx.inner().k(); ++i)
        images.push_back(embed(ctx, chern_class(ctx.inner(), i) * int_pow(lambda, i)));
    return GradedEndo(ctx, std::move(images), product_u(ctx) * mu);
}

GradedEndo make_complement(const ProductContext& ctx, const Rational& lambda, const Rational& mu) {
    std::vector<ProductClass> images;
    for (int i = 1; i <= ctx.inner().k(); ++i) {
        GrassClass cbar = h_and_cbar(ctx.inner(), i).second;
        images.push_back(embed(ctx, cbar * int_pow(-lambda, i)));
    }
    return GradedEndo(ctx, std::move(images), product_u(ctx) * mu);
}

GradedEndo make_u_family(const ProductContext& ctx, const std::vector<GrassClass>& P,
                         const ProductClass& Q) {
    if (static_cast<int>(P.size()) != ctx.inner().k())
        throw std::invalid_argument("need one P_i per Chern generator");
    std::vector<ProductClass> images;
    for (std::size_t i = 0; i < P.size(); ++i) {
        int deg = 2 * static_cast<int>(i + 1) - ctx.m();
        int d = -1;
        if (!P[i].is_homogeneous(&d) || (d != -1 && d != deg))
            throw std::invalid_argument("P_" + std::to_string(i + 1) +
                                        " must be homogeneous of degree 2i - m");
        images.push_back(ProductClass(ctx, grass_zero(ctx.inner()), P[i]));
    }
    if (!(Q * Q).is_zero())
        throw std::invalid_argument("u image must square to zero");
    return GradedEndo(ctx, std::move(images), Q);
}

GradedEndo make_theta_star(const ProductContext& ctx) {
    std::vector<ProductClass> images;
    for (int i = 1; i <= ctx.inner().k(); ++i) {
        int sign = i % 2 == 0 ? 1 : -1;
        images.push_back(embed(ctx, chern_class(ctx.inner(), i) * sign));
    }
    int u_sign = ctx.m() % 2 == 1 ? 1 : -1;
    return GradedEndo(ctx, std::move(images), product_u(ctx) * u_sign);
}

GradedEndo make_identity(const ProductContext& ctx) { return make_adams(ctx, 1, 1); }

EndoVerdict is_well_defined(const GradedEndo& phi) {
    const RingContext& inner = phi.ctx().inner();
    EndoVerdict v;
    for (int r = inner.n() - inner.k() + 1; r <= inner.n(); ++r) {
        ProductClass residue =
            evaluate(h_polynomial(inner.k(), r), phi.c_images(), phi.u_image());
        if (!residue.is_zero()) {
            v.failing_relation = "h_" + std::to_string(r);
            v.residue = residue;
            return v;
        }
    }
    ProductClass usq = phi.u_image() * phi.u_image();
    if (!usq.is_zero()) {
        v.failing_relation = "u^2";
        v.residue = usq;
        return v;
    }
    v.well_defined = true;
    return v;
}

ProductClass apply(const GradedEndo& phi, const ProductClass& x) {
    if (x.ctx() != phi.ctx()) throw std::invalid_argument("context mismatch");
    const RingContext& inner = phi.ctx().inner();
    ProductClass acc = product_zero(phi.ctx());
    for (const auto& [p, c] : x.even_part().coeffs())
        acc = acc + evaluate(jacobi_trudi(inner, p), phi.c_images(), phi.u_image()) * c;
    for (const auto& [p, c] : x.u_part().coeffs()) {
        ProductClass img = evaluate(jacobi_trudi(inner, p), phi.c_images(), phi.u_image());
        acc = acc + phi.u_image() * img * c;
    }
    return acc;
}

GradedEndo compose(const GradedEndo& phi, const GradedEndo& psi) {
    if (phi.ctx() != psi.ctx()) throw std::invalid_argument("context mismatch");
    std::vector<ProductClass> images;
    for (const ProductClass& im : psi.c_images()) images.push_back(apply(phi, im));
    return GradedEndo(phi.ctx(), std::move(images), apply(phi, psi.u_image()));
}

RatMatrix matrix_of(const GradedEndo& phi, int q) {
    std::vector<SliceIndex> basis = slice_indices(phi.ctx(), q);
    int n = static_cast<int>(basis.size());
    RatMatrix m(n, n);
    for (int j = 0; j < n; ++j) {
        ProductClass img = apply(phi, slice_class(phi.ctx(), basis[j]));
        for (int i = 0; i < n; ++i) m.at(i, j) = coefficient_of(img, basis[i]);
    }
    return m;
}

Classification classify(const GradedEndo& phi) {
    if (!is_well_defined(phi).well_defined)
        throw std::domain_error("classify requires a well-defined endomorphism");
    const ProductContext& ctx = phi.ctx();
    const RingContext& inner = ctx.inner();
    Classification out;

    // u side.
    const ProductClass& uim = phi.u_image();
    if (uim.is_zero()) {
        out.u_kind = Classification::UKind::zero;
    } else if (uim.even_part().is_zero() && uim.u_part() == grass_unit(inner) * uim.u_part().coeff(Partition())) {
        out.u_kind = Classification::UKind::scalar;
        out.mu = uim.u_part().coeff(Partition());
    } else {
        // Well-definedness already certifies uim^2 = 0.
        out.u_kind = Classification::UKind::grass_square_zero;
    }

    // c side.
    bool all_zero = true, pure_u = true;
    for (const ProductClass& im : phi.c_images()) {
        if (!im.is_zero()) all_zero = false;
        if (!im.even_part().is_zero()) pure_u = false;
    }
    if (all_zero && out.u_kind == Classification::UKind::grass_square_zero &&
        uim.u_part().is_zero()) {
        out.kind = Classification::Kind::sphere_to_grass;
        return out;
    }
    if (pure_u) {
        out.kind = Classification::Kind::u_family;
        return out;
    }

    Rational t = phi.c_image(1).even_part().coeff(Partition({1}));
    if (t != 0) {
        bool adams = true, comp = true;
        for (int i = 1; i <= inner.k(); ++i) {
            Rational ti = int_pow(t, i);
            if (phi.c_image(i) != embed(ctx, chern_class(inner, i) * ti)) adams = false;
            GrassClass cbar = h_and_cbar(inner, i).second;
            if (phi.c_image(i) != embed(ctx, cbar * int_pow(-t, i))) comp = false;
            if (!adams && !comp) break;
        }
        if (adams) {
            out.kind = Classification::Kind::adams;
            out.lambda = t;
            return out;
        }
        if (comp) {
            out.kind = Classification::Kind::complement;
            out.lambda = -t;
            return out;
        }
    }
    out.kind = Classification::Kind::unclassified;
    for (int i = 1; i <= inner.k(); ++i) {
        const ProductClass& im = phi.c_image(i);
        bool matches = t != 0 && im == embed(ctx, chern_class(inner, i) * int_pow(t, i));
        if (!matches) {
            out.witness = "c_" + std::to_string(i) + " -> " + im.str();
            break;
        }
    }
    return out;
}

AssignmentSpace extension_nullspace(const ProductContext& ctx, const Rational& lambda) {
    if (lambda == 0) throw std::invalid_argument("lambda must be nonzero");
    return relation_nullspace(ctx.inner(), ctx.m(), lambda);
}

bool restricts_to_fixed(const GradedEndo& phi) {
    GradedEndo theta = make_theta_star(phi.ctx());
    return compose(theta, phi) == compose(phi, theta);
}

bool homer_hypothesis(int n, int k) {
    return (k <= 3 && n > 2 * k) || (k > 3 && n > 2 * k * k - 1);
}

}  // namespace grasscoh
