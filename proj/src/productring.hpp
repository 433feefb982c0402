#pragma once

#include <string>
#include <vector>

#include "chernpoly.hpp"
#include "grassring.hpp"

namespace grasscoh {

/// Sphere-times-Grassmannian cohomology context. Immutable.
class ProductContext {
  public:
    ProductContext(int m, RingContext inner) : m_(m), inner_(inner) {
        if (m < 1) throw std::invalid_argument("sphere dimension must be >= 1");
    }
    int m() const { return m_; }
    const RingContext& inner() const { return inner_; }
    /// Formal dimension m + 2*k*(n-k); top nonzero cohomological degree.
    int total_dimension() const { return m_ + 2 * inner_.dim(); }

    bool operator==(const ProductContext& o) const { return m_ == o.m_ && inner_ == o.inner_; }
    bool operator!=(const ProductContext& o) const { return !(*this == o); }

  private:
    int m_;
    RingContext inner_;
};

/// Element a + u*b of the product ring, with a, b Grassmannian classes.
class ProductClass {
  public:
    explicit ProductClass(ProductContext ctx)
        : ctx_(ctx), even_(ctx.inner()), upart_(ctx.inner()) {}
    ProductClass(ProductContext ctx, GrassClass even, GrassClass upart);

    const ProductContext& ctx() const { return ctx_; }
    const GrassClass& even_part() const { return even_; }
    const GrassClass& u_part() const { return upart_; }
    bool is_zero() const { return even_.is_zero() && upart_.is_zero(); }

    ProductClass operator+(const ProductClass& o) const;
    ProductClass operator-(const ProductClass& o) const;
    /// (a + ub)(a' + ub') = aa' + u(ab' + a'b); u^2 = 0.
    ProductClass operator*(const ProductClass& o) const;
    ProductClass operator*(const Rational& s) const;
    ProductClass operator-() const;
    bool operator==(const ProductClass& o) const {
        return ctx_ == o.ctx_ && even_ == o.even_ && upart_ == o.upart_;
    }

    /// Homogeneous of degree q iff even part has degree q and u part q - m.
    bool is_homogeneous(int* degree_out = nullptr) const;
    int degree() const;

    /// Text form: "<grass> + u*(<grass>)".
    std::string str() const;

  private:
    ProductContext ctx_;
    GrassClass even_;
    GrassClass upart_;
};

ProductClass product_zero(const ProductContext& ctx);
ProductClass product_unit(const ProductContext& ctx);
/// The sphere generator u.
ProductClass product_u(const ProductContext& ctx);
/// Embed a Grassmannian class.
ProductClass embed(const ProductContext& ctx, const GrassClass& g);

/// The covering involution on cohomology: scales the degree-2j Grassmannian
/// slice by (-1)^j and u by +1 (m odd) or -1 (m even). Ring involution.
ProductClass theta_star(const ProductClass& x);

/// Basis of the fixed subring of theta_star in one degree, drawn from the
/// canonical eigenbasis {sigma_p} and {u*sigma_p}.
std::vector<ProductClass> fixed_subring_basis(const ProductContext& ctx, int degree);

/// Degreewise dimensions (degrees 0..max_degree) of the unital subalgebra
/// generated by the given homogeneous classes, by exact rank closure.
std::vector<int> subalgebra_span_dims(const ProductContext& ctx,
                                      const std::vector<ProductClass>& generators,
                                      int max_degree);

/// Index into the canonical basis of one degree slice: sigma_p (uflag false)
/// or u*sigma_p (uflag true).
struct SliceIndex {
    Partition p;
    bool uflag = false;
    bool operator==(const SliceIndex&) const = default;
};

/// Canonical ordered basis of the degree-q slice: all sigma_p with 2|p| = q in
/// canonical partition order, then all u*sigma_p with m + 2|p| = q.
std::vector<SliceIndex> slice_indices(const ProductContext& ctx, int q);

Rational coefficient_of(const ProductClass& x, const SliceIndex& idx);

/// Ring-homomorphic substitution c_i -> images[i-1], u -> u_image, computed in
/// product-ring arithmetic (so u^2 = 0 applies to the result).
/// When check_degrees is set, images must be homogeneous of degree 2i and
/// u_image of degree m.
ProductClass evaluate(const ChernPolynomial& poly, const std::vector<ProductClass>& images,
                      const ProductClass& u_image, bool check_degrees = false);

}  // namespace grasscoh
