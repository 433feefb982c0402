#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "productring.hpp"
#include "relsystem.hpp"

namespace grasscoh {

/// Graded endomorphism of the product ring, stored by generator images.
/// Construction checks degrees only; well-definedness is a separate verdict.
class GradedEndo {
  public:
    /// c_images[i-1] must be homogeneous of degree 2i (i = 1..k), u_image of
    /// degree m.
    GradedEndo(ProductContext ctx, std::vector<ProductClass> c_images, ProductClass u_image);

    const ProductContext& ctx() const { return ctx_; }
    const std::vector<ProductClass>& c_images() const { return c_images_; }
    const ProductClass& c_image(int i) const { return c_images_.at(i - 1); }
    const ProductClass& u_image() const { return u_image_; }

    bool operator==(const GradedEndo& o) const {
        return ctx_ == o.ctx_ && c_images_ == o.c_images_ && u_image_ == o.u_image_;
    }

  private:
    ProductContext ctx_;
    std::vector<ProductClass> c_images_;
    ProductClass u_image_;
};

/// Outcome of checking the defining relations h_{n-k+1}..h_n and u^2.
struct EndoVerdict {
    bool well_defined = false;
    std::optional<std::string> failing_relation;  // "h_r" or "u^2"
    std::optional<ProductClass> residue;          // nonzero witness when failing
};

struct Classification {
    enum class Kind { adams, complement, u_family, sphere_to_grass, unclassified };
    enum class UKind { scalar, grass_square_zero, zero };

    Kind kind = Kind::unclassified;
    std::optional<Rational> lambda;  // set for adams/complement; nonzero for adams
    UKind u_kind = UKind::zero;
    std::optional<Rational> mu;  // set when u_kind == scalar
    std::optional<std::string> witness;  // unclassified: first mismatching image

    static const char* kind_name(Kind k);
    static const char* u_kind_name(UKind k);
};

/// phi(c_i) = lambda^i c_i, phi(u) = mu*u. Always well-defined.
GradedEndo make_adams(const ProductContext& ctx, const Rational& lambda, const Rational& mu);

/// phi(c_i) = (-lambda)^i (c^{-1})_i = lambda^i sigma_{(i)}, phi(u) = mu*u.
/// Intended for k = n-k; well-definedness decided by the verdict.
GradedEndo make_complement(const ProductContext& ctx, const Rational& lambda, const Rational& mu);

/// phi(c_i) = u*P_i, phi(u) = Q. P has length k; P_i must be zero or
/// homogeneous of degree 2i - m. Q must be a*u or square-zero in the quotient;
/// violations throw std::invalid_argument.
GradedEndo make_u_family(const ProductContext& ctx, const std::vector<GrassClass>& P,
                         const ProductClass& Q);

/// The covering involution as an endomorphism: c_i -> (-1)^i c_i,
/// u -> +u (m odd) or -u (m even).
GradedEndo make_theta_star(const ProductContext& ctx);

/// Identity endomorphism (= make_adams(1,1)).
GradedEndo make_identity(const ProductContext& ctx);

/// Evaluate every defining relation at the generator images.
EndoVerdict is_well_defined(const GradedEndo& phi);

/// Extend phi to an arbitrary class via Jacobi-Trudi polynomials.
/// Caller must hold a well-defined phi; otherwise the result is not a ring map.
ProductClass apply(const GradedEndo& phi, const ProductClass& x);

/// Generator images of phi after psi.
GradedEndo compose(const GradedEndo& phi, const GradedEndo& psi);

/// Matrix of phi on the degree-q slice in the canonical basis; image of the
/// j-th basis vector sits in column j.
RatMatrix matrix_of(const GradedEndo& phi, int q);

/// Pattern-match the generator images against the families of the
/// classification theorem. Requires a well-defined phi.
Classification classify(const GradedEndo& phi);

/// Space of u-corrections P with phi(c_i) = lambda^i c_i + u*P_i well-defined:
/// exact nullspace of sum_j lambda^{r-j} (dh_r/dc_j) P_j = 0 over the
/// relations r = n-k+1..n. The classification theorem predicts dimension 0.
/// lambda = 0 is rejected.
AssignmentSpace extension_nullspace(const ProductContext& ctx, const Rational& lambda);

/// True iff phi commutes with theta* on generators; then phi preserves the
/// fixed subring.
bool restricts_to_fixed(const GradedEndo& phi);

/// Parameter regime under which every graded endomorphism of the Grassmannian
/// ring is an Adams map: (k <= 3 and n > 2k) or (k > 3 and n > 2k^2 - 1).
bool homer_hypothesis(int n, int k);

}  // namespace grasscoh
