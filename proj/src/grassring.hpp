#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chernpoly.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace grasscoh {

/// Parameters of one Grassmannian cohomology ring. Immutable.
class RingContext {
  public:
    RingContext(int n, int k) : n_(n), k_(k) {
        if (k <= 0 || k >= n) throw std::invalid_argument("RingContext requires 0 < k < n");
    }
    int n() const { return n_; }
    int k() const { return k_; }
    BoxShape box() const { return BoxShape{k_, n_ - k_}; }
    /// Complex dimension; top cohomological degree is 2*dim().
    int dim() const { return k_ * (n_ - k_); }

    bool operator==(const RingContext& o) const { return n_ == o.n_ && k_ == o.k_; }
    bool operator!=(const RingContext& o) const { return !(*this == o); }

  private:
    int n_, k_;
};

/// Element of the Grassmannian cohomology ring in the Schubert basis:
/// a sparse rational combination of classes indexed by partitions in the
/// k x (n-k) box. Mixed degrees are allowed.
class GrassClass {
  public:
    explicit GrassClass(RingContext ctx) : ctx_(ctx) {}

    const RingContext& ctx() const { return ctx_; }
    const std::map<Partition, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add_term(const Partition& p, const Rational& coeff);
    Rational coeff(const Partition& p) const;

    GrassClass operator+(const GrassClass& o) const;
    GrassClass operator-(const GrassClass& o) const;
    GrassClass operator*(const GrassClass& o) const;
    GrassClass operator*(const Rational& s) const;
    GrassClass operator-() const;
    bool operator==(const GrassClass& o) const { return ctx_ == o.ctx_ && coeffs_ == o.coeffs_; }

    /// True when all terms have the same cohomological degree 2|p|. The zero
    /// class is homogeneous of every degree (degree_out set to -1).
    bool is_homogeneous(int* degree_out = nullptr) const;
    /// Cohomological degree of a homogeneous class; throws on mixed degrees.
    int degree() const;
    /// The degree-q homogeneous component.
    GrassClass component(int q) const;

    /// Text form: "3/2*s[2,1] - s[1] + 1".
    std::string str() const;

  private:
    RingContext ctx_;
    std::map<Partition, Rational> coeffs_;
};

/// Basis injection: the class with coefficient 1 at p. sigma(ctx, {}) is 1.
GrassClass sigma(const RingContext& ctx, const Partition& p);
GrassClass grass_zero(const RingContext& ctx);
GrassClass grass_unit(const RingContext& ctx);

/// Reduce the Chern monomial c_1^{a_1} ... c_k^{a_k} to Schubert form by
/// iterated Pieri steps with box truncation.
GrassClass from_chern_monomial(const RingContext& ctx, const std::vector<int>& exponents);

/// Reduce a u-free polynomial in c_1..c_k to Schubert form.
GrassClass reduce_polynomial(const RingContext& ctx, const ChernPolynomial& poly);

/// The degree-2r polynomial h_r in c_1..c_k (h_0 = 1,
/// h_r = -sum_{i=1}^{min(r,k)} (-1)^i c_i h_{r-i}); the relations of the ring
/// presentation are h_{n-k+1}..h_n.
ChernPolynomial h_polynomial(int k, int r);

/// The relation polynomial h_r together with the reduced class of the dual
/// Chern class cbar_r = (-1)^r h_r.
std::pair<ChernPolynomial, GrassClass> h_and_cbar(const RingContext& ctx, int r);

/// Dual Jacobi-Trudi determinant expressing the basis class of p as a
/// polynomial in c_1..c_k.
ChernPolynomial jacobi_trudi(const RingContext& ctx, const Partition& p);

/// Poincare dual basis index: complementation in the box.
Partition poincare_dual(const RingContext& ctx, const Partition& p);

}  // namespace grasscoh
