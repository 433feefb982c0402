#include <doctest.h>

#include "productring.hpp"

using namespace grasscoh;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("product ring arithmetic and u^2 = 0") {
    ProductContext ctx(2, RingContext(4, 2));
    ProductClass u = product_u(ctx);
    CHECK((u * u).is_zero());
    GrassClass s1 = sigma(ctx.inner(), P({1}));
    ProductClass a = embed(ctx, s1) + u;
    ProductClass b = embed(ctx, s1) - u;
    // (s1 + u)(s1 - u) = s1^2
    CHECK(a * b == embed(ctx, s1 * s1));
    CHECK(a * product_unit(ctx) == a);
    CHECK((a - a).is_zero());
    CHECK(a.str() == "s[1] + u*(1)");
}

TEST_CASE("homogeneity mixes the u shift") {
    ProductContext ctx(2, RingContext(4, 2));
    GrassClass s1 = sigma(ctx.inner(), P({1}));
    ProductClass x(ctx, s1, grass_unit(ctx.inner()));  // s1 + u, both degree 2
    CHECK(x.is_homogeneous());
    CHECK(x.degree() == 2);
    ProductClass y = embed(ctx, s1) + product_u(ctx) * product_u(ctx);  // just s1
    CHECK(y.degree() == 2);
    ProductClass bad(ctx, s1, s1);  // degrees 2 and 4
    CHECK_FALSE(bad.is_homogeneous());
    CHECK(ctx.total_dimension() == 10);
}

TEST_CASE("theta star is a ring involution with the right eigenvalues") {
    for (int m : {1, 2, 3, 4}) {
        ProductContext ctx(m, RingContext(4, 2));
        GrassClass s1 = sigma(ctx.inner(), P({1}));
        GrassClass s2 = sigma(ctx.inner(), P({2}));
        CHECK(theta_star(embed(ctx, s1)) == -embed(ctx, s1));
        CHECK(theta_star(embed(ctx, s2)) == embed(ctx, s2));
        int u_sign = m % 2 == 1 ? 1 : -1;
        CHECK(theta_star(product_u(ctx)) == product_u(ctx) * Rational(u_sign));
        // involution and multiplicativity
        ProductClass x = embed(ctx, s1) + product_u(ctx) * embed(ctx, s2);
        CHECK(theta_star(theta_star(x)) == x);
        ProductClass y = embed(ctx, s2) - product_u(ctx);
        CHECK(theta_star(x * y) == theta_star(x) * theta_star(y));
    }
}

TEST_CASE("fixed subring basis follows the eigenvalue bookkeeping") {
    // m even: sigma slices with even weight, u-slices with odd weight
    ProductContext even(2, RingContext(4, 2));
    CHECK(fixed_subring_basis(even, 0).size() == 1);
    CHECK(fixed_subring_basis(even, 2).size() == 0);   // s1 flips, u*1 flips
    CHECK(fixed_subring_basis(even, 4).size() == 3);   // s2, s11, u*s1
    // m odd: u itself is fixed
    ProductContext odd(1, RingContext(4, 2));
    CHECK(fixed_subring_basis(odd, 1).size() == 1);
    CHECK(fixed_subring_basis(odd, 2).size() == 0);
    // every reported element really is fixed, across degrees and parities
    for (int m : {1, 2, 3}) {
        ProductContext ctx(m, RingContext(4, 2));
        for (int q = 0; q <= ctx.total_dimension(); ++q)
            for (const ProductClass& b : fixed_subring_basis(ctx, q)) {
                CHECK(theta_star(b) == b);
                CHECK(b.degree() == q);
            }
    }
}

TEST_CASE("fixed subring dimensions follow the eigenvalue count") {
    // (5,2): 6 even-weight and 4 odd-weight partitions in the 2x3 box.
    // sigma_p is fixed iff |p| even; u*sigma_p iff (-1)^|p| * u_sign = 1.
    for (int m : {1, 2, 3, 4}) {
        ProductContext ctx(m, RingContext(5, 2));
        std::size_t fixed = 0, total = 0;
        for (int q = 0; q <= ctx.total_dimension(); ++q) {
            fixed += fixed_subring_basis(ctx, q).size();
            total += slice_indices(ctx, q).size();
        }
        CHECK(total == 20);  // 2 * binomial(5,2) basis classes
        CHECK(fixed == (m % 2 == 0 ? 10u : 12u));
    }
}

TEST_CASE("slice indices cover the canonical basis") {
    ProductContext ctx(2, RingContext(4, 2));
    auto idx = slice_indices(ctx, 4);
    REQUIRE(idx.size() == 3);  // s2, s11, u*s1
    CHECK_FALSE(idx[0].uflag);
    CHECK(idx[2].uflag);
    ProductClass x(ctx, sigma(ctx.inner(), P({2})) * 5, sigma(ctx.inner(), P({1})) * Rational(1, 3));
    CHECK(coefficient_of(x, idx[0]) == 5);
    CHECK(coefficient_of(x, idx[1]) == 0);
    CHECK(coefficient_of(x, idx[2]) == Rational(1, 3));
}

TEST_CASE("subalgebra span dims recover the fixed subring from generators") {
    // (1,4,1): fixed subring = Q[u, b]/(u^2, b^2), u in degree 1, b in degree 4
    ProductContext ctx(1, RingContext(4, 1));
    GrassClass c1 = sigma(ctx.inner(), P({1}));
    std::vector<ProductClass> gens = {product_u(ctx), embed(ctx, c1 * c1)};
    auto dims = subalgebra_span_dims(ctx, gens, ctx.total_dimension());
    CHECK(dims == std::vector<int>{1, 1, 0, 0, 1, 1, 0, 0});
}

TEST_CASE("evaluate substitutes ring-homomorphically") {
    ProductContext ctx(2, RingContext(4, 2));
    GrassClass s1 = sigma(ctx.inner(), P({1}));
    std::vector<ProductClass> images = {embed(ctx, s1) * 2,
                                        embed(ctx, sigma(ctx.inner(), P({1, 1}))) * 4};
    // h_2 = c1^2 - c2 evaluated at Adams(2) images: 4 s1^2 - 4 s11 = 4 s2
    auto c1 = ChernPolynomial::variable(2, 1);
    auto c2 = ChernPolynomial::variable(2, 2);
    ProductClass r = evaluate(c1 * c1 - c2, images, product_u(ctx));
    CHECK(r == embed(ctx, sigma(ctx.inner(), P({2}))) * 4);
    // u^2 term dies in the product ring
    auto u = ChernPolynomial::u_variable(2);
    CHECK(evaluate(u * u, images, product_u(ctx)).is_zero());
    CHECK_THROWS_AS(evaluate(c1, {images[0]}, product_u(ctx)), std::invalid_argument);
}
