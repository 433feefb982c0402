#include "coincidence.hpp"

#include <stdexcept>

namespace grasscoh {

namespace {

Rational int_pow(const Rational& x, int e) {
    Rational out = 1;
    for (int i = 0; i < e; ++i) out *= x;
    return out;
}

}  // namespace

std::vector<long long> betti(int n, int k) { return gaussian_binomial(n, k); }

Rational weighted_sum(int n, int k, const Rational& lambda) {
    Rational sum = 0, pw = 1;
    for (long long d : betti(n, k)) {
        sum += Rational(d) * pw;
        pw *= lambda;
    }
    return sum;
}

long long euler_real(int n, int k) {
    long long sum = 0;
    int sign = 1;
    for (long long d : betti(n, k)) {
        sum += sign * d;
        sign = -sign;
    }
    return sum;
}

NonvanishingCertificate nonvanishing_certificate(int n, int k) {
    int d = k * (n - k);
    if (d % 2 != 0)
        throw std::invalid_argument("certificate requires k(n-k) even");
    NonvanishingCertificate cert;
    cert.n = n;
    cert.k = k;
    cert.d = d;
    cert.betti_numbers = betti(n, k);
    cert.endpoints_one =
        cert.betti_numbers.front() == 1 && cert.betti_numbers.back() == 1;
    Int plus = 0, minus = 0, sign = 1;
    for (long long b : cert.betti_numbers) {
        plus += b;
        minus += sign * b;
        sign = -sign;
    }
    cert.value_at_plus_one = plus;
    cert.value_at_minus_one = minus;
    cert.no_rational_root = cert.endpoints_one && plus != 0 && minus != 0;
    return cert;
}

Rational lefschetz_closed_grass(int n, int k, const Rational& mu, const Rational& lambda) {
    int d = k * (n - k);
    std::vector<long long> b = betti(n, k);
    Rational sum = 0;
    for (int i = 0; i <= d; ++i) sum += Rational(b[i]) * int_pow(mu, i) * int_pow(lambda, d - i);
    return sum;
}

Rational lefschetz_closed_product(int m, int n, int k, const Rational& lambda,
                                  const Rational& mu, const Rational& lambda1,
                                  const Rational& mu1, bool twisted, bool u_family) {
    int d = k * (n - k);
    Rational factor;
    Rational lam = lambda;
    if (!twisted) {
        factor = mu1 + mu;
    } else {
        factor = (m % 2 == 0) ? Rational(mu1 - mu) : Rational(mu1 + mu);
        lam = -lambda;
    }
    if (u_family) return factor * Rational(betti(n, k)[0]) * int_pow(lambda1, d);
    std::vector<long long> b = betti(n, k);
    Rational sum = 0;
    for (int i = 0; i <= d; ++i) sum += Rational(b[i]) * int_pow(lam, i) * int_pow(lambda1, d - i);
    return factor * sum;
}

namespace {

// Permutation matrix of the duality map on the degree-q slice: basis index
// (p, uflag) in degree q goes to (p^c, !uflag) in degree M - q.
RatMatrix duality_permutation(const ProductContext& ctx, int q) {
    std::vector<SliceIndex> from = slice_indices(ctx, q);
    std::vector<SliceIndex> to = slice_indices(ctx, ctx.total_dimension() - q);
    if (from.size() != to.size()) throw std::logic_error("duality slice size mismatch");
    RatMatrix P(static_cast<int>(to.size()), static_cast<int>(from.size()));
    BoxShape box = ctx.inner().box();
    for (std::size_t j = 0; j < from.size(); ++j) {
        SliceIndex img{complement(from[j].p, box), !from[j].uflag};
        bool found = false;
        for (std::size_t i = 0; i < to.size(); ++i) {
            if (to[i] == img) {
                P.at(static_cast<int>(i), static_cast<int>(j)) = 1;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("dual basis element missing");
    }
    return P;
}

}  // namespace

LefschetzReport lefschetz_trace(const GradedEndo& f, const GradedEndo& g) {
    if (f.ctx() != g.ctx()) throw std::invalid_argument("context mismatch");
    const ProductContext& ctx = f.ctx();
    GradedEndo tf = compose(make_theta_star(ctx), f);
    int M = ctx.total_dimension();
    LefschetzReport rep;
    Rational alt_u = 0, alt_t = 0, plus_u = 0, plus_t = 0;
    for (int q = 0; q <= M; ++q) {
        if (slice_indices(ctx, q).empty()) continue;
        RatMatrix P = duality_permutation(ctx, q);
        RatMatrix Pinv = P.transposed();  // permutation matrix
        RatMatrix G = matrix_of(g, M - q);
        Rational tru = (Pinv * G * P * matrix_of(f, q).transposed()).trace();
        Rational trt = (Pinv * G * P * matrix_of(tf, q).transposed()).trace();
        rep.slices.push_back({q, tru, trt});
        int sign = q % 2 == 0 ? 1 : -1;
        alt_u += sign * tru;
        alt_t += sign * trt;
        plus_u += tru;
        plus_t += trt;
    }
    rep.value_untwisted = alt_u;
    rep.value_twisted = alt_t;
    if (ctx.m() % 2 == 1) {
        rep.value_untwisted_plus = plus_u;
        rep.value_twisted_plus = plus_t;
        rep.convention_note =
            "m odd: the alternating-sign trace sum and the printed closed form "
            "(which weighs every slice positively) disagree; both are reported";
    }
    return rep;
}

Rational lefschetz_trace_grass(const RingContext& ctx, const Rational& mu,
                               const Rational& lambda) {
    int d = ctx.dim();
    BoxShape box = ctx.box();
    Rational total = 0;
    for (int i = 0; i <= d; ++i) {
        std::vector<Partition> from = partitions_in_box(box, i);
        std::vector<Partition> to = partitions_in_box(box, d - i);
        int sz = static_cast<int>(from.size());
        RatMatrix P(sz, sz);
        for (int j = 0; j < sz; ++j) {
            Partition img = complement(from[j], box);
            for (int r = 0; r < sz; ++r)
                if (to[r] == img) P.at(r, j) = 1;
        }
        RatMatrix F(sz, sz), G(sz, sz);
        for (int j = 0; j < sz; ++j) {
            F.at(j, j) = int_pow(mu, i);
            G.at(j, j) = int_pow(lambda, d - i);
        }
        total += (P.transposed() * G * P * F.transposed()).trace();
    }
    return total;
}

namespace {

using Hyp = std::vector<std::pair<std::string, bool>>;

bool all_true(const Hyp& hyps, std::size_t from) {
    for (std::size_t i = from; i < hyps.size(); ++i)
        if (!hyps[i].second) return false;
    return true;
}

}  // namespace

CriteriaVerdict coincidence_criteria(int m, int n, int k, const FamilyDescriptor& f,
                                     const FamilyDescriptor& g) {
    if (k <= 0 || k >= n) throw std::invalid_argument("need 0 < k < n");
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    CriteriaVerdict v;
    int d = k * (n - k);
    bool d_even = d % 2 == 0;
    bool homer = homer_hypothesis(n, k);
    bool g_grass_auto = g.family != FamilyDescriptor::Family::u_family && g.lambda != 0;
    bool g_auto = g_grass_auto && g.mu != 0;
    bool f_c1_not_au = f.family != FamilyDescriptor::Family::u_family && f.lambda != 0;
    bool f_u_scalar_nonzero = f.mu != 0;
    bool mu_sum_ok = g.mu != -f.mu;  // deg(p.g.s) != -deg(p.f.s)
    bool f_is_u_family = f.family == FamilyDescriptor::Family::u_family;

    // Bare Grassmannian: m = 0.
    if (m == 0) {
        v.hypotheses_checked.push_back({"CP of CGnk: k(n-k) even", d_even});
        v.hypotheses_checked.push_back({"CP of CGnk: hypothesis (Homer)", homer});
        v.hypotheses_checked.push_back({"CP of CGnk: g automorphism (lambda1 != 0)", g_grass_auto});
        v.L_untwisted = lefschetz_closed_grass(n, k, f.lambda, g.lambda);
        v.L_twisted = 0;
        if (all_true(v.hypotheses_checked, 0) && v.L_untwisted != 0) {
            v.theorem_applied = "CP of CGnk";
            v.coincidence_guaranteed = true;
            v.witnesses.push_back(v.L_untwisted);
        }
        return v;
    }

    // Both closed-form Lefschetz numbers, per the declared family of f.
    v.L_untwisted = lefschetz_closed_product(m, n, k, f.lambda, f.mu, g.lambda, g.mu,
                                             false, f_is_u_family);
    v.L_twisted = lefschetz_closed_product(m, n, k, f.lambda, f.mu, g.lambda, g.mu,
                                           true, f_is_u_family);

    auto conclude = [&](const std::string& theorem, std::size_t first_hyp) -> bool {
        if (!all_true(v.hypotheses_checked, first_hyp)) return false;
        if (v.L_untwisted != 0) v.witnesses.push_back(v.L_untwisted);
        if (v.L_twisted != 0) v.witnesses.push_back(v.L_twisted);
        if (v.witnesses.empty()) return false;
        v.theorem_applied = theorem;
        v.coincidence_guaranteed = true;
        return true;
    };

    // Product theorem.
    std::size_t base = v.hypotheses_checked.size();
    v.hypotheses_checked.push_back({"coincidence thm: k < n-k", k < n - k});
    v.hypotheses_checked.push_back({"coincidence thm: k(n-k) even", d_even});
    v.hypotheses_checked.push_back({"coincidence thm: g* automorphism", g_auto});
    v.hypotheses_checked.push_back({"coincidence thm: f*(c_1) != a*u", f_c1_not_au});
    v.hypotheses_checked.push_back(
        {"coincidence thm: mu1 != -mu when m odd", m % 2 == 0 || mu_sum_ok});
    if (conclude("coincidence thm", base)) return v;

    // Homer-hypothesis theorem.
    base = v.hypotheses_checked.size();
    v.hypotheses_checked.push_back({"coincidence thm under hom: k(n-k) even", d_even});
    v.hypotheses_checked.push_back({"coincidence thm under hom: hypothesis (Homer)", homer});
    v.hypotheses_checked.push_back({"coincidence thm under hom: g* automorphism", g_auto});
    // Descriptors carry f*(u) as the scalar mu, so hypothesis (2) holds by form.
    v.hypotheses_checked.push_back(
        {"coincidence thm under hom: f*(u) = mu*u when f leaves the Grassmannian ring (m even)",
         true});
    v.hypotheses_checked.push_back(
        {"coincidence thm under hom: mu1 != -mu when m odd", m % 2 == 0 || mu_sum_ok});
    if (conclude("coincidence thm under hom", base)) return v;

    // Corollary for m > 2k (coincidence property; f arbitrary).
    base = v.hypotheses_checked.size();
    v.hypotheses_checked.push_back({"corollary m>2k: m even", m % 2 == 0});
    v.hypotheses_checked.push_back({"corollary m>2k: k(n-k) even", d_even});
    v.hypotheses_checked.push_back({"corollary m>2k: m > 2k", m > 2 * k});
    v.hypotheses_checked.push_back({"corollary m>2k: hypothesis (Homer)", homer});
    v.hypotheses_checked.push_back({"corollary m>2k: g* automorphism", g_auto});
    if (conclude("corollary m>2k", base)) return v;

    // Final proposition: g automorphism relaxed to f*(u) = mu*u, mu != 0.
    base = v.hypotheses_checked.size();
    v.hypotheses_checked.push_back({"final prop: k(n-k) even", d_even});
    v.hypotheses_checked.push_back({"final prop: hypothesis (Homer)", homer});
    v.hypotheses_checked.push_back(
        {"final prop: g*(H*_CG) = H*_CG", g_grass_auto});
    v.hypotheses_checked.push_back({"final prop: f*(u) = mu*u, mu != 0", f_u_scalar_nonzero});
    if (conclude("final prop", base)) return v;

    return v;
}

}  // namespace grasscoh
