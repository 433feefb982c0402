#include "grassring.hpp"

#include <algorithm>
#include <mutex>

namespace grasscoh {

namespace {

// Process-wide LR cache; partition pairs are context independent.
std::map<std::pair<Partition, Partition>, std::map<Partition, long long>> g_lr_cache;
std::mutex g_lr_mutex;

const std::map<Partition, long long>& cached_lr(const Partition& a, const Partition& b) {
    auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    std::lock_guard<std::mutex> lock(g_lr_mutex);
    auto it = g_lr_cache.find(key);
    if (it == g_lr_cache.end())
        it = g_lr_cache.emplace(key, lr_coefficients(key.first, key.second)).first;
    return it->second;
}

}  // namespace

void GrassClass::add_term(const Partition& p, const Rational& coeff) {
    if (!fits_in_box(p, ctx_.box()))
        throw std::invalid_argument("partition " + p.str() + " does not fit the box");
    if (coeff == 0) return;
    auto it = coeffs_.find(p);
    if (it == coeffs_.end()) {
        coeffs_.emplace(p, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Rational GrassClass::coeff(const Partition& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

GrassClass GrassClass::operator+(const GrassClass& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("ring context mismatch");
    GrassClass out = *this;
    for (const auto& [p, c] : o.coeffs_) out.add_term(p, c);
    return out;
}

GrassClass GrassClass::operator-(const GrassClass& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("ring context mismatch");
    GrassClass out = *this;
    for (const auto& [p, c] : o.coeffs_) out.add_term(p, -c);
    return out;
}

GrassClass GrassClass::operator*(const GrassClass& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("ring context mismatch");
    GrassClass out(ctx_);
    BoxShape box = ctx_.box();
    for (const auto& [a, ca] : coeffs_) {
        for (const auto& [b, cb] : o.coeffs_) {
            Rational c = ca * cb;
            for (const auto& [nu, mult] : cached_lr(a, b)) {
                if (fits_in_box(nu, box)) out.add_term(nu, c * mult);
            }
        }
    }
    return out;
}

GrassClass GrassClass::operator*(const Rational& s) const {
    GrassClass out(ctx_);
    if (s == 0) return out;
    for (const auto& [p, c] : coeffs_) out.add_term(p, c * s);
    return out;
}

GrassClass GrassClass::operator-() const { return *this * Rational(-1); }

bool GrassClass::is_homogeneous(int* degree_out) const {
    int deg = -1;
    for (const auto& [p, c] : coeffs_) {
        int d = 2 * p.weight();
        if (deg == -1) deg = d;
        else if (d != deg) return false;
    }
    if (degree_out) *degree_out = deg;
    return true;
}

int GrassClass::degree() const {
    int d = -1;
    if (!is_homogeneous(&d)) throw std::domain_error("class is not homogeneous");
    return d;
}

GrassClass GrassClass::component(int q) const {
    GrassClass out(ctx_);
    if (q < 0 || q % 2 != 0) return out;
    for (const auto& [p, c] : coeffs_)
        if (2 * p.weight() == q) out.add_term(p, c);
    return out;
}

std::string GrassClass::str() const {
    if (coeffs_.empty()) return "0";
    // Print in descending degree, canonical (reverse-lexicographic) within.
    std::vector<std::pair<Partition, Rational>> terms(coeffs_.begin(), coeffs_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int wa = a.first.weight(), wb = b.first.weight();
        if (wa != wb) return wa > wb;
        return a.first.parts() > b.first.parts();
    });
    std::string out;
    bool first = true;
    for (const auto& [p, c] : terms) {
        Rational coeff = c;
        if (first) {
            if (coeff < 0) { out += "-"; coeff = -coeff; }
        } else {
            out += coeff < 0 ? " - " : " + ";
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        if (p.empty()) {
            out += rational_str(coeff);
        } else if (coeff == 1) {
            out += "s" + p.str();
        } else {
            out += rational_str(coeff) + "*s" + p.str();
        }
    }
    return out;
}

GrassClass sigma(const RingContext& ctx, const Partition& p) {
    GrassClass out(ctx);
    out.add_term(p, 1);
    return out;
}

GrassClass grass_zero(const RingContext& ctx) { return GrassClass(ctx); }

GrassClass grass_unit(const RingContext& ctx) { return sigma(ctx, Partition()); }

GrassClass from_chern_monomial(const RingContext& ctx, const std::vector<int>& exponents) {
    if (static_cast<int>(exponents.size()) > ctx.k())
        throw std::invalid_argument("too many Chern exponents");
    BoxShape box = ctx.box();
    std::map<Partition, Rational> cur;
    cur[Partition()] = 1;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        int r = static_cast<int>(i + 1);
        for (int rep = 0; rep < exponents[i]; ++rep) {
            std::map<Partition, Rational> next;
            for (const auto& [p, c] : cur) {
                for (const Partition& mu : pieri_e(p, r, ctx.k())) {
                    if (!fits_in_box(mu, box)) continue;
                    auto [it, inserted] = next.emplace(mu, c);
                    if (!inserted) it->second += c;
                }
            }
            for (auto it = next.begin(); it != next.end();)
                it = it->second == 0 ? next.erase(it) : std::next(it);
            cur = std::move(next);
        }
    }
    GrassClass out(ctx);
    for (const auto& [p, c] : cur) out.add_term(p, c);
    return out;
}

GrassClass reduce_polynomial(const RingContext& ctx, const ChernPolynomial& poly) {
    if (poly.num_c_vars() != ctx.k())
        throw std::invalid_argument("polynomial arity does not match context");
    GrassClass out(ctx);
    for (const auto& [m, c] : poly.terms()) {
        if (m.u_exp != 0) throw std::invalid_argument("polynomial contains u");
        out = out + from_chern_monomial(ctx, m.c_exp) * c;
    }
    return out;
}

ChernPolynomial h_polynomial(int k, int r) {
    if (r < 0) throw std::invalid_argument("h_polynomial requires r >= 0");
    std::vector<ChernPolynomial> h;
    h.push_back(ChernPolynomial::constant(k, 1));
    for (int s = 1; s <= r; ++s) {
        ChernPolynomial acc(k);
        for (int i = 1; i <= std::min(s, k); ++i) {
            Rational sign = (i % 2 == 0) ? -1 : 1;  // -(-1)^i
            acc = acc + ChernPolynomial::variable(k, i) * h[s - i] * sign;
        }
        h.push_back(acc);
    }
    return h[r];
}

std::pair<ChernPolynomial, GrassClass> h_and_cbar(const RingContext& ctx, int r) {
    if (r < 1) throw std::invalid_argument("h_and_cbar requires r >= 1");
    ChernPolynomial hr = h_polynomial(ctx.k(), r);
    Rational sign = (r % 2 == 0) ? 1 : -1;
    GrassClass cbar = reduce_polynomial(ctx, hr) * sign;
    return {std::move(hr), std::move(cbar)};
}

ChernPolynomial jacobi_trudi(const RingContext& ctx, const Partition& p) {
    if (!fits_in_box(p, ctx.box()))
        throw std::invalid_argument("partition does not fit the box");
    int k = ctx.k();
    if (p.empty()) return ChernPolynomial::constant(k, 1);
    Partition conj = p.conjugate();
    int sz = p.part(0);  // determinant size = number of columns of p
    // Entry (i,j) is c_{conj_i - i + j}, with c_0 = 1 and c_t = 0 outside 0..k.
    auto entry = [&](int i, int j) -> ChernPolynomial {
        int t = conj.part(i) - (i + 1) + (j + 1);
        if (t < 0 || t > k) return ChernPolynomial(k);
        if (t == 0) return ChernPolynomial::constant(k, 1);
        return ChernPolynomial::variable(k, t);
    };
    // Expand the determinant over permutations; sz <= n-k stays small.
    std::vector<int> perm(sz);
    for (int i = 0; i < sz; ++i) perm[i] = i;
    ChernPolynomial det(k);
    do {
        int inv = 0;
        for (int i = 0; i < sz; ++i)
            for (int j = i + 1; j < sz; ++j)
                if (perm[i] > perm[j]) ++inv;
        ChernPolynomial term = ChernPolynomial::constant(k, (inv % 2 == 0) ? 1 : -1);
        bool zero = false;
        for (int i = 0; i < sz && !zero; ++i) {
            ChernPolynomial e = entry(i, perm[i]);
            if (e.is_zero()) { zero = true; break; }
            term = term * e;
        }
        if (!zero) det = det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Partition poincare_dual(const RingContext& ctx, const Partition& p) {
    return complement(p, ctx.box());
}

}  // namespace grasscoh
