#include "chernpoly.hpp"

#include <algorithm>

namespace grasscoh {

ChernPolynomial ChernPolynomial::constant(int k, const Rational& value) {
    ChernPolynomial p(k);
    p.add_term(ChernMonomial{std::vector<int>(k, 0), 0}, value);
    return p;
}

ChernPolynomial ChernPolynomial::variable(int k, int i) {
    if (i < 1 || i > k) throw std::out_of_range("variable index out of range");
    ChernPolynomial p(k);
    ChernMonomial m{std::vector<int>(k, 0), 0};
    m.c_exp[i - 1] = 1;
    p.add_term(std::move(m), 1);
    return p;
}

ChernPolynomial ChernPolynomial::u_variable(int k) {
    ChernPolynomial p(k);
    p.add_term(ChernMonomial{std::vector<int>(k, 0), 1}, 1);
    return p;
}

void ChernPolynomial::add_term(ChernMonomial mono, const Rational& coeff) {
    if (static_cast<int>(mono.c_exp.size()) != k_)
        throw std::invalid_argument("monomial arity mismatch");
    if (mono.u_exp < 0 || mono.u_exp > 2)
        throw std::domain_error("u-exponent must be in {0,1,2}");
    if (coeff == 0) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(std::move(mono), coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

ChernPolynomial ChernPolynomial::operator+(const ChernPolynomial& o) const {
    if (k_ != o.k_) throw std::invalid_argument("variable count mismatch");
    ChernPolynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

ChernPolynomial ChernPolynomial::operator-(const ChernPolynomial& o) const {
    if (k_ != o.k_) throw std::invalid_argument("variable count mismatch");
    ChernPolynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

ChernPolynomial ChernPolynomial::operator*(const ChernPolynomial& o) const {
    if (k_ != o.k_) throw std::invalid_argument("variable count mismatch");
    ChernPolynomial out(k_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            ChernMonomial m{ma.c_exp, ma.u_exp + mb.u_exp};
            for (int i = 0; i < k_; ++i) m.c_exp[i] += mb.c_exp[i];
            out.add_term(std::move(m), ca * cb);
        }
    }
    return out;
}

ChernPolynomial ChernPolynomial::operator*(const Rational& s) const {
    ChernPolynomial out(k_);
    if (s == 0) return out;
    for (const auto& [m, c] : terms_) out.add_term(m, c * s);
    return out;
}

ChernPolynomial ChernPolynomial::operator-() const { return *this * Rational(-1); }

ChernPolynomial ChernPolynomial::partial_derivative(int j) const {
    if (j < 1 || j > k_) throw std::out_of_range("derivative index out of range");
    ChernPolynomial out(k_);
    for (const auto& [m, c] : terms_) {
        int e = m.c_exp[j - 1];
        if (e == 0) continue;
        ChernMonomial dm = m;
        dm.c_exp[j - 1] = e - 1;
        out.add_term(std::move(dm), c * e);
    }
    return out;
}

bool ChernPolynomial::is_homogeneous(int m, int* degree_out) const {
    int deg = -1;
    for (const auto& [mono, c] : terms_) {
        int d = mono.weighted_degree(m);
        if (deg == -1) deg = d;
        else if (d != deg) return false;
    }
    if (degree_out) *degree_out = deg == -1 ? 0 : deg;
    return true;
}

std::string ChernPolynomial::str() const {
    if (terms_.empty()) return "0";
    // u-free monomials first, then by descending c-exponents: "c1^2 - 2*c2 + 3/4*u*c1".
    std::vector<std::pair<ChernMonomial, Rational>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.first.u_exp != b.first.u_exp) return a.first.u_exp < b.first.u_exp;
        return a.first.c_exp > b.first.c_exp;
    });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : ordered) {
        Rational coeff = c;
        if (first) {
            if (coeff < 0) { out += "-"; coeff = -coeff; }
        } else {
            out += coeff < 0 ? " - " : " + ";
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        std::string vars;
        if (m.u_exp >= 1) vars += m.u_exp == 1 ? "u" : "u^2";
        for (int i = 0; i < k_; ++i) {
            if (m.c_exp[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "c" + std::to_string(i + 1);
            if (m.c_exp[i] > 1) vars += "^" + std::to_string(m.c_exp[i]);
        }
        if (vars.empty()) {
            out += rational_str(coeff);
        } else if (coeff == 1) {
            out += vars;
        } else {
            out += rational_str(coeff) + "*" + vars;
        }
    }
    return out;
}

}  // namespace grasscoh
