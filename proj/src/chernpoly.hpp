#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace grasscoh {

/// Monomial in the formal variables c_1..c_k and u. The u-exponent is capped
/// at 2: the square of a degree-m image must be formable before any quotient
/// relation is applied, but higher powers are never needed.
struct ChernMonomial {
    std::vector<int> c_exp;  // length k, entry i-1 is the exponent of c_i
    int u_exp = 0;

    auto operator<=>(const ChernMonomial&) const = default;

    /// Weighted degree with deg c_i = 2i and deg u = m.
    int weighted_degree(int m) const {
        int d = 0;
        for (std::size_t i = 0; i < c_exp.size(); ++i) d += 2 * static_cast<int>(i + 1) * c_exp[i];
        return d + m * u_exp;
    }
};

/// Sparse polynomial in c_1..c_k and u, prior to quotienting.
class ChernPolynomial {
  public:
    explicit ChernPolynomial(int k) : k_(k) {
        if (k < 1) throw std::invalid_argument("need at least one c variable");
    }

    static ChernPolynomial constant(int k, const Rational& value);
    /// The single variable c_i (1 <= i <= k).
    static ChernPolynomial variable(int k, int i);
    static ChernPolynomial u_variable(int k);

    int num_c_vars() const { return k_; }
    const std::map<ChernMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(ChernMonomial mono, const Rational& coeff);

    ChernPolynomial operator+(const ChernPolynomial& o) const;
    ChernPolynomial operator-(const ChernPolynomial& o) const;
    ChernPolynomial operator*(const ChernPolynomial& o) const;
    ChernPolynomial operator*(const Rational& s) const;
    ChernPolynomial operator-() const;
    bool operator==(const ChernPolynomial& o) const { return k_ == o.k_ && terms_ == o.terms_; }

    /// Formal partial derivative in c_j (1 <= j <= k).
    ChernPolynomial partial_derivative(int j) const;

    /// True when every monomial has the same weighted degree (deg u = m);
    /// the zero polynomial is homogeneous of every degree.
    bool is_homogeneous(int m, int* degree_out = nullptr) const;

    /// Text form, e.g. "c1^2 - 2*c2 + 3/4*u*c1".
    std::string str() const;

  private:
    int k_;
    std::map<ChernMonomial, Rational> terms_;
};

}  // namespace grasscoh
