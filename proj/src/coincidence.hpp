#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endo.hpp"

namespace grasscoh {

/// Betti numbers d_{2i} of the Grassmannian, i = 0..k(n-k).
std::vector<long long> betti(int n, int k);

/// Exact sum_{i=0}^d d_{2i} lambda^i.
Rational weighted_sum(int n, int k, const Rational& lambda);

/// Alternating Betti sum = Euler characteristic of the real Grassmannian.
long long euler_real(int n, int k);

/// Rational-root certificate that sum d_{2i} lambda^i has no rational zero:
/// monic-with-unit-endpoints coefficients restrict candidate roots to +-1,
/// and both values are computed and nonzero. Requires k(n-k) even.
struct NonvanishingCertificate {
    int n = 0, k = 0, d = 0;
    std::vector<long long> betti_numbers;
    bool endpoints_one = false;     // d_0 = d_{2d} = 1, so candidates are +-1
    Int value_at_plus_one = 0;      // binomial(n,k)
    Int value_at_minus_one = 0;     // chi of the real Grassmannian
    bool no_rational_root = false;
};
NonvanishingCertificate nonvanishing_certificate(int n, int k);

/// Closed Lefschetz number on the bare Grassmannian for an Adams pair
/// f ~ mu, g ~ lambda: sum d_{2i} mu^i lambda^{d-i}.
Rational lefschetz_closed_grass(int n, int k, const Rational& mu, const Rational& lambda);

/// Closed Lefschetz numbers on the product, exactly as the closed forms are
/// printed: untwisted (mu1 + mu) sum d_{2i} lambda^i lambda1^{d-i}; twisted
/// (mu1 - mu) sum d_{2i} (-lambda)^i lambda1^{d-i} for m even, with (mu1 + mu)
/// for m odd. When `u_family` is set the lambda-sum collapses to the d_0 term.
Rational lefschetz_closed_product(int m, int n, int k, const Rational& lambda,
                                  const Rational& mu, const Rational& lambda1,
                                  const Rational& mu1, bool twisted, bool u_family = false);

/// Alternating-trace Lefschetz numbers with a per-degree ledger. For m odd the
/// literal alternating sum and the paper's all-plus closed form disagree; both
/// conventions are reported and the discrepancy is noted, not resolved.
struct LefschetzReport {
    Rational value_untwisted;  // sum (-1)^q tr, twisted partner below
    Rational value_twisted;    // same with f replaced by theta* . f
    std::string method = "trace";
    struct Slice {
        int q = 0;
        Rational untwisted;  // unsigned slice trace
        Rational twisted;
    };
    std::vector<Slice> slices;
    // All-plus-sign totals, reported only for m odd.
    std::optional<Rational> value_untwisted_plus;
    std::optional<Rational> value_twisted_plus;
    std::optional<std::string> convention_note;
};
LefschetzReport lefschetz_trace(const GradedEndo& f, const GradedEndo& g);

/// Trace computation on the bare Grassmannian for an Adams pair, through the
/// same duality-permutation machinery; must equal lefschetz_closed_grass.
Rational lefschetz_trace_grass(const RingContext& ctx, const Rational& mu,
                               const Rational& lambda);

/// Symbolic endomorphism family for the decision procedure.
struct FamilyDescriptor {
    enum class Family { adams, complement, u_family };
    Family family = Family::adams;
    Rational lambda;  // c-image scale (unused for u_family)
    Rational mu;      // u-image scalar
};

struct CriteriaVerdict {
    std::string theorem_applied = "none";
    std::vector<std::pair<std::string, bool>> hypotheses_checked;
    bool coincidence_guaranteed = false;
    std::vector<Rational> witnesses;  // the nonzero Lefschetz number(s)
    Rational L_untwisted;
    Rational L_twisted;
};

/// Decision procedure over the coincidence theorems, applied in a fixed order:
/// the Grassmannian proposition (m = 0 only), the product theorem, the
/// Homer-hypothesis theorem, the m > 2k corollary, then the final proposition.
/// Every hypothesis verdict is reported. Topological hypotheses (continuity,
/// Brouwer degree) enter only through their algebraic shadows in the
/// descriptors.
CriteriaVerdict coincidence_criteria(int m, int n, int k, const FamilyDescriptor& f,
                                     const FamilyDescriptor& g);

}  // namespace grasscoh
