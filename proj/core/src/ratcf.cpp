#include "qalink/ratcf.hpp"

#include <algorithm>
#include <stdexcept>

namespace qalink {

Slope::Slope(Int b, Int a) : beta(std::move(b)), alpha(std::move(a)) {
    if (alpha == 0) throw std::invalid_argument("Slope: alpha must be nonzero");
    if (alpha < 0) { alpha = -alpha; beta = -beta; }
    Int g = gcd_int(abs_int(beta), alpha);
    if (g > 1) { beta /= g; alpha /= g; }
}

ContinuedFraction::ContinuedFraction(std::vector<Int> t) : terms(std::move(t)) {
    if (terms.empty())
        throw std::invalid_argument("ContinuedFraction: empty term list");
    bool pos = terms.front() > 0;
    for (const Int& a : terms) {
        if (a == 0)
            throw std::invalid_argument("ContinuedFraction: zero term");
        if ((a > 0) != pos)
            throw std::invalid_argument("ContinuedFraction: mixed sign regime");
    }
}

ContinuedFraction cf_expand(const Slope& s) {
    if (s.beta <= 0)
        throw std::invalid_argument("cf_expand: slope must be positive");
    if (s.beta > s.alpha)
        throw std::invalid_argument("cf_expand: slope must lie in (0, 1]");
    // Euclid on alpha/beta; the canonical quotient list ends with a value
    // >= 2 whenever it has length >= 2, which pins down the two-expansion
    // ambiguity. Reversing makes the bottom-up evaluation recover the slope.
    std::vector<Int> quotients;
    Int a = s.alpha, b = s.beta;
    while (b != 0) {
        quotients.push_back(a / b);
        Int r = a % b;
        a = b;
        b = r;
    }
    std::reverse(quotients.begin(), quotients.end());
    return ContinuedFraction(std::move(quotients));
}

Slope cf_eval(const ContinuedFraction& cf) {
    if (!cf.positive_regime()) {
        std::vector<Int> abs_terms;
        abs_terms.reserve(cf.terms.size());
        for (const Int& a : cf.terms) abs_terms.push_back(-a);
        Slope s = cf_eval(ContinuedFraction(std::move(abs_terms)));
        return Slope(-s.beta, s.alpha);
    }
    DetSequences ts = det_sequences(cf);
    int n = cf.length();
    return Slope(ts.fwd[n - 1], ts.fwd[n]);
}

DetSequences det_sequences(const ContinuedFraction& cf) {
    if (!cf.positive_regime())
        throw std::invalid_argument("det_sequences: negate the fraction first");
    int n = cf.length();
    DetSequences out;
    out.fwd.resize(n + 1);
    out.rev.resize(n + 1);
    out.fwd[0] = 1;
    out.rev[0] = 1;
    for (int m = 1; m <= n; ++m) {
        const Int& fa = cf.terms[m - 1];
        const Int& ra = cf.terms[n - m];
        out.fwd[m] = m == 1 ? fa : fa * out.fwd[m - 1] + out.fwd[m - 2];
        out.rev[m] = m == 1 ? ra : ra * out.rev[m - 1] + out.rev[m - 2];
    }
    return out;
}

ContinuedFraction negate_cf(const ContinuedFraction& cf) {
    std::vector<Int> t;
    t.reserve(cf.terms.size());
    for (const Int& a : cf.terms) t.push_back(-a);
    return ContinuedFraction(std::move(t));
}

ContinuedFraction reverse_cf(const ContinuedFraction& cf) {
    std::vector<Int> t(cf.terms.rbegin(), cf.terms.rend());
    return ContinuedFraction(std::move(t));
}

bool verify_decrement_identity(const ContinuedFraction& cf, int m) {
    if (m < 1 || m > cf.length())
        throw std::out_of_range("verify_decrement_identity: index out of range");
    if (cf.terms[m - 1] < 2)
        throw std::invalid_argument("verify_decrement_identity: term must be >= 2");
    std::vector<Int> lowered = cf.terms;
    lowered[m - 1] -= 1;
    DetSequences full = det_sequences(cf);
    DetSequences drop = det_sequences(ContinuedFraction(std::move(lowered)));
    int n = cf.length();
    int mr = n - m + 1; // position of the lowered term in the reversed order
    return full.fwd[m - 1] + drop.fwd[m] == full.fwd[m] &&
           full.rev[mr - 1] + drop.rev[mr] == full.rev[mr];
}

} // namespace qalink
