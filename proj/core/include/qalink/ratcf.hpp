#pragma once

#include <vector>

#include "qalink/ints.hpp"

namespace qalink {

/// Exact slope beta/alpha of a rational tangle. Always stored in lowest
/// terms with alpha >= 1; the sign lives in beta.
struct Slope {
    Int beta;
    Int alpha;

    Slope(Int b, Int a);

    Rational value() const { return Rational(beta, alpha); }

    bool operator==(const Slope& o) const { return beta == o.beta && alpha == o.alpha; }
};

/// Finite continued fraction [a1,...,an] in a single sign regime: either
/// every term >= 1 (positive regime) or every term <= -1 (negated regime).
/// Zero terms are rejected; every nonzero rational in (0,1] has a positive
/// expansion, so nothing is lost.
struct ContinuedFraction {
    std::vector<Int> terms;

    explicit ContinuedFraction(std::vector<Int> t);

    bool positive_regime() const { return terms.front() > 0; }
    int length() const { return static_cast<int>(terms.size()); }

    bool operator==(const ContinuedFraction& o) const { return terms == o.terms; }
};

/// Forward and reversed twist-count recursions attached to a positive
/// continued fraction. fwd[m] follows [a1..am]; rev[m] follows the reversed
/// term order. Their last entries agree and give the determinant of the
/// 2-bridge link carrying the slope.
struct DetSequences {
    std::vector<Int> fwd;
    std::vector<Int> rev;
};

/// Expand a slope with 0 < beta/alpha <= 1 into its canonical positive
/// continued fraction: Euclid on alpha/beta, quotient list reversed. The
/// result satisfies fwd.back() == alpha and fwd[n-1] == beta.
ContinuedFraction cf_expand(const Slope& s);

/// Evaluate a continued fraction back to its slope. Negated regimes
/// evaluate to the negated slope of their absolute-value expansion.
Slope cf_eval(const ContinuedFraction& cf);

/// Both twist recursions (positive regime only).
DetSequences det_sequences(const ContinuedFraction& cf);

ContinuedFraction negate_cf(const ContinuedFraction& cf);
ContinuedFraction reverse_cf(const ContinuedFraction& cf);

/// Test hook for the decrement identity: with am >= 2, lowering am by one
/// drops both recursions by exactly the previous value. Returns true for
/// every valid input; exists so the identity can be checked exhaustively.
bool verify_decrement_identity(const ContinuedFraction& cf, int m);

} // namespace qalink
