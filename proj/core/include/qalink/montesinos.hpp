#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qalink/ints.hpp"
#include "qalink/ratcf.hpp"

namespace qalink {

/// One tangle slot (alpha, beta): coprime, alpha >= 1, slope beta/alpha.
struct TanglePair {
    Int alpha;
    Int beta;

    TanglePair(Int a, Int b);

    Rational slope() const { return Rational(beta, alpha); }
    bool operator==(const TanglePair& o) const { return alpha == o.alpha && beta == o.beta; }
};

/// Presentation M(e; (a1,b1), ..., (ar,br)): r tangle slots in a row plus
/// e half twists. Standard form (all slopes strictly between 0 and 1) is a
/// derived property, never stored.
struct Montesinos {
    Int e;
    std::vector<TanglePair> tangles;

    Montesinos(Int e_, std::vector<TanglePair> ts);

    int r() const { return static_cast<int>(tangles.size()); }
    bool is_standard() const;
    /// e - sum(beta_j / alpha_j); invariant under presentation rewrites.
    Rational e0() const;

    bool operator==(const Montesinos& o) const { return e == o.e && tangles == o.tangles; }
};

/// Classifying data: e0 together with the slope residues mod 1, canonical
/// over cyclic rotation and reversal of the slot order.
struct ClassInvariant {
    Rational e0;
    std::vector<Rational> fractions;

    bool operator==(const ClassInvariant& o) const {
        return e0 == o.e0 && fractions == o.fractions;
    }
};

struct hypothesis_violated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rewrite into standard form: integer slots absorbed into e, each residue
/// reduced into (0, alpha) with the quotient moved into e. Preserves e0 and
/// the slot order. Rejects an empty slot list.
Montesinos standard_form(const Montesinos& p);

/// Throws hypothesis_violated unless, after standard_form, r >= 3 and
/// sum(1/alpha_j) <= r - 2.
ClassInvariant classification_invariant(const Montesinos& p);

/// e |-> -e, beta_j |-> -beta_j.
Montesinos mirror_presentation(const Montesinos& p);

/// P(s1,...,sk) |-> M(0; (|s1|, sgn s1), ..., (|sk|, sgn sk)).
Montesinos pretzel_to_montesinos(const std::vector<Int>& params);

/// Determinant by the closed form |e * prod(alpha) - sum_j beta_j * prod_{k != j} alpha_k|.
Int det_montesinos(const Montesinos& p);

/// Determinant of a connected sum from the factor determinants.
Int det_connected_sum(const Int& d1, const Int& d2);

/// Determinant of the 2-bridge link with the given slope.
Int det_rational(const Slope& s);

/// Parameters for the four twisted-band link families that reduce to
/// standard-form presentations with e = 1. `a` holds the positive band
/// parameters (2 or 3 of them), `tail` holds n (families 1 and 3) or the
/// c-parameters (families 2 and 4), and `r_tangle` is the free rational slot.
struct WidmerParams {
    std::vector<Int> a;
    std::vector<Int> tail;
    TanglePair r_tangle;
};

Montesinos widmer_form(int family, const WidmerParams& params);

} // namespace qalink
