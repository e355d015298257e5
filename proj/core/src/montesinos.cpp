#include "qalink/montesinos.hpp"

#include <algorithm>

namespace qalink {

TanglePair::TanglePair(Int a, Int b) : alpha(std::move(a)), beta(std::move(b)) {
    if (alpha < 1) throw std::invalid_argument("TanglePair: alpha must be >= 1");
    if (gcd_int(alpha, abs_int(beta)) != 1)
        throw std::invalid_argument("TanglePair: alpha and beta must be coprime");
}

Montesinos::Montesinos(Int e_, std::vector<TanglePair> ts)
    : e(std::move(e_)), tangles(std::move(ts)) {}

bool Montesinos::is_standard() const {
    for (const auto& t : tangles)
        if (t.beta <= 0 || t.beta >= t.alpha) return false;
    return true;
}

Rational Montesinos::e0() const {
    Rational sum = 0;
    for (const auto& t : tangles) sum += t.slope();
    return Rational(e) - sum;
}

Montesinos standard_form(const Montesinos& p) {
    if (p.tangles.empty())
        throw std::invalid_argument("standard_form: empty tangle list");
    Int e = p.e;
    std::vector<TanglePair> out;
    out.reserve(p.tangles.size());
    for (const auto& t : p.tangles) {
        if (t.alpha == 1) {
            // Integer slot: absorb the full twist count into e.
            e -= t.beta;
            continue;
        }
        // beta = alpha*q + rho with rho in (0, alpha); moving q into e
        // keeps e0 = e - sum(beta/alpha) fixed.
        Int rho = t.beta % t.alpha;
        if (rho < 0) rho += t.alpha;
        if (rho == 0)
            throw std::invalid_argument("standard_form: non-coprime tangle");
        Int q = (t.beta - rho) / t.alpha;
        e -= q;
        out.emplace_back(t.alpha, rho);
    }
    return Montesinos(e, std::move(out));
}

namespace {

// Lexicographically least rotation, then compared against the least
// rotation of the reversal. r is tiny here; the quadratic scan is fine.
std::vector<Rational> least_rotation(const std::vector<Rational>& xs) {
    const int n = static_cast<int>(xs.size());
    std::vector<Rational> best;
    for (int s = 0; s < n; ++s) {
        std::vector<Rational> cand;
        cand.reserve(n);
        for (int i = 0; i < n; ++i) cand.push_back(xs[(s + i) % n]);
        if (best.empty() || cand < best) best = std::move(cand);
    }
    return best;
}

} // namespace

ClassInvariant classification_invariant(const Montesinos& p) {
    Montesinos std_p = standard_form(p);
    if (std_p.r() < 3)
        throw hypothesis_violated("classification requires r >= 3 after absorption");
    Rational bound(std_p.r() - 2);
    Rational sum_inv = 0;
    for (const auto& t : std_p.tangles) sum_inv += Rational(1, t.alpha);
    if (sum_inv > bound)
        throw hypothesis_violated("classification requires sum(1/alpha) <= r - 2");

    std::vector<Rational> residues;
    residues.reserve(std_p.tangles.size());
    for (const auto& t : std_p.tangles) residues.push_back(t.slope());
    std::vector<Rational> fwd = least_rotation(residues);
    std::reverse(residues.begin(), residues.end());
    std::vector<Rational> rev = least_rotation(residues);
    return ClassInvariant{std_p.e0(), std::min(fwd, rev)};
}

Montesinos mirror_presentation(const Montesinos& p) {
    std::vector<TanglePair> ts;
    ts.reserve(p.tangles.size());
    for (const auto& t : p.tangles) ts.emplace_back(t.alpha, -t.beta);
    return Montesinos(-p.e, std::move(ts));
}

Montesinos pretzel_to_montesinos(const std::vector<Int>& params) {
    if (params.empty())
        throw std::invalid_argument("pretzel_to_montesinos: empty parameter list");
    std::vector<TanglePair> ts;
    ts.reserve(params.size());
    for (const Int& s : params) {
        if (s == 0)
            throw std::invalid_argument("pretzel_to_montesinos: zero parameter");
        ts.emplace_back(abs_int(s), s > 0 ? Int(1) : Int(-1));
    }
    return Montesinos(0, std::move(ts));
}

Int det_montesinos(const Montesinos& p) {
    Int prod = 1;
    for (const auto& t : p.tangles) prod *= t.alpha;
    Int acc = p.e * prod;
    for (size_t j = 0; j < p.tangles.size(); ++j) {
        Int term = p.tangles[j].beta;
        for (size_t k = 0; k < p.tangles.size(); ++k)
            if (k != j) term *= p.tangles[k].alpha;
        acc -= term;
    }
    return abs_int(acc);
}

Int det_connected_sum(const Int& d1, const Int& d2) { return d1 * d2; }

Int det_rational(const Slope& s) { return s.alpha; }

Montesinos widmer_form(int family, const WidmerParams& params) {
    auto positive = [](const std::vector<Int>& xs, size_t n) {
        if (xs.size() != n) return false;
        for (const Int& x : xs)
            if (x < 1) return false;
        return true;
    };
    const TanglePair& R = params.r_tangle;
    const auto& a = params.a;
    const auto& t = params.tail;
    switch (family) {
        case 1: {
            if (!positive(a, 2) || !positive(t, 1))
                throw std::invalid_argument("widmer_form: family 1 needs a1,a2 and n");
            const Int& n = t[0];
            return Montesinos(1, {TanglePair(a[0] * a[1] + 1, a[0]), R, TanglePair(n, n - 1)});
        }
        case 2: {
            if (!positive(a, 2) || !positive(t, 2))
                throw std::invalid_argument("widmer_form: family 2 needs a1,a2 and c1,c2");
            Int cc = t[0] * t[1] + 1;
            return Montesinos(1, {TanglePair(a[0] * a[1] + 1, a[0]), R, TanglePair(cc, cc - t[0])});
        }
        case 3: {
            if (!positive(a, 3) || !positive(t, 1))
                throw std::invalid_argument("widmer_form: family 3 needs a1,a2,a3 and n");
            const Int& n = t[0];
            Int num = a[0] * a[1] * a[2] + a[0] + a[2];
            return Montesinos(1, {TanglePair(num, a[0] * a[1] + 1), R, TanglePair(n, n - 1)});
        }
        case 4: {
            if (!positive(a, 3) || !positive(t, 3))
                throw std::invalid_argument("widmer_form: family 4 needs a1,a2,a3 and c1,c2,c3");
            Int num = a[0] * a[1] * a[2] + a[0] + a[2];
            Int cnum = t[0] * t[1] * t[2] + t[0] + t[2];
            return Montesinos(1, {TanglePair(num, a[0] * a[1] + 1), R,
                                  TanglePair(cnum, cnum - (t[0] * t[1] + 1))});
        }
        default:
            throw std::invalid_argument("widmer_form: unknown family id");
    }
}

} // namespace qalink
