#pragma once

// The doubled Schur algebra: idempotented E/F words on weight sequences
// mixing Z_{>=0} and beta - Z_{>=0} entries according to a sign sequence,
// its translation into spider ladders, the finite matrix oracle for relation
// checking, and the sign-swapping symmetries.

#include "spiderq/howe.hpp"
#include "spiderq/scalar.hpp"
#include "spiderq/spider.hpp"

#include <map>
#include <optional>
#include <vector>

namespace spiderq {

struct SignSeq {
    std::vector<int> signs; // +-1, nonempty
    int size() const { return (int)signs.size(); }
    bool operator==(const SignSeq&) const = default;
};

/// Weight sequence: entry i lies in Z_{>=0} when eta_i = +1 (u = 0, v >= 0)
/// and in beta - Z_{>=0} when eta_i = -1 (u = 1, v <= 0).
using DSWeight = std::vector<QExponent>;

bool weight_valid(const SignSeq& eta, const DSWeight& w);

/// Generator E_i or F_i, 1 <= i <= k-1.
struct DSGen {
    bool is_e = true;
    int i = 1;
    auto operator<=>(const DSGen&) const = default;
};

/// lambda +- alpha_i, without validity filtering.
DSWeight ds_shift(const DSWeight& w, const DSGen& g);

/// Scalar-linear combination of generator words out of a fixed source
/// idempotent; words whose intermediate weights leave the valid set are zero.
class DSElement {
public:
    DSElement() = default;
    DSElement(SignSeq eta, DSWeight source);

    static DSElement idempotent(SignSeq eta, DSWeight lambda);
    static DSElement generator(SignSeq eta, DSWeight lambda, DSGen g);

    const SignSeq& eta() const { return eta_; }
    const DSWeight& source() const { return source_; }
    const DSWeight& target() const { return target_; }
    const std::map<std::vector<DSGen>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    DSElement operator+(const DSElement& o) const;
    DSElement operator*(const Scalar& c) const;
    /// append one generator on top (post-compose), zero-filtered
    DSElement then(DSGen g) const;

private:
    friend DSElement ds_compose(const DSElement&, const DSElement&);
    SignSeq eta_;
    DSWeight source_, target_;
    std::map<std::vector<DSGen>, Scalar> terms_;
};

/// x after y (concatenation of words, zero filtered); targets must match.
DSElement ds_compose(const DSElement& x, const DSElement& y);

/// Translation into the spider category: the object has entries lambda_i.v
/// (color for +1 signs, dual color for -1 signs, zeros dropped under
/// canonical form), generators become single rungs.
Morphism phi(const DSElement& x);

/// Necessary-condition equality test through the matrix functor at
/// beta = m - n; exact on the finite weight space of the common source.
bool oracle_equal(const HoweCtx& ctx, const DSElement& x, const DSElement& y);

/// The sign-swap symmetry at position i (eta_i = +1, eta_{i+1} = -1):
/// substitutes the generator table of the swapped algebra, extended
/// multiplicatively over words.  Generators away from i map to themselves.
DSElement lusztig_T(int i, const DSElement& x);

} // namespace spiderq
