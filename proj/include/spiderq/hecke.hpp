#pragma once

// Hecke algebra H_r in the permutation basis {H_w}, with coefficients in the
// quantum scalar ring, and the q-antisymmetrizer idempotents e_a.

#include "spiderq/scalar.hpp"

#include <vector>

namespace spiderq {

/// One-line notation, 0-based: perm[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int n);
int perm_length(const Perm& w); // number of inversions
Perm perm_mul(const Perm& a, const Perm& b); // (a*b)(i) = a(b(i))
Perm perm_inverse(const Perm& w);
/// A reduced word for w as a list of generator indices i (0-based, s_i swaps
/// positions i, i+1), applied left to right: w = s_{i_1} ... s_{i_l}.
std::vector<int> reduced_word(const Perm& w);
std::vector<Perm> all_perms(int n);

class HeckeElement {
public:
    explicit HeckeElement(int rank = 0) : rank_(rank) {}

    static HeckeElement unit(int rank);
    static HeckeElement generator(int rank, int i); // H_i, 0 <= i <= rank-2
    static HeckeElement basis(int rank, const Perm& w, Scalar c = Scalar::unit());

    int rank() const { return rank_; }
    const std::map<Perm, Scalar>& coeffs() const { return coeffs_; }
    Scalar coeff(const Perm& w) const;
    Scalar coeff_identity() const { return coeff(perm_identity(rank_)); }
    bool is_zero() const { return coeffs_.empty(); }

    void add(const Perm& w, const Scalar& c);

    HeckeElement operator+(const HeckeElement& o) const;
    HeckeElement operator-(const HeckeElement& o) const;
    HeckeElement operator*(const Scalar& c) const;
    bool operator==(const HeckeElement& o) const;

private:
    int rank_;
    std::map<Perm, Scalar> coeffs_;
};

/// Product in the H_w basis: H_i H_w = H_{s_i w} when the length goes up,
/// (q^-1 - q) H_w + H_{s_i w} when it goes down.
HeckeElement hecke_mul(const HeckeElement& x, const HeckeElement& y);

struct Antisymmetrizer {
    int color;             // a
    HeckeElement element;  // e_a, rank a
    Scalar id_coeff;       // coefficient of H_id in e_a (its inverse rescales)
};

/// The idempotent e_a with H_i e_a = e_a H_i = -q e_a, computed from its
/// characterizing equations (eigenvector solve plus idempotent normalization).
Antisymmetrizer antisymmetrizer(int a);

} // namespace spiderq
