#include "spiderq/hecke.hpp"

#include <algorithm>
#include <numeric>

namespace spiderq {

Perm perm_identity(int n) {
    Perm w(n);
    std::iota(w.begin(), w.end(), 0);
    return w;
}

int perm_length(const Perm& w) {
    int l = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++l;
    return l;
}

Perm perm_mul(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm perm_inverse(const Perm& w) {
    Perm r(w.size());
    for (size_t i = 0; i < w.size(); ++i) r[w[i]] = (int)i;
    return r;
}

std::vector<int> reduced_word(const Perm& w) {
    // bubble sort w to the identity; the recorded swaps, reversed, are a
    // reduced word for w
    Perm v = w;
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < v.size(); ++i) {
            if (v[i] > v[i + 1]) {
                std::swap(v[i], v[i + 1]);
                word.push_back((int)i);
                moved = true;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<Perm> all_perms(int n) {
    Perm w = perm_identity(n);
    std::vector<Perm> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

HeckeElement HeckeElement::unit(int rank) {
    return basis(rank, perm_identity(rank));
}

HeckeElement HeckeElement::generator(int rank, int i) {
    check_internal(i >= 0 && i + 1 < rank, "Hecke generator index out of range");
    Perm w = perm_identity(rank);
    std::swap(w[i], w[i + 1]);
    return basis(rank, w);
}

HeckeElement HeckeElement::basis(int rank, const Perm& w, Scalar c) {
    HeckeElement x(rank);
    x.add(w, c);
    return x;
}

Scalar HeckeElement::coeff(const Perm& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? Scalar::zero() : it->second;
}

void HeckeElement::add(const Perm& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(w);
    if (it == coeffs_.end()) {
        coeffs_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
    check_internal(rank_ == o.rank_, "Hecke rank mismatch");
    HeckeElement r = *this;
    for (const auto& [w, c] : o.coeffs_) r.add(w, c);
    return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
    check_internal(rank_ == o.rank_, "Hecke rank mismatch");
    HeckeElement r = *this;
    for (const auto& [w, c] : o.coeffs_) r.add(w, -c);
    return r;
}

HeckeElement HeckeElement::operator*(const Scalar& c) const {
    HeckeElement r(rank_);
    if (c.is_zero()) return r;
    for (const auto& [w, cw] : coeffs_) r.add(w, cw * c);
    return r;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
    if (rank_ != o.rank_) return false;
    HeckeElement d = *this - o;
    return d.is_zero();
}

namespace {

// left multiplication by H_i
HeckeElement mul_gen_left(int i, const HeckeElement& y) {
    HeckeElement r(y.rank());
    const Scalar qm1_minus_q = Scalar::monomial(-1, 0) - Scalar::monomial(1, 0);
    for (const auto& [w, c] : y.coeffs()) {
        Perm siw = w;
        // s_i w in one-line notation: swap the VALUES at positions given by
        // left action: (s_i w)(j) = s_i(w(j))
        for (auto& x : siw) {
            if (x == i) x = i + 1;
            else if (x == i + 1) x = i;
        }
        if (perm_length(siw) > perm_length(w)) {
            r.add(siw, c);
        } else {
            r.add(w, qm1_minus_q * c);
            r.add(siw, c);
        }
    }
    return r;
}

} // namespace

HeckeElement hecke_mul(const HeckeElement& x, const HeckeElement& y) {
    check_internal(x.rank() == y.rank(), "Hecke rank mismatch");
    HeckeElement r(x.rank());
    for (const auto& [w, c] : x.coeffs()) {
        HeckeElement t = y;
        auto word = reduced_word(w);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            t = mul_gen_left(*it, t);
        r = r + t * c;
    }
    return r;
}

Antisymmetrizer antisymmetrizer(int a) {
    check_internal(a >= 1, "antisymmetrizer needs a >= 1");
    // Solve H_i x = -q x for all i with x normalized by coeff(H_id) = 1.
    // Propagating the condition through the multiplication rule forces
    // c_{s_i w} = -q c_w whenever the length goes up, so coefficients are
    // determined along weak order; we then rescale by the idempotency
    // equation x^2 = N x.
    HeckeElement x(a);
    const Scalar minus_q = -Scalar::monomial(1, 0);
    for (const auto& w : all_perms(a)) x.add(w, minus_q.pow(perm_length(w)));
    // verify the eigenvector equations (this is the "solve" check)
    for (int i = 0; i + 1 < a; ++i) {
        check_internal(hecke_mul(HeckeElement::generator(a, i), x) == x * minus_q,
                       "antisymmetrizer eigenvector equation failed");
    }
    HeckeElement xx = hecke_mul(x, x);
    Scalar n = xx.coeff_identity(); // x^2 = N x with N = xx's id coefficient
    check_internal(xx == x * n, "antisymmetrizer x^2 not proportional to x");
    Scalar n_inv = n.inverse();
    return Antisymmetrizer{a, x * n_inv, n_inv};
}

} // namespace spiderq
