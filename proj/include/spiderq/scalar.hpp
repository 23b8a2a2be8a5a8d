#pragma once

// Exact arithmetic in the coefficient ring of the two-variable quantum
// calculus: integer Laurent polynomials in q and Q (where Q stands for q^beta)
// localized at the quantum integers.  Values are stored as
//
//     numerator / prod_j (q^j - q^-j)^{m_j}
//
// with the numerator a finitely supported Z-combination of monomials q^a Q^b.
// The j = 1 factor is the classical (q - q^-1) localization; higher j appear
// in quantum binomials with a formal beta, e.g. [beta][beta-1]/[2].

#include "spiderq/common.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spiderq {

using Int = boost::multiprecision::cpp_int;

/// Exponent of the form u*beta + v with integer u, v.
struct QExponent {
    long long u = 0; // coefficient of beta
    long long v = 0; // constant part

    QExponent() = default;
    QExponent(long long u_, long long v_) : u(u_), v(v_) {}

    QExponent operator+(const QExponent& o) const { return {u + o.u, v + o.v}; }
    QExponent operator-(const QExponent& o) const { return {u - o.u, v - o.v}; }
    QExponent operator-() const { return {-u, -v}; }
    bool operator==(const QExponent& o) const = default;
};

/// Sparse integer Laurent polynomial in the commuting variables q and Q.
/// Terms are keyed by (Q-exponent, q-exponent), which is also the
/// serialization order.
class Laurent2 {
public:
    using Key = std::pair<long long, long long>; // (Q_exp, q_exp)

    Laurent2() = default;

    static Laurent2 zero() { return Laurent2(); }
    static Laurent2 unit() { return monomial(0, 0, 1); }
    static Laurent2 monomial(long long q_exp, long long Q_exp, Int coeff);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Int>& terms() const { return terms_; }

    void add_term(long long q_exp, long long Q_exp, const Int& coeff);

    Laurent2 operator+(const Laurent2& o) const;
    Laurent2 operator-(const Laurent2& o) const;
    Laurent2 operator*(const Laurent2& o) const;
    Laurent2 operator-() const;
    bool operator==(const Laurent2& o) const { return terms_ == o.terms_; }

    /// Substitute Q := q^d.
    Laurent2 substitute_Q(long long d) const;

    /// Apply the bar involution q -> q^-1, Q -> Q^-1.
    Laurent2 bar() const;

    /// Exact division by (q^j - q^-j); nullopt when not divisible.
    std::optional<Laurent2> div_exact(int j) const;

    /// Exact division by a univariate-in-q Laurent polynomial whose leading
    /// coefficient is +-1; nullopt when not divisible.
    std::optional<Laurent2> div_exact_poly(const Laurent2& g) const;

    /// True when the polynomial is a single term +-q^a Q^b; returns it.
    std::optional<std::tuple<long long, long long, Int>> as_monomial() const;

    std::string to_string() const;

private:
    std::map<Key, Int> terms_;
};

/// Element of Z[q^{+-1}, Q^{+-1}] localized at { q^j - q^-j : j >= 1 }.
class Scalar {
public:
    Scalar() = default; // zero
    explicit Scalar(long long n) : num_(Laurent2::monomial(0, 0, n)) {}
    explicit Scalar(const Int& n) : num_(Laurent2::monomial(0, 0, n)) {}
    Scalar(Laurent2 num, std::map<int, int> den);

    static Scalar zero() { return Scalar(); }
    static Scalar unit() { return Scalar(1); }
    static Scalar monomial(long long q_exp, long long Q_exp, Int coeff = 1);

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    const Laurent2& numerator() const { return num_; }
    const std::map<int, int>& denominator() const { return den_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Equality after cross-multiplication; independent of representation.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Multiplicative inverse.  Defined exactly for units of the ring, i.e.
    /// values of the form +-q^a Q^b * prod (q^j - q^-j)^{k_j}.  Anything else
    /// raises internal_error (the pipeline only ever inverts such values).
    Scalar inverse() const;

    /// Exact division; internal_error when the quotient leaves the ring.
    Scalar div(const Scalar& o) const { return *this * o.inverse(); }

    Scalar pow(long long e) const;

    /// Substitute Q := q^d (specialization beta = d).
    Scalar specialize(long long d) const;

    /// Bar involution q -> q^-1, Q -> Q^-1.
    Scalar bar() const;

    std::string to_string() const;

    /// Deterministic JSON: {"terms":[[q,Q,"c"],...],"denom_power":k}
    /// plus "denom_factors":[[j,m],...] when factors with j >= 2 survive.
    std::string to_json() const;

private:
    void reduce();
    Laurent2 den_poly() const;

    Laurent2 num_;           // numerator
    std::map<int, int> den_; // factor j -> multiplicity of (q^j - q^-j)
};

/// q^{u beta + v} = Q^u q^v.
Scalar qpow(QExponent x);

/// Quantum integer [x] = (q^x - q^-x)/(q - q^-1).
Scalar qint(QExponent x);
inline Scalar qint(long long v) { return qint(QExponent{0, v}); }

/// Quantum factorial [k]! = [k][k-1]...[1].
Scalar qfact(long long k);

/// Quantum binomial [x; k] = [x][x-1]...[x-k+1] / [k]!.
Scalar qbinom(QExponent x, long long k);

} // namespace spiderq
