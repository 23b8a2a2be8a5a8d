#include "spiderq/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace spiderq {

// ---------------------------------------------------------------- Laurent2

Laurent2 Laurent2::monomial(long long q_exp, long long Q_exp, Int coeff) {
    Laurent2 p;
    if (coeff != 0) p.terms_[{Q_exp, q_exp}] = std::move(coeff);
    return p;
}

void Laurent2::add_term(long long q_exp, long long Q_exp, const Int& coeff) {
    if (coeff == 0) return;
    Key k{Q_exp, q_exp};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent2 Laurent2::operator+(const Laurent2& o) const {
    Laurent2 r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.second, k.first, c);
    return r;
}

Laurent2 Laurent2::operator-(const Laurent2& o) const {
    Laurent2 r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.second, k.first, -c);
    return r;
}

Laurent2 Laurent2::operator-() const {
    Laurent2 r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

Laurent2 Laurent2::operator*(const Laurent2& o) const {
    Laurent2 r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(ka.second + kb.second, ka.first + kb.first, ca * cb);
    return r;
}

Laurent2 Laurent2::substitute_Q(long long d) const {
    Laurent2 r;
    for (const auto& [k, c] : terms_) r.add_term(k.second + d * k.first, 0, c);
    return r;
}

Laurent2 Laurent2::bar() const {
    Laurent2 r;
    for (const auto& [k, c] : terms_) r.add_term(-k.second, -k.first, c);
    return r;
}

std::optional<Laurent2> Laurent2::div_exact(int j) const {
    // (q^j - q^-j) = q^-j (q^{2j} - 1): shift by q^j, then long division by
    // q^{2j} - 1 within each Q-degree.  If f = g (q^{2j} - 1) then the
    // exponents of g lie in [min(f), max(f) - 2j], which bounds the loop.
    if (is_zero()) return Laurent2::zero();
    Laurent2 quotient;
    std::map<long long, std::map<long long, Int>> by_Q;
    for (const auto& [k, c] : terms_) by_Q[k.first][k.second + j] = c;
    for (auto& [Qe, poly] : by_Q) {
        const long long low = poly.begin()->first;
        while (!poly.empty()) {
            auto top = std::prev(poly.end());
            long long e = top->first;
            Int c = top->second;
            if (e - 2 * j < low) return std::nullopt;
            poly.erase(top);
            quotient.add_term(e - 2 * j, Qe, c);
            // subtract c q^{e-2j} (q^{2j} - 1): clears the top, adds c at e-2j
            auto it = poly.find(e - 2 * j);
            if (it == poly.end()) {
                poly.emplace(e - 2 * j, c);
            } else {
                it->second += c;
                if (it->second == 0) poly.erase(it);
            }
        }
    }
    return quotient;
}

std::optional<Laurent2> Laurent2::div_exact_poly(const Laurent2& g) const {
    // g must be univariate in q with unit leading coefficient
    std::map<long long, Int> gq;
    for (const auto& [k, c] : g.terms_) {
        if (k.first != 0) return std::nullopt;
        gq[k.second] = c;
    }
    if (gq.empty()) return std::nullopt;
    const long long gmax = gq.rbegin()->first, gmin = gq.begin()->first;
    const Int glead = gq.rbegin()->second;
    if (glead != 1 && glead != -1) return std::nullopt;
    if (is_zero()) return Laurent2::zero();

    Laurent2 quotient;
    std::map<long long, std::map<long long, Int>> by_Q;
    for (const auto& [k, c] : terms_) by_Q[k.first][k.second] = c;
    for (auto& [Qe, poly] : by_Q) {
        const long long low = poly.begin()->first;
        while (!poly.empty()) {
            auto top = std::prev(poly.end());
            long long e = top->first;
            Int c = top->second * glead; // glead^-1 = glead for +-1
            long long qe = e - gmax;
            if (qe < low - gmin) return std::nullopt;
            quotient.add_term(qe, Qe, c);
            for (const auto& [ge, gc] : gq) {
                long long pos = qe + ge;
                auto it = poly.find(pos);
                Int delta = -c * gc;
                if (it == poly.end()) {
                    if (delta != 0) poly.emplace(pos, delta);
                } else {
                    it->second += delta;
                    if (it->second == 0) poly.erase(it);
                }
            }
        }
    }
    return quotient;
}

std::optional<std::tuple<long long, long long, Int>> Laurent2::as_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [k, c] = *terms_.begin();
    return std::make_tuple(k.second, k.first, c);
}

std::string Laurent2::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = (k.first != 0 || k.second != 0);
        if (a != 1 || !has_var) os << a.str();
        if (a != 1 && has_var) os << "*";
        if (k.second != 0) {
            os << "q";
            if (k.second != 1) os << "^" << k.second;
            if (k.first != 0) os << "*";
        }
        if (k.first != 0) {
            os << "Q";
            if (k.first != 1) os << "^" << k.first;
        }
    }
    return os.str();
}

// ------------------------------------------------------------------ Scalar

Scalar::Scalar(Laurent2 num, std::map<int, int> den)
    : num_(std::move(num)), den_(std::move(den)) {
    reduce();
}

Scalar Scalar::monomial(long long q_exp, long long Q_exp, Int coeff) {
    Scalar s;
    s.num_ = Laurent2::monomial(q_exp, Q_exp, std::move(coeff));
    return s;
}

void Scalar::reduce() {
    if (num_.is_zero()) { den_.clear(); return; }
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0) {
            auto q = num_.div_exact(it->first);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        it = (it->second == 0) ? den_.erase(it) : std::next(it);
    }
}

Laurent2 Scalar::den_poly() const {
    Laurent2 d = Laurent2::unit();
    for (const auto& [j, m] : den_)
        for (int t = 0; t < m; ++t)
            d = d * (Laurent2::monomial(j, 0, 1) - Laurent2::monomial(-j, 0, 1));
    return d;
}

Scalar Scalar::operator+(const Scalar& o) const {
    // union of denominators
    std::map<int, int> den;
    for (const auto& [j, m] : den_) den[j] = m;
    for (const auto& [j, m] : o.den_) den[j] = std::max(den[j], m);
    auto complement = [&](const std::map<int, int>& mine) {
        Laurent2 f = Laurent2::unit();
        for (const auto& [j, m] : den) {
            int have = 0;
            if (auto it = mine.find(j); it != mine.end()) have = it->second;
            for (int t = have; t < m; ++t)
                f = f * (Laurent2::monomial(j, 0, 1) - Laurent2::monomial(-j, 0, 1));
        }
        return f;
    };
    Laurent2 num = num_ * complement(den_) + o.num_ * complement(o.den_);
    return Scalar(std::move(num), std::move(den));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    std::map<int, int> den = den_;
    for (const auto& [j, m] : o.den_) den[j] += m;
    return Scalar(num_ * o.num_, std::move(den));
}

bool Scalar::operator==(const Scalar& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_poly() == o.num_ * den_poly();
}

namespace {

// Phi_e(q), computed by Phi_e = (q^e - 1) / prod_{d | e, d < e} Phi_d.
const Laurent2& cyclotomic(int e) {
    static std::map<int, Laurent2> cache;
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    Laurent2 f = Laurent2::monomial(e, 0, 1) - Laurent2::unit();
    for (int d = 1; d < e; ++d) {
        if (e % d != 0) continue;
        auto q = f.div_exact_poly(cyclotomic(d));
        check_internal(q.has_value(), "cyclotomic recursion failed");
        f = std::move(*q);
    }
    return cache.emplace(e, std::move(f)).first->second;
}

long long phi_degree(const Laurent2& p) {
    long long hi = 0, lo = 0;
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
        if (first) { hi = lo = k.second; first = false; }
        hi = std::max(hi, k.second);
        lo = std::min(lo, k.second);
    }
    return hi - lo;
}

} // namespace

Scalar Scalar::inverse() const {
    check_internal(!num_.is_zero(), "Scalar::inverse of zero");
    // The units of the localized ring are +-q^a Q^b times products of
    // cyclotomics Phi_e(q) (every Phi_e divides some q^{2j} - 1).  Peel the
    // cyclotomic content of the numerator, then rebuild 1/Phi_e as
    // q^-j (q^{2j} - 1)/Phi_e over a denominator factor (q^j - q^-j).
    Laurent2 r = num_;
    std::map<int, int> phis;
    const long long span = phi_degree(r);
    for (int e = 1; (long long)e <= 2 * span * span + 2; ++e) {
        const Laurent2& phi = cyclotomic(e);
        if (phi_degree(phi) > phi_degree(r)) {
            if (phi_degree(phi) > span) continue;
        }
        while (true) {
            auto q = r.div_exact_poly(phi);
            if (!q) break;
            r = std::move(*q);
            ++phis[e];
        }
        if (r.terms().size() == 1) break;
    }
    auto mono = r.as_monomial();
    check_internal(mono.has_value(),
                   "Scalar::inverse: value is not a unit of the localized ring: " + to_string());
    auto [qe, Qe, c] = *mono;
    check_internal(c == 1 || c == -1,
                   "Scalar::inverse: non-unit integer content " + c.str());
    Laurent2 out_num = den_poly() * Laurent2::monomial(-qe, -Qe, c);
    std::map<int, int> out_den;
    for (const auto& [e, m] : phis) {
        int j = (e % 2 == 0) ? e / 2 : e; // Phi_e | q^{2j} - 1
        Laurent2 full = Laurent2::monomial(2 * j, 0, 1) - Laurent2::unit();
        auto cof = full.div_exact_poly(cyclotomic(e));
        check_internal(cof.has_value(), "cyclotomic cofactor failed");
        Laurent2 piece = *cof * Laurent2::monomial(-j, 0, 1); // q^-j (q^{2j}-1)/Phi_e
        for (int t = 0; t < m; ++t) out_num = out_num * piece;
        out_den[j] += m;
    }
    return Scalar(std::move(out_num), std::move(out_den));
}

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r = Scalar::unit();
    Scalar b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Scalar Scalar::specialize(long long d) const {
    return Scalar(num_.substitute_Q(d), den_);
}

Scalar Scalar::bar() const {
    // (q^j - q^-j) is bar-antiinvariant: bar(f/g) = bar(f)/bar(g) with
    // bar(q^j - q^-j) = -(q^j - q^-j), so a sign per denominator factor.
    long long flips = 0;
    for (const auto& [j, m] : den_) flips += m;
    Laurent2 n = num_.bar();
    if (flips % 2) n = -n;
    return Scalar(std::move(n), den_);
}

std::string Scalar::to_string() const {
    if (num_.is_zero()) return "0";
    std::ostringstream os;
    bool parens = num_.terms().size() > 1 && !den_.empty();
    if (parens) os << "(";
    os << num_.to_string();
    if (parens) os << ")";
    for (const auto& [j, m] : den_) {
        os << "/(q^" << j << "-q^-" << j << ")";
        if (m > 1) os << "^" << m;
    }
    return os.str();
}

std::string Scalar::to_json() const {
    std::ostringstream os;
    os << "{\"terms\":[";
    bool first = true;
    for (const auto& [k, c] : num_.terms()) {
        if (!first) os << ",";
        first = false;
        os << "[" << k.second << "," << k.first << ",\"" << c.str() << "\"]";
    }
    os << "],\"denom_power\":";
    int dp = 0;
    if (auto it = den_.find(1); it != den_.end()) dp = it->second;
    os << dp;
    bool extra = false;
    for (const auto& [j, m] : den_)
        if (j >= 2) extra = true;
    if (extra) {
        os << ",\"denom_factors\":[";
        first = true;
        for (const auto& [j, m] : den_) {
            if (j < 2) continue;
            if (!first) os << ",";
            first = false;
            os << "[" << j << "," << m << "]";
        }
        os << "]";
    }
    os << "}";
    return os.str();
}

// -------------------------------------------------------------- operations

Scalar qpow(QExponent x) { return Scalar::monomial(x.v, x.u); }

Scalar qint(QExponent x) {
    Laurent2 num = Laurent2::monomial(x.v, x.u, 1) - Laurent2::monomial(-x.v, -x.u, 1);
    return Scalar(std::move(num), {{1, 1}});
}

Scalar qfact(long long k) {
    Scalar r = Scalar::unit();
    for (long long j = 2; j <= k; ++j) r = r * qint(j);
    return r;
}

Scalar qbinom(QExponent x, long long k) {
    if (k < 0) return Scalar::zero();
    Scalar r = Scalar::unit();
    for (long long j = 0; j < k; ++j) r = r * qint(x - QExponent{0, j});
    return r.div(qfact(k));
}

} // namespace spiderq
