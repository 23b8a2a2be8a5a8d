#include "spiderq/dschur.hpp"

namespace spiderq {

bool weight_valid(const SignSeq& eta, const DSWeight& w) {
    if ((int)w.size() != eta.size() || eta.size() == 0) return false;
    for (int i = 0; i < eta.size(); ++i) {
        if (eta.signs[i] > 0) {
            if (w[i].u != 0 || w[i].v < 0) return false;
        } else {
            if (w[i].u != 1 || w[i].v > 0) return false;
        }
    }
    return true;
}

DSWeight ds_shift(const DSWeight& w, const DSGen& g) {
    DSWeight out = w;
    int i = g.i - 1;
    long long delta = g.is_e ? 1 : -1;
    out[i].v += delta;
    out[i + 1].v -= delta;
    return out;
}

DSElement::DSElement(SignSeq eta, DSWeight source)
    : eta_(std::move(eta)), source_(std::move(source)), target_(source_) {}

DSElement DSElement::idempotent(SignSeq eta, DSWeight lambda) {
    DSElement x(std::move(eta), std::move(lambda));
    if (weight_valid(x.eta_, x.source_)) x.terms_[{}] = Scalar::unit();
    return x;
}

DSElement DSElement::generator(SignSeq eta, DSWeight lambda, DSGen g) {
    return idempotent(std::move(eta), std::move(lambda)).then(g);
}

DSElement DSElement::then(DSGen g) const {
    check_internal(g.i >= 1 && g.i < eta_.size(), "DS generator index out of range");
    DSElement out(eta_, source_);
    out.target_ = ds_shift(target_, g);
    if (weight_valid(eta_, out.target_)) {
        for (const auto& [w, c] : terms_) {
            std::vector<DSGen> nw = w;
            nw.push_back(g);
            out.terms_.emplace(std::move(nw), c);
        }
    }
    return out;
}

DSElement DSElement::operator+(const DSElement& o) const {
    if (terms_.empty() && !o.terms_.empty()) {
        check_internal(eta_ == o.eta_ || eta_.size() == 0, "DS sum sign mismatch");
        return o;
    }
    if (!o.terms_.empty()) {
        check_internal(eta_ == o.eta_ && source_ == o.source_ && target_ == o.target_,
                       "DS sum boundary mismatch");
    }
    DSElement out = *this;
    for (const auto& [w, c] : o.terms_) {
        auto it = out.terms_.find(w);
        if (it == out.terms_.end()) {
            out.terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

DSElement DSElement::operator*(const Scalar& c) const {
    DSElement out(eta_, source_);
    out.target_ = target_;
    if (c.is_zero()) return out;
    for (const auto& [w, cw] : terms_) out.terms_[w] = cw * c;
    return out;
}

DSElement ds_compose(const DSElement& x, const DSElement& y) {
    check_internal(x.eta_ == y.eta_, "ds_compose sign mismatch");
    if (x.source_ != y.target_) throw eval_error("ds_compose weight mismatch");
    DSElement out(x.eta_, y.source_);
    out.target_ = x.target_;
    for (const auto& [wx, cx] : x.terms_)
        for (const auto& [wy, cy] : y.terms_) {
            std::vector<DSGen> w = wy;
            w.insert(w.end(), wx.begin(), wx.end());
            Scalar c = cx * cy;
            auto it = out.terms_.find(w);
            if (it == out.terms_.end()) {
                out.terms_.emplace(std::move(w), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    return out;
}

Morphism phi(const DSElement& x) {
    check_internal(weight_valid(x.eta(), x.source()), "phi needs a valid source weight");
    SpiderObject src;
    for (const auto& l : x.source()) src.push_back((int)l.v);
    SpiderObject tgt;
    for (const auto& l : x.target()) tgt.push_back((int)l.v);
    Morphism out = Morphism::zero_morphism(src, tgt);
    for (const auto& [w, c] : x.terms()) {
        std::vector<LadderGen> gens;
        for (const DSGen& g : w) {
            int pos = g.i - 1;
            bool lu = x.eta().signs[pos] > 0;
            bool ru = x.eta().signs[pos + 1] > 0;
            Orient pat = lu ? (ru ? Orient::UpUp : Orient::UpDown)
                            : (ru ? Orient::DownUp : Orient::DownDown);
            gens.push_back({g.is_e ? GenKind::E : GenKind::F, pos, 1, 1, pat});
        }
        LadderWord lw = make_word(src, std::move(gens));
        check_internal(!lw.zero, "valid DS word annihilated under phi");
        out = out + Morphism::from_word(lw, c);
    }
    return out;
}

bool oracle_equal(const HoweCtx& ctx, const DSElement& x, const DSElement& y) {
    check_internal(x.eta() == y.eta(), "oracle_equal sign mismatch");
    if (x.source() != y.source() || x.target() != y.target()) {
        if (x.is_zero() && y.is_zero()) return true;
        if (x.is_zero()) return apply_morphism(ctx, phi(y)).is_zero();
        if (y.is_zero()) return apply_morphism(ctx, phi(x)).is_zero();
        throw eval_error("oracle_equal boundary mismatch");
    }
    Operator a = apply_morphism(ctx, phi(x));
    Operator b = apply_morphism(ctx, phi(y));
    return a == op_reshape(std::move(b), a.src, a.dst);
}

DSElement lusztig_T(int i, const DSElement& x) {
    const SignSeq& eta = x.eta();
    check_internal(i >= 1 && i < eta.size(), "lusztig_T index out of range");
    check_internal(eta.signs[i - 1] == 1 && eta.signs[i] == -1,
                   "lusztig_T needs the (+1, -1) sign configuration");
    SignSeq eta2 = eta;
    std::swap(eta2.signs[i - 1], eta2.signs[i]);
    auto swap_weight = [&](DSWeight w) {
        std::swap(w[i - 1], w[i]);
        return w;
    };
    DSElement total(eta2, swap_weight(x.source()));
    bool first = true;
    for (const auto& [w, c] : x.terms()) {
        // walk the word, tracking the source-side weight, substituting each
        // generator by its image over the swapped signs
        DSWeight mu = x.source();
        DSElement img = DSElement::idempotent(eta2, swap_weight(mu));
        for (const DSGen& g : w) {
            DSElement step(eta2, swap_weight(mu));
            DSWeight smu = swap_weight(mu);
            auto gen = [&](bool is_e, int j) { return DSGen{is_e, j}; };
            if (g.i == i) {
                long long dv = mu[i - 1].v - mu[i].v;
                long long du = mu[i - 1].u - mu[i].u;
                if (g.is_e) {
                    // E_i 1_mu -> q^{mu_i - mu_{i+1}} F_i
                    step = DSElement::generator(eta2, smu, gen(false, i)) * qpow({du, dv});
                } else {
                    // F_i 1_mu -> q^{-mu_i + mu_{i+1} + 2} E_i
                    step = DSElement::generator(eta2, smu, gen(true, i)) * qpow({-du, -dv + 2});
                }
            } else if (g.i == i - 1 || g.i == i + 1) {
                int j = g.i;
                if (g.is_e) {
                    // E_j -> q E_j E_i - E_i E_j
                    DSElement t1 = DSElement::generator(eta2, smu, gen(true, i)).then(gen(true, j));
                    DSElement t2 = DSElement::generator(eta2, smu, gen(true, j)).then(gen(true, i));
                    step = t1 * Scalar::monomial(1, 0) + t2 * (-Scalar::unit());
                } else {
                    // F_j -> q^-1 F_i F_j - F_j F_i
                    DSElement t1 = DSElement::generator(eta2, smu, gen(false, j)).then(gen(false, i));
                    DSElement t2 = DSElement::generator(eta2, smu, gen(false, i)).then(gen(false, j));
                    step = t1 * Scalar::monomial(-1, 0) + t2 * (-Scalar::unit());
                }
            } else {
                step = DSElement::generator(eta2, smu, g);
            }
            img = ds_compose(step, img);
            mu = ds_shift(mu, g);
        }
        if (first) {
            total = img * c;
            first = false;
        } else {
            total = total + img * c;
        }
    }
    if (first) {
        // zero element: carry the formal swapped boundary
        DSElement z(eta2, swap_weight(x.source()));
        return z;
    }
    return total;
}

} // namespace spiderq
