#include "spiderq/howe.hpp"

#include <algorithm>
#include <numeric>

namespace spiderq {

// ------------------------------------------------------------- word spaces

std::vector<int> WordSpace::unrank(long long idx) const {
    std::vector<int> t(dims.size());
    for (int i = (int)dims.size() - 1; i >= 0; --i) {
        t[i] = (int)(idx % dims[i]);
        idx /= dims[i];
    }
    return t;
}

long long WordSpace::rank(const std::vector<int>& tuple) const {
    long long idx = 0;
    for (size_t i = 0; i < dims.size(); ++i) idx = idx * dims[i] + tuple[i];
    return idx;
}

void Operator::add(long long dst_row, long long src_col, const Scalar& v) {
    if (v.is_zero()) return;
    auto& col = cols[src_col];
    auto it = col.find(dst_row);
    if (it == col.end()) {
        col.emplace(dst_row, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) {
            col.erase(it);
            if (col.empty()) cols.erase(src_col);
        }
    }
}

bool Operator::is_zero() const {
    for (const auto& [c, col] : cols)
        if (!col.empty()) return false;
    return true;
}

bool Operator::operator==(const Operator& o) const {
    if (!(src == o.src) || !(dst == o.dst)) return false;
    // sparse difference
    for (const auto& [c, col] : cols) {
        auto it = o.cols.find(c);
        for (const auto& [r, v] : col) {
            Scalar w = (it != o.cols.end() && it->second.count(r)) ? it->second.at(r)
                                                                   : Scalar::zero();
            if (!(v == w)) return false;
        }
    }
    for (const auto& [c, col] : o.cols) {
        auto it = cols.find(c);
        for (const auto& [r, v] : col) {
            if (it == cols.end() || !it->second.count(r)) {
                if (!v.is_zero()) return false;
            }
        }
    }
    return true;
}

Operator op_zero(WordSpace src, WordSpace dst) {
    Operator o;
    o.src = std::move(src);
    o.dst = std::move(dst);
    return o;
}

Operator op_identity(WordSpace ws) {
    Operator o = op_zero(ws, ws);
    for (long long i = 0; i < ws.total; ++i) o.cols[i][i] = Scalar::unit();
    return o;
}

Operator op_mul(const Operator& a, const Operator& b) {
    check_internal(a.src == b.dst, "operator composition space mismatch");
    Operator o = op_zero(b.src, a.dst);
    for (const auto& [c, bcol] : b.cols) {
        std::map<long long, Scalar> acc;
        for (const auto& [mid, bv] : bcol) {
            auto it = a.cols.find(mid);
            if (it == a.cols.end()) continue;
            for (const auto& [r, av] : it->second) {
                auto jt = acc.find(r);
                if (jt == acc.end()) acc.emplace(r, av * bv);
                else jt->second += av * bv;
            }
        }
        for (auto& [r, v] : acc)
            if (!v.is_zero()) o.cols[c].emplace(r, std::move(v));
        if (o.cols.count(c) && o.cols[c].empty()) o.cols.erase(c);
    }
    return o;
}

Operator op_add(const Operator& a, const Operator& b) {
    check_internal(a.src == b.src && a.dst == b.dst, "operator sum space mismatch");
    Operator o = a;
    for (const auto& [c, col] : b.cols)
        for (const auto& [r, v] : col) o.add(r, c, v);
    return o;
}

Operator op_scale(const Operator& a, const Scalar& c) {
    Operator o = op_zero(a.src, a.dst);
    if (c.is_zero()) return o;
    for (const auto& [cc, col] : a.cols)
        for (const auto& [r, v] : col) o.cols[cc][r] = v * c;
    return o;
}

namespace {

WordSpace concat_space(const WordSpace& a, const WordSpace& b) {
    WordSpace w;
    w.ctx = a.ctx ? a.ctx : b.ctx;
    w.entries = a.entries;
    w.entries.insert(w.entries.end(), b.entries.begin(), b.entries.end());
    w.dims = a.dims;
    w.dims.insert(w.dims.end(), b.dims.begin(), b.dims.end());
    w.total = a.total * b.total;
    return w;
}

} // namespace

Operator op_tensor(const Operator& a, const Operator& b) {
    Operator o = op_zero(concat_space(a.src, b.src), concat_space(a.dst, b.dst));
    for (const auto& [ca, cola] : a.cols)
        for (const auto& [ra, va] : cola)
            for (const auto& [cb, colb] : b.cols)
                for (const auto& [rb, vb] : colb)
                    o.cols[ca * b.src.total + cb][ra * b.dst.total + rb] = va * vb;
    return o;
}

Operator op_rot180(const Operator& a) {
    auto rot_space = [](const WordSpace& w) {
        WordSpace r;
        r.ctx = w.ctx;
        r.entries.assign(w.entries.rbegin(), w.entries.rend());
        for (auto& e : r.entries) e = -e;
        r.dims.assign(w.dims.rbegin(), w.dims.rend());
        r.total = w.total;
        return r;
    };
    WordSpace nsrc = rot_space(a.dst), ndst = rot_space(a.src);
    Operator o = op_zero(nsrc, ndst);
    for (const auto& [c, col] : a.cols) {
        std::vector<int> ct = a.src.unrank(c);
        std::reverse(ct.begin(), ct.end());
        long long nr = ndst.rank(ct);
        for (const auto& [r, v] : col) {
            std::vector<int> rt = a.dst.unrank(r);
            std::reverse(rt.begin(), rt.end());
            o.cols[nsrc.rank(rt)][nr] = v;
        }
    }
    return o;
}

Operator op_reshape(Operator a, WordSpace new_src, WordSpace new_dst) {
    check_internal(a.src.total == new_src.total && a.dst.total == new_dst.total,
                   "reshape changes dimensions");
    check_internal(canonical_object(a.src.entries) == canonical_object(new_src.entries) &&
                       canonical_object(a.dst.entries) == canonical_object(new_dst.entries),
                   "reshape changes the underlying object");
    a.src = std::move(new_src);
    a.dst = std::move(new_dst);
    return a;
}

// ------------------------------------------------------------------- basis

std::vector<Monomial> wedge_basis(int m, int n, int a) {
    std::vector<Monomial> out;
    if (a < 0) return out;
    Monomial cur;
    // rows ascending, strict at even rows (<= m)
    auto rec = [&](auto&& self, int min_row, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int i = min_row; i <= m + n; ++i) {
            cur.push_back(i);
            self(self, i <= m ? i + 1 : i, remaining - 1);
            cur.pop_back();
        }
    };
    rec(rec, 1, a);
    return out;
}

HoweCtx::HoweCtx(int m_, int n_) : m(m_), n(n_), d(m_ - n_) {
    check_internal(m >= 0 && n >= 0 && m + n >= 1, "HoweCtx needs m + n >= 1");
    // braiding on V (x) V, eq. four-case action
    WordSpace vv = space({1, 1});
    rhat_ = op_zero(vv, vv);
    const Scalar q = Scalar::monomial(1, 0), qi = Scalar::monomial(-1, 0);
    for (int a = 1; a <= dimV(); ++a)
        for (int b = 1; b <= dimV(); ++b) {
            long long col = vv.rank({a - 1, b - 1});
            int koszul = (odd_row(a) && odd_row(b)) ? -1 : 1;
            if (a == b && !odd_row(a)) {
                rhat_.add(col, col, qi);
            } else if (a == b) {
                rhat_.add(col, col, -q);
            } else if (a < b) {
                rhat_.add(vv.rank({b - 1, a - 1}), col, Scalar(koszul));
            } else {
                rhat_.add(vv.rank({b - 1, a - 1}), col, Scalar(koszul));
                rhat_.add(col, col, qi - q);
            }
        }
    // minimal polynomial (t - q^-1)(t + q) gives the inverse directly
    rhat_inv_ = op_add(rhat_, op_scale(op_identity(vv), q - qi));
    self_check();
}

long long HoweCtx::rho2(int i) const {
    if (i <= m) return d + 1 - 2 * i;
    int j = i - m;
    return -(d + 2 * n + 1 - 2 * j);
}

const std::vector<Monomial>& HoweCtx::basis(int a) const {
    auto it = basis_.find(a);
    if (it == basis_.end())
        it = basis_.emplace(a, wedge_basis(m, n, a)).first;
    return it->second;
}

long long HoweCtx::dim(int a) const { return (long long)basis(a).size(); }

int HoweCtx::parity(const Monomial& w) const {
    int p = 0;
    for (int i : w) p ^= odd_row(i) ? 1 : 0;
    return p;
}

Scalar HoweCtx::phi(const Monomial& w) const {
    long long e = 0;
    for (int i : w) e += rho2(i);
    Scalar v = Scalar::monomial(-e, 0);
    return parity(w) ? -v : v;
}

WordSpace HoweCtx::space(SpiderObject entries) const {
    WordSpace w;
    w.ctx = this;
    w.entries = std::move(entries);
    for (int e : w.entries) {
        long long dd = e == 0 ? 1 : dim(std::abs(e));
        w.dims.push_back(dd);
        w.total *= dd;
    }
    return w;
}

// ------------------------------------------------------------ straightening

ZLin HoweCtx::straighten(const ZWord& w) const {
    auto hit = straighten_cache_.find(w);
    if (hit != straighten_cache_.end()) return hit->second;
    ZLin result;
    // find the first adjacent violation
    int bad = -1;
    bool is_repeat = false;
    for (size_t t = 0; t + 1 < w.size(); ++t) {
        const ZEntry &p = w[t], &q = w[t + 1];
        if (p == q) {
            if (!odd_row(p.row)) {
                straighten_cache_.emplace(w, ZLin{});
                return {}; // even repeat: zero
            }
            continue;
        }
        bool in_order = (p.col < q.col) || (p.col == q.col && p.row < q.row);
        if (!in_order) {
            bad = (int)t;
            is_repeat = false;
            break;
        }
    }
    (void)is_repeat;
    if (bad < 0) {
        result[w] = Scalar::unit();
        straighten_cache_.emplace(w, result);
        return result;
    }
    const ZEntry p = w[bad], q = w[bad + 1];
    auto with = [&](ZEntry x, ZEntry y) {
        ZWord v = w;
        v[bad] = x;
        v[bad + 1] = y;
        return v;
    };
    auto accumulate = [&](const ZWord& v, const Scalar& c) {
        for (const auto& [u, cu] : straighten(v)) {
            auto it = result.find(u);
            if (it == result.end()) result.emplace(u, cu * c);
            else {
                it->second += cu * c;
                if (it->second.is_zero()) result.erase(it);
            }
        }
    };
    const Scalar qq = Scalar::monomial(1, 0), qqi = Scalar::monomial(-1, 0);
    int sg = (odd_row(p.row) && odd_row(q.row)) ? -1 : 1;
    if (p.col == q.col) {
        // same column, rows out of order
        accumulate(with(q, p), Scalar(-sg) * qq);
    } else if (p.row == q.row) {
        // same row, columns out of order
        if (odd_row(p.row)) accumulate(with(q, p), qqi);
        else accumulate(with(q, p), -qq);
    } else if (p.row > q.row) {
        accumulate(with(q, p), Scalar(-sg));
    } else {
        // p.row < q.row, p.col > q.col
        accumulate(with(q, p), Scalar(-sg));
        accumulate(with(ZEntry{p.row, q.col}, ZEntry{q.row, p.col}), qqi - qq);
    }
    straighten_cache_.emplace(w, result);
    return result;
}

namespace {

// one application of E_i / F_i on a sorted word, by the quantum Leibniz rule
ZLin leibniz(const HoweCtx& ctx, const ZWord& w, int i, bool is_e) {
    ZLin out;
    for (size_t t = 0; t < w.size(); ++t) {
        int from = is_e ? i + 1 : i;
        int to = is_e ? i : i + 1;
        if (w[t].col != from) continue;
        long long e = 0;
        if (is_e) {
            for (size_t s = t + 1; s < w.size(); ++s) {
                if (w[s].col == i) --e;
                else if (w[s].col == i + 1) ++e;
            }
        } else {
            for (size_t s = 0; s < t; ++s) {
                if (w[s].col == i) ++e;
                else if (w[s].col == i + 1) --e;
            }
        }
        ZWord v = w;
        v[t].col = to;
        Scalar c = Scalar::monomial(e, 0);
        for (const auto& [u, cu] : ctx.straighten(v)) {
            auto it = out.find(u);
            if (it == out.end()) out.emplace(u, cu * c);
            else {
                it->second += cu * c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

ZLin apply_power(const HoweCtx& ctx, const ZWord& w, int i, bool is_e, int r) {
    ZLin cur{{w, Scalar::unit()}};
    for (int t = 0; t < r; ++t) {
        ZLin next;
        for (const auto& [v, c] : cur)
            for (const auto& [u, cu] : leibniz(ctx, v, i, is_e)) {
                auto it = next.find(u);
                if (it == next.end()) next.emplace(u, cu * c);
                else {
                    it->second += cu * c;
                    if (it->second.is_zero()) next.erase(it);
                }
            }
        cur = std::move(next);
    }
    if (r >= 2) {
        Scalar inv = qfact(r).inverse();
        for (auto& [u, c] : cur) {
            c = c * inv;
            check_internal(c.is_polynomial(), "divided power is not integral");
        }
    }
    return cur;
}

} // namespace

Operator HoweCtx::up_rung(bool is_e, int r, int a, int b) const {
    check_internal(a >= 0 && b >= 0 && r >= 0, "up_rung needs non-negative labels");
    auto key = std::make_tuple(is_e, r, a, b);
    auto hit = rung_cache_.find(key);
    if (hit != rung_cache_.end()) return hit->second;

    int a2 = is_e ? a + r : a - r;
    int b2 = is_e ? b - r : b + r;
    check_internal(a2 >= 0 && b2 >= 0, "up_rung target label negative");
    WordSpace src = space({a, b}), dst = space({a2, b2});
    Operator op = op_zero(src, dst);
    const auto& ba = basis(a);
    const auto& bb = basis(b);
    const auto& ba2 = basis(a2);
    const auto& bb2 = basis(b2);
    std::map<Monomial, long long> ia2, ib2;
    for (size_t i = 0; i < ba2.size(); ++i) ia2[ba2[i]] = (long long)i;
    for (size_t i = 0; i < bb2.size(); ++i) ib2[bb2[i]] = (long long)i;
    for (size_t i = 0; i < ba.size(); ++i)
        for (size_t j = 0; j < bb.size(); ++j) {
            ZWord w;
            for (int row : ba[i]) w.push_back({row, 1});
            for (int row : bb[j]) w.push_back({row, 2});
            for (const auto& [u, c] : apply_power(*this, w, 1, is_e, r)) {
                Monomial left, right;
                for (const ZEntry& z : u)
                    (z.col == 1 ? left : right).push_back(z.row);
                auto li = ia2.find(left);
                auto ri = ib2.find(right);
                check_internal(li != ia2.end() && ri != ib2.end(),
                               "straightened word is not admissible");
                op.add(li->second * dst.dims[1] + ri->second,
                       (long long)i * src.dims[1] + (long long)j, c);
            }
        }
    rung_cache_.emplace(key, op);
    return op;
}

// ------------------------------------------------------ structure matrices

Operator HoweCtx::coevL(int a) const {
    WordSpace dst = space({a, -a});
    Operator o = op_zero(space({}), dst);
    for (long long i = 0; i < dim(a); ++i) o.add(i * dim(a) + i, 0, Scalar::unit());
    return o;
}

Operator HoweCtx::coevR(int a) const {
    WordSpace dst = space({-a, a});
    Operator o = op_zero(space({}), dst);
    for (long long i = 0; i < dim(a); ++i)
        o.add(i * dim(a) + i, 0, phi(basis(a)[i]).inverse());
    return o;
}

Operator HoweCtx::evL(int a) const {
    Operator o = op_zero(space({-a, a}), space({}));
    for (long long i = 0; i < dim(a); ++i) o.add(0, i * dim(a) + i, Scalar::unit());
    return o;
}

Operator HoweCtx::evR(int a) const {
    Operator o = op_zero(space({a, -a}), space({}));
    for (long long i = 0; i < dim(a); ++i) o.add(0, i * dim(a) + i, phi(basis(a)[i]));
    return o;
}

const Operator& HoweCtx::wedge_projector(int a) const {
    auto hit = projector_cache_.find(a);
    if (hit != projector_cache_.end()) return hit->second;
    WordSpace ws = space(SpiderObject(a, 1));
    Operator p = op_zero(ws, ws);
    Antisymmetrizer e = antisymmetrizer(a);
    for (const auto& [w, c] : e.element.coeffs()) {
        Operator rw = op_identity(ws);
        auto word = reduced_word(w);
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            Operator slice = op_identity(space(SpiderObject(*it, 1)));
            slice = op_tensor(slice, rhat_);
            slice = op_tensor(slice, op_identity(space(SpiderObject(a - *it - 2, 1))));
            rw = op_mul(op_reshape(std::move(slice), ws, ws), rw);
        }
        p = op_add(p, op_scale(rw, c));
    }
    return projector_cache_.emplace(a, std::move(p)).first->second;
}

void HoweCtx::self_check() const {
    const Scalar qd = Scalar::monomial(-d, 0);
    WordSpace v = space({1});
    // circles
    Operator circ1 = op_mul(evR(1), coevL(1));
    Operator circ2 = op_mul(evL(1), coevR(1));
    Scalar dq = qint(QExponent{0, d});
    check_internal(op_mul(evR(1), coevL(1)) == op_scale(op_identity(space({})), dq),
                   "circle value mismatch");
    check_internal(circ2 == op_scale(op_identity(space({})), dq), "circle value mismatch");
    (void)circ1;
    // zig-zags
    Operator z1 = op_mul(op_tensor(evR(1), op_identity(v)),
                         op_tensor(op_identity(v), coevR(1)));
    Operator z2 = op_mul(op_tensor(op_identity(v), evL(1)),
                         op_tensor(coevL(1), op_identity(v)));
    WordSpace vd = space({-1});
    Operator z3 = op_mul(op_tensor(op_identity(vd), evR(1)),
                         op_tensor(coevR(1), op_identity(vd)));
    Operator z4 = op_mul(op_tensor(evL(1), op_identity(vd)),
                         op_tensor(op_identity(vd), coevL(1)));
    check_internal(op_reshape(z1, v, v) == op_identity(v), "zig-zag failed");
    check_internal(op_reshape(z2, v, v) == op_identity(v), "zig-zag failed");
    check_internal(op_reshape(z3, vd, vd) == op_identity(vd), "zig-zag failed");
    check_internal(op_reshape(z4, vd, vd) == op_identity(vd), "zig-zag failed");
    // curls: (id (x) evR)(rhat (x) id)(id (x) coevL) = q^{-d} id
    Operator curl_pos = op_mul(
        op_reshape(op_tensor(op_identity(v), evR(1)), space({1, 1, -1}), v),
        op_mul(op_tensor(rhat_, op_identity(vd)),
               op_reshape(op_tensor(op_identity(v), coevL(1)), v, space({1, 1, -1}))));
    check_internal(curl_pos == op_scale(op_identity(v), qd), "positive curl mismatch");
    Operator curl_neg = op_mul(
        op_reshape(op_tensor(op_identity(v), evR(1)), space({1, 1, -1}), v),
        op_mul(op_tensor(rhat_inv_, op_identity(vd)),
               op_reshape(op_tensor(op_identity(v), coevL(1)), v, space({1, 1, -1}))));
    check_internal(curl_neg == op_scale(op_identity(v), qd.inverse()), "negative curl mismatch");
    // rhat inverse really inverts
    check_internal(op_mul(rhat_, rhat_inv_) == op_identity(space({1, 1})),
                   "rhat inverse failed");
}

// ------------------------------------------------------------- the functor

namespace {

Operator pad_local(const HoweCtx& ctx, const SpiderObject& full, int offset,
                   const Operator& local) {
    SpiderObject pre(full.begin(), full.begin() + offset);
    SpiderObject post(full.begin() + offset + local.src.entries.size(), full.end());
    Operator o = op_tensor(op_tensor(op_identity(ctx.space(pre)), local),
                           op_identity(ctx.space(post)));
    return o;
}

SpiderObject splice(const SpiderObject& full, int offset, int erase_count,
                    const SpiderObject& insert) {
    SpiderObject out(full.begin(), full.begin() + offset);
    out.insert(out.end(), insert.begin(), insert.end());
    out.insert(out.end(), full.begin() + offset + erase_count, full.end());
    return out;
}

} // namespace

Operator apply_gen_op(const HoweCtx& ctx, const SpiderObject& src, const LadderGen& g) {
    const int pos = g.pos;
    switch (g.kind) {
    case GenKind::CupRL:
        return pad_local(ctx, src, pos, ctx.coevL(g.color));
    case GenKind::CupLR:
        return pad_local(ctx, src, pos, ctx.coevR(g.color));
    case GenKind::CapRL:
        return pad_local(ctx, src, pos, ctx.evR(g.color));
    case GenKind::CapLR:
        return pad_local(ctx, src, pos, ctx.evL(g.color));
    case GenKind::E:
    case GenKind::F: {
        bool is_e = g.kind == GenKind::E;
        int r = g.r;
        int a = std::abs(src[pos]), b = std::abs(src[pos + 1]);
        switch (g.pattern) {
        case Orient::UpUp:
            return pad_local(ctx, src, pos, ctx.up_rung(is_e, r, a, b));
        case Orient::DownDown: {
            // rotations of the up-up rungs
            Operator local = is_e ? op_rot180(ctx.up_rung(false, r, b + r, a - r))
                                  : op_rot180(ctx.up_rung(true, r, b - r, a + r));
            return pad_local(ctx, src, pos, local);
        }
        case Orient::UpDown: {
            if (is_e) {
                // cup coevL(r) in the middle, then absorbing rungs
                SpiderObject s1 = splice(src, pos + 1, 0, {r, -r});
                Operator A = pad_local(ctx, src, pos + 1, ctx.coevL(r));
                Operator B = pad_local(ctx, s1, pos, ctx.up_rung(true, r, a, r));
                SpiderObject s2 = splice(s1, pos, 2, {a + r, 0});
                Operator C = pad_local(ctx, s2, pos + 2,
                                       op_rot180(ctx.up_rung(false, r, b + r, 0)));
                SpiderObject s3 = splice(s2, pos + 2, 2, {0, -(b + r)});
                SpiderObject tgt = splice(src, pos, 2, {a + r, -(b + r)});
                return op_reshape(op_mul(C, op_mul(B, A)), ctx.space(src), ctx.space(tgt));
            }
            // extracting rungs, then cap evR(r) in the middle
            SpiderObject s1 = splice(src, pos + 1, 0, {0, 0});
            Operator A = op_reshape(op_identity(ctx.space(src)), ctx.space(src), ctx.space(s1));
            Operator B = pad_local(ctx, s1, pos, ctx.up_rung(false, r, a, 0));
            SpiderObject s2 = splice(s1, pos, 2, {a - r, r});
            Operator C = pad_local(ctx, s2, pos + 2,
                                   op_rot180(ctx.up_rung(true, r, b - r, r)));
            SpiderObject s3 = splice(s2, pos + 2, 2, {-r, -(b - r)});
            Operator D = pad_local(ctx, s3, pos + 1, ctx.evR(r));
            return op_mul(D, op_mul(C, op_mul(B, A)));
        }
        case Orient::DownUp: {
            if (is_e) {
                // extracting rungs, then cap evL(r) in the middle
                SpiderObject s1 = splice(src, pos + 1, 0, {0, 0});
                Operator A =
                    op_reshape(op_identity(ctx.space(src)), ctx.space(src), ctx.space(s1));
                Operator B = pad_local(ctx, s1, pos,
                                       op_rot180(ctx.up_rung(false, r, r, a - r)));
                SpiderObject s2 = splice(s1, pos, 2, {-(a - r), -r});
                Operator C = pad_local(ctx, s2, pos + 2, ctx.up_rung(true, r, 0, b));
                SpiderObject s3 = splice(s2, pos + 2, 2, {r, b - r});
                Operator D = pad_local(ctx, s3, pos + 1, ctx.evL(r));
                return op_mul(D, op_mul(C, op_mul(B, A)));
            }
            // cup coevR(r) in the middle, then absorbing rungs
            SpiderObject s1 = splice(src, pos + 1, 0, {-r, r});
            Operator A = pad_local(ctx, src, pos + 1, ctx.coevR(r));
            Operator B = pad_local(ctx, s1, pos,
                                   op_rot180(ctx.up_rung(true, r, 0, a + r)));
            SpiderObject s2 = splice(s1, pos, 2, {-(a + r), 0});
            Operator C = pad_local(ctx, s2, pos + 2, ctx.up_rung(false, r, r, b));
            SpiderObject s3 = splice(s2, pos + 2, 2, {0, b + r});
            SpiderObject tgt = splice(src, pos, 2, {-(a + r), b + r});
            return op_reshape(op_mul(C, op_mul(B, A)), ctx.space(src), ctx.space(tgt));
        }
        }
        throw internal_error("unreachable");
    }
    }
    throw internal_error("unreachable");
}

Operator apply_word_op(const HoweCtx& ctx, const LadderWord& w) {
    if (w.zero) return op_zero(ctx.space(w.source), ctx.space(w.target));
    SpiderObject cur = w.source;
    Operator state = op_identity(ctx.space(cur));
    for (const LadderGen& g : w.gens) {
        Operator step = apply_gen_op(ctx, cur, g);
        check_internal(apply_gen(cur, g), "word annihilated during functor application");
        state = op_mul(step, state);
    }
    return state;
}

Operator apply_morphism(const HoweCtx& ctx, const Morphism& m) {
    Operator total = op_zero(ctx.space(m.source()), ctx.space(m.target()));
    for (const auto& [gens, c] : m.terms()) {
        LadderWord w = make_word(m.source(), gens);
        Operator ow = apply_word_op(ctx, w);
        // the functor sets beta = d, i.e. Q = q^d, in all coefficients
        total = op_add(total, op_scale(op_reshape(std::move(ow), total.src, total.dst),
                                       c.specialize(ctx.d)));
    }
    return total;
}

// --------------------------------------------------------------- RT values

namespace {

Operator rt_walk(const HoweCtx& ctx, const CabledDiagram& cd) {
    const TangleDiagram& t = cd.diagram;
    SpiderObject cur;
    for (const auto& e : t.bottom) cur.push_back(e.up ? 1 : -1);
    Operator state = op_identity(ctx.space(cur));
    auto project_at = [&](int gap) {
        for (const auto& b : cd.bundles) {
            if (b.gap != gap || b.width < 2) continue;
            for (int i = 0; i < b.width; ++i)
                check_internal(cur[b.offset + i] == 1, "bundle marker is not an up block");
            Operator p = pad_local(ctx, cur, b.offset, ctx.wedge_projector(b.width));
            state = op_mul(op_reshape(std::move(p), ctx.space(cur), ctx.space(cur)), state);
        }
    };
    for (size_t si = 0; si <= t.slices.size(); ++si) {
        project_at((int)si);
        if (si == t.slices.size()) break;
        const Slice& s = t.slices[si];
        switch (s.kind) {
        case SliceKind::PosCross:
        case SliceKind::NegCross: {
            if (cur[s.pos] != 1 || cur[s.pos + 1] != 1)
                throw eval_error("rt_eval: crossings must join upward strands");
            Operator x = pad_local(ctx, cur, s.pos,
                                   s.kind == SliceKind::PosCross ? ctx.rhat()
                                                                 : ctx.rhat_inv());
            state = op_mul(op_reshape(std::move(x), ctx.space(cur), ctx.space(cur)), state);
            break;
        }
        case SliceKind::Cup: {
            Operator c = pad_local(ctx, cur, s.pos,
                                   s.left_up ? ctx.coevL(1) : ctx.coevR(1));
            SpiderObject nxt = splice(cur, s.pos, 0, {s.left_up ? 1 : -1, s.left_up ? -1 : 1});
            state = op_mul(op_reshape(std::move(c), ctx.space(cur), ctx.space(nxt)), state);
            cur = std::move(nxt);
            break;
        }
        case SliceKind::Cap: {
            Operator c = pad_local(ctx, cur, s.pos, s.left_up ? ctx.evR(1) : ctx.evL(1));
            SpiderObject nxt = splice(cur, s.pos, 2, {});
            state = op_mul(op_reshape(std::move(c), ctx.space(cur), ctx.space(nxt)), state);
            cur = std::move(nxt);
            break;
        }
        }
    }
    return state;
}

} // namespace

Scalar rt_eval(const HoweCtx& ctx, const TangleDiagram& t) {
    if (!t.closed()) throw eval_error("rt_eval: diagram is not closed");
    Operator state = rt_walk(ctx, cable(t));
    if (state.cols.count(0) && state.cols.at(0).count(0)) return state.cols.at(0).at(0);
    return Scalar::zero();
}

Operator rt_eval_open(const HoweCtx& ctx, const TangleDiagram& t) {
    for (const auto& e : t.bottom)
        if (!e.up) throw eval_error("rt_eval_open: boundary must point up");
    return rt_walk(ctx, cable(t));
}

Scalar rt_reduced(const HoweCtx& ctx, const TangleDiagram& open_tangle) {
    int a = open_tangle.bottom.at(0).color;
    Operator mat = rt_eval_open(ctx, open_tangle);
    Operator p = a == 1 ? op_identity(ctx.space({1})) : ctx.wedge_projector(a);
    // the operator must be lambda * projector; extract from a unit entry
    for (const auto& [c, col] : p.cols)
        for (const auto& [r, v] : col) {
            Scalar lam;
            try {
                Scalar vin = v.inverse();
                Scalar mv = Scalar::zero();
                if (mat.cols.count(c) && mat.cols.at(c).count(r)) mv = mat.cols.at(c).at(r);
                lam = mv * vin;
            } catch (const internal_error&) {
                continue;
            }
            check_internal(mat == op_scale(p, lam),
                           "cut evaluation is not proportional to the projector");
            return lam;
        }
    throw eval_error("rt_reduced: could not extract the scalar");
}

// --------------------------------------------------------------- SkewModel

SkewModel::SkewModel(const HoweCtx& ctx, int k, int N) : ctx_(&ctx), k_(k), N_(N) {
    ZWord cur;
    auto rec = [&](auto&& self, ZEntry min_e, int remaining) -> void {
        if (remaining == 0) {
            basis_.push_back(cur);
            return;
        }
        for (int c = min_e.col; c <= k; ++c)
            for (int r = (c == min_e.col ? min_e.row : 1); r <= ctx.dimV(); ++r) {
                ZEntry e{r, c};
                if (!cur.empty() && cur.back() == e && !ctx.odd_row(r)) continue;
                cur.push_back(e);
                ZEntry nxt = ctx.odd_row(r) ? e : ZEntry{r + 1, c};
                if (nxt.row > ctx.dimV()) nxt = {1, c + 1};
                self(self, nxt, remaining - 1);
                cur.pop_back();
            }
    };
    rec(rec, ZEntry{1, 1}, N);
    for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = (long long)i;
}

long long SkewModel::index(const ZWord& w) const {
    auto it = index_.find(w);
    check_internal(it != index_.end(), "word not in basis");
    return it->second;
}

std::vector<long long> SkewModel::col_weight(const ZWord& w) const {
    std::vector<long long> a(k_, 0);
    for (const ZEntry& e : w) ++a[e.col - 1];
    return a;
}

SkewModel::Mat SkewModel::act_E(int i) const {
    Mat mat;
    for (size_t c = 0; c < basis_.size(); ++c)
        for (const auto& [u, v] : leibniz(*ctx_, basis_[c], i, true))
            mat[(long long)c][index(u)] = v;
    return mat;
}

SkewModel::Mat SkewModel::act_F(int i) const {
    Mat mat;
    for (size_t c = 0; c < basis_.size(); ++c)
        for (const auto& [u, v] : leibniz(*ctx_, basis_[c], i, false))
            mat[(long long)c][index(u)] = v;
    return mat;
}

SkewModel::Mat SkewModel::act_weight(const std::vector<long long>& h) const {
    Mat mat;
    for (size_t c = 0; c < basis_.size(); ++c) {
        auto a = col_weight(basis_[c]);
        long long e = 0;
        for (int j = 0; j < k_; ++j) e += h[j] * a[j];
        mat[(long long)c][(long long)c] = Scalar::monomial(e, 0);
    }
    return mat;
}

} // namespace spiderq
