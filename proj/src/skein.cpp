#include "spiderq/skein.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace spiderq {

std::optional<HeckeElement> SkeinMemo::get(const std::string& key) {
    std::lock_guard lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

void SkeinMemo::put(const std::string& key, const HeckeElement& value) {
    std::lock_guard lock(mu_);
    map_[key] = value;
}

size_t SkeinMemo::size() {
    std::lock_guard lock(mu_);
    return map_.size();
}

namespace {

// canonical encoding: crossings renumbered by first appearance in the
// traversal (open strands first, then closed components)
std::string encode(const GaussDiagram& g) {
    std::vector<int> renum(g.sign.size(), -1);
    int next = 0;
    auto see = [&](int x) {
        if (renum[x] < 0) renum[x] = next++;
        return renum[x];
    };
    std::ostringstream os;
    for (size_t s = 0; s < g.open_strands.size(); ++s) {
        os << "O" << g.open_top[s] << ":";
        for (const Passage& p : g.open_strands[s])
            os << see(p.crossing) << (p.over ? '^' : '_');
        os << ";";
    }
    for (const auto& comp : g.closed_comps) {
        os << "C:";
        for (const Passage& p : comp) os << see(p.crossing) << (p.over ? '^' : '_');
        os << ";";
    }
    os << "S:";
    std::vector<int> signs(next, 0);
    for (size_t x = 0; x < g.sign.size(); ++x)
        if (renum[x] >= 0) signs[renum[x]] = g.sign[x];
    for (int s : signs) os << (s > 0 ? '+' : '-');
    return os.str();
}

struct Occurrence {
    bool open;  // open strand vs closed comp
    int comp;   // index within its list
    int index;  // passage index
};

// the two passages of crossing x, in traversal order
std::pair<Occurrence, Occurrence> find_passages(const GaussDiagram& g, int x) {
    std::vector<Occurrence> found;
    for (size_t s = 0; s < g.open_strands.size(); ++s)
        for (size_t i = 0; i < g.open_strands[s].size(); ++i)
            if (g.open_strands[s][i].crossing == x) found.push_back({true, (int)s, (int)i});
    for (size_t c = 0; c < g.closed_comps.size(); ++c)
        for (size_t i = 0; i < g.closed_comps[c].size(); ++i)
            if (g.closed_comps[c][i].crossing == x) found.push_back({false, (int)c, (int)i});
    check_internal(found.size() == 2, "crossing does not have two passages");
    return {found[0], found[1]};
}

GaussDiagram switch_crossing(GaussDiagram g, int x) {
    for (auto& s : g.open_strands)
        for (auto& p : s)
            if (p.crossing == x) p.over = !p.over;
    for (auto& c : g.closed_comps)
        for (auto& p : c)
            if (p.crossing == x) p.over = !p.over;
    g.sign[x] = -g.sign[x];
    return g;
}

void drop_crossing(GaussDiagram& g, int x) {
    g.sign.erase(g.sign.begin() + x);
    auto fix = [&](std::vector<Passage>& ps) {
        for (auto& p : ps)
            if (p.crossing > x) --p.crossing;
    };
    for (auto& s : g.open_strands) fix(s);
    for (auto& c : g.closed_comps) fix(c);
}

std::vector<Passage> slice_cyclic(const std::vector<Passage>& v, int from, int to) {
    // entries strictly between positions from and to, cyclically
    std::vector<Passage> out;
    int n = (int)v.size();
    for (int k = (from + 1) % n; k != to; k = (k + 1) % n) out.push_back(v[k]);
    return out;
}

GaussDiagram smooth_crossing(GaussDiagram g, int x) {
    auto [p1, p2] = find_passages(g, x);
    if (p1.open && p2.open && p1.comp == p2.comp) {
        auto& s = g.open_strands[p1.comp];
        int i = std::min(p1.index, p2.index), j = std::max(p1.index, p2.index);
        std::vector<Passage> circle(s.begin() + i + 1, s.begin() + j);
        std::vector<Passage> rest(s.begin(), s.begin() + i);
        rest.insert(rest.end(), s.begin() + j + 1, s.end());
        s = std::move(rest);
        g.closed_comps.push_back(std::move(circle));
    } else if (p1.open && p2.open) {
        auto& s = g.open_strands[p1.comp];
        auto& t = g.open_strands[p2.comp];
        std::vector<Passage> s2(s.begin(), s.begin() + p1.index);
        s2.insert(s2.end(), t.begin() + p2.index + 1, t.end());
        std::vector<Passage> t2(t.begin(), t.begin() + p2.index);
        t2.insert(t2.end(), s.begin() + p1.index + 1, s.end());
        s = std::move(s2);
        t = std::move(t2);
        std::swap(g.open_top[p1.comp], g.open_top[p2.comp]);
    } else if (p1.open != p2.open) {
        const Occurrence& po = p1.open ? p1 : p2;
        const Occurrence& pc = p1.open ? p2 : p1;
        auto& s = g.open_strands[po.comp];
        const auto& c = g.closed_comps[pc.comp];
        std::vector<Passage> s2(s.begin(), s.begin() + po.index);
        int n = (int)c.size();
        for (int k = (pc.index + 1) % std::max(n, 1); n > 0 && k != pc.index; k = (k + 1) % n)
            s2.push_back(c[k]);
        s2.insert(s2.end(), s.begin() + po.index + 1, s.end());
        s = std::move(s2);
        g.closed_comps.erase(g.closed_comps.begin() + pc.comp);
    } else if (p1.comp == p2.comp) {
        const auto& c = g.closed_comps[p1.comp];
        std::vector<Passage> a = slice_cyclic(c, p1.index, p2.index);
        std::vector<Passage> b = slice_cyclic(c, p2.index, p1.index);
        g.closed_comps.erase(g.closed_comps.begin() + p1.comp);
        g.closed_comps.push_back(std::move(a));
        g.closed_comps.push_back(std::move(b));
    } else {
        auto& a = g.closed_comps[p1.comp];
        const auto& b = g.closed_comps[p2.comp];
        std::vector<Passage> merged(a.begin(), a.begin() + p1.index);
        int n = (int)b.size();
        for (int k = (p2.index + 1) % std::max(n, 1); n > 0 && k != p2.index; k = (k + 1) % n)
            merged.push_back(b[k]);
        merged.insert(merged.end(), a.begin() + p1.index + 1, a.end());
        a = std::move(merged);
        g.closed_comps.erase(g.closed_comps.begin() + p2.comp);
    }
    drop_crossing(g, x);
    return g;
}

// crossings whose first traversal encounter is on the under strand
std::vector<int> bad_crossings(const GaussDiagram& g) {
    std::vector<char> seen(g.sign.size(), 0);
    std::vector<int> bad;
    auto scan = [&](const std::vector<Passage>& ps) {
        for (const Passage& p : ps) {
            if (seen[p.crossing]) continue;
            seen[p.crossing] = 1;
            if (!p.over) bad.push_back(p.crossing);
        }
    };
    for (const auto& s : g.open_strands) scan(s);
    for (const auto& c : g.closed_comps) scan(c);
    return bad;
}

HeckeElement descending_value(const GaussDiagram& g) {
    const int rank = (int)g.open_strands.size();
    std::vector<int> owner(g.sign.size(), -2);
    long long total_self = 0;
    int circles = (int)g.closed_comps.size();
    auto mark = [&](const std::vector<Passage>& ps, int id) {
        for (const Passage& p : ps) {
            if (owner[p.crossing] == id) total_self += g.sign[p.crossing];
            owner[p.crossing] = id;
        }
    };
    for (int s = 0; s < rank; ++s) mark(g.open_strands[s], s);
    for (size_t c = 0; c < g.closed_comps.size(); ++c)
        mark(g.closed_comps[c], rank + (int)c);

    Scalar coeff = qpow({-total_self, 0}); // q^{-beta w} per curl
    for (int i = 0; i < circles; ++i) coeff *= qint(QExponent{1, 0});

    Perm w(rank);
    for (int s = 0; s < rank; ++s) w[s] = g.open_top[s];
    return HeckeElement::basis(rank, w, coeff);
}

HeckeElement eval_rec(const GaussDiagram& g, SkeinMemo* memo, SkeinOrder order) {
    std::string key = encode(g);
    if (auto hit = memo->get(key)) return *hit;
    auto bad = bad_crossings(g);
    HeckeElement result(0);
    if (bad.empty()) {
        result = descending_value(g);
    } else {
        int x = bad.front();
        if (order == SkeinOrder::LastBad) x = bad.back();
        else if (order == SkeinOrder::MiddleBad) x = bad[bad.size() / 2];
        int sign = g.sign[x];
        const Scalar z = Scalar::monomial(-1, 0) - Scalar::monomial(1, 0); // q^-1 - q
        HeckeElement a = eval_rec(switch_crossing(g, x), memo, order);
        HeckeElement b = eval_rec(smooth_crossing(g, x), memo, order);
        result = a + b * (sign > 0 ? z : -z);
    }
    memo->put(key, result);
    return result;
}

} // namespace

HeckeElement eval_gauss(const GaussDiagram& g, SkeinMemo* memo, SkeinOrder order) {
    if (memo) return eval_rec(g, memo, order);
    SkeinMemo local;
    return eval_rec(g, &local, order);
}

Scalar eval_closed(const TangleDiagram& t, FramingMode mode, SkeinMemo* memo, SkeinOrder order) {
    if (!t.closed()) throw eval_error("eval_closed: diagram is not closed");
    for (int c : t.comp_color)
        if (c != 1) throw eval_error("eval_closed: colors must all be 1");
    HeckeElement h = eval_gauss(to_gauss(t), memo, order);
    Scalar v = h.coeff(Perm{});
    if (mode == FramingMode::Normalized) {
        long long w = 0;
        for (long long wc : t.comp_writhe) w += wc;
        v *= qpow({w, 0});
    }
    return v;
}

Scalar eval_hecke_insertion(const TangleDiagram& t,
                            const std::vector<std::pair<BundleMarker, HeckeElement>>& insertions,
                            SkeinMemo* memo, int threads,
                            const std::vector<int>& extra_word,
                            const std::vector<SliceKind>& extra_kinds) {
    if (!t.closed()) throw eval_error("eval_hecke_insertion: diagram is not closed");
    for (const auto& [m, h] : insertions)
        if (h.rank() != m.width)
            throw eval_error("eval_hecke_insertion: rank does not match bundle width");

    struct Term {
        Scalar coeff = Scalar::unit();
        std::vector<std::tuple<int, int, std::vector<int>>> braids; // gap, offset, word
    };
    std::vector<Term> terms{Term{}};
    for (const auto& [m, h] : insertions) {
        std::vector<Term> next;
        for (const auto& [w, c] : h.coeffs()) {
            auto word = reduced_word(w);
            for (const Term& old : terms) {
                Term nt = old;
                nt.coeff *= c;
                nt.braids.push_back({m.gap, m.offset, word});
                next.push_back(std::move(nt));
            }
        }
        terms = std::move(next);
    }
    SkeinMemo local;
    SkeinMemo* shared = memo ? memo : &local;

    auto eval_term = [&](const Term& term) {
        auto braids = term.braids;
        // splice at descending gaps so earlier indices stay valid
        std::stable_sort(braids.begin(), braids.end(), [](const auto& a, const auto& b) {
            return std::get<0>(a) > std::get<0>(b);
        });
        TangleDiagram d = t;
        for (const auto& [gap, offset, word] : braids) {
            std::vector<int> positions = word;
            std::vector<SliceKind> kinds(word.size(), SliceKind::PosCross);
            if (!extra_word.empty() && !term.braids.empty() &&
                gap == std::get<0>(term.braids.front()) &&
                offset == std::get<1>(term.braids.front())) {
                positions.insert(positions.end(), extra_word.begin(), extra_word.end());
                kinds.insert(kinds.end(), extra_kinds.begin(), extra_kinds.end());
            }
            d = insert_braid(d, gap, offset, positions, kinds);
        }
        return term.coeff * eval_closed(d, FramingMode::Framed, shared);
    };

    Scalar total;
    if (threads > 1 && terms.size() > 1) {
        std::vector<std::future<Scalar>> futs;
        for (const Term& term : terms)
            futs.push_back(std::async(std::launch::async, eval_term, std::cref(term)));
        for (auto& f : futs) total += f.get();
    } else {
        for (const Term& term : terms) total += eval_term(term);
    }
    return total;
}

} // namespace spiderq
