#include "spiderq/tangle.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <numeric>
#include <sstream>

namespace spiderq {

namespace {

// ------------------------------------------------------------ sweep graph
//
// Nodes are slice events plus boundary anchors; edges are the vertical arcs
// between them.  Ports: crossing 0=BL 1=BR 2=TL 3=TR (strand A runs 0-3,
// strand B runs 1-2); cup/cap have ports 0,1.

struct Node {
    enum Type { Crossing, Cup, Cap, Bottom, Top } type;
    SliceKind kind = SliceKind::PosCross; // crossings
    int sign = 0;                         // crossings
    int boundary_pos = -1;                // bottom/top anchors
};

struct Edge {
    int lo_node = -1, lo_port = -1;
    int hi_node = -1, hi_port = -1;
    bool up = true; // strand flows lo -> hi
    int color = 1;
};

struct Graph {
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> words; // edge id per position, per gap
    std::vector<int> crossing_nodes;     // node ids in slice order
    std::vector<std::array<int, 4>> port_edges_; // per node

    int port_edge(int node, int port) const {
        int e = port_edges_[node][port];
        check_internal(e >= 0, "dangling port");
        return e;
    }
    void set_port(int node, int port, int edge) { port_edges_[node][port] = edge; }
    int add_node(Node n) {
        nodes.push_back(n);
        port_edges_.push_back({-1, -1, -1, -1});
        return (int)nodes.size() - 1;
    }
};

int cross_z(std::pair<int, int> a, std::pair<int, int> b) {
    return a.first * b.second - a.second * b.first;
}

Graph build_graph(const TangleDiagram& t) {
    Graph g;
    std::vector<int> cur; // dangling edge ids per position
    auto new_edge = [&](int lo_node, int lo_port, bool up, int color) {
        g.edges.push_back({lo_node, lo_port, -1, -1, up, color});
        g.set_port(lo_node, lo_port, (int)g.edges.size() - 1);
        return (int)g.edges.size() - 1;
    };
    auto attach = [&](int edge, int node, int port) {
        g.edges[edge].hi_node = node;
        g.edges[edge].hi_port = port;
        g.set_port(node, port, edge);
    };
    for (size_t p = 0; p < t.bottom.size(); ++p) {
        int n = g.add_node({Node::Bottom, SliceKind::PosCross, 0, (int)p});
        cur.push_back(new_edge(n, 0, t.bottom[p].up, t.bottom[p].color));
    }
    g.words.push_back(cur);
    for (const Slice& s : t.slices) {
        switch (s.kind) {
        case SliceKind::PosCross:
        case SliceKind::NegCross: {
            if (s.pos < 0 || s.pos + 1 >= (int)cur.size())
                throw eval_error("crossing position out of range");
            const Edge ea = g.edges[cur[s.pos]];     // strand A enters BL
            const Edge eb = g.edges[cur[s.pos + 1]]; // strand B enters BR
            // geometric sign from the flow vectors of the over/under arcs
            std::pair<int, int> va = ea.up ? std::pair{1, 1} : std::pair{-1, -1};
            std::pair<int, int> vb = eb.up ? std::pair{-1, 1} : std::pair{1, -1};
            bool a_over = (s.kind == SliceKind::PosCross);
            int sg = (a_over ? cross_z(va, vb) : cross_z(vb, va)) > 0 ? 1 : -1;
            int n = g.add_node({Node::Crossing, s.kind, sg, -1});
            g.crossing_nodes.push_back(n);
            attach(cur[s.pos], n, 0);
            attach(cur[s.pos + 1], n, 1);
            int topA = new_edge(n, 3, ea.up, ea.color); // A exits TR
            int topB = new_edge(n, 2, eb.up, eb.color); // B exits TL
            cur[s.pos] = topB;
            cur[s.pos + 1] = topA;
            break;
        }
        case SliceKind::Cup: {
            if (s.pos < 0 || s.pos > (int)cur.size())
                throw eval_error("cup position out of range");
            int n = g.add_node({Node::Cup, s.kind, 0, -1});
            int left = new_edge(n, 0, s.left_up, s.color);
            int right = new_edge(n, 1, !s.left_up, s.color);
            cur.insert(cur.begin() + s.pos, {left, right});
            break;
        }
        case SliceKind::Cap: {
            if (s.pos < 0 || s.pos + 1 >= (int)cur.size())
                throw eval_error("cap position out of range");
            const Edge el = g.edges[cur[s.pos]];
            const Edge er = g.edges[cur[s.pos + 1]];
            if (el.color != er.color)
                throw eval_error("cap joins strands of different colors");
            if (el.up != s.left_up || er.up == s.left_up)
                throw eval_error("cap orientation mismatch");
            int n = g.add_node({Node::Cap, s.kind, 0, -1});
            attach(cur[s.pos], n, 0);
            attach(cur[s.pos + 1], n, 1);
            cur.erase(cur.begin() + s.pos, cur.begin() + s.pos + 2);
            break;
        }
        }
        g.words.push_back(cur);
    }
    if (cur.size() != t.top.size()) throw eval_error("top boundary size mismatch");
    for (size_t p = 0; p < cur.size(); ++p) {
        const Edge& e = g.edges[cur[p]];
        if (e.color != t.top[p].color || e.up != t.top[p].up)
            throw eval_error("top boundary mismatch");
        int n = g.add_node({Node::Top, SliceKind::PosCross, 0, (int)p});
        attach(cur[p], n, 0);
    }
    return g;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// internal routing inside a node: entering port -> leaving port
int route(const Node& n, int port) {
    if (n.type == Node::Crossing) return std::array<int, 4>{3, 2, 1, 0}[port];
    return 1 - port; // cup/cap
}

struct Walk {
    std::vector<Passage> passages;
    int end_node = -1; // boundary node reached (open strands)
};

// follow the strand through edge e0 moving with the flow
Walk walk_from(const Graph& g, int e0, std::vector<char>& visited,
               const std::map<int, int>& crossing_index) {
    Walk w;
    int e = e0;
    while (true) {
        if (visited[e]) break;
        visited[e] = 1;
        const Edge& ed = g.edges[e];
        int n = ed.up ? ed.hi_node : ed.lo_node;
        int p = ed.up ? ed.hi_port : ed.lo_port;
        const Node& node = g.nodes[n];
        if (node.type == Node::Top || node.type == Node::Bottom) {
            w.end_node = n;
            break;
        }
        if (node.type == Node::Crossing) {
            bool arcA = (p == 0 || p == 3);
            bool over = arcA == (node.kind == SliceKind::PosCross);
            w.passages.push_back({crossing_index.at(n), over});
        }
        int p2 = route(node, p);
        int e2 = g.port_edge(n, p2);
        const Edge& ed2 = g.edges[e2];
        bool leaving_ok = (ed2.lo_node == n && ed2.lo_port == p2) ? ed2.up : !ed2.up;
        check_internal(leaving_ok, "orientation inconsistency along strand");
        e = e2;
        if (e == e0) break;
    }
    return w;
}

} // namespace

TangleDiagram make_diagram(BoundaryWord bottom, std::vector<Slice> slices) {
    TangleDiagram t;
    t.bottom = std::move(bottom);
    t.slices = std::move(slices);
    // compute the top word by a dry sweep
    {
        BoundaryWord w = t.bottom;
        for (const Slice& s : t.slices) {
            switch (s.kind) {
            case SliceKind::PosCross:
            case SliceKind::NegCross:
                if (s.pos < 0 || s.pos + 1 >= (int)w.size())
                    throw eval_error("crossing position out of range");
                std::swap(w[s.pos], w[s.pos + 1]);
                break;
            case SliceKind::Cup:
                if (s.pos < 0 || s.pos > (int)w.size())
                    throw eval_error("cup position out of range");
                w.insert(w.begin() + s.pos,
                         {{s.color, s.left_up}, {s.color, !s.left_up}});
                break;
            case SliceKind::Cap:
                if (s.pos < 0 || s.pos + 1 >= (int)w.size())
                    throw eval_error("cap position out of range");
                w.erase(w.begin() + s.pos, w.begin() + s.pos + 2);
                break;
            }
        }
        t.top = w;
    }
    Graph g = build_graph(t);
    t.n_crossings = (int)g.crossing_nodes.size();

    UnionFind uf((int)g.edges.size());
    for (size_t n = 0; n < g.nodes.size(); ++n) {
        const Node& node = g.nodes[n];
        if (node.type == Node::Crossing) {
            uf.unite(g.port_edge((int)n, 0), g.port_edge((int)n, 3));
            uf.unite(g.port_edge((int)n, 1), g.port_edge((int)n, 2));
        } else if (node.type == Node::Cup || node.type == Node::Cap) {
            uf.unite(g.port_edge((int)n, 0), g.port_edge((int)n, 1));
        }
    }
    // components in sweep-discovery order; first up-arc per component
    std::map<int, int> comp_of_root;
    for (size_t gap = 0; gap < g.words.size(); ++gap) {
        for (size_t p = 0; p < g.words[gap].size(); ++p) {
            int e = g.words[gap][p];
            int r = uf.find(e);
            if (!comp_of_root.count(r)) {
                comp_of_root[r] = (int)comp_of_root.size();
                t.comp_color.push_back(g.edges[e].color);
                t.comp_marker.push_back({-1, -1});
            }
            int c = comp_of_root[r];
            if (t.comp_marker[c].gap < 0 && g.edges[e].up)
                t.comp_marker[c] = {(int)gap, (int)p};
        }
    }
    t.n_components = (int)comp_of_root.size();
    // self-writhe: both passages of a crossing on the same component
    t.comp_writhe.assign(t.n_components, 0);
    for (int cn : g.crossing_nodes) {
        int ea = g.port_edge(cn, 0);
        int eb = g.port_edge(cn, 1);
        if (uf.find(ea) == uf.find(eb))
            t.comp_writhe[comp_of_root[uf.find(ea)]] += g.nodes[cn].sign;
    }
    return t;
}

TangleDiagram parse_braid(const std::vector<int>& word, const std::vector<int>& colors) {
    int n = (int)colors.size();
    if (n < 1) throw parse_error("braid needs at least one strand");
    for (int c : colors)
        if (c < 1) throw parse_error("colors must be positive");
    BoundaryWord bottom;
    for (int c : colors) bottom.push_back({c, true});
    std::vector<Slice> slices;
    for (int w : word) {
        int i = std::abs(w);
        if (i < 1 || i > n - 1) throw parse_error("braid generator out of range");
        slices.push_back({w > 0 ? SliceKind::PosCross : SliceKind::NegCross, i - 1, 1, true});
    }
    TangleDiagram t = make_diagram(std::move(bottom), std::move(slices));
    t.braid = BraidData{n, word, colors};
    return t;
}

TangleDiagram close(const TangleDiagram& t) {
    if (t.bottom != t.top) throw eval_error("close: bottom and top boundaries differ");
    int n = (int)t.bottom.size();
    std::vector<Slice> slices;
    for (int j = 0; j < n; ++j)
        slices.push_back({SliceKind::Cup, j, t.bottom[j].color, t.bottom[j].up});
    slices.insert(slices.end(), t.slices.begin(), t.slices.end());
    for (int j = n - 1; j >= 0; --j)
        slices.push_back({SliceKind::Cap, j, t.bottom[j].color, t.bottom[j].up});
    TangleDiagram c = make_diagram({}, std::move(slices));
    c.braid = t.braid;
    return c;
}

GaussDiagram to_gauss(const TangleDiagram& t) {
    for (const auto& e : t.bottom)
        if (!e.up) throw eval_error("to_gauss: only all-up boundaries supported");
    for (const auto& e : t.top)
        if (!e.up) throw eval_error("to_gauss: only all-up boundaries supported");
    Graph g = build_graph(t);
    GaussDiagram gd;
    std::map<int, int> crossing_index;
    for (size_t i = 0; i < g.crossing_nodes.size(); ++i) {
        crossing_index[g.crossing_nodes[i]] = (int)i;
        gd.sign.push_back(g.nodes[g.crossing_nodes[i]].sign);
    }
    std::vector<char> visited(g.edges.size(), 0);
    // open strands from bottom anchors, in position order
    std::vector<std::pair<int, int>> bottoms; // (pos, edge)
    for (size_t n = 0; n < g.nodes.size(); ++n)
        if (g.nodes[n].type == Node::Bottom)
            bottoms.push_back({g.nodes[n].boundary_pos, g.port_edge((int)n, 0)});
    std::sort(bottoms.begin(), bottoms.end());
    for (auto [pos, e] : bottoms) {
        (void)pos;
        Walk w = walk_from(g, e, visited, crossing_index);
        check_internal(w.end_node >= 0 && g.nodes[w.end_node].type == Node::Top,
                       "open strand did not reach the top boundary");
        gd.open_strands.push_back(std::move(w.passages));
        gd.open_top.push_back(g.nodes[w.end_node].boundary_pos);
    }
    // closed components, sweep order
    for (size_t gap = 0; gap < g.words.size(); ++gap)
        for (int e : g.words[gap])
            if (!visited[e]) {
                Walk w = walk_from(g, e, visited, crossing_index);
                check_internal(w.end_node < 0, "closed walk hit a boundary");
                gd.closed_comps.push_back(std::move(w.passages));
            }
    return gd;
}

// ------------------------------------------------------------------ cable

CabledDiagram cable(const TangleDiagram& t) {
    CabledDiagram out;
    out.orig_color = t.comp_color;
    out.orig_writhe = t.comp_writhe;

    BoundaryWord word = t.bottom; // uncabled word during the sweep
    auto offset_of = [&](int pos) {
        int off = 0;
        for (int p = 0; p < pos; ++p) off += word[p].color;
        return off;
    };
    BoundaryWord cb;
    for (const auto& e : t.bottom)
        for (int i = 0; i < e.color; ++i) cb.push_back({1, e.up});

    std::vector<Slice> slices;
    std::vector<int> gap_map(t.slices.size() + 1, 0); // original gap -> cabled gap
    for (size_t si = 0; si < t.slices.size(); ++si) {
        const Slice& s = t.slices[si];
        int base = offset_of(s.pos);
        switch (s.kind) {
        case SliceKind::PosCross:
        case SliceKind::NegCross: {
            int x = word[s.pos].color, y = word[s.pos + 1].color;
            for (int i = x - 1; i >= 0; --i)
                for (int j = 0; j < y; ++j)
                    slices.push_back({s.kind, base + i + j, 1, true});
            std::swap(word[s.pos], word[s.pos + 1]);
            break;
        }
        case SliceKind::Cup: {
            for (int i = 0; i < s.color; ++i)
                slices.push_back({SliceKind::Cup, base + i, 1, s.left_up});
            word.insert(word.begin() + s.pos,
                        {{s.color, s.left_up}, {s.color, !s.left_up}});
            break;
        }
        case SliceKind::Cap: {
            for (int i = 0; i < s.color; ++i)
                slices.push_back({SliceKind::Cap, base + (s.color - 1 - i), 1, s.left_up});
            word.erase(word.begin() + s.pos, word.begin() + s.pos + 2);
            break;
        }
        }
        gap_map[si + 1] = (int)slices.size();
    }
    out.diagram = make_diagram(std::move(cb), std::move(slices));
    // bundle markers from the original component markers
    for (int c = 0; c < t.n_components; ++c) {
        ArcRef m = t.comp_marker[c];
        if (m.gap < 0) throw eval_error("component has no up-arc to anchor a bundle");
        BoundaryWord w = t.bottom;
        for (int si = 0; si < m.gap; ++si) {
            const Slice& s = t.slices[si];
            if (s.kind == SliceKind::Cup)
                w.insert(w.begin() + s.pos, {{s.color, s.left_up}, {s.color, !s.left_up}});
            else if (s.kind == SliceKind::Cap)
                w.erase(w.begin() + s.pos, w.begin() + s.pos + 2);
            else
                std::swap(w[s.pos], w[s.pos + 1]);
        }
        int off = 0;
        for (int p = 0; p < m.pos; ++p) off += w[p].color;
        out.bundles.push_back({gap_map[m.gap], off, t.comp_color[c]});
    }
    return out;
}

TangleDiagram insert_braid(const TangleDiagram& t, int gap, int offset,
                           const std::vector<int>& positions,
                           const std::vector<SliceKind>& kinds) {
    check_internal(positions.size() == kinds.size(), "insert_braid size mismatch");
    check_internal(gap >= 0 && gap <= (int)t.slices.size(), "insert_braid bad gap");
    std::vector<Slice> slices(t.slices.begin(), t.slices.begin() + gap);
    for (size_t i = 0; i < positions.size(); ++i)
        slices.push_back({kinds[i], offset + positions[i], 1, true});
    slices.insert(slices.end(), t.slices.begin() + gap, t.slices.end());
    return make_diagram(t.bottom, std::move(slices));
}

// -------------------------------------------------------------------- cut

namespace {

Perm braid_permutation(int strands, const std::vector<int>& word) {
    std::vector<int> p(strands);
    std::iota(p.begin(), p.end(), 0);
    // p[j] = final position of the strand starting at j
    for (int w : word) {
        int i = std::abs(w) - 1;
        for (auto& x : p) {
            if (x == i) x = i + 1;
            else if (x == i + 1) x = i;
        }
    }
    return p;
}

std::vector<int> strand_cycle_id(const BraidData& b) {
    Perm p = braid_permutation(b.strands, b.word);
    std::vector<int> cyc(b.strands, -1);
    int next = 0;
    for (int s = 0; s < b.strands; ++s) {
        if (cyc[s] >= 0) continue;
        int id = next++;
        int j = s;
        while (cyc[j] < 0) {
            cyc[j] = id;
            j = p[j];
        }
    }
    return cyc;
}

} // namespace

TangleDiagram cut_strand_at(const TangleDiagram& t, int rotation, int strand) {
    if (!t.closed()) throw eval_error("cut_strand needs a closed diagram");
    if (!t.braid) throw eval_error("cut_strand needs braid provenance");
    const BraidData& b = *t.braid;
    int n = b.strands;
    int len = (int)b.word.size();
    rotation = len == 0 ? 0 : ((rotation % len) + len) % len;
    if (strand < 0 || strand >= n) throw eval_error("cut strand out of range");

    std::vector<int> word(b.word.begin() + rotation, b.word.end());
    word.insert(word.end(), b.word.begin(), b.word.begin() + rotation);
    std::vector<int> cols = b.colors;
    for (int k = 0; k < rotation; ++k) {
        int i = std::abs(b.word[k]) - 1;
        std::swap(cols[i], cols[i + 1]);
    }

    const int s = strand;
    std::vector<Slice> slices;
    // left returns: nested cups (down, up) for strands s-1 .. 0
    for (int u = 0; u < s; ++u)
        slices.push_back({SliceKind::Cup, u, cols[s - 1 - u], false});
    // right: nested cups (up, down) for strands s+1 .. n-1
    for (int j = s + 1; j < n; ++j)
        slices.push_back({SliceKind::Cup, s + j, cols[j], true});
    // braid block shifted by s
    for (int w : word) {
        int i = std::abs(w) - 1;
        slices.push_back({w > 0 ? SliceKind::PosCross : SliceKind::NegCross, s + i, 1, true});
    }
    Perm perm = braid_permutation(n, word);
    std::vector<int> top_color(n);
    for (int j = 0; j < n; ++j) top_color[perm[j]] = cols[j];
    // right caps
    for (int j = n - 1; j > s; --j)
        slices.push_back({SliceKind::Cap, s + j, top_color[j], true});
    // left caps
    for (int j = 0; j < s; ++j)
        slices.push_back({SliceKind::Cap, s - 1 - j, top_color[j], false});

    BoundaryWord boundary{{cols[s], true}};
    return make_diagram(std::move(boundary), std::move(slices));
}

TangleDiagram cut_strand(const TangleDiagram& t, int component) {
    if (!t.closed()) throw eval_error("cut_strand needs a closed diagram");
    if (!t.braid) throw eval_error("cut_strand needs braid provenance");
    auto cyc = strand_cycle_id(*t.braid);
    for (int s = 0; s < t.braid->strands; ++s)
        if (cyc[s] == component) return cut_strand_at(t, 0, s);
    throw eval_error("component not found");
}

std::vector<std::pair<int, int>> cut_points(const TangleDiagram& t, int component) {
    if (!t.closed() || !t.braid) throw eval_error("cut_points needs a closed braid diagram");
    const BraidData& b = *t.braid;
    auto cyc = strand_cycle_id(b);
    std::vector<std::pair<int, int>> pts;
    int len = std::max<int>(1, (int)b.word.size());
    std::vector<int> strand_at(b.strands); // position -> original strand
    std::iota(strand_at.begin(), strand_at.end(), 0);
    for (int k = 0; k < len; ++k) {
        for (int s = 0; s < b.strands; ++s)
            if (cyc[strand_at[s]] == component) pts.push_back({k, s});
        if (k < (int)b.word.size()) {
            int i = std::abs(b.word[k]) - 1;
            std::swap(strand_at[i], strand_at[i + 1]);
        }
    }
    if (pts.empty()) throw eval_error("component not found");
    return pts;
}

// ----------------------------------------------------------------- parsing

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw parse_error("expected [..] list: " + s);
    std::vector<int> out;
    std::string body = s.substr(1, s.size() - 2);
    if (body.empty()) return out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (...) {
            throw parse_error("bad integer in list: " + item);
        }
    }
    return out;
}

} // namespace

TangleDiagram parse_tangle_text(const std::string& text) {
    std::stringstream ss(text);
    std::string tok;
    ss >> tok;
    if (tok != "braid") throw parse_error("expected 'braid ...'");
    int n = -1;
    std::vector<int> w, colors;
    bool do_close = false;
    while (ss >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw parse_error("expected key=value: " + tok);
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        try {
            if (key == "n") n = std::stoi(val);
            else if (key == "w") w = parse_int_list(val);
            else if (key == "colors") colors = parse_int_list(val);
            else if (key == "close") {
                if (val != "trace") throw parse_error("unsupported closure: " + val);
                do_close = true;
            } else throw parse_error("unknown key: " + key);
        } catch (const parse_error&) {
            throw;
        } catch (...) {
            throw parse_error("bad value for " + key);
        }
    }
    if (n < 1) throw parse_error("missing n=<strands>");
    if ((int)colors.size() != n) throw parse_error("colors length must equal n");
    TangleDiagram t = parse_braid(w, colors);
    return do_close ? close(t) : t;
}

std::string serialize_diagram(const TangleDiagram& t) {
    nlohmann::json j;
    j["bottom"] = nlohmann::json::array();
    for (const auto& e : t.bottom)
        j["bottom"].push_back({e.color, e.up ? "up" : "down"});
    j["slices"] = nlohmann::json::array();
    for (const auto& s : t.slices) {
        nlohmann::json js;
        switch (s.kind) {
        case SliceKind::PosCross: js["kind"] = "pos"; break;
        case SliceKind::NegCross: js["kind"] = "neg"; break;
        case SliceKind::Cup: js["kind"] = "cup"; break;
        case SliceKind::Cap: js["kind"] = "cap"; break;
        }
        js["pos"] = s.pos;
        if (s.kind == SliceKind::Cup || s.kind == SliceKind::Cap) {
            js["color"] = s.color;
            js["left_up"] = s.left_up;
        }
        j["slices"].push_back(js);
    }
    if (t.braid)
        j["braid"] = {{"n", t.braid->strands}, {"w", t.braid->word}, {"colors", t.braid->colors}};
    return j.dump();
}

TangleDiagram parse_diagram_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw parse_error(std::string("bad JSON: ") + e.what());
    }
    TangleDiagram t;
    try {
        BoundaryWord bottom;
        for (const auto& e : j.at("bottom")) {
            std::string dir = e.at(1);
            if (dir != "up" && dir != "down") throw parse_error("bad orientation " + dir);
            bottom.push_back({e.at(0).get<int>(), dir == "up"});
        }
        std::vector<Slice> slices;
        for (const auto& js : j.at("slices")) {
            Slice s;
            std::string kind = js.at("kind");
            if (kind == "pos") s.kind = SliceKind::PosCross;
            else if (kind == "neg") s.kind = SliceKind::NegCross;
            else if (kind == "cup") s.kind = SliceKind::Cup;
            else if (kind == "cap") s.kind = SliceKind::Cap;
            else throw parse_error("bad slice kind " + kind);
            s.pos = js.at("pos");
            if (s.kind == SliceKind::Cup || s.kind == SliceKind::Cap) {
                s.color = js.at("color");
                s.left_up = js.at("left_up");
            }
            slices.push_back(s);
        }
        t = make_diagram(std::move(bottom), std::move(slices));
        if (j.contains("braid")) {
            t.braid = BraidData{j["braid"].at("n"),
                                j["braid"].at("w").get<std::vector<int>>(),
                                j["braid"].at("colors").get<std::vector<int>>()};
        }
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception& e) {
        throw parse_error(std::string("bad diagram JSON: ") + e.what());
    }
    return t;
}

TangleDiagram parse_pd(const std::vector<std::array<int, 4>>& pd,
                       const std::vector<int>& signs,
                       const std::vector<int>& colors) {
    if (pd.size() != signs.size()) throw parse_error("pd and signs lengths differ");
    const int nc = (int)pd.size();
    if (nc == 0) throw parse_error("empty PD code");
    for (int s : signs)
        if (s != 1 && s != -1) throw parse_error("signs must be +-1");

    // Port convention (all sweep legs point up); counterclockwise from the
    // incoming under-edge a:
    //   sign +1: a=BR (under-in), b=TR (over-out), c=TL (under-out), d=BL (over-in)
    //   sign -1: a=BL (under-in), b=BR (over-in),  c=TR (under-out), d=TL (over-out)
    struct XInfo {
        int left_in, right_in, left_out, right_out, under_in, over_in;
    };
    std::vector<XInfo> info(nc);
    for (int x = 0; x < nc; ++x) {
        const auto& e = pd[x];
        if (signs[x] > 0)
            info[x] = {e[3], e[0], e[2], e[1], e[0], e[3]};
        else
            info[x] = {e[0], e[1], e[3], e[2], e[0], e[1]};
    }
    // component structure: successor edge through each crossing
    std::map<int, int> succ;
    for (int x = 0; x < nc; ++x) {
        const auto& e = pd[x];
        succ[info[x].under_in] = e[2];
        succ[info[x].over_in] = (signs[x] > 0) ? e[1] : e[3];
    }
    std::map<int, int> comp_of_edge;
    std::vector<int> comp_min_edge;
    for (const auto& [e0, _] : succ) {
        (void)_;
        if (comp_of_edge.count(e0)) continue;
        int id = (int)comp_min_edge.size();
        int cur = e0, mn = e0;
        while (!comp_of_edge.count(cur)) {
            comp_of_edge[cur] = id;
            mn = std::min(mn, cur);
            auto it = succ.find(cur);
            if (it == succ.end()) throw parse_error("PD edge chain broken");
            cur = it->second;
        }
        comp_min_edge.push_back(mn);
    }
    std::vector<int> order((int)comp_min_edge.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return comp_min_edge[a] < comp_min_edge[b]; });
    std::map<int, int> comp_color;
    for (size_t i = 0; i < order.size(); ++i) {
        int col = (i < colors.size()) ? colors[i] : 1;
        if (col < 1) throw parse_error("colors must be positive");
        comp_color[order[i]] = col;
    }
    auto edge_color = [&](int e) { return comp_color.at(comp_of_edge.at(e)); };

    // Morse sweep with backtracking over the crossing processing order.
    // States that already failed are remembered to keep the search small.
    struct Leg {
        int edge;
        bool up;
        bool operator==(const Leg&) const = default;
    };
    struct State {
        std::vector<Leg> B;
        std::vector<Slice> slices;
        std::vector<char> done;
        int remaining;
    };
    auto find_up = [](const std::vector<Leg>& B, int edge) {
        for (size_t p = 0; p < B.size(); ++p)
            if (B[p].edge == edge && B[p].up) return (int)p;
        return -1;
    };
    auto cap_pass = [&](State& st) {
        bool again = true;
        while (again) {
            again = false;
            for (size_t p = 0; p + 1 < st.B.size(); ++p) {
                if (st.B[p].edge == st.B[p + 1].edge && st.B[p].up != st.B[p + 1].up) {
                    st.slices.push_back(
                        {SliceKind::Cap, (int)p, edge_color(st.B[p].edge), st.B[p].up});
                    st.B.erase(st.B.begin() + p, st.B.begin() + p + 2);
                    again = true;
                    break;
                }
            }
        }
    };
    auto state_key = [](const State& st) {
        std::string k(st.done.begin(), st.done.end());
        k += '|';
        for (const Leg& l : st.B) {
            k += std::to_string(l.edge);
            k += l.up ? '^' : 'v';
        }
        return k;
    };
    auto apply = [&](State st, int x) {
        const XInfo& xi = info[x];
        int pl = find_up(st.B, xi.left_in), pr = find_up(st.B, xi.right_in);
        if (pl >= 0 && pr >= 0) {
            // must already sit adjacent in the required order
        } else if (pl >= 0) {
            st.slices.push_back({SliceKind::Cup, pl + 1, edge_color(xi.right_in), true});
            st.B.insert(st.B.begin() + pl + 1, {xi.right_in, true});
            st.B.insert(st.B.begin() + pl + 2, {xi.right_in, false});
        } else if (pr >= 0) {
            st.slices.push_back({SliceKind::Cup, pr, edge_color(xi.left_in), false});
            st.B.insert(st.B.begin() + pr, {xi.left_in, false});
            st.B.insert(st.B.begin() + pr + 1, {xi.left_in, true});
            pl = pr + 1;
        } else {
            int at = (int)st.B.size();
            st.slices.push_back({SliceKind::Cup, at, edge_color(xi.left_in), false});
            st.B.push_back({xi.left_in, false});
            st.B.push_back({xi.left_in, true});
            st.slices.push_back({SliceKind::Cup, at + 2, edge_color(xi.right_in), true});
            st.B.insert(st.B.begin() + at + 2, {xi.right_in, true});
            st.B.insert(st.B.begin() + at + 3, {xi.right_in, false});
            pl = at + 1;
        }
        check_internal(st.B[pl].edge == xi.left_in && st.B[pl + 1].edge == xi.right_in,
                       "PD sweep arrangement broke");
        st.slices.push_back(
            {signs[x] > 0 ? SliceKind::PosCross : SliceKind::NegCross, pl, 1, true});
        st.B[pl] = {xi.left_out, true};
        st.B[pl + 1] = {xi.right_out, true};
        st.done[x] = 1;
        --st.remaining;
        cap_pass(st);
        return st;
    };

    std::set<std::string> failed;
    long long budget = 500000;
    std::function<std::optional<State>(const State&)> search =
        [&](const State& st) -> std::optional<State> {
        if (st.remaining == 0) return st.B.empty() ? std::optional<State>(st) : std::nullopt;
        if (--budget <= 0) throw parse_error("PD sweep search budget exceeded");
        std::string key = state_key(st);
        if (failed.count(key)) return std::nullopt;
        // candidates: both inputs open and adjacent first, then one open,
        // then fresh pairs
        for (int want = 0; want < 3; ++want) {
            for (int x = 0; x < nc; ++x) {
                if (st.done[x]) continue;
                int pl = find_up(st.B, info[x].left_in), pr = find_up(st.B, info[x].right_in);
                int have = (pl >= 0) + (pr >= 0);
                if (want == 0 && !(have == 2 && pr == pl + 1)) continue;
                if (want == 1 && have != 1) continue;
                if (want == 2 && have != 0) continue;
                if (have == 2 && pr != pl + 1) continue;
                if (auto done_state = search(apply(st, x))) return done_state;
            }
        }
        failed.insert(std::move(key));
        return std::nullopt;
    };
    State init{{}, {}, std::vector<char>(nc, 0), nc};
    auto solved = search(init);
    if (!solved) throw parse_error("PD sweep is stuck; supply a braid or slice form");
    return make_diagram({}, std::move(solved->slices));
}

} // namespace spiderq
