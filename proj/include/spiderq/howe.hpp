#pragma once

// The matrix oracle at beta = m - n: quantum exterior powers of C_q^{m|n} on
// their monomial basis, skew Howe E/F actions via straightening, the braiding
// on V (x) V, pivotal evaluation/coevaluation, the functor from spider
// morphisms to operators, and Reshetikhin-Turaev evaluation of tangles.
//
// Everything here is univariate in q (Q never appears); Scalars are shared
// with the generic-beta pipeline for convenience.

#include "spiderq/hecke.hpp"
#include "spiderq/spider.hpp"
#include "spiderq/tangle.hpp"

#include <map>
#include <memory>
#include <vector>

namespace spiderq {

/// Basis monomial of a wedge power: row indices ascending, strictly at even
/// rows (repeats allowed only for odd rows i > m).
using Monomial = std::vector<int>;

/// Entry of a multi-column wedge word: (row, col), sorted anti-lexically
/// (column-major).
struct ZEntry {
    int row = 1, col = 1;
    auto operator<=>(const ZEntry&) const = default;
};
using ZWord = std::vector<ZEntry>;
using ZLin = std::map<ZWord, Scalar>;

class HoweCtx;

/// Tensor product of wedge powers and duals, indexed mixed-radix with the
/// first factor most significant.
struct WordSpace {
    const HoweCtx* ctx = nullptr;
    SpiderObject entries;
    std::vector<long long> dims;
    long long total = 1;

    std::vector<int> unrank(long long idx) const;
    long long rank(const std::vector<int>& tuple) const;
    bool operator==(const WordSpace& o) const { return entries == o.entries; }
};

/// Sparse matrix between word spaces; cols[src][dst] = value.
class Operator {
public:
    WordSpace src, dst;
    std::map<long long, std::map<long long, Scalar>> cols;

    void add(long long dst_row, long long src_col, const Scalar& v);
    bool is_zero() const;
    bool operator==(const Operator& o) const;
};

Operator op_zero(WordSpace src, WordSpace dst);
Operator op_identity(WordSpace ws);
Operator op_mul(const Operator& a, const Operator& b); // a after b
Operator op_add(const Operator& a, const Operator& b);
Operator op_scale(const Operator& a, const Scalar& c);
Operator op_tensor(const Operator& a, const Operator& b);
/// 180-degree rotation: f: X -> Y becomes rot(f): rot(Y) -> rot(X), where
/// rot reverses the factor order and dualizes every entry.
Operator op_rot180(const Operator& a);
/// Replace the space descriptors by ones with unit (0) factors added or
/// removed; total dimensions must match.
Operator op_reshape(Operator a, WordSpace new_src, WordSpace new_dst);

class HoweCtx {
public:
    HoweCtx(int m, int n);

    const int m, n, d;
    int dimV() const { return m + n; }
    bool odd_row(int i) const { return i > m; } // 1-based
    long long rho2(int i) const;                // (2 rho, eps_i)

    const std::vector<Monomial>& basis(int a) const;
    long long dim(int a) const;
    int parity(const Monomial& w) const;
    /// pivotal coefficient (-1)^{|w|} q^{-(2rho, wt w)}
    Scalar phi(const Monomial& w) const;

    /// straighten an arbitrary word into the sorted admissible basis
    ZLin straighten(const ZWord& w) const;

    /// divided-power rung E^{(r)} / F^{(r)} on wedge^a (x) wedge^b (up-up)
    Operator up_rung(bool is_e, int r, int a, int b) const;

    WordSpace space(SpiderObject entries) const;

    /// braiding matrix on V (x) V (the positive crossing); eq. of the
    /// four-case R action
    const Operator& rhat() const { return rhat_; }
    const Operator& rhat_inv() const { return rhat_inv_; }

    /// structure maps of color a: coevL: C -> (a, a*), coevR: C -> (a*, a),
    /// evL: (a*, a) -> C, evR: (a, a*) -> C
    Operator coevL(int a) const;
    Operator coevR(int a) const;
    Operator evL(int a) const;
    Operator evR(int a) const;

    /// image of the antisymmetrizer e_a under H_a -> End(V^{(x) a}), H_i -> rhat
    const Operator& wedge_projector(int a) const;

private:
    void self_check() const;

    mutable std::map<int, std::vector<Monomial>> basis_;
    mutable std::map<ZWord, ZLin> straighten_cache_;
    mutable std::map<std::tuple<bool, int, int, int>, Operator> rung_cache_;
    mutable std::map<int, Operator> projector_cache_;
    Operator rhat_, rhat_inv_;
};

/// Admissible single-column monomials of wedge^a C_q^{m|n}.
std::vector<Monomial> wedge_basis(int m, int n, int a);

/// The functor G_{m|n} on ladder generators, words and morphisms.
Operator apply_gen_op(const HoweCtx& ctx, const SpiderObject& src, const LadderGen& g);
Operator apply_word_op(const HoweCtx& ctx, const LadderWord& w);
Operator apply_morphism(const HoweCtx& ctx, const Morphism& m);

/// Reshetikhin-Turaev evaluation: cables colored strands, inserts wedge
/// projectors at the bundle markers, walks the slices with rhat and the
/// pivotal maps.  Closed diagrams give the scalar invariant.
Scalar rt_eval(const HoweCtx& ctx, const TangleDiagram& t);
/// All-up open tangles give the operator on the cabled, projected boundary.
Operator rt_eval_open(const HoweCtx& ctx, const TangleDiagram& t);
/// Scalar of an End(wedge^a)-valued cut evaluation: asserts the operator is
/// lambda times the projected identity and returns lambda.
Scalar rt_reduced(const HoweCtx& ctx, const TangleDiagram& open_tangle);

/// The U_q(gl_k) side of skew Howe duality on wedge^N(V (x) C^k), for the
/// relation test suites.
class SkewModel {
public:
    SkewModel(const HoweCtx& ctx, int k, int N);
    const HoweCtx& ctx() const { return *ctx_; }
    const std::vector<ZWord>& basis() const { return basis_; }
    long long index(const ZWord& w) const;
    std::vector<long long> col_weight(const ZWord& w) const;

    using Mat = std::map<long long, std::map<long long, Scalar>>; // col -> row -> v
    Mat act_E(int i) const; // 1 <= i <= k-1
    Mat act_F(int i) const;
    Mat act_weight(const std::vector<long long>& h) const; // q^{<h, wt>}

private:
    const HoweCtx* ctx_;
    int k_, N_;
    std::vector<ZWord> basis_;
    std::map<ZWord, long long> index_;
};

} // namespace spiderq
