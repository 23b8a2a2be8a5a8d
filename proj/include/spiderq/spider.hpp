#pragma once

// The ribbon spider category: objects are sequences of signed colors (a > 0
// upward, -a for the dual, 0 the unit), morphisms are Scalar-combinations of
// ladder words in divided-power E/F rungs and adjunction cups/caps.  Closed
// evaluation routes through cabling and the Hecke/skein pipeline.

#include "spiderq/hecke.hpp"
#include "spiderq/skein.hpp"
#include "spiderq/tangle.hpp"

#include <map>
#include <vector>

namespace spiderq {

/// Entry a > 0: color a upward; a < 0: dual of color |a|; 0: the unit
/// (dropped in canonical form but kept positionally inside ladder words).
using SpiderObject = std::vector<int>;

SpiderObject canonical_object(const SpiderObject& o);

enum class GenKind {
    E,     // divided-power rung moving r from entry pos+1 to entry pos
    F,     // divided-power rung moving r from entry pos to entry pos+1
    CupRL, // inserts (a, a*) at pos
    CupLR, // inserts (a*, a) at pos
    CapRL, // consumes (a, a*) at pos
    CapLR  // consumes (a*, a) at pos
};

enum class Orient { UpUp, UpDown, DownUp, DownDown };

struct LadderGen {
    GenKind kind;
    int pos = 0;
    int r = 1;     // divided power (E/F)
    int color = 1; // cup/cap color
    // orientation pattern of the two entries an E/F rung acts on; needed to
    // disambiguate transient 0-labels, which are both 0 and 0*
    Orient pattern = Orient::UpUp;
    auto operator<=>(const LadderGen&) const = default;
};

/// Apply one generator to an object; returns false when a label leaves the
/// admissible range (the word represents the zero morphism).
bool apply_gen(SpiderObject& obj, const LadderGen& g);

struct LadderWord {
    SpiderObject source;
    std::vector<LadderGen> gens;
    SpiderObject target;
    bool zero = false;
    auto operator<=>(const LadderWord&) const = default;
};

LadderWord make_word(SpiderObject source, std::vector<LadderGen> gens);

/// Scalar-linear combination of ladder words with common source and target.
class Morphism {
public:
    Morphism() = default;
    static Morphism zero_morphism(SpiderObject src, SpiderObject tgt);
    static Morphism from_word(const LadderWord& w, Scalar c = Scalar::unit());
    static Morphism identity(SpiderObject obj);

    const SpiderObject& source() const { return src_; }
    const SpiderObject& target() const { return tgt_; }
    const std::map<std::vector<LadderGen>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Morphism operator+(const Morphism& o) const;
    Morphism operator*(const Scalar& c) const;
    /// composition o after *this (stack o on top)
    Morphism then(const Morphism& o) const;

private:
    SpiderObject src_, tgt_;
    std::map<std::vector<LadderGen>, Scalar> terms_;
};

/// Braiding c_{x,y}^{sign} as a morphism (x,y) -> (y,x) in the requested
/// orientation pattern; positive sign is the braiding, negative its inverse.
Morphism braiding(int a, int b, int sign, Orient o);

/// Twist theta_a = q^{-a beta + a(a-1)}.
Scalar twist(int a);

/// Split/merge morphisms iota_a: a -> 1^a and pi_a: 1^a -> a with
/// pi_a o iota_a = id_a.  The raw divided-power ladders compose to [a]! times
/// the identity, so pi carries the normalizing coefficient.
std::pair<Morphism, Morphism> split_merge(int a);

/// Slice-wise translation of a tangle into a spider morphism.
Morphism functor_Q(const TangleDiagram& t);

/// Colored link invariant P_beta via cabling + antisymmetrizer insertion +
/// skein evaluation.  Normalized mode multiplies by prod twist(a_c)^{-w_c}.
Scalar colored_eval(const TangleDiagram& t, FramingMode mode = FramingMode::Framed,
                    SkeinMemo* memo = nullptr, int threads = 1);

/// Reduced invariant: cut one strand of the chosen component, evaluate the
/// open tangle against e_a, return the scalar in End(a) = C_q.
Scalar reduced_eval(const TangleDiagram& t, int component,
                    SkeinMemo* memo = nullptr, int threads = 1);
/// Same, cutting at a specific (rotation, strand) braid arc.
Scalar reduced_eval_at(const TangleDiagram& t, int rotation, int strand,
                       SkeinMemo* memo = nullptr, int threads = 1);

} // namespace spiderq
