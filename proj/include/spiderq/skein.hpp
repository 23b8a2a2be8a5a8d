#pragma once

// Recursive skein evaluation of color-1 diagrams in the quantized oriented
// Brauer category: closed diagrams evaluate to Scalars, open all-up tangles
// to Hecke elements.  Crossing switches walk toward descending diagrams,
// whose value is read off directly.

#include "spiderq/hecke.hpp"
#include "spiderq/tangle.hpp"

#include <mutex>
#include <optional>
#include <unordered_map>

namespace spiderq {

enum class FramingMode { Framed, Normalized };

/// Shared memo table keyed by a canonical diagram encoding.  Thread-safe;
/// duplicate inserts are benign (results are deterministic).
class SkeinMemo {
public:
    std::optional<HeckeElement> get(const std::string& key);
    void put(const std::string& key, const HeckeElement& value);
    size_t size();

private:
    std::mutex mu_;
    std::unordered_map<std::string, HeckeElement> map_;
};

/// Crossing selection order for the recursion; all choices give equal values
/// (this is a tested invariant), they only shape the recursion tree.
enum class SkeinOrder { FirstBad, LastBad, MiddleBad };

/// Evaluate an all-up open diagram to an element of H_r (r = strand count);
/// a closed diagram gives rank 0, i.e. a Scalar multiple of the empty braid.
HeckeElement eval_gauss(const GaussDiagram& g, SkeinMemo* memo = nullptr,
                        SkeinOrder order = SkeinOrder::FirstBad);

/// Framed invariant of a closed color-1 diagram; Normalized divides out the
/// curl factor q^{-beta w_c} of every component.
Scalar eval_closed(const TangleDiagram& t, FramingMode mode = FramingMode::Framed,
                   SkeinMemo* memo = nullptr, SkeinOrder order = SkeinOrder::FirstBad);

/// Insert Hecke elements into cable bundles (one per marker) by expanding
/// each H_w as its positive permutation braid, then evaluate linearly.
/// extra_word, when nonempty, appends raw crossings (0-based positions
/// relative to the first marker) after the first insertion.
Scalar eval_hecke_insertion(const TangleDiagram& t,
                            const std::vector<std::pair<BundleMarker, HeckeElement>>& insertions,
                            SkeinMemo* memo = nullptr, int threads = 1,
                            const std::vector<int>& extra_word = {},
                            const std::vector<SliceKind>& extra_kinds = {});

} // namespace spiderq
