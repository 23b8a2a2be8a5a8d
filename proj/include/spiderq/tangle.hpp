#pragma once

// Oriented framed labeled tangles as vertical stacks of elementary slices,
// plus the combinatorial (Gauss) form consumed by the evaluators, cabling,
// trace closure and strand cutting.

#include "spiderq/common.hpp"
#include "spiderq/hecke.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spiderq {

struct StrandEnd {
    int color = 1;
    bool up = true;
    bool operator==(const StrandEnd&) const = default;
};
using BoundaryWord = std::vector<StrandEnd>;

enum class SliceKind { PosCross, NegCross, Cup, Cap };

/// One elementary event at horizontal position pos.
///  - PosCross: strands at (pos, pos+1) cross, the SW-NE strand on top.
///  - NegCross: same, the NW-SE strand on top.
///  - Cup: creates two ends at (pos, pos+1); left_up selects (up,down) vs
///    (down,up).  Cap consumes two adjacent ends with the matching pattern.
struct Slice {
    SliceKind kind;
    int pos = 0;
    int color = 1;       // cup/cap only
    bool left_up = true; // cup/cap only
    bool operator==(const Slice&) const = default;
};

/// Marker of a vertical up-oriented arc: (gap, position) where gap g is the
/// horizontal level between slice g-1 and slice g.
struct ArcRef {
    int gap = 0;
    int pos = 0;
};

struct BraidData {
    int strands = 0;
    std::vector<int> word;   // entries +-i, 1-based
    std::vector<int> colors; // per strand
};

struct TangleDiagram {
    BoundaryWord bottom, top;
    std::vector<Slice> slices;

    // computed by analyze() during construction
    int n_components = 0;
    std::vector<int> comp_color;
    std::vector<long long> comp_writhe; // self-writhe per component
    std::vector<ArcRef> comp_marker;    // an up-arc per component (if any)
    int n_crossings = 0;

    // provenance, kept when the diagram is a braid (closure); enables
    // cut_strand at arbitrary arcs
    std::optional<BraidData> braid;
    bool closed() const { return bottom.empty() && top.empty(); }
};

/// Build and validate a diagram from raw parts (computes components etc).
TangleDiagram make_diagram(BoundaryWord bottom, std::vector<Slice> slices);

/// Open braid: all strands up, generator +-i becomes a crossing at i-1.
TangleDiagram parse_braid(const std::vector<int>& word, const std::vector<int>& colors);

/// Trace closure (bottom == top required); for braid input keeps provenance.
TangleDiagram close(const TangleDiagram& t);

/// Blackboard-framed cabling: every color-a strand becomes a parallel
/// color-1 strands.  bundles[c] locates the cabled bundle of original
/// component c (all-up arc block of width colors[c]).
struct BundleMarker {
    int gap = 0;
    int offset = 0;
    int width = 1;
};
struct CabledDiagram {
    TangleDiagram diagram;
    std::vector<BundleMarker> bundles; // per original component
    std::vector<int> orig_color;       // per original component
    std::vector<long long> orig_writhe;
};
CabledDiagram cable(const TangleDiagram& t);

/// Splice a positive braid word (entries are 0-based positions relative to
/// `offset`) into the diagram at the given gap.
TangleDiagram insert_braid(const TangleDiagram& t, int gap, int offset,
                           const std::vector<int>& positions,
                           const std::vector<SliceKind>& kinds);

/// Cut one strand of a closed braid diagram, producing a (1,1)-tangle whose
/// single boundary color is the component's color.  The default overload cuts
/// the component at its first braid arc; the _at variant cuts the arc at
/// (cyclic word rotation, bottom strand index of the rotated braid).
TangleDiagram cut_strand(const TangleDiagram& t, int component);
TangleDiagram cut_strand_at(const TangleDiagram& t, int rotation, int strand);

/// All (rotation, strand) arcs of the given component, for cut-invariance
/// sweeps.
std::vector<std::pair<int, int>> cut_points(const TangleDiagram& t, int component);

// ------------------------------------------------------------------- Gauss

struct Passage {
    int crossing = 0;
    bool over = false;
    bool operator==(const Passage&) const = default;
};

/// Combinatorial diagram: crossing signs plus the ordered passage lists of
/// every component.  Open strands (all-up boundary) are listed in bottom
/// order with their top endpoint positions.
struct GaussDiagram {
    std::vector<int> sign;
    std::vector<std::vector<Passage>> closed_comps;
    std::vector<std::vector<Passage>> open_strands;
    std::vector<int> open_top;
};

GaussDiagram to_gauss(const TangleDiagram& t);

// ----------------------------------------------------------------- parsing

/// Text grammar: `braid n=<int> w=[1,-2,...] colors=[a1,...] [close=trace]`.
TangleDiagram parse_tangle_text(const std::string& text);

/// JSON slice form (see docs/formats.md); inverse of serialize_diagram.
TangleDiagram parse_diagram_json(const std::string& json);
std::string serialize_diagram(const TangleDiagram& t);

/// PD code with explicit crossing signs; see docs/formats.md for the port
/// convention.  colors are per component, ordered by smallest edge id.
TangleDiagram parse_pd(const std::vector<std::array<int, 4>>& pd,
                       const std::vector<int>& signs,
                       const std::vector<int>& colors = {});

} // namespace spiderq
