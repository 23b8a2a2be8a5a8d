#pragma once

// Job layer of the command-line tool: parse one link input, evaluate the
// requested invariant, optionally specialize and cross-check against the
// matrix oracle, and render a text or JSON report.

#include "spiderq/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace spiderq {

struct JobSpec {
    enum class Input { BraidText, DiagramJson, PdJson };
    enum class Invariant { Framed, Normalized, Reduced };
    enum class Format { Text, Json };

    Input kind = Input::BraidText;
    std::string input;
    bool close = false; // braid text: apply the trace closure
    Invariant invariant = Invariant::Framed;
    int component = 0; // reduced: which component to cut
    std::vector<long long> at;              // specializations beta = d
    std::vector<std::pair<int, int>> checks; // oracle contexts (m, n)
    Format format = Format::Text;
    bool timing = false; // JSON only; off keeps the output byte-stable
    int threads = 1;
};

struct Report {
    std::string out;
    int exit_code = 0; // 0 ok, 2 parse error, 3 eval error, 4 check mismatch
};

Report run(const JobSpec& job);

} // namespace spiderq
