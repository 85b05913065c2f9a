#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ramkill/snc_complex.hpp"

namespace ramkill {

// Which part of the coloring algorithm requested a blow-up.
enum class BlowStep { dim2, step1, step2, step4 };

const char* to_string(BlowStep step);

struct BlowUpEvent {
    int edge_u = -1;
    int edge_v = -1;
    int created = -1;  // index of the exceptional vertex in the new complex
    BlowStep step = BlowStep::dim2;

    friend bool operator==(const BlowUpEvent&, const BlowUpEvent&) = default;
};

// Replaying the log from the input complex reproduces the output exactly.
using BlowUpLog = std::vector<BlowUpEvent>;

// A complex together with a total coloring by {1..n}; proper when no 2-face
// is monochromatic, which makes each color class an independent set.
struct ColoredComplex {
    SncComplex complex;
    std::vector<int> color;
};

// True iff the coloring is total with values in 1..n and no 2-face has both
// endpoints the same color.
bool check_proper(const ColoredComplex& cc);

struct ColoringStats {
    long long insertions = 0;        // insert_vertex_step executions
    long long blowups = 0;
    long long invariant_checks = 0;  // step invariants asserted along the way

    ColoringStats& operator+=(const ColoringStats& other);
};

struct ColoringResult {
    ColoredComplex colored;
    BlowUpLog log;
    ColoringStats stats;
};

struct InsertResult {
    SncComplex complex;
    std::vector<int> color;  // partial map, 0 = uncolored
    BlowUpLog log;
    ColoringStats stats;
};

// Raised when an input admits no proper coloring at all (n = 1 with edges).
struct impossible_coloring : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One induction step for n >= 3: extend a proper partial coloring to the
// uncolored vertex v, blowing up edges as needed. Vertices other than v may
// also be uncolored; they ride through blow-ups untouched and edges into
// them are exempt from properness. Every invariant of the step sequence is
// asserted as it is established; a violation throws internal_error.
InsertResult insert_vertex_step(const SncComplex& c, const std::vector<int>& color, int v);

// n = 2 reduction: if the graph already has no odd cycle a breadth-first
// 2-coloring suffices; otherwise every edge is subdivided once (all cycle
// lengths double) and the now-bipartite graph is 2-colored.
ColoringResult color_dim2(const SncComplex& c);

// Full coloring driver: n = 1 requires an edgeless complex, n = 2 delegates
// to color_dim2, and for n >= 3 the first min(N, n) vertices get distinct
// colors and the rest are inserted one at a time in input order.
ColoringResult color(const SncComplex& c);

// Applies a blow-up log to `input`, checking that each event reproduces the
// logged exceptional vertex. Throws internal_error on mismatch.
SncComplex replay_log(const SncComplex& input, const BlowUpLog& log);

}  // namespace ramkill
