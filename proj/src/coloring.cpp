#include "ramkill/coloring.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "ramkill/errors.hpp"

namespace ramkill {

namespace {

// Proper on the colored part: edges with an uncolored endpoint are exempt.
bool proper_on_colored(const SncComplex& c, const std::vector<int>& color) {
    for (const Face& f : c.faces()) {
        if (f.size() != 2) continue;
        const int cu = color[static_cast<size_t>(f[0])];
        const int cv = color[static_cast<size_t>(f[1])];
        if (cu != 0 && cu == cv) return false;
    }
    return true;
}

// Breadth-first 2-coloring; empty result when some component has an odd
// cycle. Component roots are the lowest uncolored index, colored 1.
std::vector<int> bipartite_coloring(const SncComplex& c) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(c.vertex_count()));
    for (const Face& f : c.faces())
        if (f.size() == 2) {
            adj[static_cast<size_t>(f[0])].push_back(f[1]);
            adj[static_cast<size_t>(f[1])].push_back(f[0]);
        }

    std::vector<int> color(static_cast<size_t>(c.vertex_count()), 0);
    for (int root = 0; root < c.vertex_count(); ++root) {
        if (color[static_cast<size_t>(root)] != 0) continue;
        color[static_cast<size_t>(root)] = 1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : adj[static_cast<size_t>(u)]) {
                const int cu = color[static_cast<size_t>(u)];
                int& cw = color[static_cast<size_t>(w)];
                if (cw == 0) {
                    cw = (cu == 1) ? 2 : 1;
                    queue.push_back(w);
                } else if (cw == cu) {
                    return {};
                }
            }
        }
    }
    return color;
}

// Mutable state threaded through one insertion: the complex, the partial
// coloring (0 = uncolored), and the event log. Blow-ups extend the coloring
// vector with an uncolored slot for the fresh vertex.
struct StepState {
    SncComplex complex;
    std::vector<int> color;
    BlowUpLog log;
    ColoringStats stats;

    int blow(int u, int v, BlowStep step) {
        auto [next, e] = blow_up(complex, u, v);
        complex = std::move(next);
        color.push_back(0);
        log.push_back(BlowUpEvent{std::min(u, v), std::max(u, v), e, step});
        ++stats.blowups;
        return e;
    }

    std::vector<int> color_class(int k) const {
        std::vector<int> out;
        for (int v = 0; v < complex.vertex_count(); ++v)
            if (color[static_cast<size_t>(v)] == k) out.push_back(v);
        return out;
    }

    void require(bool ok, const char* what) {
        ++stats.invariant_checks;
        if (!ok) throw internal_error(std::string("coloring invariant violated: ") + what);
    }

    void require_no_edges(const std::vector<int>& a, const std::vector<int>& b,
                          const char* what) {
        require(a.empty() || b.empty() || adjacency(complex, a, b).empty(), what);
    }

    void require_independent(const std::vector<int>& group, const char* what) {
        std::vector<char> in(static_cast<size_t>(complex.vertex_count()), 0);
        for (int v : group) in[static_cast<size_t>(v)] = 1;
        bool ok = true;
        for (const Face& f : complex.faces())
            if (f.size() == 2 && in[static_cast<size_t>(f[0])] &&
                in[static_cast<size_t>(f[1])]) {
                ok = false;
                break;
            }
        require(ok, what);
    }

    // No face may meet every one of the given groups at once. Scanning the
    // maximal faces suffices: any witness face extends to a maximal one.
    void require_no_common_face(const std::vector<const std::vector<int>*>& groups,
                                const char* what) {
        std::vector<int> group_of(static_cast<size_t>(complex.vertex_count()), -1);
        for (size_t g = 0; g < groups.size(); ++g) {
            if (groups[g]->empty()) {  // an empty group cannot be met
                ++stats.invariant_checks;
                return;
            }
            for (int v : *groups[g]) group_of[static_cast<size_t>(v)] = static_cast<int>(g);
        }
        bool ok = true;
        for (const Face& m : complex.maximal_faces()) {
            std::vector<char> hit(groups.size(), 0);
            for (int v : m)
                if (group_of[static_cast<size_t>(v)] >= 0)
                    hit[static_cast<size_t>(group_of[static_cast<size_t>(v)])] = 1;
            if (std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; })) {
                ok = false;
                break;
            }
        }
        require(ok, what);
    }
};

// Blow up every listed edge in order; the edges must be pairwise
// non-interfering (no face holds two of them), which holds for the bipartite
// edge sets between independent groups used below.
std::vector<int> blow_group(StepState& st, std::vector<Face> edges, BlowStep step) {
    std::sort(edges.begin(), edges.end());
    std::vector<int> group;
    group.reserve(edges.size());
    for (const Face& e : edges) group.push_back(st.blow(e[0], e[1], step));
    return group;
}

}  // namespace

const char* to_string(BlowStep step) {
    switch (step) {
        case BlowStep::dim2: return "dim2";
        case BlowStep::step1: return "step1";
        case BlowStep::step2: return "step2";
        case BlowStep::step4: return "step4";
    }
    return "?";
}

ColoringStats& ColoringStats::operator+=(const ColoringStats& other) {
    insertions += other.insertions;
    blowups += other.blowups;
    invariant_checks += other.invariant_checks;
    return *this;
}

bool check_proper(const ColoredComplex& cc) {
    if (static_cast<int>(cc.color.size()) != cc.complex.vertex_count()) return false;
    for (int v : cc.color)
        if (v < 1 || v > cc.complex.dimension()) return false;
    for (const Face& f : cc.complex.faces())
        if (f.size() == 2 &&
            cc.color[static_cast<size_t>(f[0])] == cc.color[static_cast<size_t>(f[1])])
            return false;
    return true;
}

InsertResult insert_vertex_step(const SncComplex& c, const std::vector<int>& color, int v) {
    const int n = c.dimension();
    if (n < 3) throw std::invalid_argument("insert_vertex_step: dimension must be >= 3");
    if (v < 0 || v >= c.vertex_count())
        throw std::invalid_argument("insert_vertex_step: no such vertex");
    if (static_cast<int>(color.size()) != c.vertex_count())
        throw std::invalid_argument("insert_vertex_step: coloring size mismatch");
    if (color[static_cast<size_t>(v)] != 0)
        throw std::invalid_argument("insert_vertex_step: vertex already colored");
    for (int cv : color)
        if (cv < 0 || cv > n)
            throw std::invalid_argument("insert_vertex_step: color out of range");
    if (!proper_on_colored(c, color))
        throw std::invalid_argument("insert_vertex_step: coloring is not proper");

    StepState st{c, color, {}, {}};
    st.stats.insertions = 1;
    const std::vector<int> just_v{v};

    // Case 0: some class has no edge to v; v joins the lowest such class.
    for (int k = 1; k <= n; ++k) {
        const std::vector<int> cls = st.color_class(k);
        if (cls.empty() || adjacency(st.complex, cls, just_v).empty()) {
            st.color[static_cast<size_t>(v)] = k;
            return InsertResult{std::move(st.complex), std::move(st.color),
                                std::move(st.log), st.stats};
        }
    }

    // Case 0': two classes with no mutual edges merge, freeing a color for v.
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            const std::vector<int> ca = st.color_class(a);
            const std::vector<int> cb = st.color_class(b);
            if (!adjacency(st.complex, ca, cb).empty()) continue;
            for (int w : cb) st.color[static_cast<size_t>(w)] = a;
            st.color[static_cast<size_t>(v)] = b;
            st.require(proper_on_colored(st.complex, st.color),
                       "properness after class merge");
            return InsertResult{std::move(st.complex), std::move(st.color),
                                std::move(st.log), st.stats};
        }

    // Every class meets v and every pair of classes meets, so the identity
    // labeling F_k = class k is the lexicographically smallest one with
    // F_2 and F_3 adjacent.
    auto cls = [&](int k) { return st.color_class(k); };

    // Step 1: detach F_1 from v.
    std::vector<std::vector<int>> groups(1);  // groups[i] = E_{i+1}
    groups[0] = blow_group(st, adjacency(st.complex, cls(1), just_v), BlowStep::step1);
    st.require_no_edges(cls(1), just_v, "no F_1 edges to v after step 1");
    st.require_independent(groups[0], "E_1 independent");
    {
        std::vector<const std::vector<int>*> pattern{&groups[0]};
        std::vector<std::vector<int>> fs;
        for (int k = 2; k <= n; ++k) fs.push_back(cls(k));
        for (const auto& f : fs) pattern.push_back(&f);
        st.require_no_common_face(pattern, "E_1 meets F_2..F_n");
    }

    // Step 2: detach F_2 from F_3.
    groups.push_back(blow_group(st, adjacency(st.complex, cls(2), cls(3)), BlowStep::step2));
    st.require_no_edges(cls(2), cls(3), "no F_2 edges to F_3 after step 2");
    st.require_independent(groups[1], "E_2 independent");
    {
        std::vector<const std::vector<int>*> pattern{&groups[1], &groups[0]};
        std::vector<std::vector<int>> fs;
        for (int k = 4; k <= n; ++k) fs.push_back(cls(k));
        for (const auto& f : fs) pattern.push_back(&f);
        st.require_no_common_face(pattern, "E_2 meets E_1 and F_4..F_n");
    }

    // Step 4 loop: peel E_{i-2} away from F_{i+1} until the chain closes or
    // breaks off early.
    int exit_index = 0;  // i at which no edges were found; 0 = ran to E_{n-1}
    for (int i = 3; i <= n - 1; ++i) {
        std::vector<Face> edges = adjacency(st.complex, groups[static_cast<size_t>(i - 3)],
                                            cls(i + 1));
        if (edges.empty()) {
            exit_index = i;
            break;
        }
        groups.push_back(blow_group(st, std::move(edges), BlowStep::step4));
        st.require_no_edges(groups[static_cast<size_t>(i - 3)], cls(i + 1),
                            "no E_{i-2} edges to F_{i+1} after step 4");
        st.require_independent(groups.back(), "E_i independent");
        std::vector<const std::vector<int>*> pattern{&groups[static_cast<size_t>(i - 1)],
                                                     &groups[static_cast<size_t>(i - 2)]};
        std::vector<std::vector<int>> fs;
        for (int k = i + 2; k <= n; ++k) fs.push_back(cls(k));
        for (const auto& f : fs) pattern.push_back(&f);
        st.require_no_common_face(pattern, "E_i meets E_{i-1} and F_{i+2}..F_n");
    }

    // Assemble the final color groups; every merged pair is checked for
    // mutual edges right before it is committed.
    std::vector<std::vector<int>> final_classes(static_cast<size_t>(n));
    auto assign = [&](const std::vector<int>& vs, int k) {
        auto& dst = final_classes[static_cast<size_t>(k - 1)];
        dst.insert(dst.end(), vs.begin(), vs.end());
    };
    auto safe_pair = [&](const std::vector<int>& x, const std::vector<int>& y,
                         const char* what) { st.require_no_edges(x, y, what); };

    const std::vector<int> f1 = cls(1);
    safe_pair(f1, just_v, "merge F_1 with v");
    assign(f1, 1);
    assign(just_v, 1);

    const std::vector<int> f2 = cls(2), f3 = cls(3);
    safe_pair(f2, f3, "merge F_2 with F_3");

    if (n == 3) {
        // F_1 and v in color 1, E_1 and E_2 in color 2, F_2 and F_3 in 3.
        safe_pair(groups[0], groups[1], "merge E_1 with E_2");
        assign(groups[0], 2);
        assign(groups[1], 2);
        assign(f2, 3);
        assign(f3, 3);
    } else if (exit_index > 0) {
        assign(f2, 2);
        assign(f3, 2);
        const int i = exit_index;
        for (int k = 1; k <= i - 2; ++k) {
            const std::vector<int> fk3 = cls(k + 3);
            safe_pair(groups[static_cast<size_t>(k - 1)], fk3, "merge E_k with F_{k+3}");
            assign(groups[static_cast<size_t>(k - 1)], k + 2);
            assign(fk3, k + 2);
        }
        assign(groups[static_cast<size_t>(i - 2)], i + 1);  // E_{i-1} alone
        for (int k = i + 2; k <= n; ++k) assign(cls(k), k);
    } else {
        assign(f2, 2);
        assign(f3, 2);
        for (int k = 1; k <= n - 3; ++k) {
            const std::vector<int> fk3 = cls(k + 3);
            safe_pair(groups[static_cast<size_t>(k - 1)], fk3, "merge E_k with F_{k+3}");
            assign(groups[static_cast<size_t>(k - 1)], k + 2);
            assign(fk3, k + 2);
        }
        safe_pair(groups[static_cast<size_t>(n - 3)], groups[static_cast<size_t>(n - 2)],
                  "merge E_{n-2} with E_{n-1}");
        assign(groups[static_cast<size_t>(n - 3)], n);
        assign(groups[static_cast<size_t>(n - 2)], n);
    }

    for (int k = 1; k <= n; ++k)
        for (int w : final_classes[static_cast<size_t>(k - 1)])
            st.color[static_cast<size_t>(w)] = k;

    st.require(proper_on_colored(st.complex, st.color),
               "properness of the assembled coloring");
    return InsertResult{std::move(st.complex), std::move(st.color), std::move(st.log),
                        st.stats};
}

ColoringResult color_dim2(const SncComplex& c) {
    if (c.dimension() != 2)
        throw std::invalid_argument("color_dim2: dimension must be 2");

    SncComplex work = c;
    BlowUpLog log;
    ColoringStats stats;

    std::vector<int> coloring = bipartite_coloring(work);
    if (coloring.empty()) {
        // Odd cycle somewhere: subdivide every edge once, doubling all cycle
        // lengths, after which original and exceptional vertices alternate.
        std::vector<Face> edges;
        for (const Face& f : work.faces())
            if (f.size() == 2) edges.push_back(f);
        for (const Face& e : edges) {
            auto [next, created] = blow_up(work, e[0], e[1]);
            work = std::move(next);
            log.push_back(BlowUpEvent{e[0], e[1], created, BlowStep::dim2});
            ++stats.blowups;
        }
        coloring = bipartite_coloring(work);
        if (coloring.empty())
            throw internal_error("subdivided graph still has an odd cycle");
    }

    ColoredComplex out{std::move(work), std::move(coloring)};
    if (!check_proper(out)) throw internal_error("dim-2 coloring is not proper");
    return ColoringResult{std::move(out), std::move(log), stats};
}

ColoringResult color(const SncComplex& c) {
    const int n = c.dimension();
    if (n < 1) throw std::invalid_argument("color: dimension must be >= 1");

    if (n == 1) {
        for (const Face& f : c.faces())
            if (f.size() >= 2)
                throw impossible_coloring(
                    "dimension 1 admits no proper coloring of intersecting components");
        ColoredComplex out{c, std::vector<int>(static_cast<size_t>(c.vertex_count()), 1)};
        return ColoringResult{std::move(out), {}, {}};
    }
    if (n == 2) return color_dim2(c);

    const int original_count = c.vertex_count();
    SncComplex work = c;
    std::vector<int> coloring(static_cast<size_t>(original_count), 0);
    BlowUpLog log;
    ColoringStats stats;

    const int base = std::min(original_count, n);
    for (int v = 0; v < base; ++v) coloring[static_cast<size_t>(v)] = v + 1;

    for (int v = base; v < original_count; ++v) {
        InsertResult step = insert_vertex_step(work, coloring, v);
        work = std::move(step.complex);
        coloring = std::move(step.color);
        log.insert(log.end(), step.log.begin(), step.log.end());
        stats += step.stats;
    }

    ColoredComplex out{std::move(work), std::move(coloring)};
    if (!check_proper(out)) throw internal_error("final coloring is not proper");
    return ColoringResult{std::move(out), std::move(log), stats};
}

SncComplex replay_log(const SncComplex& input, const BlowUpLog& log) {
    SncComplex work = input;
    for (const BlowUpEvent& ev : log) {
        auto [next, created] = blow_up(work, ev.edge_u, ev.edge_v);
        if (created != ev.created)
            throw internal_error("replay produced a different exceptional vertex");
        work = std::move(next);
    }
    return work;
}

}  // namespace ramkill
