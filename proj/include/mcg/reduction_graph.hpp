#pragma once

// Dual graphs of curve-system decompositions of a genus-1 bordered surface:
// validation (connectivity, leaf/valence rules, ambient-genus bookkeeping),
// the four-case classification by the unique reduced cycle, and exhaustive
// leaf-fixing automorphism enumeration.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcg {

struct ComponentVertex {
    std::string id;
    int genus = 0;
};

struct GraphEdge {
    std::string id;
    std::pair<std::string, std::string> ends;  // unordered; equal for self-loops

    bool is_loop() const { return ends.first == ends.second; }
};

struct DecompositionGraph {
    std::vector<ComponentVertex> components;
    std::vector<std::string> leaves;  // boundary leaf vertex ids
    std::vector<GraphEdge> edges;

    std::vector<std::string> all_vertex_ids() const {
        std::vector<std::string> out;
        for (const auto& c : components) out.push_back(c.id);
        for (const auto& l : leaves) out.push_back(l);
        return out;
    }
    int valence(const std::string& v) const {
        int d = 0;
        for (const auto& e : edges) {
            if (e.ends.first == v) ++d;
            if (e.ends.second == v) ++d;  // loops count twice
        }
        return d;
    }
};

enum class CaseLabel { Case1, Case2, Case3, Case4 };

inline const char* case_name(CaseLabel c) {
    switch (c) {
        case CaseLabel::Case1: return "Case1";
        case CaseLabel::Case2: return "Case2";
        case CaseLabel::Case3: return "Case3";
        default: return "Case4";
    }
}

struct GraphDiagnostic {
    bool ok = true;
    std::string message;  // first failure found
};

inline GraphDiagnostic validate_report(const DecompositionGraph& g) {
    auto bad = [](const std::string& m) { return GraphDiagnostic{false, m}; };
    std::map<std::string, int> kind;  // 1 = component, 2 = leaf
    for (const auto& c : g.components) {
        if (c.genus < 0) return bad("negative genus label on " + c.id);
        if (!kind.emplace(c.id, 1).second) return bad("duplicate vertex id " + c.id);
    }
    for (const auto& l : g.leaves)
        if (!kind.emplace(l, 2).second) return bad("duplicate vertex id " + l);
    if (kind.empty()) return bad("empty graph");
    std::map<std::string, int> edge_ids;
    for (const auto& e : g.edges) {
        if (!edge_ids.emplace(e.id, 1).second) return bad("duplicate edge id " + e.id);
        if (!kind.count(e.ends.first) || !kind.count(e.ends.second))
            return bad("edge " + e.id + " has an unknown endpoint");
    }
    // connectivity
    std::map<std::string, bool> seen;
    std::vector<std::string> stack = {kind.begin()->first};
    seen[stack.back()] = true;
    while (!stack.empty()) {
        std::string v = stack.back();
        stack.pop_back();
        for (const auto& e : g.edges)
            for (const std::string& w : {e.ends.first, e.ends.second})
                if ((e.ends.first == v || e.ends.second == v) && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
    }
    for (const auto& [v, k] : kind)
        if (!seen[v]) return bad("graph is disconnected at " + v);
    // valence rules
    for (const auto& l : g.leaves)
        if (g.valence(l) != 1) return bad("boundary leaf " + l + " must have valence 1");
    for (const auto& c : g.components)
        if (c.genus == 0 && g.valence(c.id) < 3)
            return bad("genus-0 component " + c.id + " must have valence >= 3");
    // ambient genus: sum of genera + cycle rank = 1
    long long v_count = static_cast<long long>(kind.size());
    long long e_count = static_cast<long long>(g.edges.size());
    long long rank = e_count - v_count + 1;
    long long genus_sum = 0;
    for (const auto& c : g.components) genus_sum += c.genus;
    if (genus_sum + rank != 1)
        return bad("sum of genera + cycle rank must be 1 (got " +
                   std::to_string(genus_sum + rank) + ")");
    return GraphDiagnostic{};
}

inline bool validate(const DecompositionGraph& g) { return validate_report(g).ok; }

inline long long cycle_rank(const DecompositionGraph& g) {
    auto d = validate_report(g);
    if (!d.ok) throw std::invalid_argument("cycle_rank: " + d.message);
    return static_cast<long long>(g.edges.size()) -
           static_cast<long long>(g.components.size() + g.leaves.size()) + 1;
}

// Length of the unique reduced cycle of a rank-1 graph: iteratively strip
// valence-1 vertices; the surviving edges form the cycle.
namespace detail {
inline long long unique_cycle_length(const DecompositionGraph& g) {
    std::map<std::string, int> deg;
    for (const auto& v : g.all_vertex_ids()) deg[v] = g.valence(v);
    std::vector<char> removed(g.edges.size(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            if (removed[i] || g.edges[i].is_loop()) continue;
            const auto& e = g.edges[i];
            if (deg[e.ends.first] == 1 || deg[e.ends.second] == 1) {
                removed[i] = 1;
                --deg[e.ends.first];
                --deg[e.ends.second];
                changed = true;
            }
        }
    }
    long long len = 0;
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (!removed[i]) ++len;
    return len;
}
}  // namespace detail

inline CaseLabel classify_case(const DecompositionGraph& g) {
    auto d = validate_report(g);
    if (!d.ok) throw std::invalid_argument("classify_case: " + d.message);
    long long rank = cycle_rank(g);
    bool has_genus1 = false;
    for (const auto& c : g.components)
        if (c.genus >= 1) has_genus1 = true;
    if (has_genus1) {
        if (rank != 0) throw std::logic_error("classify_case: genus-1 vertex with a cycle");
        return CaseLabel::Case1;
    }
    if (rank != 1) throw std::logic_error("classify_case: cycle rank must be 0 or 1");
    long long len = detail::unique_cycle_length(g);
    if (len == 1) return CaseLabel::Case2;
    if (len == 2) return CaseLabel::Case3;
    return CaseLabel::Case4;
}

// A graph automorphism fixing every boundary leaf.  Self-loop orientation
// reversal cannot be seen at the vertex/edge level, so it is tracked as a
// flag per self-loop; an automorphism with the same vertex and edge maps but
// different flags is listed as a separate entry.
struct GraphAutomorphism {
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, std::string> edge_map;
    std::map<std::string, bool> loop_reversed;  // one entry per self-loop kept by edge_map

    bool is_vertex_identity() const {
        for (const auto& [k, v] : vertex_map)
            if (k != v) return false;
        for (const auto& [k, v] : edge_map)
            if (k != v) return false;
        return true;
    }
    friend bool operator==(const GraphAutomorphism& a, const GraphAutomorphism& b) {
        return a.vertex_map == b.vertex_map && a.edge_map == b.edge_map &&
               a.loop_reversed == b.loop_reversed;
    }
    friend bool operator<(const GraphAutomorphism& a, const GraphAutomorphism& b) {
        if (a.vertex_map != b.vertex_map) return a.vertex_map < b.vertex_map;
        if (a.edge_map != b.edge_map) return a.edge_map < b.edge_map;
        return a.loop_reversed < b.loop_reversed;
    }
};

inline GraphAutomorphism compose(const DecompositionGraph&, const GraphAutomorphism& a,
                                 const GraphAutomorphism& b) {
    GraphAutomorphism c;
    for (const auto& [k, v] : b.vertex_map) c.vertex_map[k] = a.vertex_map.at(v);
    for (const auto& [k, v] : b.edge_map) c.edge_map[k] = a.edge_map.at(v);
    for (const auto& [k, v] : b.loop_reversed)
        c.loop_reversed[k] = v != a.loop_reversed.at(b.edge_map.at(k));
    return c;
}

inline std::vector<GraphAutomorphism> leaf_fixing_automorphisms(const DecompositionGraph& g,
                                                                int budget = 12) {
    auto d = validate_report(g);
    if (!d.ok) throw std::invalid_argument("leaf_fixing_automorphisms: " + d.message);
    if (static_cast<int>(g.components.size() + g.leaves.size()) > budget)
        throw std::invalid_argument("leaf_fixing_automorphisms: vertex budget exceeded");

    // candidate vertex maps: permute component vertices within equal genus,
    // fix leaves pointwise
    std::vector<std::string> comp_ids;
    for (const auto& c : g.components) comp_ids.push_back(c.id);
    auto genus_of = [&](const std::string& id) {
        for (const auto& c : g.components)
            if (c.id == id) return c.genus;
        return -1;
    };
    std::vector<std::string> perm = comp_ids;
    std::sort(perm.begin(), perm.end());

    std::vector<GraphAutomorphism> out;
    do {
        std::map<std::string, std::string> vm;
        bool ok = true;
        std::vector<std::string> sorted_ids = comp_ids;
        std::sort(sorted_ids.begin(), sorted_ids.end());
        for (std::size_t i = 0; i < sorted_ids.size() && ok; ++i) {
            if (genus_of(sorted_ids[i]) != genus_of(perm[i])) ok = false;
            vm[sorted_ids[i]] = perm[i];
        }
        if (!ok) continue;
        for (const auto& l : g.leaves) vm[l] = l;

        // group edges by mapped endpoint class; require a bijection within
        // each class.  Enumerate the per-class matchings.
        auto canon = [](std::string a, std::string b) {
            return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
        };
        std::map<std::pair<std::string, std::string>, std::vector<std::string>> classes;
        for (const auto& e : g.edges) classes[canon(e.ends.first, e.ends.second)].push_back(e.id);
        ok = true;
        for (const auto& [pr, ids] : classes) {
            auto it = classes.find(canon(vm.at(pr.first), vm.at(pr.second)));
            if (it == classes.end() || it->second.size() != ids.size()) ok = false;
        }
        if (!ok) continue;

        // iterate over all combinations of per-class matchings
        std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> cls;
        for (const auto& [pr, ids] : classes) {
            auto targets = classes.at(canon(vm.at(pr.first), vm.at(pr.second)));
            std::sort(targets.begin(), targets.end());
            cls.emplace_back(ids, targets);
        }
        std::vector<std::vector<std::string>> target_perm;
        for (auto& c : cls) target_perm.push_back(c.second);
        // odometer over next_permutation of each class's target list
        bool more = true;
        while (more) {
            std::map<std::string, std::string> em;
            for (std::size_t ci = 0; ci < cls.size(); ++ci)
                for (std::size_t j = 0; j < cls[ci].first.size(); ++j)
                    em[cls[ci].first[j]] = target_perm[ci][j];
            // self-loop orientation flags: one entry per self-loop, all sign
            // combinations
            std::vector<std::string> loops;
            for (const auto& e : g.edges)
                if (e.is_loop()) loops.push_back(e.id);
            std::size_t combos = static_cast<std::size_t>(1) << loops.size();
            for (std::size_t mask = 0; mask < combos; ++mask) {
                GraphAutomorphism a;
                a.vertex_map = vm;
                a.edge_map = em;
                for (std::size_t li = 0; li < loops.size(); ++li)
                    a.loop_reversed[loops[li]] = (mask >> li) & 1;
                out.push_back(std::move(a));
            }
            // advance the odometer
            more = false;
            for (std::size_t ci = 0; ci < cls.size(); ++ci) {
                if (std::next_permutation(target_perm[ci].begin(), target_perm[ci].end())) {
                    more = true;
                    break;
                }
                // wrapped: reset and carry
                std::sort(target_perm[ci].begin(), target_perm[ci].end());
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mcg
