#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "becurv/curvature.hpp"
#include "becurv/graph.hpp"

namespace becurv {

// Candidate ordering inside the canonicalization search. Both orders give
// the same canonical form; having two lets tests cross-check the search.
enum class OrderingHeuristic { low_degree_first, high_degree_first };

// Lexicographically minimal graph6 string over all vertex permutations,
// found by a slot-by-slot permutation search with prefix pruning. Equal
// output iff isomorphic. Requires an unweighted graph with n <= 10.
std::string canonical_graph6(const WeightedGraph& g,
                             OrderingHeuristic heuristic = OrderingHeuristic::low_degree_first);

struct EnumerationOptions {
    unsigned n_max = 7;  // 1..8
    bool c4_free = false;
    bool triangle_free = false;
    unsigned min_degree = 0;
    WeightedGraph::Preset preset = WeightedGraph::Preset::non_normalized;
    unsigned threads = 0;  // 0 = all hardware threads
    OrderingHeuristic heuristic = OrderingHeuristic::low_degree_first;
};

// Every connected graph on 1..n_max vertices satisfying the predicates,
// exactly once up to isomorphism: edge-subset DFS over labeled graphs with
// incremental triangle/C4 pruning and canonical-form deduplication.
// Emission order is deterministic.
void enumerate_graphs(const EnumerationOptions& opts,
                      const std::function<void(const WeightedGraph&, const std::string&)>& emit);

std::vector<std::pair<std::string, WeightedGraph>> enumerate_graphs(const EnumerationOptions& opts);

struct ScanEntry {
    std::string canonical;
    double min_curvature = 0.0;
};

struct ScanReport {
    EnumerationOptions constraints;
    double tol = 1e-9;
    std::size_t enumerated = 0;
    std::vector<ScanEntry> satisfying;      // CD(0, inf) holds, sorted by canonical key
    std::vector<ScanEntry> non_satisfying;  // the rest of the enumerated set
    bool has_expected = false;
    std::vector<std::string> expected;  // canonical forms
    std::vector<std::string> missing;
    std::vector<std::string> unexpected;
    std::vector<std::string> notes;  // documented exclusions, e.g. infinite families

    bool passed() const { return has_expected && missing.empty() && unexpected.empty(); }
    std::string to_json() const;
    std::string to_table() const;
};

// Enumerates under the constraints and tests CD(0, inf) per graph with the
// constraints' preset. When an expected list is given, fills the set
// differences.
ScanReport scan_classification(const EnumerationOptions& opts,
                               const std::optional<std::vector<std::string>>& expected = std::nullopt,
                               double tol = 1e-9);

enum class TheoremId { t2_2, t2_4, t2_5, t2_6 };
std::optional<TheoremId> parse_theorem_id(const std::string& s);
const char* theorem_id_name(TheoremId id);

// Enumeration constraints of the theorem's graph universe (girth / C4 /
// minimum-degree hypotheses plus the Laplacian preset it is stated for).
EnumerationOptions theorem_universe(TheoremId id, unsigned n_max);

// Scans the theorem's graph universe up to n_max vertices and compares the
// satisfying set against the finite members of its classification list.
ScanReport verify_theorem(TheoremId id, unsigned n_max, unsigned threads = 0);

struct ConjectureEntry {
    std::string canonical;
    bool holds_normalized = false;
    bool holds_non_normalized = false;
    std::set<unsigned> induced_cycle_lengths;  // lengths >= 5
    bool is_cycle = false;                     // the C_n carve-out
};

struct ConjectureReport {
    unsigned n_max = 0;
    std::size_t enumerated = 0;
    // Triangle-free graphs satisfying CD(0, inf) under at least one preset.
    std::vector<ConjectureEntry> entries;

    std::string to_json() const;
    std::string to_table() const;
};

// Exploratory probe: which triangle-free graphs with nonnegative curvature
// contain induced cycles of length >= 5. Never a pass/fail.
ConjectureReport conjecture_scan(unsigned n_max, unsigned threads = 0);

}  // namespace becurv
