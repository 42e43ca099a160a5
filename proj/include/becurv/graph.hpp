#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace becurv {

using VertexId = std::uint32_t;

// Lexicographic comparison with numeric-aware handling of digit runs, so
// "v2" < "v10" and integer-labeled vertices sort in decimal order.
bool natural_less(const std::string& a, const std::string& b);

struct NaturalLess {
    bool operator()(const std::string& a, const std::string& b) const {
        return natural_less(a, b);
    }
};

constexpr unsigned kInfiniteGirth = std::numeric_limits<unsigned>::max();

// Simple undirected weighted graph: positive edge weights mu, positive
// vertex measure m. Immutable after construction; the vertex order is the
// natural order of the identifiers and all adjacency lists are sorted by it.
class WeightedGraph {
public:
    enum class Preset { normalized, non_normalized, custom };

    class Builder {
    public:
        Builder& add_vertex(const std::string& name);
        Builder& add_edge(const std::string& u, const std::string& v, double weight = 1.0);
        // Only meaningful with the custom preset; build() rejects it otherwise.
        Builder& set_measure(const std::string& name, double m);
        WeightedGraph build(Preset preset) const;

    private:
        std::set<std::string, NaturalLess> vertices_;
        std::map<std::pair<std::string, std::string>, double> edges_;  // key: minmax pair
        std::map<std::string, double> measures_;
    };

    std::size_t order() const { return names_.size(); }
    std::size_t num_edges() const { return num_edges_; }
    Preset preset() const { return preset_; }
    bool unweighted() const { return unweighted_; }

    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& name_of(VertexId v) const { return names_[v]; }
    std::optional<VertexId> find(const std::string& name) const;
    VertexId index_of(const std::string& name) const;  // throws if unknown

    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
    bool adjacent(VertexId u, VertexId v) const;
    double edge_weight(VertexId u, VertexId v) const;  // throws if not an edge
    double measure(VertexId v) const { return measure_[v]; }

    unsigned degree(VertexId v) const { return static_cast<unsigned>(adj_[v].size()); }
    // D_x = (1/m_x) sum_{y~x} mu_xy
    double weighted_degree(VertexId v) const;
    // mu_x = sum_{y~x} mu_xy
    double weight_sum(VertexId v) const;

    bool operator==(const WeightedGraph& other) const;

private:
    friend class Builder;
    WeightedGraph() = default;

    Preset preset_ = Preset::non_normalized;
    bool unweighted_ = true;
    std::size_t num_edges_ = 0;
    std::vector<std::string> names_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::vector<double>> weights_;  // aligned with adj_
    std::vector<double> measure_;
};

const char* preset_name(WeightedGraph::Preset p);
std::optional<WeightedGraph::Preset> parse_preset(const std::string& s);

// Spheres around a center vertex. Coordinates for the local forms: the
// vertices of s1 first, then s2, both in ascending vertex order.
struct BallDecomposition {
    VertexId center;
    std::vector<VertexId> s1;
    std::vector<VertexId> s2;

    std::size_t size() const { return s1.size() + s2.size(); }
    // Position of v among s1 ++ s2, or nullopt if outside the punctured ball.
    std::optional<std::size_t> position(VertexId v) const;
};

BallDecomposition ball_decomposition(const WeightedGraph& g, VertexId x);

// Minimal cycle length through x; kInfiniteGirth when none.
unsigned girth_at(const WeightedGraph& g, VertexId x);
unsigned girth(const WeightedGraph& g);

// No two distinct vertices share two or more common neighbors (C4 as a
// subgraph, not merely induced).
bool is_c4_free(const WeightedGraph& g);

bool has_triangle_through(const WeightedGraph& g, VertexId x);
bool is_triangle_free(const WeightedGraph& g);

// Connected component of the punctured 2-ball around x, using the
// spherical edges of S1 and the radial S1-S2 edges only; edges inside S2
// are ignored. r and s count the component's vertices in S1 and S2.
struct PuncturedComponent {
    std::vector<VertexId> vertices;  // ascending
    std::size_t r = 0;
    std::size_t s = 0;
};

std::vector<PuncturedComponent> punctured_ball_components(const WeightedGraph& g, VertexId x);

// Lengths k >= max(k_min, 3) for which an induced k-cycle exists.
// Exhaustive vertex-subset search; intended for small graphs.
std::set<unsigned> induced_cycle_lengths(const WeightedGraph& g, unsigned k_min);

bool is_connected(const WeightedGraph& g);
unsigned min_degree(const WeightedGraph& g);
unsigned max_degree(const WeightedGraph& g);

}  // namespace becurv
