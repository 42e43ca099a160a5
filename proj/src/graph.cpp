#include "becurv/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <stdexcept>

namespace becurv {

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        unsigned char ca = a[i], cb = b[j];
        if (std::isdigit(ca) && std::isdigit(cb)) {
            // Compare the full digit runs numerically; ties broken by run
            // length so "007" and "7" stay distinguishable.
            std::size_t ia = i, jb = j;
            while (ia < a.size() && std::isdigit(static_cast<unsigned char>(a[ia]))) ++ia;
            while (jb < b.size() && std::isdigit(static_cast<unsigned char>(b[jb]))) ++jb;
            std::size_t pa = i, pb = j;
            while (pa < ia && a[pa] == '0') ++pa;
            while (pb < jb && b[pb] == '0') ++pb;
            std::size_t la = ia - pa, lb = jb - pb;
            if (la != lb) return la < lb;
            int cmp = a.compare(pa, la, b, pb, lb);
            if (cmp != 0) return cmp < 0;
            if (ia - i != jb - j) return (ia - i) < (jb - j);
            i = ia;
            j = jb;
        } else {
            if (ca != cb) return ca < cb;
            ++i;
            ++j;
        }
    }
    return (a.size() - i) < (b.size() - j);
}

WeightedGraph::Builder& WeightedGraph::Builder::add_vertex(const std::string& name) {
    vertices_.insert(name);
    return *this;
}

WeightedGraph::Builder& WeightedGraph::Builder::add_edge(const std::string& u,
                                                         const std::string& v, double weight) {
    if (u == v) throw std::invalid_argument("add_edge: self-loop at '" + u + "'");
    if (!(weight > 0.0)) throw std::invalid_argument("add_edge: non-positive weight on " + u + "-" + v);
    auto key = natural_less(u, v) ? std::make_pair(u, v) : std::make_pair(v, u);
    if (!edges_.emplace(key, weight).second)
        throw std::invalid_argument("add_edge: duplicate edge " + u + "-" + v);
    vertices_.insert(u);
    vertices_.insert(v);
    return *this;
}

WeightedGraph::Builder& WeightedGraph::Builder::set_measure(const std::string& name, double m) {
    if (!(m > 0.0)) throw std::invalid_argument("set_measure: non-positive measure at '" + name + "'");
    measures_[name] = m;
    vertices_.insert(name);
    return *this;
}

WeightedGraph WeightedGraph::Builder::build(Preset preset) const {
    if (preset != Preset::custom && !measures_.empty())
        throw std::invalid_argument("build: vertex measures require the custom preset");

    WeightedGraph g;
    g.preset_ = preset;
    g.names_.assign(vertices_.begin(), vertices_.end());

    std::map<std::string, VertexId, NaturalLess> index;
    for (VertexId i = 0; i < g.names_.size(); ++i) index[g.names_[i]] = i;

    g.adj_.resize(g.names_.size());
    g.weights_.resize(g.names_.size());
    g.unweighted_ = true;
    for (const auto& [key, w] : edges_) {
        VertexId u = index[key.first], v = index[key.second];
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        g.weights_[u].push_back(w);
        g.weights_[v].push_back(w);
        if (w != 1.0) g.unweighted_ = false;
    }
    g.num_edges_ = edges_.size();
    for (VertexId v = 0; v < g.adj_.size(); ++v) {
        std::vector<std::size_t> ord(g.adj_[v].size());
        for (std::size_t k = 0; k < ord.size(); ++k) ord[k] = k;
        std::sort(ord.begin(), ord.end(),
                  [&](std::size_t a, std::size_t b) { return g.adj_[v][a] < g.adj_[v][b]; });
        std::vector<VertexId> na(ord.size());
        std::vector<double> nw(ord.size());
        for (std::size_t k = 0; k < ord.size(); ++k) {
            na[k] = g.adj_[v][ord[k]];
            nw[k] = g.weights_[v][ord[k]];
        }
        g.adj_[v] = std::move(na);
        g.weights_[v] = std::move(nw);
    }

    g.measure_.resize(g.names_.size(), 1.0);
    switch (preset) {
        case Preset::non_normalized:
            break;  // m == 1
        case Preset::normalized:
            for (VertexId v = 0; v < g.names_.size(); ++v) {
                double mu = g.weight_sum(v);
                g.measure_[v] = mu > 0.0 ? mu : 1.0;  // isolated vertices keep measure 1
            }
            break;
        case Preset::custom:
            for (const auto& [name, m] : measures_) g.measure_[index.at(name)] = m;
            break;
    }
    return g;
}

std::optional<VertexId> WeightedGraph::find(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name, natural_less);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<VertexId>(it - names_.begin());
}

VertexId WeightedGraph::index_of(const std::string& name) const {
    auto v = find(name);
    if (!v) throw std::out_of_range("unknown vertex '" + name + "'");
    return *v;
}

bool WeightedGraph::adjacent(VertexId u, VertexId v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

double WeightedGraph::edge_weight(VertexId u, VertexId v) const {
    const auto& nb = adj_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v)
        throw std::out_of_range("edge_weight: " + names_[u] + "-" + names_[v] + " is not an edge");
    return weights_[u][it - nb.begin()];
}

double WeightedGraph::weight_sum(VertexId v) const {
    double s = 0.0;
    for (double w : weights_[v]) s += w;
    return s;
}

double WeightedGraph::weighted_degree(VertexId v) const { return weight_sum(v) / measure_[v]; }

bool WeightedGraph::operator==(const WeightedGraph& other) const {
    return preset_ == other.preset_ && names_ == other.names_ && adj_ == other.adj_ &&
           weights_ == other.weights_ && measure_ == other.measure_;
}

const char* preset_name(WeightedGraph::Preset p) {
    switch (p) {
        case WeightedGraph::Preset::normalized: return "normalized";
        case WeightedGraph::Preset::non_normalized: return "non-normalized";
        case WeightedGraph::Preset::custom: return "custom";
    }
    return "?";
}

std::optional<WeightedGraph::Preset> parse_preset(const std::string& s) {
    if (s == "normalized") return WeightedGraph::Preset::normalized;
    if (s == "non-normalized") return WeightedGraph::Preset::non_normalized;
    if (s == "custom") return WeightedGraph::Preset::custom;
    return std::nullopt;
}

std::optional<std::size_t> BallDecomposition::position(VertexId v) const {
    auto it = std::lower_bound(s1.begin(), s1.end(), v);
    if (it != s1.end() && *it == v) return static_cast<std::size_t>(it - s1.begin());
    it = std::lower_bound(s2.begin(), s2.end(), v);
    if (it != s2.end() && *it == v) return s1.size() + static_cast<std::size_t>(it - s2.begin());
    return std::nullopt;
}

BallDecomposition ball_decomposition(const WeightedGraph& g, VertexId x) {
    BallDecomposition d;
    d.center = x;
    d.s1 = g.neighbors(x);
    std::set<VertexId> seen(d.s1.begin(), d.s1.end());
    seen.insert(x);
    for (VertexId y : d.s1)
        for (VertexId z : g.neighbors(y))
            if (seen.insert(z).second) d.s2.push_back(z);
    std::sort(d.s2.begin(), d.s2.end());
    return d;
}

namespace {

// BFS distance from src to dst skipping one edge (the src--skip edge).
unsigned bfs_distance_without_edge(const WeightedGraph& g, VertexId src, VertexId dst,
                                   VertexId skip_a, VertexId skip_b) {
    std::vector<unsigned> dist(g.order(), kInfiniteGirth);
    std::deque<VertexId> q;
    dist[src] = 0;
    q.push_back(src);
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop_front();
        if (u == dst) return dist[u];
        for (VertexId w : g.neighbors(u)) {
            if ((u == skip_a && w == skip_b) || (u == skip_b && w == skip_a)) continue;
            if (dist[w] == kInfiniteGirth) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
        }
    }
    return kInfiniteGirth;
}

}  // namespace

unsigned girth_at(const WeightedGraph& g, VertexId x) {
    unsigned best = kInfiniteGirth;
    for (VertexId u : g.neighbors(x)) {
        unsigned d = bfs_distance_without_edge(g, x, u, x, u);
        if (d != kInfiniteGirth) best = std::min(best, d + 1);
    }
    return best;
}

unsigned girth(const WeightedGraph& g) {
    unsigned best = kInfiniteGirth;
    for (VertexId x = 0; x < g.order(); ++x) best = std::min(best, girth_at(g, x));
    return best;
}

bool is_c4_free(const WeightedGraph& g) {
    const std::size_t n = g.order();
    // Count common neighbors via length-2 paths through each middle vertex.
    std::vector<std::uint8_t> pair_count(n * n, 0);
    for (VertexId w = 0; w < n; ++w) {
        const auto& nb = g.neighbors(w);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                VertexId u = nb[i], v = nb[j];
                if (++pair_count[u * n + v] >= 2) return false;
            }
    }
    return true;
}

bool has_triangle_through(const WeightedGraph& g, VertexId x) {
    const auto& nb = g.neighbors(x);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (g.adjacent(nb[i], nb[j])) return true;
    return false;
}

bool is_triangle_free(const WeightedGraph& g) {
    for (VertexId x = 0; x < g.order(); ++x)
        if (has_triangle_through(g, x)) return false;
    return true;
}

std::vector<PuncturedComponent> punctured_ball_components(const WeightedGraph& g, VertexId x) {
    BallDecomposition d = ball_decomposition(g, x);
    const std::size_t total = d.size();
    std::vector<std::size_t> parent(total);
    for (std::size_t i = 0; i < total; ++i) parent[i] = i;
    auto root = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto join = [&](std::size_t a, std::size_t b) { parent[root(a)] = root(b); };

    // Spherical S1 edges and radial S1-S2 edges; S2-S2 edges excluded.
    for (std::size_t i = 0; i < d.s1.size(); ++i) {
        VertexId y = d.s1[i];
        for (VertexId z : g.neighbors(y)) {
            if (z == x) continue;
            auto pos = d.position(z);
            if (pos) join(i, *pos);
        }
    }

    std::map<std::size_t, PuncturedComponent> comps;
    for (std::size_t i = 0; i < total; ++i) {
        VertexId v = i < d.s1.size() ? d.s1[i] : d.s2[i - d.s1.size()];
        auto& c = comps[root(i)];
        c.vertices.push_back(v);
        if (i < d.s1.size())
            ++c.r;
        else
            ++c.s;
    }
    std::vector<PuncturedComponent> out;
    for (auto& [_, c] : comps) {
        std::sort(c.vertices.begin(), c.vertices.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const PuncturedComponent& a, const PuncturedComponent& b) {
        return a.vertices.front() < b.vertices.front();
    });
    return out;
}

std::set<unsigned> induced_cycle_lengths(const WeightedGraph& g, unsigned k_min) {
    const std::size_t n = g.order();
    if (n > 25) throw std::invalid_argument("induced_cycle_lengths: graph too large for subset search");
    std::set<unsigned> out;
    const unsigned lo = std::max(k_min, 3u);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        unsigned k = static_cast<unsigned>(__builtin_popcount(mask));
        if (k < lo) continue;
        if (out.count(k)) continue;
        // Induced subgraph is a k-cycle iff every member has induced degree
        // exactly 2 and the members form one connected piece.
        bool ok = true;
        VertexId first = 0;
        for (VertexId v = 0; v < n && ok; ++v) {
            if (!(mask >> v & 1)) continue;
            first = v;
            unsigned deg = 0;
            for (VertexId w : g.neighbors(v))
                if (mask >> w & 1) ++deg;
            if (deg != 2) ok = false;
        }
        if (!ok) continue;
        std::uint32_t visited = 0;
        std::deque<VertexId> q{first};
        visited |= 1u << first;
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop_front();
            for (VertexId w : g.neighbors(u))
                if ((mask >> w & 1) && !(visited >> w & 1)) {
                    visited |= 1u << w;
                    q.push_back(w);
                }
        }
        if (visited == mask) out.insert(k);
    }
    return out;
}

bool is_connected(const WeightedGraph& g) {
    if (g.order() == 0) return true;
    std::vector<char> seen(g.order(), 0);
    std::deque<VertexId> q{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop_front();
        for (VertexId w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push_back(w);
            }
    }
    return count == g.order();
}

unsigned min_degree(const WeightedGraph& g) {
    unsigned d = std::numeric_limits<unsigned>::max();
    for (VertexId v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return g.order() == 0 ? 0 : d;
}

unsigned max_degree(const WeightedGraph& g) {
    unsigned d = 0;
    for (VertexId v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

}  // namespace becurv
