#include "becurv/families.hpp"

#include <stdexcept>
#include <string>

namespace becurv {
namespace families {

namespace {
std::string lbl(unsigned i) { return std::to_string(i); }
}

WeightedGraph path(unsigned k, Preset preset) {
    if (k < 1) throw std::invalid_argument("path: k must be >= 1");
    WeightedGraph::Builder b;
    b.add_vertex(lbl(0));
    for (unsigned i = 1; i < k; ++i) b.add_edge(lbl(i - 1), lbl(i));
    return b.build(preset);
}

WeightedGraph cycle(unsigned n, Preset preset) {
    if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
    WeightedGraph::Builder b;
    for (unsigned i = 0; i + 1 < n; ++i) b.add_edge(lbl(i), lbl(i + 1));
    b.add_edge(lbl(n - 1), lbl(0));
    return b.build(preset);
}

WeightedGraph star(unsigned n, Preset preset) {
    if (n < 2) throw std::invalid_argument("star: n must be >= 2");
    WeightedGraph::Builder b;
    for (unsigned i = 1; i < n; ++i) b.add_edge(lbl(0), lbl(i));
    return b.build(preset);
}

WeightedGraph complete(unsigned n, Preset preset) {
    if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
    WeightedGraph::Builder b;
    b.add_vertex(lbl(0));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) b.add_edge(lbl(i), lbl(j));
    return b.build(preset);
}

WeightedGraph hypercube(unsigned d, Preset preset) {
    if (d < 1 || d > 20) throw std::invalid_argument("hypercube: d must be in 1..20");
    WeightedGraph::Builder b;
    unsigned n = 1u << d;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned bit = 0; bit < d; ++bit) {
            unsigned j = i ^ (1u << bit);
            if (i < j) b.add_edge(lbl(i), lbl(j));
        }
    return b.build(preset);
}

WeightedGraph star3_plus(unsigned i, Preset preset) {
    if (i < 1 || i > 3) throw std::invalid_argument("star3_plus: i must be in 1..3");
    WeightedGraph::Builder b;
    b.add_edge(lbl(0), lbl(1));
    b.add_edge(lbl(0), lbl(2));
    b.add_edge(lbl(0), lbl(3));
    b.add_edge(lbl(1), lbl(2));
    if (i >= 2) b.add_edge(lbl(2), lbl(3));
    if (i >= 3) b.add_edge(lbl(1), lbl(3));
    return b.build(preset);
}

WeightedGraph paw(Preset preset) {
    WeightedGraph::Builder b;
    b.add_edge(lbl(0), lbl(1));
    b.add_edge(lbl(0), lbl(2));
    b.add_edge(lbl(1), lbl(2));
    b.add_edge(lbl(0), lbl(3));
    return b.build(preset);
}

WeightedGraph friendship(unsigned k, Preset preset) {
    if (k < 1) throw std::invalid_argument("friendship: k must be >= 1");
    WeightedGraph::Builder b;
    for (unsigned t = 1; t <= k; ++t) {
        unsigned u = 2 * t - 1, v = 2 * t;
        b.add_edge(lbl(0), lbl(u));
        b.add_edge(lbl(0), lbl(v));
        b.add_edge(lbl(u), lbl(v));
    }
    return b.build(preset);
}

WeightedGraph petersen(Preset preset) {
    WeightedGraph::Builder b;
    for (unsigned i = 0; i < 5; ++i) {
        b.add_edge(lbl(i), lbl((i + 1) % 5));
        b.add_edge(lbl(i), lbl(5 + i));
        b.add_edge(lbl(5 + i), lbl(5 + (i + 2) % 5));
    }
    return b.build(preset);
}

}  // namespace families
}  // namespace becurv
