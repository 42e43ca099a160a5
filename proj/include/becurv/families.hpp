#pragma once

#include "becurv/graph.hpp"

namespace becurv {
namespace families {

using Preset = WeightedGraph::Preset;

// All generators produce unweighted graphs with decimal vertex labels
// "0".."n-1" and deterministic edge order.

WeightedGraph path(unsigned k, Preset preset = Preset::non_normalized);       // k >= 1 vertices
WeightedGraph cycle(unsigned n, Preset preset = Preset::non_normalized);      // n >= 3
WeightedGraph star(unsigned n, Preset preset = Preset::non_normalized);       // n >= 2 vertices: center "0" joined to n-1 leaves
WeightedGraph complete(unsigned n, Preset preset = Preset::non_normalized);   // n >= 1
WeightedGraph hypercube(unsigned d, Preset preset = Preset::non_normalized);  // d >= 1, 2^d vertices

// K_{1,3} with i extra edges among the leaves, added in the fixed order
// 1-2, 2-3, 1-3; i == 3 gives K4.
WeightedGraph star3_plus(unsigned i, Preset preset = Preset::non_normalized);  // 1 <= i <= 3

// Triangle 0-1-2 with pendant vertex 3 attached to 0.
WeightedGraph paw(Preset preset = Preset::non_normalized);

// k triangles sharing the common vertex "0"; 2k+1 vertices.
WeightedGraph friendship(unsigned k, Preset preset = Preset::non_normalized);  // k >= 1

// 3-regular on 10 vertices: outer 5-cycle 0..4, spokes to 5..9, inner pentagram.
WeightedGraph petersen(Preset preset = Preset::non_normalized);

}  // namespace families
}  // namespace becurv
