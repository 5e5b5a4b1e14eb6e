#pragma once

#include "tga/general_graph.hpp"

namespace tga {

/// Cycle on n >= 3 nodes: the unique 2-regular girth-n graph.
GeneralGraph cycle_graph(int n);

/// Complete graph on n nodes.
GeneralGraph complete_graph(int n);

/// Complete bipartite graph; parts are 0..a-1 and a..a+b-1.
GeneralGraph complete_bipartite_graph(int a, int b);

/// Petersen graph: 10 nodes, 3-regular, girth 5 (the (3,5)-cage).
GeneralGraph petersen_graph();

/// Heawood graph as the point-line incidence graph of the Fano plane:
/// 14 nodes, 3-regular, girth 6 (the (3,6)-cage).
GeneralGraph heawood_graph();

/// Point-line incidence graph of the projective plane of order 3:
/// 13 points + 13 lines, 4-regular, girth 6 (the (4,6)-cage).
GeneralGraph pg2_3_incidence_graph();

}  // namespace tga
