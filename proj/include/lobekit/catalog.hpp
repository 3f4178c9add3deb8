#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lobekit/graph.hpp"

namespace lobekit {

/// Named graphs and their constructions.
///
/// | name                    | params | construction                                   | valence   |
/// |-------------------------|--------|------------------------------------------------|-----------|
/// | k4                      |        | complete graph on 0..3                         | 3         |
/// | petersen                |        | outer cycle 0..4, spokes i~i+5, inner          | 3         |
/// |                         |        | pentagram 5+i ~ 5+(i+2)%5                      |           |
/// | cycle                   | n >= 3 | i ~ (i+1)%n                                    | 2         |
/// | path                    | n >= 1 | i ~ i+1 (n vertices)                           | 1,2       |
/// | star                    | n >= 1 | K_{1,n}: centre 0, leaves 1..n                 | n / 1     |
/// | complete_bipartite      | s, t   | sides 0..s-1 and s..s+t-1                      | t / s     |
/// | chorded_5_cycle         |        | cycle 0..4 plus chord 0~2                      | 3,2,3,2,2 |
/// | folkman                 |        | 10 edges of K5 (ids 0..9) against two copies   | 4         |
/// |                         |        | of each K5 vertex (ids 10+2a, 11+2a); an edge  |           |
/// |                         |        | {a,b} is adjacent to both copies of a and b    |           |
/// | holt                    |        | (x,y) in Z9 x Z3, id 3x+y; (x,y) ~ (4x±1, y+1) | 4         |
///
/// Throws InputError for an unknown name or invalid parameters.
Graph named_graph(std::string_view name, const std::vector<int>& params = {});

std::vector<std::string> catalog_names();

/// Documented valence of vertex v in the named construction.
int catalog_valence(std::string_view name, const std::vector<int>& params, int v);

}  // namespace lobekit
