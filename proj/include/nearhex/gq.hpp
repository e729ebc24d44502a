// The three generalized quadrangles with three points per line, built from
// explicit combinatorial models with human-readable point labels:
//   t=1: the 3x3 grid;
//   t=2: 2-subsets (duads) of {1..6} as points, factors (perfect matchings)
//        as lines;
//   t=4: duads plus {1..6} plus {1'..6'}, lines the factors together with
//        the triples {i, {i,j}, j'}.
// Plus their arc/ovoid/spread combinatorics, all by exhaustive search.

#pragma once

#include <string>
#include <vector>

#include "nearhex/geometry.hpp"

namespace nearhex::gq {

struct GqModel {
    geom::IncidenceGeometry g;
    int t = 0;
    std::vector<std::string> labels;  // per point id
};

GqModel grid_gq();
GqModel duad_factor_gq();
GqModel q24_gq();

struct Arc {
    std::vector<int> points;  // sorted, pairwise non-collinear
    bool complete = false;    // no point extends it
};

// All k-arcs, ordered backtracking over ascending ids.
std::vector<Arc> arcs(const GqModel& m, int k);
// Points collinear with every arc point.
std::vector<int> centers(const GqModel& m, const std::vector<int>& arc);

// Exhaustive. Each ovoid is a sorted point set meeting every line once;
// each spread is a sorted list of line ids partitioning the points.
std::vector<std::vector<int>> ovoids(const GqModel& m);
std::vector<std::vector<int>> spreads(const GqModel& m);

enum class SubGqKind { Gq21, Gq22, Whole, Other };
struct SubGqResult {
    SubGqKind kind;
    std::vector<int> points;  // the generated subspace
};
// Line-closure of the seed, classified by what it induces.
SubGqResult subgq_generated(const GqModel& m, const std::vector<int>& seed);

}  // namespace nearhex::gq
