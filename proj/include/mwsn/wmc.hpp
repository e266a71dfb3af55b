#pragma once

#include <vector>

namespace mwsn::wmc {

// Weighted maximum coverage: pick at most `budget` sets maximizing the total
// weight of the union of covered elements. Elements are 0..weights.size()-1.
struct WmcInstance {
    std::vector<double> weights;
    std::vector<std::vector<int>> sets;
    int budget = 0;
};

struct WmcSolution {
    std::vector<int> chosen;  // set indices in selection order
    double covered_weight = 0.0;
};

void validate(const WmcInstance& inst);

// Greedy selection by maximum uncovered weight; ties go to the lowest set
// index, zero-gain sets are never chosen.
WmcSolution greedy_wmc(const WmcInstance& inst);

// Exhaustive optimum over all subsets of size <= budget. Guarded to at most
// 20 sets; among optima the lexicographically least index list wins.
WmcSolution brute_force_wmc(const WmcInstance& inst);

}  // namespace mwsn::wmc
