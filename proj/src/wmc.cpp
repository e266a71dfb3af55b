#include "mwsn/wmc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace mwsn::wmc {

void validate(const WmcInstance& inst) {
    for (double w : inst.weights)
        if (!(w >= 0.0) || !std::isfinite(w))
            throw std::invalid_argument("wmc: element weights must be non-negative and finite");
    for (const auto& s : inst.sets)
        for (int id : s)
            if (id < 0 || id >= static_cast<int>(inst.weights.size()))
                throw std::invalid_argument("wmc: set references an unknown element id");
    if (inst.budget < 0) throw std::invalid_argument("wmc: budget must be non-negative");
}

WmcSolution greedy_wmc(const WmcInstance& inst) {
    validate(inst);
    WmcSolution sol;
    std::vector<char> covered(inst.weights.size(), 0);
    std::vector<char> used(inst.sets.size(), 0);
    for (int round = 0; round < inst.budget; ++round) {
        int best = -1;
        double best_gain = 0.0;
        for (size_t j = 0; j < inst.sets.size(); ++j) {
            if (used[j]) continue;
            double gain = 0.0;
            for (int id : inst.sets[j])
                if (!covered[id]) gain += inst.weights[id];
            if (gain > best_gain) {
                best_gain = gain;
                best = static_cast<int>(j);
            }
        }
        if (best < 0) break;  // every remaining set has zero gain
        used[best] = 1;
        sol.chosen.push_back(best);
        for (int id : inst.sets[best]) {
            if (!covered[id]) sol.covered_weight += inst.weights[id];
            covered[id] = 1;
        }
    }
    return sol;
}

WmcSolution brute_force_wmc(const WmcInstance& inst) {
    validate(inst);
    const int r = static_cast<int>(inst.sets.size());
    if (r > 20) throw std::invalid_argument("brute_force_wmc: more than 20 sets");

    const size_t blocks = (inst.weights.size() + 63) / 64;
    std::vector<std::vector<uint64_t>> masks(r, std::vector<uint64_t>(blocks, 0));
    for (int j = 0; j < r; ++j)
        for (int id : inst.sets[j]) masks[j][id / 64] |= uint64_t{1} << (id % 64);

    WmcSolution best;
    std::vector<uint64_t> un(blocks);
    std::vector<int> idx;
    for (uint32_t sub = 0; sub < (uint32_t{1} << r); ++sub) {
        if (std::popcount(sub) > inst.budget) continue;
        std::fill(un.begin(), un.end(), 0);
        idx.clear();
        for (int j = 0; j < r; ++j)
            if (sub >> j & 1) {
                idx.push_back(j);
                for (size_t b = 0; b < blocks; ++b) un[b] |= masks[j][b];
            }
        double w = 0.0;
        for (size_t id = 0; id < inst.weights.size(); ++id)
            if (un[id / 64] >> (id % 64) & 1) w += inst.weights[id];
        if (w > best.covered_weight ||
            (w == best.covered_weight && !best.chosen.empty() &&
             std::lexicographical_compare(idx.begin(), idx.end(), best.chosen.begin(),
                                          best.chosen.end()))) {
            best.covered_weight = w;
            best.chosen = idx;
        }
    }
    return best;
}

}  // namespace mwsn::wmc
