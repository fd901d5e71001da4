#include "bei/betti.hpp"

namespace bei {

BettiTable betti_polynomial_product(const std::vector<BettiTable>& tables) {
    BettiTable acc;
    acc.add(0, 0, 1);
    for (const BettiTable& t : tables) {
        BettiTable next;
        for (const auto& [ij, v] : acc.entries)
            for (const auto& [rs, w] : t.entries)
                next.add(ij.first + rs.first, ij.second + rs.second, v * w);
        acc = std::move(next);
    }
    return acc;
}

}  // namespace bei
