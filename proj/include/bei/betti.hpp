#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace bei {

// Graded Betti numbers beta_{i,j} of a module, with the derived readings used
// throughout: regularity max(j - i), projective dimension max(i), extremal
// entries, and the Betti polynomial sum beta_{i,j} s^i t^j.
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;  // only nonzero values

    void add(int i, int j, long long v) {
        if (v == 0) return;
        auto& e = entries[{i, j}];
        e += v;
        if (e == 0) entries.erase({i, j});
    }

    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    int reg() const {
        int r = 0;
        for (const auto& [ij, v] : entries) r = std::max(r, ij.second - ij.first);
        return r;
    }

    int pd() const {
        int p = 0;
        for (const auto& [ij, v] : entries) p = std::max(p, ij.first);
        return p;
    }

    // Nonzero entries (i,j) with no other nonzero entry weakly north-east of
    // them (r >= i and s >= j).
    std::vector<std::tuple<int, int, long long>> extremal() const {
        std::vector<std::tuple<int, int, long long>> out;
        for (const auto& [ij, v] : entries) {
            bool ext = true;
            for (const auto& [rs, w] : entries)
                if (rs != ij && rs.first >= ij.first && rs.second >= ij.second) {
                    ext = false;
                    break;
                }
            if (ext) out.emplace_back(ij.first, ij.second, v);
        }
        return out;
    }

    // A module has a unique extremal Betti number iff beta_{pd, pd+reg} != 0.
    bool unique_extremal() const { return at(pd(), pd() + reg()) != 0; }

    bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

// Coefficientwise product of Betti polynomials. The Betti table of a module
// split across disjoint variable sets is the product of the factors' tables,
// which is what makes graph decompositions multiplicative.
BettiTable betti_polynomial_product(const std::vector<BettiTable>& tables);

}  // namespace bei
