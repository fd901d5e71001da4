#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace bei {

// Sparse vector over Z: (column, value) pairs sorted by column.
using SparseIntRow = std::vector<std::pair<int, long long>>;

// Exact rank of the sparse integer matrix with the given rows.
//   field_char == 0: rank over Q, via fraction-free row elimination with
//     content stripping (row ops are cross-multiplications over arbitrary
//     precision integers, each new row divided by its gcd).
//   field_char == p: rank over Z/p, p an odd prime or 2, p < 2^31.
int sparse_rank(const std::vector<SparseIntRow>& rows, long field_char);

bool is_prime(long p);

}  // namespace bei
