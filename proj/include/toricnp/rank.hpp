#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "toricnp/field.hpp"

namespace toricnp {

// Sparse integer matrix: row_data[r] holds (column, value) pairs sorted by
// column, values nonzero.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, long long>>> row_data;
};

// Exact rank over the rationals (characteristic 0) or GF(p).  Characteristic
// 0 runs fraction-free elimination over the integers with 64-bit overflow
// detection and a big-integer retry, so the result is exact for any input.
long long sparse_rank(const SparseIntMatrix& m, const FieldSpec& field);

}  // namespace toricnp
