#ifndef TRUNG_EXACT_RANK_HPP
#define TRUNG_EXACT_RANK_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "trung/poly.hpp"

namespace trung {

// Columns of an integer matrix as (row, value) entries, rows ascending.
using SparseColumns = std::vector<std::vector<std::pair<int, std::int64_t>>>;

// Fraction-free Bareiss elimination, exact over the integers.
int rank_dense_bareiss(std::vector<std::vector<BigInt>> m);

// Exact sparse column elimination with gcd normalization; pivots on the
// largest remaining row index of each column.
int rank_sparse_elimination(int rows, const SparseColumns& columns);

// Rank over Q. Small matrices go through dense Bareiss, large ones through
// the sparse elimination; both are exact.
int exact_rank(int rows, const SparseColumns& columns);

}  // namespace trung

#endif  // TRUNG_EXACT_RANK_HPP
