#include "trung/exact_rank.hpp"

#include <algorithm>

namespace trung {

int rank_dense_bareiss(std::vector<std::vector<BigInt>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t rank = 0;
    BigInt prev = 1;
    while (rank < rows && rank < cols) {
        // any nonzero pivot works; take the first
        std::size_t pi = rank;
        std::size_t pj = cols;
        for (std::size_t i = rank; i < rows && pj == cols; ++i)
            for (std::size_t j = rank; j < cols; ++j)
                if (m[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pj == cols) break;
        std::swap(m[rank], m[pi]);
        if (pj != rank)
            for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][rank], m[i][pj]);

        const BigInt& pivot = m[rank][rank];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = rank + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * pivot - m[i][rank] * m[rank][j]) / prev;
            m[i][rank] = 0;
        }
        prev = pivot;
        ++rank;
    }
    return static_cast<int>(rank);
}

namespace {

using Column = std::vector<std::pair<int, BigInt>>;

void normalize_by_gcd(Column& col) {
    BigInt g = 0;
    for (const auto& [row, value] : col) {
        g = gcd(g, value);
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (auto& [row, value] : col) value /= g;
}

// target <- a*target - b*pivot, merged by row; the shared top row cancels.
Column combine(const Column& target, const Column& pivot, const BigInt& a, const BigInt& b) {
    Column out;
    out.reserve(target.size() + pivot.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < target.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
            out.emplace_back(target[i].first, a * target[i].second);
            ++i;
        } else if (i == target.size() || pivot[j].first < target[i].first) {
            out.emplace_back(pivot[j].first, -b * pivot[j].second);
            ++j;
        } else {
            BigInt value = a * target[i].second - b * pivot[j].second;
            if (value != 0) out.emplace_back(target[i].first, std::move(value));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

int rank_sparse_elimination(int rows, const SparseColumns& columns) {
    std::vector<int> owner(static_cast<std::size_t>(rows), -1);
    std::vector<Column> stored;
    int rank = 0;
    for (const auto& raw : columns) {
        Column col;
        col.reserve(raw.size());
        for (auto [row, value] : raw)
            if (value != 0) col.emplace_back(row, BigInt(value));
        while (!col.empty()) {
            int top = col.back().first;
            int own = owner[static_cast<std::size_t>(top)];
            if (own < 0) {
                normalize_by_gcd(col);
                owner[static_cast<std::size_t>(top)] = static_cast<int>(stored.size());
                stored.push_back(std::move(col));
                ++rank;
                break;
            }
            const Column& pivot = stored[static_cast<std::size_t>(own)];
            BigInt pv = pivot.back().second;
            BigInt cv = col.back().second;
            BigInt g = gcd(pv, cv);
            col = combine(col, pivot, pv / g, cv / g);
            normalize_by_gcd(col);
        }
    }
    return rank;
}

int exact_rank(int rows, const SparseColumns& columns) {
    const std::size_t cols = columns.size();
    if (rows == 0 || cols == 0) return 0;
    if (static_cast<std::size_t>(rows) * cols <= 10000) {
        std::vector<std::vector<BigInt>> dense(static_cast<std::size_t>(rows),
                                               std::vector<BigInt>(cols, 0));
        for (std::size_t j = 0; j < cols; ++j)
            for (auto [row, value] : columns[j]) dense[static_cast<std::size_t>(row)][j] = value;
        return rank_dense_bareiss(std::move(dense));
    }
    return rank_sparse_elimination(rows, columns);
}

}  // namespace trung
