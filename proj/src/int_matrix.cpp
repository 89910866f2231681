#include "hyperforge/int_matrix.hpp"

#include <utility>

namespace hyperforge {

int rank_fraction_free(IntMatrix m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    BigInt prev_pivot = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                // Division by the previous pivot is exact (Sylvester's identity).
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev_pivot;
            }
            m[i][c] = 0;
        }
        prev_pivot = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace hyperforge
