/*
   Copyright 2026 The avc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "avc/linalg.hpp"

#include <algorithm>

namespace avc {

namespace {

// In-place forward elimination; returns pivot columns. `reduce` additionally
// scales pivots to 1 and clears above, leaving RREF.
std::vector<long long> eliminate(const Field& f, std::vector<int>& a, long long rows,
                                 long long cols, bool reduce) {
    std::vector<long long> pivots;
    long long prow = 0;
    for (long long col = 0; col < cols && prow < rows; ++col) {
        long long sel = -1;
        for (long long r = prow; r < rows; ++r)
            if (a[r * cols + col] != 0) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != prow)
            std::swap_ranges(a.begin() + sel * cols, a.begin() + (sel + 1) * cols,
                             a.begin() + prow * cols);
        int* prowp = a.data() + prow * cols;
        if (reduce && prowp[col] != 1) {
            int s = f.inv(prowp[col]);
            for (long long j = col; j < cols; ++j)
                if (prowp[j] != 0) prowp[j] = f.mul(prowp[j], s);
        }
        long long start = reduce ? 0 : prow + 1;
        for (long long r = start; r < rows; ++r) {
            if (r == prow) continue;
            int* rp = a.data() + r * cols;
            int factor = reduce ? rp[col] : f.div(rp[col], prowp[col]);
            if (factor == 0) continue;
            for (long long j = col; j < cols; ++j)
                if (prowp[j] != 0) rp[j] = f.sub(rp[j], f.mul(factor, prowp[j]));
        }
        pivots.push_back(col);
        ++prow;
    }
    return pivots;
}

}  // namespace

long long GFMatrix::rank() const {
    std::vector<int> a(data_);
    return (long long)eliminate(field_, a, rows_, cols_, false).size();
}

std::vector<int> GFMatrix::nullspace_vector() const {
    std::vector<int> a(data_);
    auto pivots = eliminate(field_, a, rows_, cols_, true);
    if ((long long)pivots.size() == cols_) return {};
    // First free column; set it to 1, read pivot values off the RREF rows.
    std::vector<bool> is_pivot(cols_, false);
    for (long long c : pivots) is_pivot[c] = true;
    long long free_col = 0;
    while (free_col < cols_ && is_pivot[free_col]) ++free_col;
    std::vector<int> x(cols_, 0);
    x[free_col] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) {
        long long c = pivots[i];
        // Row i has the pivot at column c: x_c = -a[i][free_col] * x_free.
        x[c] = field_.neg(a[i * cols_ + free_col]);
    }
    return x;
}

}  // namespace avc
