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

#pragma once

#include <vector>

#include "avc/gf.hpp"

namespace avc {

/// Dense row-major matrix over F_q (encoded entries).
class GFMatrix {
   public:
    GFMatrix(Field f, long long rows, long long cols)
        : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    long long rows() const { return rows_; }
    long long cols() const { return cols_; }
    const Field& field() const { return field_; }

    int& at(long long r, long long c) { return data_[r * cols_ + c]; }
    int at(long long r, long long c) const { return data_[r * cols_ + c]; }

    int* row(long long r) { return data_.data() + r * cols_; }
    const int* row(long long r) const { return data_.data() + r * cols_; }

    /// Row echelon rank; works on a copy.
    long long rank() const;

    /// A deterministic nonzero kernel vector: reduced echelon form, first free
    /// column set to 1, pivots back-substituted. Empty vector if the kernel is
    /// trivial.
    std::vector<int> nullspace_vector() const;

   private:
    Field field_;
    long long rows_, cols_;
    std::vector<int> data_;
};

}  // namespace avc
