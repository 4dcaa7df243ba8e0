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

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "avc/error.hpp"

namespace avc {

class FieldElem;

/// F_q for q = p^e, q <= 2^16. Elements are encoded as integers in [0, q):
/// value = sum c_j p^j where (c_0..c_{e-1}) are the coordinates in the power
/// basis of the modulus root. The modulus is canonical: the monic irreducible
/// of degree e whose coefficient vector, read as a base-p integer (low degree
/// least significant), is smallest. Immutable and safe to share across threads.
class Field {
   public:
    /// Builds F_{p^e}. Throws NonPrimeCharacteristic / FieldTooLarge.
    static Field make(long long p, int e);

    /// Parses a "p,e" spec string, e.g. "5,1" or "2,7".
    static Field parse(std::string_view spec);

    int p() const;
    int e() const;
    int q() const;
    std::string spec() const;  // "p,e"

    /// Modulus coefficients, low degree first, length e+1, monic.
    /// For e = 1 this is the conventional X - 0, i.e. {0, 1} (unused).
    const std::vector<int>& modulus() const;

    bool compatible(const Field& o) const { return p() == o.p() && e() == o.e(); }

    // Arithmetic on encoded values. Division by zero throws DivisionByZero.
    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;
    int div(int a, int b) const;
    int pow(int a, long long k) const;

    std::vector<FieldElem> elements() const;
    FieldElem elem(int value) const;

    bool operator==(const Field& o) const { return compatible(o); }

   private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// A field element tagged with its field; operators check the tag and throw
/// MixedFields on cross-field use. Hot paths use Field's int-based ops instead.
class FieldElem {
   public:
    FieldElem(Field f, int value) : field_(std::move(f)), v_(value) {}

    int value() const { return v_; }
    const Field& field() const { return field_; }

    FieldElem operator+(const FieldElem& o) const { return apply(o, &Field::add); }
    FieldElem operator-(const FieldElem& o) const { return apply(o, &Field::sub); }
    FieldElem operator*(const FieldElem& o) const { return apply(o, &Field::mul); }
    FieldElem operator/(const FieldElem& o) const { return apply(o, &Field::div); }
    FieldElem operator-() const { return FieldElem(field_, field_.neg(v_)); }

    bool operator==(const FieldElem& o) const {
        return field_.compatible(o.field_) && v_ == o.v_;
    }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

   private:
    FieldElem apply(const FieldElem& o, int (Field::*op)(int, int) const) const {
        if (!field_.compatible(o.field_))
            fail(ErrorCode::MixedFields, "operands live in different fields");
        return FieldElem(field_, (field_.*op)(v_, o.v_));
    }

    Field field_;
    int v_;
};

}  // namespace avc
