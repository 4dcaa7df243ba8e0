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

#include <string>

#include <json.hpp>

#include "avc/avcode.hpp"
#include "avc/listdec.hpp"

namespace avc {

using ordered_json = nlohmann::ordered_json;

/// Code spec:
///   {"field":"p,e","sets":[[0,1,2],"full",...],
///    "family":{"type":"total","u":3}
///            | {"type":"weighted","weights":[1,2],"u":3}
///            | {"type":"box","bounds":[7,4]}
///            | {"type":"explicit","monomials":[[0,0],[1,0]]}}
Code code_from_json(const ordered_json& j);
ordered_json code_to_json(const Code& code);

ordered_json plan_to_json(const DecoderPlan& plan);
DecoderPlan plan_from_json(const ordered_json& j);

/// Array-of-terms fixture format: [[[e1,...,em],coeff], ...].
ordered_json mpoly_to_json(const MPoly& p);
MPoly mpoly_from_json(const ordered_json& j, const Field& f, int arity);

/// Received words / codewords as arrays of integer encodings.
std::vector<int> word_from_json(const ordered_json& j);

MonomialFamily family_from_json(const ordered_json& j, const GridShape& shape);
ordered_json family_to_json(const MonomialFamily& fam);

}  // namespace avc
