/*
   Copyright 2026 The bcsys Authors

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

#include <json.hpp>

#include "bcsys/numtower/bigfloat.hpp"
#include "bcsys/numtower/cyclotomic.hpp"
#include "bcsys/numtower/qmodz.hpp"
#include "bcsys/numtower/residue.hpp"

namespace bcsys::numtower {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const QmodZ& r);
void from_json(const Json& j, QmodZ& r);
void to_json(Json& j, const ResidueEndo& rho);
void from_json(const Json& j, ResidueEndo& rho);
void to_json(Json& j, const Cyclotomic& c);
void from_json(const Json& j, Cyclotomic& c);
void to_json(Json& j, const BigReal& x);
void to_json(Json& j, const BigComplex& z);
BigComplex big_complex_from_json(const Json& j);
void to_json(Json& j, const Bounded& b);

}  // namespace bcsys::numtower
