/*
 * Copyright 2026 The linperm authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <json.hpp>

#include "linperm/families.hpp"
#include "linperm/twoprime.hpp"

namespace linperm {

using json = nlohmann::json;

// All parsers throw ParseError on malformed input.

json ctx_to_json(const TowerCtx& ctx);
TowerCtx ctx_from_json(const json& j);

json ffelem_to_json(const FFElem& a);
FFElem ffelem_from_json(const TowerCtx& ctx, const json& j);

json rpoly_to_json(const RPoly& a);
RPoly rpoly_from_json(const TowerCtx& ctx, const json& j);

json linpoly_to_json(const LinPoly& f);
LinPoly linpoly_from_json(const TowerCtx& ctx, const json& j);

json rmatrix_to_json(const RMatrix& A);
RMatrix rmatrix_from_json(const TowerCtx& ctx, const json& j);

json factorization_to_json(const CycloFactorization& fac);

json elem_factor_to_json(const ElemFactor& f);

json normal_pair_to_json(const NormalPair& pair);
NormalPair normal_pair_from_json(const TowerCtx& ctx, const json& j);

json prescribed_to_json(const PrescribedCoeffs& c);
PrescribedCoeffs prescribed_from_json(const TowerCtx& ctx, const json& j);

/// "g^k" when a dlog table exists at a's level (g the registered primitive),
/// "0" for zero; empty string when no table is available.
std::string elem_power_string(const TowerCtx& ctx, const FFElem& a);

}  // namespace linperm
