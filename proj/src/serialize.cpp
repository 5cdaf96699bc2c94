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

#include "linperm/serialize.hpp"

namespace linperm {

namespace {

std::vector<u64> uvec_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an integer array");
    std::vector<u64> v;
    for (const auto& c : j) {
        if (!c.is_number_unsigned() && !c.is_number_integer())
            throw ParseError("expected nonnegative integers");
        const auto val = c.get<long long>();
        if (val < 0) throw ParseError("coefficients must be nonnegative");
        v.push_back(static_cast<u64>(val));
    }
    return v;
}

const json& field_at(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<FFElem> base_vec_from_json(const TowerCtx& ctx, const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of F_q elements");
    std::vector<FFElem> v;
    for (const auto& c : j) v.push_back(ctx.make_elem(Level::base_q, uvec_from_json(c)));
    return v;
}

json base_vec_to_json(const std::vector<FFElem>& v) {
    json j = json::array();
    for (const auto& c : v) j.push_back(c.coeffs);
    return j;
}

}  // namespace

json ctx_to_json(const TowerCtx& ctx) {
    return json{{"p", ctx.p()},
                {"e", ctx.e()},
                {"m", ctx.m()},
                {"s", ctx.s()},
                {"seed", ctx.seed()},
                {"base_modulus", ctx.field(Level::base_q).modulus()},
                {"mid_modulus", ctx.field(Level::mid_qm).modulus()},
                {"top_modulus", ctx.field(Level::top_qn).modulus()}};
}

TowerCtx ctx_from_json(const json& j) {
    const u64 p = field_at(j, "p").get<u64>();
    const unsigned e = field_at(j, "e").get<unsigned>();
    const unsigned m = field_at(j, "m").get<unsigned>();
    const unsigned s = field_at(j, "s").get<unsigned>();
    const u64 seed = j.contains("seed") ? j.at("seed").get<u64>() : 0;
    PPoly base, mid, top;
    if (j.contains("base_modulus")) base = uvec_from_json(j.at("base_modulus"));
    if (j.contains("mid_modulus")) mid = uvec_from_json(j.at("mid_modulus"));
    if (j.contains("top_modulus")) top = uvec_from_json(j.at("top_modulus"));
    return TowerCtx::make_with_moduli(p, e, m, s, seed, std::move(base),
                                      std::move(mid), std::move(top));
}

json ffelem_to_json(const FFElem& a) {
    return json{{"level", level_name(a.level)}, {"coeffs", a.coeffs}};
}

FFElem ffelem_from_json(const TowerCtx& ctx, const json& j) {
    const auto level = level_from_name(field_at(j, "level").get<std::string>());
    if (!level) throw ParseError("unknown level name");
    return ctx.make_elem(*level, uvec_from_json(field_at(j, "coeffs")));
}

json rpoly_to_json(const RPoly& a) { return base_vec_to_json(a); }

RPoly rpoly_from_json(const TowerCtx& ctx, const json& j) {
    auto v = base_vec_from_json(ctx, j);
    return rp_make(ctx, std::move(v));
}

json linpoly_to_json(const LinPoly& f) {
    json coeffs = json::array();
    for (const auto& c : f.a) coeffs.push_back(c.coeffs);
    return json{{"coeffs", coeffs}};
}

LinPoly linpoly_from_json(const TowerCtx& ctx, const json& j) {
    const json& arr = field_at(j, "coeffs");
    if (!arr.is_array()) throw ParseError("LinPoly coeffs must be an array");
    std::vector<FFElem> coeffs;
    for (const auto& c : arr)
        coeffs.push_back(ctx.make_elem(Level::mid_qm, uvec_from_json(c)));
    return lp_make(ctx, std::move(coeffs));
}

json rmatrix_to_json(const RMatrix& A) {
    json rows = json::array();
    for (const auto& row : A.e) {
        json r = json::array();
        for (const auto& entry : row) r.push_back(rpoly_to_json(entry));
        rows.push_back(std::move(r));
    }
    return rows;
}

RMatrix rmatrix_from_json(const TowerCtx& ctx, const json& j) {
    if (!j.is_array() || j.size() != ctx.m())
        throw ParseError("RMatrix must be an m x m array");
    RMatrix A;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != ctx.m())
            throw ParseError("RMatrix must be an m x m array");
        std::vector<RPoly> r;
        for (const auto& entry : row) r.push_back(rpoly_from_json(ctx, entry));
        A.e.push_back(std::move(r));
    }
    return A;
}

json factorization_to_json(const CycloFactorization& fac) {
    json out = json::array();
    for (const auto& f : fac.factors)
        out.push_back(json{{"coeffs", base_vec_to_json(f.coeffs)},
                           {"mult", f.mult},
                           {"degree", f.degree}});
    return out;
}

json elem_factor_to_json(const ElemFactor& f) {
    if (f.kind == ElemFactor::Kind::transvection)
        return json{{"kind", "transvection"},
                    {"j", f.j},
                    {"k", f.k},
                    {"poly", rpoly_to_json(f.c)}};
    return json{{"kind", "dilation"}, {"l", f.j}, {"poly", rpoly_to_json(f.c)}};
}

json normal_pair_to_json(const NormalPair& pair) {
    json j{{"alpha", ffelem_to_json(pair.alpha)},
           {"u", ffelem_to_json(pair.u)},
           {"self_dual", pair.self_dual}};
    if (pair.beta.level == Level::top_qn) {
        j["beta"] = ffelem_to_json(pair.beta);
        j["v"] = ffelem_to_json(pair.v);
    }
    return j;
}

NormalPair normal_pair_from_json(const TowerCtx& ctx, const json& j) {
    NormalPair pair;
    pair.alpha = ffelem_from_json(ctx, field_at(j, "alpha"));
    pair.u = ffelem_from_json(ctx, field_at(j, "u"));
    pair.self_dual = j.contains("self_dual") && j.at("self_dual").get<bool>();
    if (j.contains("beta") && j.contains("v")) {
        pair.beta = ffelem_from_json(ctx, j.at("beta"));
        pair.v = ffelem_from_json(ctx, j.at("v"));
    } else {
        attach_top_frame(ctx, pair);
    }
    return pair;
}

json prescribed_to_json(const PrescribedCoeffs& c) {
    return json{{"p", c.p},
                {"f11", base_vec_to_json(c.f11)},
                {"f12", base_vec_to_json(c.f12)},
                {"f21", base_vec_to_json(c.f21)},
                {"f22", base_vec_to_json(c.f22)}};
}

PrescribedCoeffs prescribed_from_json(const TowerCtx& ctx, const json& j) {
    PrescribedCoeffs c;
    c.p = field_at(j, "p").get<unsigned>();
    c.f11 = base_vec_from_json(ctx, field_at(j, "f11"));
    c.f12 = base_vec_from_json(ctx, field_at(j, "f12"));
    c.f21 = base_vec_from_json(ctx, field_at(j, "f21"));
    c.f22 = base_vec_from_json(ctx, field_at(j, "f22"));
    return c;
}

std::string elem_power_string(const TowerCtx& ctx, const FFElem& a) {
    if (ctx.is_zero(a)) return "0";
    const auto k = ctx.dlog(a);
    if (!k) return "";
    if (*k == 0) return "1";
    return "g^" + std::to_string(*k);
}

}  // namespace linperm
