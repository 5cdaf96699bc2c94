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

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "linperm/golden.hpp"
#include "linperm/serialize.hpp"

namespace {

using namespace linperm;

// Exit codes: 0 ok, 1 domain error, 2 input/parse error.

void emit_ok(const json& payload) {
    json out{{"status", "ok"}, {"payload", payload},
             {"diagnostics", json::array()}};
    std::cout << out.dump(2) << "\n";
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

// q = p^e for a prime p; used by commands keyed on q instead of (p, e).
std::pair<u64, unsigned> split_prime_power(u64 q) {
    if (q < 2) throw ParseError("q must be a prime power >= 2");
    const auto fac = factor_u64(q);
    if (fac.size() != 1) throw ParseError("q must be a prime power");
    return {fac[0].first, fac[0].second};
}

u64 brute_bound_from_env() {
    const char* v = std::getenv("LINPERM_BRUTE_BOUND");
    if (!v) return kDefaultBruteBound;
    try {
        return std::stoull(v);
    } catch (...) {
        throw ParseError("LINPERM_BRUTE_BOUND is not a valid integer");
    }
}

// Deterministic normal/dual pair for a context; commands that need a basis
// and are given none derive this one, so repeated runs agree byte for byte.
NormalPair default_pair(const TowerCtx& ctx) {
    Rng rng(ctx.seed());
    return dual_basis(ctx, find_normal(ctx, rng));
}

NormalPair pair_for(const TowerCtx& ctx, const std::string& pair_file) {
    if (pair_file.empty()) return default_pair(ctx);
    const NormalPair pair = normal_pair_from_json(ctx, load_json(pair_file));
    if (!is_dual_pair(ctx, pair))
        throw DomainError("supplied basis pair is not a dual normal pair");
    return pair;
}

json linpoly_payload(const TowerCtx& ctx, const LinPoly& f) {
    json j = linpoly_to_json(f);
    json powers = json::array();
    for (const auto& c : f.a) powers.push_back(elem_power_string(ctx, c));
    j["coeff_powers"] = powers;
    return j;
}

json report_to_json(const GoldenReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    return json{{"example", rep.example},
                {"pass", rep.all_pass()},
                {"checks", checks}};
}

int run(int argc, char** argv) {
    CLI::App app{"linear permutation polynomials of F_{q^{ms}} with "
                 "coefficients in F_{q^m}"};
    app.require_subcommand(1);

    u64 seed = 0;
    app.add_option("--seed", seed, "seed for all randomized searches");

    // tower
    u64 t_p = 2;
    unsigned t_e = 1, t_m = 2, t_s = 2;
    auto* c_tower = app.add_subcommand("tower", "build a field tower context");
    c_tower->add_option("p", t_p, "characteristic")->required();
    c_tower->add_option("e", t_e, "q = p^e")->required();
    c_tower->add_option("m", t_m, "coefficient field degree over F_q")->required();
    c_tower->add_option("s", t_s, "x^s - 1 defines the cyclic ring")->required();

    // factor
    u64 f_q = 2;
    unsigned f_s = 2;
    auto* c_factor = app.add_subcommand("factor", "factor x^s - 1 over F_q");
    c_factor->add_option("q", f_q, "prime power")->required();
    c_factor->add_option("s", f_s, "exponent")->required();

    // sizes
    u64 z_q = 2;
    unsigned z_m = 2, z_s = 2;
    auto* c_sizes = app.add_subcommand("sizes", "orders of the matrix groups");
    c_sizes->add_option("q", z_q, "prime power")->required();
    c_sizes->add_option("m", z_m, "matrix dimension")->required();
    c_sizes->add_option("s", z_s, "x^s - 1 defines the ring")->required();

    // psi / phi
    std::string ctx_file, matrix_file, poly_file, pair_file;
    auto* c_psi = app.add_subcommand("psi", "matrix to linearized polynomial");
    c_psi->add_option("--ctx", ctx_file, "tower context JSON")->required();
    c_psi->add_option("--matrix", matrix_file, "matrix JSON")->required();
    c_psi->add_option("--pair", pair_file, "normal basis pair JSON");

    auto* c_phi = app.add_subcommand("phi", "linearized polynomial to matrix");
    c_phi->add_option("--ctx", ctx_file, "tower context JSON")->required();
    c_phi->add_option("--poly", poly_file, "polynomial JSON")->required();
    c_phi->add_option("--pair", pair_file, "normal basis pair JSON");

    // gen
    std::string family = "bpp";
    unsigned g_steps = 3;
    auto* c_gen = app.add_subcommand("gen", "generate a family member");
    c_gen->add_option("family", family, "spp|pp|bpp|sbpp|dpp|sdpp")->required();
    c_gen->add_option("--ctx", ctx_file, "tower context JSON")->required();
    c_gen->add_option("--pair", pair_file, "normal basis pair JSON");
    c_gen->add_option("--steps", g_steps, "transvection count for spp/pp");

    // verify
    std::string method = "kernel";
    auto* c_verify = app.add_subcommand("verify", "permutation test");
    c_verify->add_option("--ctx", ctx_file, "tower context JSON")->required();
    c_verify->add_option("--poly", poly_file, "polynomial JSON")->required();
    c_verify->add_option("--pair", pair_file, "normal basis pair JSON");
    c_verify->add_option("--method", method, "kernel|brute|both")
        ->check(CLI::IsMember({"kernel", "brute", "both"}));

    // decompose
    auto* c_dec = app.add_subcommand("decompose",
                                     "factor a matrix into elementary ones");
    c_dec->add_option("--ctx", ctx_file, "tower context JSON")->required();
    c_dec->add_option("--matrix", matrix_file, "matrix JSON")->required();

    // twoprime
    u64 w_q = 5;
    unsigned w_p = 3;
    std::string coeffs_file, criterion = "exact";
    auto* c_two = app.add_subcommand(
        "twoprime", "prescribed-coefficient criteria at m = 2, s = p");
    c_two->add_option("q", w_q, "prime power")->required();
    c_two->add_option("p", w_p, "odd prime s")->required();
    c_two->add_option("--coeffs", coeffs_file, "coefficients JSON")->required();
    c_two->add_option("--criterion", criterion, "exact|sufficient|corgusta")
        ->check(CLI::IsMember({"exact", "sufficient", "corgusta"}));

    // golden
    std::string example;
    auto* c_gold = app.add_subcommand("golden", "rebuild a published example");
    c_gold->add_option("example", example, "ex1|bpp3|finalex")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (c_tower->parsed()) {
        const TowerCtx ctx = TowerCtx::make(t_p, t_e, t_m, t_s, seed);
        emit_ok(ctx_to_json(ctx));
        return 0;
    }
    if (c_factor->parsed()) {
        const auto [p, e] = split_prime_power(f_q);
        const TowerCtx ctx = TowerCtx::make(p, e, 1, f_s, seed);
        emit_ok(json{{"q", f_q},
                     {"s", f_s},
                     {"factors", factorization_to_json(factor_cyclotomic(ctx))}});
        return 0;
    }
    if (c_sizes->parsed()) {
        const auto [p, e] = split_prime_power(z_q);
        const TowerCtx ctx = TowerCtx::make(p, e, z_m, z_s, seed);
        emit_ok(json{{"gl", size_gl(ctx).get_str()},
                     {"sl", size_sl(ctx).get_str()},
                     {"borel", size_borel(ctx).get_str()},
                     {"diag", size_diag(ctx).get_str()},
                     {"units", size_units(ctx).get_str()}});
        return 0;
    }
    if (c_psi->parsed()) {
        const TowerCtx ctx = ctx_from_json(load_json(ctx_file));
        const NormalPair pair = pair_for(ctx, pair_file);
        const RMatrix A = rmatrix_from_json(ctx, load_json(matrix_file));
        emit_ok(json{{"poly", linpoly_payload(ctx, psi(ctx, A, pair))},
                     {"pair", normal_pair_to_json(pair)}});
        return 0;
    }
    if (c_phi->parsed()) {
        const TowerCtx ctx = ctx_from_json(load_json(ctx_file));
        const NormalPair pair = pair_for(ctx, pair_file);
        const LinPoly f = linpoly_from_json(ctx, load_json(poly_file));
        emit_ok(json{{"matrix", rmatrix_to_json(phi(ctx, f, pair))},
                     {"pair", normal_pair_to_json(pair)}});
        return 0;
    }
    if (c_gen->parsed()) {
        const TowerCtx ctx = ctx_from_json(load_json(ctx_file));
        const NormalPair pair = pair_for(ctx, pair_file);
        Rng rng(seed ^ 0x5bf03635u);
        LinPoly f = lp_zero(ctx);
        json cert;
        if (family == "spp") {
            f = gen_spp(ctx, pair, g_steps, rng);
            cert = nullptr;
        } else if (family == "pp") {
            const LinPoly h = gen_spp(ctx, pair, g_steps, rng);
            RPoly t = rp_random(ctx, rng);
            while (!is_unit(ctx, rp_add(ctx, t, rp_one(ctx))))
                t = rp_random(ctx, rng);
            f = gen_pp(ctx, pair, h, t);
            cert = nullptr;
        } else {
            FamilyGenResult res{lp_zero(ctx), mat_zero(ctx)};
            if (family == "bpp") res = gen_bpp(ctx, pair, rng);
            else if (family == "sbpp") res = gen_sbpp(ctx, pair, rng);
            else if (family == "dpp") res = gen_dpp(ctx, pair, rng);
            else if (family == "sdpp") res = gen_sdpp(ctx, pair, rng);
            else throw ParseError("unknown family '" + family + "'");
            f = res.f;
            cert = rmatrix_to_json(res.cert);
        }
        emit_ok(json{{"family", family},
                     {"poly", linpoly_payload(ctx, f)},
                     {"certificate", cert},
                     {"pair", normal_pair_to_json(pair)}});
        return 0;
    }
    if (c_verify->parsed()) {
        const TowerCtx ctx = ctx_from_json(load_json(ctx_file));
        const LinPoly f = linpoly_from_json(ctx, load_json(poly_file));
        const u64 bound = brute_bound_from_env();
        json payload;
        bool is_pp = false;
        if (method == "kernel") {
            is_pp = is_permutation(ctx, f);
        } else if (method == "brute") {
            is_pp = is_permutation_bruteforce(ctx, f, bound);
        } else {
            const bool kernel = is_permutation(ctx, f);
            const bool brute = is_permutation_bruteforce(ctx, f, bound);
            if (kernel != brute)
                throw DomainError("kernel and brute-force methods disagree");
            is_pp = kernel;
        }
        payload["is_pp"] = is_pp;
        json tags = json::array();
        if (is_pp) {
            const NormalPair pair = pair_for(ctx, pair_file);
            for (FamilyTag t : classify_family(ctx, f, pair))
                tags.push_back(family_name(t));
        }
        payload["tags"] = tags;
        emit_ok(payload);
        return 0;
    }
    if (c_dec->parsed()) {
        const TowerCtx ctx = ctx_from_json(load_json(ctx_file));
        const RMatrix A = rmatrix_from_json(ctx, load_json(matrix_file));
        json factors = json::array();
        for (const auto& f : decompose_elementary(ctx, A))
            factors.push_back(elem_factor_to_json(f));
        emit_ok(json{{"factors", factors}});
        return 0;
    }
    if (c_two->parsed()) {
        const auto [p, e] = split_prime_power(w_q);
        const TowerCtx ctx = TowerCtx::make(p, e, 2, w_p, seed);
        const json j = load_json(coeffs_file);
        json payload{{"criterion", criterion}};
        if (criterion == "corgusta") {
            std::vector<FFElem> f;
            const json& arr = j.contains("f") ? j.at("f") : j;
            if (!arr.is_array()) throw ParseError("expected {\"f\": [...]}");
            for (const auto& c : arr) {
                if (!c.is_number_integer())
                    throw ParseError("coefficients must be integers");
                f.push_back(ctx.from_int(Level::base_q, c.get<u64>()));
            }
            payload["holds"] = corgusta_check(ctx, f, w_p);
        } else {
            PrescribedCoeffs c = prescribed_from_json(ctx, j);
            if (c.p != w_p)
                throw ParseError("coefficients file disagrees with p");
            if (criterion == "exact") {
                payload["is_pp"] = is_pp_exact(ctx, c);
            } else {
                payload["verdict"] =
                    is_pp_sufficient(ctx, c) == SufficientVerdict::PP
                        ? "PP"
                        : "inconclusive";
            }
        }
        emit_ok(payload);
        return 0;
    }
    if (c_gold->parsed()) {
        emit_ok(report_to_json(golden_run(example)));
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        json out{{"status", "error"},
                 {"payload", nullptr},
                 {"diagnostics", json::array({e.what()})}};
        std::cout << out.dump(2) << "\n";
        return 2;
    } catch (const Error& e) {
        json out{{"status", "error"},
                 {"payload", nullptr},
                 {"diagnostics", json::array({e.what()})}};
        std::cout << out.dump(2) << "\n";
        return 1;
    }
}
