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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "linperm/golden.hpp"
#include "linperm/serialize.hpp"

namespace py = pybind11;

namespace {

using namespace linperm;

// Structured values cross the boundary as JSON strings; the python package
// wraps them with json.loads/dumps so the schemas match the CLI exactly.
class Tower {
  public:
    Tower(u64 p, unsigned e, unsigned m, unsigned s, u64 seed)
        : ctx_(TowerCtx::make(p, e, m, s, seed)) {
        Rng rng(ctx_.seed());
        pair_ = dual_basis(ctx_, find_normal(ctx_, rng));
    }

    explicit Tower(const std::string& ctx_json)
        : ctx_(ctx_from_json(json::parse(ctx_json))) {
        Rng rng(ctx_.seed());
        pair_ = dual_basis(ctx_, find_normal(ctx_, rng));
    }

    std::string to_json() const { return ctx_to_json(ctx_).dump(); }
    std::string pair_json() const { return normal_pair_to_json(pair_).dump(); }

    std::string sizes() const {
        return json{{"gl", size_gl(ctx_).get_str()},
                    {"sl", size_sl(ctx_).get_str()},
                    {"borel", size_borel(ctx_).get_str()},
                    {"diag", size_diag(ctx_).get_str()},
                    {"units", size_units(ctx_).get_str()}}
            .dump();
    }

    std::string factor() const {
        return factorization_to_json(factor_cyclotomic(ctx_)).dump();
    }

    std::string psi_json(const std::string& matrix_json) const {
        const RMatrix A = rmatrix_from_json(ctx_, json::parse(matrix_json));
        return linpoly_to_json(psi(ctx_, A, pair_)).dump();
    }

    std::string phi_json(const std::string& poly_json) const {
        const LinPoly f = linpoly_from_json(ctx_, json::parse(poly_json));
        return rmatrix_to_json(phi(ctx_, f, pair_)).dump();
    }

    std::string gen(const std::string& family, u64 seed) const {
        Rng rng(seed);
        FamilyGenResult res{lp_zero(ctx_), mat_zero(ctx_)};
        if (family == "bpp") res = gen_bpp(ctx_, pair_, rng);
        else if (family == "sbpp") res = gen_sbpp(ctx_, pair_, rng);
        else if (family == "dpp") res = gen_dpp(ctx_, pair_, rng);
        else if (family == "sdpp") res = gen_sdpp(ctx_, pair_, rng);
        else throw ParseError("unknown family '" + family + "'");
        return json{{"poly", linpoly_to_json(res.f)},
                    {"certificate", rmatrix_to_json(res.cert)}}
            .dump();
    }

    bool verify(const std::string& poly_json, const std::string& method) const {
        const LinPoly f = linpoly_from_json(ctx_, json::parse(poly_json));
        if (method == "kernel") return is_permutation(ctx_, f);
        if (method == "brute") return is_permutation_bruteforce(ctx_, f);
        const bool kernel = is_permutation(ctx_, f);
        const bool brute = is_permutation_bruteforce(ctx_, f);
        if (kernel != brute)
            throw DomainError("kernel and brute-force methods disagree");
        return kernel;
    }

    std::string decompose(const std::string& matrix_json) const {
        const RMatrix A = rmatrix_from_json(ctx_, json::parse(matrix_json));
        json factors = json::array();
        for (const auto& f : decompose_elementary(ctx_, A))
            factors.push_back(elem_factor_to_json(f));
        return factors.dump();
    }

  private:
    TowerCtx ctx_;
    NormalPair pair_;
};

std::string golden_json(const std::string& name) {
    const GoldenReport rep = golden_run(name);
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass},
                              {"detail", c.detail}});
    return json{{"example", rep.example},
                {"pass", rep.all_pass()},
                {"checks", checks}}
        .dump();
}

}  // namespace

PYBIND11_MODULE(_linperm, mod) {
    mod.doc() = "linear permutation polynomials over field towers";

    py::register_exception<ParseError>(mod, "LinpermParseError");
    py::register_exception<DomainError>(mod, "LinpermDomainError");

    py::class_<Tower>(mod, "Tower")
        .def(py::init<u64, unsigned, unsigned, unsigned, u64>(), py::arg("p"),
             py::arg("e"), py::arg("m"), py::arg("s"), py::arg("seed") = 0)
        .def(py::init<const std::string&>(), py::arg("ctx_json"))
        .def("to_json", &Tower::to_json)
        .def("pair_json", &Tower::pair_json)
        .def("sizes", &Tower::sizes)
        .def("factor", &Tower::factor)
        .def("psi_json", &Tower::psi_json, py::arg("matrix_json"))
        .def("phi_json", &Tower::phi_json, py::arg("poly_json"))
        .def("gen", &Tower::gen, py::arg("family"), py::arg("seed") = 0)
        .def("verify", &Tower::verify, py::arg("poly_json"),
             py::arg("method") = "kernel")
        .def("decompose", &Tower::decompose, py::arg("matrix_json"));

    mod.def("golden_json", &golden_json, py::arg("name"));
}
