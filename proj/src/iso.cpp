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

#include "linperm/iso.hpp"

namespace linperm {

namespace {

void check_pair(const TowerCtx& ctx, const NormalPair& pair) {
    (void)ctx;
    if (pair.alpha.level != Level::mid_qm || pair.u.level != Level::mid_qm)
        throw DomainError("NormalPair must live at level mid_qm");
}

// Returns the pair with a top frame guaranteed; pairs built by dual_basis
// already carry one, hand-assembled pairs get the canonical frame.
NormalPair framed(const TowerCtx& ctx, const NormalPair& pair) {
    check_pair(ctx, pair);
    NormalPair fp = pair;
    if (fp.beta.level != Level::top_qn || ctx.is_zero(fp.beta))
        attach_top_frame(ctx, fp);
    return fp;
}

// T[b][r] = Tr_{n/m}(v^{q^r} beta^{q^{m b}}), the frame cross terms of the
// psi closed form.  Row r = 0 is delta_{b0} by duality of (beta, v).
std::vector<std::vector<FFElem>> t_table(const TowerCtx& ctx,
                                         const NormalPair& pair) {
    const unsigned m = ctx.m(), s = ctx.s();
    std::vector<std::vector<FFElem>> T(s, std::vector<FFElem>(m));
    std::vector<FFElem> bconj(s);
    bconj[0] = pair.beta;
    for (unsigned b = 1; b < s; ++b) bconj[b] = ctx.frobenius_q(bconj[b - 1], m);
    FFElem vr = pair.v;
    for (unsigned r = 0; r < m; ++r) {
        for (unsigned b = 0; b < s; ++b)
            T[b][r] = ctx.trace(ctx.mul(vr, bconj[b]), Level::mid_qm);
        if (r + 1 < m) vr = ctx.frobenius_q(vr, 1);
    }
    return T;
}

// Shared core of psi and psi_unit: adds psi(O_jk c) into f, given the
// precomputed frame table.
void add_unit_image(const TowerCtx& ctx, unsigned j, unsigned k,
                    const RPoly& c, const NormalPair& pair,
                    const std::vector<std::vector<FFElem>>& T, LinPoly& f) {
    const unsigned m = ctx.m(), s = ctx.s();
    const FFElem aj = ctx.frobenius_q(pair.alpha, j - 1);
    std::vector<FFElem> au(m);  // au[r] = alpha^{q^{j-1}} u^{q^{k-1+r}}
    for (unsigned r = 0; r < m; ++r)
        au[r] = ctx.mul(aj, ctx.frobenius_q(pair.u, (k - 1 + r) % m));
    for (unsigned i = 0; i < s; ++i) {
        if (ctx.is_zero(c[i])) continue;
        const FFElem ci = ctx.embed(c[i], Level::mid_qm);
        for (unsigned a = 0; a < s; ++a) {
            const unsigned b = (i + s - a) % s;
            for (unsigned r = 0; r < m; ++r) {
                if (ctx.is_zero(T[b][r])) continue;
                f.a[a * m + r] = ctx.add(
                    f.a[a * m + r], ctx.mul(ci, ctx.mul(au[r], T[b][r])));
            }
        }
    }
}

}  // namespace

std::vector<FFElem> coeffs_from_values(const TowerCtx& ctx,
                                       const std::vector<FFElem>& values,
                                       const NormalPair& pair) {
    check_pair(ctx, pair);
    const unsigned m = ctx.m();
    if (values.size() != m)
        throw DomainError("coeffs_from_values: need m values");
    std::vector<FFElem> uconj(m);
    uconj[0] = pair.u;
    for (unsigned i = 1; i < m; ++i) uconj[i] = ctx.frobenius_q(uconj[i - 1], 1);
    std::vector<FFElem> a(m);
    for (unsigned r = 0; r < m; ++r) {
        FFElem acc = ctx.zero(Level::mid_qm);
        for (unsigned l = 0; l < m; ++l)
            acc = ctx.add(acc, ctx.mul(uconj[(r + l) % m], values[l]));
        a[r] = acc;
    }
    return a;
}

RMatrix phi(const TowerCtx& ctx, const LinPoly& f, const NormalPair& pair) {
    const NormalPair fp = framed(ctx, pair);
    const unsigned m = ctx.m();
    const unsigned s = ctx.s();
    // Dual coordinates: the F_q-coordinate of y on alpha^{q^{j-1}} beta^{q^{m i}}
    // is Tr_{n -> q}(y u^{q^{j-1}} v^{q^{m i}}).
    std::vector<FFElem> uconj(m), vconj(s);
    uconj[0] = ctx.embed(fp.u, Level::top_qn);
    for (unsigned j = 1; j < m; ++j) uconj[j] = ctx.frobenius_q(uconj[j - 1], 1);
    vconj[0] = fp.v;
    for (unsigned i = 1; i < s; ++i) vconj[i] = ctx.frobenius_q(vconj[i - 1], m);
    RMatrix M = mat_zero(ctx);
    FFElem wk = ctx.mul(ctx.embed(fp.alpha, Level::top_qn), fp.beta);
    for (unsigned k = 0; k < m; ++k) {
        const FFElem img = lp_eval(ctx, f, wk);
        for (unsigned j = 0; j < m; ++j)
            for (unsigned i = 0; i < s; ++i)
                M.e[j][k][i] = ctx.trace(
                    ctx.mul(img, ctx.mul(uconj[j], vconj[i])), Level::base_q);
        if (k + 1 < m)
            wk = ctx.mul(ctx.embed(ctx.frobenius_q(fp.alpha, k + 1),
                                   Level::top_qn),
                         fp.beta);
    }
    return M;
}

LinPoly psi(const TowerCtx& ctx, const RMatrix& M, const NormalPair& pair) {
    const NormalPair fp = framed(ctx, pair);
    const unsigned m = ctx.m();
    const unsigned s = ctx.s();
    const unsigned n = ctx.n();
    if (M.dim() != m) throw DomainError("psi: matrix dimension != m");
    // Target values on the module basis: f(w_k) = sum_j M[j][k](tau)(w_j).
    std::vector<FFElem> wconj(m);  // w_j = alpha^{q^{j-1}} beta
    for (unsigned j = 0; j < m; ++j)
        wconj[j] = ctx.mul(ctx.embed(ctx.frobenius_q(fp.alpha, j), Level::top_qn),
                           fp.beta);
    std::vector<FFElem> vals(m, ctx.zero(Level::top_qn));
    for (unsigned k = 0; k < m; ++k)
        for (unsigned j = 0; j < m; ++j)
            for (unsigned i = 0; i < s; ++i) {
                const FFElem& cji = M.e[j][k][i];
                if (ctx.is_zero(cji)) continue;
                vals[k] = ctx.add(
                    vals[k], ctx.mul(ctx.embed(cji, Level::top_qn),
                                     ctx.frobenius_q(wconj[j], i * m)));
            }
    // Interpolate: f commutes with tau, so f(w_k^{q^{m i}}) = f(w_k)^{q^{m i}}
    // pins f on the whole F_q-basis; with the dual basis u^{q^{k-1}} v^{q^{m i}}
    // the coefficients are a_t = sum_{k,i} f(w_k)^{q^{m i}}
    // (u^{q^{k-1}} v^{q^{m i}})^{q^t}.
    std::vector<FFElem> target, dual;
    for (unsigned k = 0; k < m; ++k) {
        const FFElem uk = ctx.embed(ctx.frobenius_q(fp.u, k), Level::top_qn);
        for (unsigned i = 0; i < s; ++i) {
            target.push_back(ctx.frobenius_q(vals[k], i * m));
            dual.push_back(ctx.mul(uk, ctx.frobenius_q(fp.v, i * m)));
        }
    }
    LinPoly f = lp_zero(ctx);
    for (unsigned t = 0; t < n; ++t) {
        FFElem acc = ctx.zero(Level::top_qn);
        for (size_t idx = 0; idx < target.size(); ++idx) {
            acc = ctx.add(acc, ctx.mul(target[idx], dual[idx]));
            if (t + 1 < n) dual[idx] = ctx.frobenius_q(dual[idx], 1);
        }
        f.a[t] = ctx.project(acc, Level::mid_qm);
    }
    return f;
}

LinPoly psi_unit(const TowerCtx& ctx, unsigned j, unsigned k, const RPoly& c,
                 const NormalPair& pair) {
    const NormalPair fp = framed(ctx, pair);
    const unsigned m = ctx.m();
    if (j < 1 || j > m || k < 1 || k > m)
        throw DomainError("psi_unit: indices out of range");
    if (c.size() != ctx.s()) throw DomainError("psi_unit: malformed c");
    LinPoly f = lp_zero(ctx);
    add_unit_image(ctx, j, k, c, fp, t_table(ctx, fp), f);
    return f;
}

LinPoly psi_transvection(const TowerCtx& ctx, unsigned j, unsigned k,
                         const RPoly& c, const NormalPair& pair) {
    if (j == k) throw DomainError("psi_transvection: j and k must differ");
    return lp_add(ctx, lp_x(ctx), psi_unit(ctx, j, k, c, pair));
}

LinPoly psi_dilation(const TowerCtx& ctx, unsigned l, const RPoly& c,
                     const NormalPair& pair) {
    if (!is_unit(ctx, c)) throw DomainError("psi_dilation: c must be a unit");
    const RPoly t = rp_sub(ctx, c, rp_one(ctx));
    return lp_add(ctx, lp_x(ctx), psi_unit(ctx, l, l, t, pair));
}

}  // namespace linperm
