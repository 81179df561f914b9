/*
   Copyright 2026 The realmoduli authors

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

#include "symfunc.hpp"

#include <functional>

namespace realmoduli {

/* Arcsinh~[t^{1/2} p_1]: the common building block of the equivariant cycle
   indices.  Substituting t^{1/2} p_1 multiplies the degree-d part by s^d. */
inline SymFunc arcsinh_tilde_scaled(int pbound) {
    return plethysm(tilde(make_arcsinh(pbound)), SymFunc::p(1, pbound, SRatFunc::s_power(1)));
}

/* Cycle index of the quotient functor on single odd blocks, assembled over
   all finite sets: Exp[t^{-1/2} Arcsinh~[t^{1/2} p_1]].  Extracting at a
   cycle type lambda of weight n gives the graded trace on the degree-(n+1)
   real locus of the permutation with one extra fixed point. */
inline SymFunc z_lambda_prime(int pbound) {
    SymFunc a = arcsinh_tilde_scaled(pbound).scaled(SRatFunc::s_power(-1));
    return plethysm(make_exp(pbound), a);
}

/* Extended cycle index: covers virtual cycle types with no fixed point.

     ( -p_1 t + Cosh~[Arcsinh~[t^{1/2} p_1]] ) / (1 - t)
        * Exp[t^{-1/2} Arcsinh~[t^{1/2} p_1]]

   Its constant term is 1/(1-t) and d/dp_1 returns z_lambda_prime. */
inline SymFunc z_extended(int pbound) {
    SymFunc a = arcsinh_tilde_scaled(pbound);
    SymFunc cosh_part = plethysm(tilde(make_cosh(pbound)), a);
    SymFunc prefactor = cosh_part - SymFunc::p(1, pbound, SRatFunc::t_power(1));
    SRatFunc one_minus_t_inv =
        SRatFunc(SPoly::one(), SPoly::one() - SPoly::t_power(1));
    return prefactor.scaled(one_minus_t_inv) * z_lambda_prime(pbound);
}

/* Cycle index of the reduced homology of the odd-block partition posets:
   (1 - Cosh[Arcsinh[t^{1/2} p_1]]) + t^{-1/2} Arcsinh[t^{1/2} p_1].
   The first summand carries the even-cardinality sets, the second the odd
   ones. */
inline SymFunc chr_index(int pbound) {
    SymFunc arc = make_arcsinh(pbound);
    SymFunc a = plethysm(arc, SymFunc::p(1, pbound, SRatFunc::s_power(1)));
    SymFunc even_part = SymFunc::one(pbound) - plethysm(make_cosh(pbound), a);
    return even_part + a.scaled(SRatFunc::s_power(-1));
}

/* The complex-points analogue: the generating series to invert is

     ( t^{-2} (Exp[t^2 p_1] - 1) - t^2 (Exp - 1) ) / (1 - t^2)

   whose plethystic inverse C gives the cycle index Exp[C]. */
inline SymFunc complex_arg(int pbound) {
    SymFunc e = make_exp(pbound);
    SymFunc e_scaled = plethysm(e, SymFunc::p(1, pbound, SRatFunc::s_power(4)));
    SymFunc one = SymFunc::one(pbound);
    SymFunc d = (e_scaled - one).scaled(SRatFunc::s_power(-4)) - (e - one).scaled(SRatFunc::s_power(4));
    SRatFunc inv = SRatFunc(SPoly::one(), SPoly::one() - SPoly::t_power(2));
    return plethystic_inverse(d.scaled(inv));
}

inline SymFunc complex_index(int pbound) {
    return plethysm(make_exp(pbound), complex_arg(pbound));
}

/* Expand every coefficient as a power series in t, keeping degrees
   <= t_order.  Coefficients must have no pole at t = 0 and must lie on the
   integer-t grid. */
inline SymFunc expand_t(const SymFunc& f, int t_order) {
    if (t_order < 0) throw std::invalid_argument("expand_t: negative order");
    const int sbound = 2 * t_order + 1;  // keep s-exponents <= 2*t_order
    SymFunc out(f.pbound());
    for (const auto& [lambda, c] : f.terms()) {
        const SPoly& n = c.num();
        if (n.is_zero()) continue;
        if (n.min_exp() < 0 || n.min_exp() % 2 != 0)
            throw std::domain_error("expand_t: coefficient is not a power series on the t-grid: " + c.str());
        SPoly inv = c.den().series_inverse(sbound);
        SPoly series = SPoly::truncated(n * inv, sbound);
        for (const auto& [e, v] : series.coeffs())
            if (e % 2 != 0)
                throw std::domain_error("expand_t: half-integer t-power survives in " + c.str());
        out.set_coeff(lambda, SRatFunc(series));
    }
    return out;
}

/* Reconstruct the extended cycle index from its p_1-derivative.

   Given Zrestr = d/dp_1 Z+ and writing Z+ = f * Exp, the factor f solves
   f + df/dp_1 = Zrestr * Exp^{-1} =: g.  The coefficient of t^k in f is a
   polynomial of p-degree at most degcap(k) (the geometric bound is 3k), so
   for each t-degree the triangular system

       c_{mu,j} + (j+1) c_{mu,j+1} = g_{mu,j}        (p_1^j p_mu terms)

   is solved by back-substitution from the top p_1-degree, anchored by the
   cap.  The result is exact modulo t^{t_order+1}; inputs whose t-degree-k
   part exceeds the cap in p-degree are rejected as inconsistent. */
inline SymFunc reconstruct_extended(const SymFunc& zrestr, int t_order,
                                    const std::function<int(int)>& degcap = nullptr) {
    auto cap = degcap ? degcap : [](int k) { return 3 * k; };
    const int pbound = zrestr.pbound();
    SymFunc g = expand_t(zrestr * make_exp_inverse(pbound), t_order);

    // split g by t-degree: coefficient maps lambda -> rational
    std::vector<std::map<Partition, BigRational>> gk(t_order + 1);
    for (const auto& [lambda, c] : g.terms())
        for (const auto& [e, v] : c.num().coeffs()) gk[e / 2][lambda] = v;

    SymFunc f(pbound);
    for (int k = 0; k <= t_order; ++k) {
        const int capk = cap(k);
        if (capk > pbound)
            throw std::invalid_argument(
                "reconstruct_extended: degree cap " + std::to_string(capk) + " at t-degree " +
                std::to_string(k) + " exceeds the p-truncation bound " + std::to_string(pbound) +
                "; raise pbound or lower t_order");
        // reject g-terms beyond the cap: no solution can produce them
        for (const auto& [lambda, v] : gk[k])
            if (partition_weight(lambda) > capk && v != 0)
                throw std::domain_error("reconstruct_extended: t-degree " + std::to_string(k) +
                                        " part exceeds the degree cap (inconsistent input)");
        // enumerate the p_1-free monomial parts mu (partitions with no 1s)
        std::vector<Partition> mus = {{}};
        for (const Partition& q : partitions_up_to(capk)) {
            bool has_one = false;
            for (int part : q)
                if (part == 1) has_one = true;
            if (!has_one) mus.push_back(q);
        }
        auto glookup = [&](const Partition& mu, int j) -> BigRational {
            Partition lambda = mu;
            for (int i = 0; i < j; ++i) lambda.push_back(1);
            auto it = gk[k].find(lambda);
            return it == gk[k].end() ? BigRational(0) : it->second;
        };
        for (const Partition& mu : mus) {
            const int top = capk - partition_weight(mu);
            BigRational next = 0;  // c_{mu, j+1}, zero above the cap
            for (int j = top; j >= 0; --j) {
                BigRational cj = glookup(mu, j) - BigRational(j + 1) * next;
                if (cj != 0) {
                    Partition lambda = mu;
                    for (int i = 0; i < j; ++i) lambda.push_back(1);
                    SRatFunc cur = f.coeff(lambda);
                    SPoly add = SPoly::term(cj, 2 * k);
                    f.set_coeff(lambda, cur + SRatFunc(add));
                }
                next = cj;
            }
        }
        // consistency: f_k + d/dp_1 f_k must reproduce g_k exactly
        SymFunc fk(pbound);
        for (const auto& [lambda, c] : f.terms()) {
            BigRational v = c.num().coeff(2 * k);
            if (v != 0) fk.set_coeff(lambda, SRatFunc(BigRational(v)));
        }
        SymFunc check = fk + d_p1(fk);
        for (const auto& [lambda, v] : gk[k])
            if (check.coeff(lambda) != SRatFunc(v))
                throw std::domain_error("reconstruct_extended: inconsistent input at t-degree " +
                                        std::to_string(k));
        for (const auto& [lambda, c] : check.terms())
            if (gk[k].find(lambda) == gk[k].end() && !c.is_zero())
                throw std::domain_error("reconstruct_extended: inconsistent input at t-degree " +
                                        std::to_string(k));
    }
    return expand_t(f * make_exp(pbound), t_order);
}

}  // namespace realmoduli
