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

#include "realmoduli/charformula.hpp"
#include "realmoduli/cycleindex.hpp"
#include "realmoduli/poset.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace realmoduli;

namespace {

/* graded character of the pointed algebra on |lambda| letters: the class
   acts on the ground set and fixes the extra point, so the virtual count of
   fixed points equals the honest one. */
GradedCharacter pointed_chi(const Partition& lambda) {
    CycleType ct(lambda);
    VirtualCycleType v;
    v.n1 = ct.count(1);
    for (const auto& [l, m] : ct.counts)
        if (l >= 2) v.counts[l] = m;
    return graded_character(v);
}

GradedCharacter plain_chi(const Partition& lambda) {
    return graded_character(to_virtual(CycleType(lambda)));
}

SRatFunc as_ratfunc(const GradedCharacter& chi) { return SRatFunc(chi.to_spoly()); }

}  // namespace

TEST_CASE("pointed cycle index has the frozen low-degree coefficients") {
    SymFunc z = z_lambda_prime(6);
    SPoly t = SPoly::t_power(1);
    CHECK(z.coeff({}) == SRatFunc(1));
    CHECK(z.coeff({1}) == SRatFunc(1));
    CHECK(z.coeff({1, 1}) == SRatFunc(BigRational(1, 2)));
    CHECK(z.coeff({2}) == SRatFunc(BigRational(1, 2)));
    CHECK(z.coeff({1, 1, 1}) == SRatFunc((SPoly::one() - t).scale(BigRational(1, 6))));
    CHECK(z.coeff({2, 1}) == SRatFunc((SPoly::one() + t).scale(BigRational(1, 2))));
    CHECK(z.coeff({3}) == SRatFunc((SPoly::one() - t).scale(BigRational(1, 3))));
}

TEST_CASE("pointed cycle index extracts the product-formula characters") {
    SymFunc z = z_lambda_prime(6);
    for (int m = 1; m <= 6; ++m)
        for (const auto& lambda : partitions_of(m))
            CHECK(extract_character(z, lambda) == as_ratfunc(pointed_chi(lambda)));
}

TEST_CASE("extended cycle index: constant term, derivative, extraction") {
    const int pb = 6;
    SymFunc zext = z_extended(pb);
    SymFunc zp = z_lambda_prime(pb);

    // constant term 1/(1-t)
    SRatFunc one_minus_t_inv(SPoly::one(), SPoly::one() - SPoly::t_power(1));
    CHECK(zext.coeff({}) == one_minus_t_inv);

    // d/dp_1 of the extended index returns the pointed one
    SymFunc dz = d_p1(zext);
    for (const auto& lambda : partitions_up_to(pb - 1)) CHECK(dz.coeff(lambda) == zp.coeff(lambda));

    // extraction equals the plain product-formula character at every class,
    // with or without fixed points
    for (int n = 1; n <= pb; ++n)
        for (const auto& lambda : partitions_of(n))
            CHECK(extract_character(zext, lambda) == as_ratfunc(plain_chi(lambda)));
}

TEST_CASE("chr index matches the partition-poset homology traces") {
    SymFunc chr = chr_index(7);
    for (int m : {1, 3, 5, 7})
        for (const auto& lambda : partitions_of(m)) {
            SPoly contrib = poset::homology_contribution(m, class_representative(lambda));
            CHECK(extract_character(chr, lambda) == SRatFunc(contrib));
        }
}

TEST_CASE("complex-locus cycle index") {
    SymFunc arg = complex_arg(5);
    // no quadratic part, and the frozen cubic part t^2 (p_1^3 + 3 p_1 p_2 + 2 p_3)/6
    CHECK(arg.homogeneous_part(2).is_zero());
    CHECK(arg.coeff({1, 1, 1}) == SRatFunc(SPoly::term(BigRational(1, 6), 4)));
    CHECK(arg.coeff({2, 1}) == SRatFunc(SPoly::term(BigRational(1, 2), 4)));
    CHECK(arg.coeff({3}) == SRatFunc(SPoly::term(BigRational(1, 3), 4)));

    SymFunc z = complex_index(5);
    auto tpoly = [](std::initializer_list<long long> cs) {
        SPoly p;
        int k = 0;
        for (long long c : cs) p.add_coeff(2 * k++, BigRational(c));
        return SRatFunc(p);
    };
    CHECK(extract_character(z, {1, 1}) == tpoly({1}));
    CHECK(extract_character(z, {2}) == tpoly({1}));
    // three marked points plus the base point: the projective line, on which
    // every automorphism acts trivially in cohomology
    CHECK(extract_character(z, {1, 1, 1}) == tpoly({1, 0, 1}));
    CHECK(extract_character(z, {2, 1}) == tpoly({1, 0, 1}));
    CHECK(extract_character(z, {3}) == tpoly({1, 0, 1}));
    // identity classes: betti numbers 1, 5, 1 and 1, 16, 16, 1
    CHECK(extract_character(z, {1, 1, 1, 1}) == tpoly({1, 0, 5, 0, 1}));
    CHECK(extract_character(z, {1, 1, 1, 1, 1}) == tpoly({1, 0, 16, 0, 16, 0, 1}));
    // euler characteristics 7 and 34
    CHECK(extract_character(z, {1, 1, 1, 1}).eval_at_t1() == 7);
    CHECK(extract_character(z, {1, 1, 1, 1, 1}).eval_at_t1() == 34);
}

TEST_CASE("series expansion in t") {
    SymFunc zext = z_extended(4);
    SymFunc ex = expand_t(zext, 3);
    // 1/(1-t) expands to 1 + t + t^2 + t^3
    SPoly geo;
    for (int k = 0; k <= 3; ++k) geo.add_coeff(2 * k, BigRational(1));
    CHECK(ex.coeff({}) == SRatFunc(geo));
    // a polynomial coefficient passes through unchanged up to the order
    CHECK(ex.coeff({2}) == zext.coeff({2}));

    SymFunc bad(4);
    bad.set_coeff({1}, SRatFunc::s_power(1));
    CHECK_THROWS_AS(expand_t(bad, 2), std::domain_error);
    SymFunc bad2(4);
    bad2.set_coeff({1}, SRatFunc::s_power(-2));
    CHECK_THROWS_AS(expand_t(bad2, 2), std::domain_error);
}

TEST_CASE("the extended index is reconstructible from the pointed one") {
    const int pb = 6, order = 2;
    SymFunc rebuilt = reconstruct_extended(z_lambda_prime(pb), order);
    SymFunc expect = expand_t(z_extended(pb), order);
    for (const auto& lambda : partitions_up_to(pb)) {
        INFO("class " << partition_str(lambda));
        CHECK(rebuilt.coeff(lambda) == expect.coeff(lambda));
    }
    CHECK(rebuilt.coeff({}) == expect.coeff({}));

    // the default degree caps must fit under the truncation bound
    CHECK_THROWS_AS(reconstruct_extended(z_lambda_prime(6), 3), std::invalid_argument);
}

TEST_CASE("the pointed index is the plethystic exponential of the odd chr part") {
    const int pb = 6;
    SymFunc chr = chr_index(pb);
    SymFunc odd(pb);
    for (int d = 1; d <= pb; d += 2) odd += chr.homogeneous_part(d);
    SymFunc rebuilt = plethysm(make_exp(pb), tilde(odd));
    SymFunc zp = z_lambda_prime(pb);
    for (const auto& lambda : partitions_up_to(pb)) {
        INFO("class " << partition_str(lambda));
        CHECK(rebuilt.coeff(lambda) == zp.coeff(lambda));
    }
    CHECK(rebuilt.coeff({}) == zp.coeff({}));
}

TEST_CASE("extended index divided by Exp grows at most three p-slots per t") {
    // z_extended = f * Exp with the t^k coefficient of f of p-degree <= 3k;
    // this is what makes the index recoverable from its p_1-derivative.
    const int pb = 6, order = 2;
    SymFunc f = expand_t(z_extended(pb) * make_exp_inverse(pb), order);
    for (const auto& [lambda, c] : f.terms()) {
        const int pdeg = partition_weight(lambda);
        const SPoly& poly = c.as_polynomial();
        for (int k = 0; k <= order; ++k) {
            if (poly.coeff(2 * k) == 0) continue;  // t^k sits at s-exponent 2k
            INFO("class " << partition_str(lambda) << " at t^" << k << ": " << c.str());
            CHECK(pdeg <= 3 * k);
        }
    }
}
