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

#include "partition.hpp"
#include "sratfunc.hpp"

#include <functional>
#include <map>
#include <vector>

namespace realmoduli {

/* Symmetric function in the power sums p_1, p_2, ..., truncated to total
   p-degree <= pbound, with SRatFunc coefficients.  A term is indexed by the
   partition lambda with p_lambda = p_{lambda_1} p_{lambda_2} ...; the empty
   partition indexes the constant term.  Truncation is explicit and
   mandatory: every operation truncates to the smaller pbound of its
   operands. */
class SymFunc {
public:
    explicit SymFunc(int pbound) : pbound_(pbound) {
        if (pbound < 0) throw std::invalid_argument("SymFunc: negative pbound");
    }

    static SymFunc zero(int pbound) { return SymFunc(pbound); }
    static SymFunc constant(const SRatFunc& c, int pbound) {
        SymFunc f(pbound);
        f.set_coeff({}, c);
        return f;
    }
    static SymFunc one(int pbound) { return constant(SRatFunc(1), pbound); }
    /* c * p_k */
    static SymFunc p(int k, int pbound, const SRatFunc& c = SRatFunc(1)) {
        if (k < 1) throw std::invalid_argument("SymFunc::p: index must be >= 1");
        SymFunc f(pbound);
        if (k <= pbound) f.set_coeff({k}, c);
        return f;
    }

    int pbound() const { return pbound_; }
    const std::map<Partition, SRatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SRatFunc coeff(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? SRatFunc() : it->second;
    }

    void set_coeff(const Partition& lambda, const SRatFunc& c) {
        check_partition(lambda);
        if (partition_weight(lambda) > pbound_) return;
        if (c.is_zero())
            terms_.erase(lambda);
        else
            terms_[lambda] = c;
    }
    void add_coeff(const Partition& lambda, const SRatFunc& c) { set_coeff(lambda, coeff(lambda) + c); }

    /* smallest total p-degree of a nonzero term; -1 when zero */
    int min_degree() const {
        int best = -1;
        for (const auto& [l, c] : terms_) {
            int w = partition_weight(l);
            if (best < 0 || w < best) best = w;
        }
        return best;
    }

    SymFunc truncated(int newbound) const {
        SymFunc r(std::min(newbound, pbound_));
        for (const auto& [l, c] : terms_)
            if (partition_weight(l) <= r.pbound_) r.terms_.emplace(l, c);
        return r;
    }

    SymFunc homogeneous_part(int d) const {
        SymFunc r(pbound_);
        for (const auto& [l, c] : terms_)
            if (partition_weight(l) == d) r.terms_.emplace(l, c);
        return r;
    }

    SymFunc operator-() const {
        SymFunc r = *this;
        for (auto& [l, c] : r.terms_) c = -c;
        return r;
    }

    friend SymFunc operator+(const SymFunc& a, const SymFunc& b) {
        SymFunc r = a.truncated(std::min(a.pbound_, b.pbound_));
        for (const auto& [l, c] : b.terms_) r.add_coeff(l, c);
        return r;
    }
    friend SymFunc operator-(const SymFunc& a, const SymFunc& b) { return a + (-b); }
    SymFunc& operator+=(const SymFunc& o) { return *this = *this + o; }
    SymFunc& operator-=(const SymFunc& o) { return *this = *this - o; }

    friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
        SymFunc r(std::min(a.pbound_, b.pbound_));
        for (const auto& [la, ca] : a.terms_) {
            int wa = partition_weight(la);
            if (wa > r.pbound_) continue;
            for (const auto& [lb, cb] : b.terms_) {
                if (wa + partition_weight(lb) > r.pbound_) continue;
                Partition merged = la;
                merged.insert(merged.end(), lb.begin(), lb.end());
                std::sort(merged.rbegin(), merged.rend());
                r.add_coeff(merged, ca * cb);
            }
        }
        return r;
    }
    SymFunc& operator*=(const SymFunc& o) { return *this = *this * o; }

    SymFunc scaled(const SRatFunc& c) const {
        SymFunc r(pbound_);
        if (c.is_zero()) return r;
        for (const auto& [l, v] : terms_) r.terms_.emplace(l, v * c);
        return r;
    }

    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.terms_ == b.terms_;  // pbounds may differ; compare content
    }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [l, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")";
            for (int part : l) out += "*p" + std::to_string(part);
        }
        return out;
    }

private:
    int pbound_;
    std::map<Partition, SRatFunc> terms_;  // no zero coefficients stored
};

/* The involution F -> F~ : multiply the coefficient of p_lambda by (-1) for
   each even part of lambda (i.e. substitute p_{2i} -> -p_{2i}). */
inline SymFunc tilde(const SymFunc& f) {
    SymFunc r(f.pbound());
    for (const auto& [l, c] : f.terms()) {
        int evens = 0;
        for (int part : l)
            if (part % 2 == 0) ++evens;
        r.set_coeff(l, evens % 2 == 0 ? c : -c);
    }
    return r;
}

/* Formal partial derivative with respect to p_1. */
inline SymFunc d_p1(const SymFunc& f) {
    SymFunc r(f.pbound());
    for (const auto& [l, c] : f.terms()) {
        int ones = 0;
        for (int part : l)
            if (part == 1) ++ones;
        if (ones == 0) continue;
        Partition m = l;
        m.pop_back();  // parts are sorted decreasingly, so a trailing 1 goes
        r.add_coeff(m, c * SRatFunc(ones));
    }
    return r;
}

/* The "slot i" transform of G: substitute s -> s^i in every coefficient and
   p_j -> p_{ij} in every monomial.  This is what the p_i position of an
   outer plethysm operand receives. */
inline SymFunc slot_transform(const SymFunc& g, int i) {
    SymFunc r(g.pbound());
    for (const auto& [l, c] : g.terms()) {
        if (partition_weight(l) * i > r.pbound()) continue;
        Partition m = l;
        for (int& part : m) part *= i;
        r.set_coeff(m, c.subs_s_power(i));
    }
    return r;
}

/* Plethysm F[G], with G required to have zero constant term.  Expanded
   monomial by monomial: the term c(s) p_lambda of F contributes
   c(s) * prod_i G^(lambda_i), where G^(j) is slot_transform(G, j).  Partial
   products over partition tails are memoized. */
inline SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
    if (!g.coeff({}).is_zero())
        throw std::invalid_argument("plethysm: inner operand must have zero constant term");
    const int pbound = std::min(f.pbound(), g.pbound());
    SymFunc result(pbound);

    std::map<int, SymFunc> slots;          // j -> G^(j)
    std::map<Partition, SymFunc> partial;  // sorted tail -> product of slots
    partial.emplace(Partition{}, SymFunc::one(pbound));

    std::function<const SymFunc&(const Partition&)> product = [&](const Partition& lambda) -> const SymFunc& {
        auto it = partial.find(lambda);
        if (it != partial.end()) return it->second;
        Partition tail(lambda.begin() + 1, lambda.end());
        const SymFunc& rest = product(tail);
        auto sit = slots.find(lambda[0]);
        if (sit == slots.end()) sit = slots.emplace(lambda[0], slot_transform(g, lambda[0])).first;
        return partial.emplace(lambda, rest * sit->second).first->second;
    };

    for (const auto& [lambda, c] : f.terms()) {
        if (lambda.empty()) {
            result.add_coeff({}, c);
            continue;
        }
        // each slot contributes at least p-degree lambda_i, so prune early
        if (partition_weight(lambda) > pbound) continue;
        result += product(lambda).scaled(c);
    }
    return result;
}

/* exp of a series with zero constant term: sum_k A^k / k!, truncated. */
inline SymFunc exp_series(const SymFunc& a) {
    if (!a.coeff({}).is_zero())
        throw std::invalid_argument("exp_series: argument must have zero constant term");
    const int pbound = a.pbound();
    SymFunc result = SymFunc::one(pbound);
    SymFunc power = SymFunc::one(pbound);
    BigInt kfact = 1;
    for (int k = 1; k <= pbound; ++k) {
        power *= a;
        if (power.is_zero()) break;
        kfact *= k;
        result += power.scaled(SRatFunc(BigRational(BigInt(1), kfact)));
    }
    return result;
}

/* Exp = exp(sum_i p_i / i), the cycle index of the one-point-set species;
   its degree-n part is the cycle index of the trivial S_n representation. */
inline SymFunc make_exp(int pbound) {
    SymFunc arg(pbound);
    for (int i = 1; i <= pbound; ++i) arg.set_coeff({i}, SRatFunc(BigRational(1, i)));
    return exp_series(arg);
}

/* Exp^{-1} as a multiplicative inverse: exp(-sum_i p_i / i). */
inline SymFunc make_exp_inverse(int pbound) {
    SymFunc arg(pbound);
    for (int i = 1; i <= pbound; ++i) arg.set_coeff({i}, SRatFunc(BigRational(-1, i)));
    return exp_series(arg);
}

/* Sinh / Cosh: the odd / even total-degree parts of Exp (the species of
   odd- resp. even-cardinality sets). */
inline SymFunc make_sinh(int pbound) {
    SymFunc e = make_exp(pbound);
    SymFunc r(pbound);
    for (const auto& [l, c] : e.terms())
        if (partition_weight(l) % 2 == 1) r.set_coeff(l, c);
    return r;
}

inline SymFunc make_cosh(int pbound) {
    SymFunc e = make_exp(pbound);
    SymFunc r(pbound);
    for (const auto& [l, c] : e.terms())
        if (partition_weight(l) % 2 == 0) r.set_coeff(l, c);
    return r;
}

/* Plethystic inverse: the unique H with G[H] = p_1 (and then also
   H[G] = p_1), for G = c p_1 + (degree >= 2) with invertible c.  Solved
   degree by degree: an error at degree d is corrected through the linear
   slot without disturbing lower degrees. */
inline SymFunc plethystic_inverse(const SymFunc& g) {
    if (!g.coeff({}).is_zero())
        throw std::invalid_argument("plethystic_inverse: constant term must vanish");
    SRatFunc c = g.coeff({1});
    if (c.is_zero())
        throw std::invalid_argument("plethystic_inverse: linear coefficient of p_1 must be invertible");
    const int pbound = g.pbound();
    SymFunc h = SymFunc::p(1, pbound, SRatFunc(1) / c);
    for (int d = 2; d <= pbound; ++d) {
        SymFunc err = (plethysm(g, h) - SymFunc::p(1, pbound)).homogeneous_part(d);
        if (err.is_zero()) continue;
        h -= err.scaled(SRatFunc(1) / c);
    }
    return h;
}

inline SymFunc make_arcsinh(int pbound) { return plethystic_inverse(make_sinh(pbound)); }

/* X = sum_{k odd} Arcsinh~[p_k] / k; despite appearances it only involves
   the variables p_1, p_2, p_4, p_8, ... */
inline SymFunc make_X(int pbound) {
    SymFunc arcsinh_t = tilde(make_arcsinh(pbound));
    SymFunc r(pbound);
    for (int k = 1; k <= pbound; k += 2)
        r += plethysm(arcsinh_t, SymFunc::p(k, pbound)).scaled(SRatFunc(BigRational(1, k)));
    return r;
}

/* C = Cosh~[Arcsinh~], also supported on the p_{2^k} alone. */
inline SymFunc make_C(int pbound) {
    return plethysm(tilde(make_cosh(pbound)), tilde(make_arcsinh(pbound)));
}

/* Character extraction: a cycle index stores sum_lambda chi(lambda) p_lambda
   / z_lambda, so the graded trace on the class lambda is the coefficient
   times z_lambda. */
inline SRatFunc extract_character(const SymFunc& z, const Partition& lambda) {
    check_partition(lambda);
    if (partition_weight(lambda) > z.pbound())
        throw std::invalid_argument("extract_character: |lambda| exceeds the truncation bound");
    return z.coeff(lambda) * SRatFunc(BigRational(z_lambda(lambda)));
}

}  // namespace realmoduli
