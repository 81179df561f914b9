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

#include <map>
#include <sstream>

namespace realmoduli {

/* Cycle type of an honest permutation: cycle length -> count (>= 1). */
struct CycleType {
    std::map<int, int> counts;

    CycleType() = default;
    explicit CycleType(const Partition& p) {
        check_partition(p);
        for (int part : p) ++counts[part];
    }

    int count(int l) const {
        auto it = counts.find(l);
        return it == counts.end() ? 0 : it->second;
    }
    int n() const {
        int total = 0;
        for (const auto& [l, m] : counts) total += l * m;
        return total;
    }
    Partition to_partition() const {
        Partition p;
        for (auto it = counts.rbegin(); it != counts.rend(); ++it)
            for (int i = 0; i < it->second; ++i) p.push_back(it->first);
        return p;
    }
};

/* Virtual cycle type: the fixed-point count is shifted down by one, so
   n_1 >= -1; all longer-cycle counts are >= 0.  A permutation with no fixed
   points at all has n_1 = -1. */
struct VirtualCycleType {
    int n1 = 0;                   // may be -1
    std::map<int, int> counts;    // lengths >= 2 only

    int count(int l) const {
        if (l == 1) return n1;
        auto it = counts.find(l);
        return it == counts.end() ? 0 : it->second;
    }
    /* underlying permutation degree: sum l*n_l + 1 */
    int n() const {
        int total = n1 + 1;
        for (const auto& [l, m] : counts) total += l * m;
        return total;
    }
};

inline VirtualCycleType to_virtual(const CycleType& ct) {
    VirtualCycleType v;
    v.n1 = ct.count(1) - 1;
    for (const auto& [l, m] : ct.counts)
        if (l >= 2 && m > 0) v.counts[l] = m;
    return v;
}

/* o_m = sum over k >= 1 with 2^k | m of (m / 2^k) * n_{m / 2^k}; depends
   only on counts of cycles strictly shorter than m. */
inline long long o_value(int m, const VirtualCycleType& vct) {
    long long o = 0;
    for (int d = m % 2 == 0 ? m / 2 : 0; d >= 1; d /= 2) {
        o += static_cast<long long>(d) * vct.count(d);
        if (d % 2 == 1) break;  // next division would leave the 2-adic chain
    }
    return o;
}

inline long long o_value(int m, const CycleType& ct) {
    long long o = 0;
    for (int d = m % 2 == 0 ? m / 2 : 0; d >= 1; d /= 2) {
        o += static_cast<long long>(d) * ct.count(d);
        if (d % 2 == 1) break;
    }
    return o;
}

/* gamma_l(t) = sum over odd k | l of moebius(k) t^{l(1-1/k)/2}; a genuine
   polynomial in t (the exponent is a nonnegative integer). */
inline SPoly gamma_factor(int l) {
    if (l < 1) throw std::invalid_argument("gamma_factor: l must be >= 1");
    SPoly g;
    for (int k = 1; k <= l; k += 2) {
        if (l % k != 0) continue;
        int mu = moebius(k);
        if (mu == 0) continue;
        g.add_coeff(l - l / k, BigRational(mu));  // s-exponent l(1-1/k)
    }
    return g;
}

/* A graded character: the polynomial sum_k (-t)^k Tr(pi | H^k) with integer
   coefficients.  Stored by t-degree; coefficient of t^k is (-1)^k times the
   trace in degree k. */
class GradedCharacter {
public:
    GradedCharacter() = default;

    static GradedCharacter from_sratfunc(const SRatFunc& f) {
        const SPoly& p = f.as_polynomial();
        GradedCharacter g;
        for (const auto& [e, c] : p.coeffs()) {
            if (e < 0 || e % 2 != 0)
                throw std::domain_error("GradedCharacter: fractional or negative t-power " + p.str());
            g.coeffs_[e / 2] = to_integer(c);
        }
        return g;
    }

    BigInt signed_coeff(int k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? BigInt(0) : it->second;
    }
    /* Tr(pi | H^k) */
    BigInt trace(int k) const {
        BigInt c = signed_coeff(k);
        return k % 2 == 0 ? c : -c;
    }
    int top_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
    const std::map<int, BigInt>& signed_coeffs() const { return coeffs_; }

    void set_signed_coeff(int k, const BigInt& c) {
        if (c == 0)
            coeffs_.erase(k);
        else
            coeffs_[k] = c;
    }

    /* Euler characteristic: value at t = 1. */
    BigInt euler() const {
        BigInt e = 0;
        for (const auto& [k, c] : coeffs_) e += c;
        return e;
    }

    SPoly to_spoly() const {
        SPoly p;
        for (const auto& [k, c] : coeffs_) p.set_coeff(2 * k, BigRational(c));
        return p;
    }

    friend bool operator==(const GradedCharacter& a, const GradedCharacter& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const GradedCharacter& a, const GradedCharacter& b) { return !(a == b); }

    std::string str() const { return to_spoly().str(); }

private:
    std::map<int, BigInt> coeffs_;
};

/* One factor of the closed product formula, as a rational function:

     (gamma_l + o_l t^{l/2}) * prod_{0 <= i <= n_l - 2}
                               (gamma_l + (o_l + l (n_l - 2 - 2i)) t^{l/2})

   with the usual convention that a product with a negative range inverts:
   for n_l < 0 the inner product runs over n_l - 1 <= i <= -1 and divides.
   For n_l = 0 the inner product is the reciprocal of the standalone factor,
   so the whole factor is 1 and is skipped by the caller. */
inline SRatFunc product_factor(int l, int nl, long long ol) {
    const SPoly g = gamma_factor(l);
    auto linear = [&](long long a) {
        // gamma_l + a * t^{l/2}
        SPoly p = g;
        p.add_coeff(l, BigRational(a));
        return p;
    };
    SRatFunc f(linear(ol));
    if (nl >= 0) {
        for (int i = 0; i <= nl - 2; ++i) f *= SRatFunc(linear(ol + static_cast<long long>(l) * (nl - 2 - 2 * i)));
    } else {
        for (int i = nl - 1; i <= -1; ++i) {
            SPoly d = linear(ol + static_cast<long long>(l) * (nl - 2 - 2 * i));
            if (d.is_zero()) throw std::domain_error("product_factor: inverted factor vanishes identically");
            f /= SRatFunc(d);
        }
    }
    return f;
}

/* Graded character of the degree-n real locus on the class described by a
   virtual cycle type: the product over cycle lengths of product_factor.
   All rational-function cancellation happens over Q(s); the result is
   always a genuine polynomial with integer coefficients. */
inline GradedCharacter graded_character(const VirtualCycleType& vct) {
    if (vct.n1 < -1) throw std::invalid_argument("graded_character: n_1 < -1");
    for (const auto& [l, m] : vct.counts) {
        if (l < 2) throw std::invalid_argument("graded_character: virtual counts must have length >= 2");
        if (m < 0) throw std::invalid_argument("graded_character: negative count for length >= 2");
    }
    SRatFunc total = SRatFunc::one();
    if (vct.n1 != 0) total *= product_factor(1, vct.n1, o_value(1, vct));
    for (const auto& [l, m] : vct.counts) {
        if (m == 0) continue;
        total *= product_factor(l, m, o_value(l, vct));
    }
    return GradedCharacter::from_sratfunc(total);
}

/* The same product with the polynomial gamma_l + o_l t^{l/2} replaced by an
   arbitrary scalar c_l + o_l; this is the shape every character of this
   family takes.  Cycle types are honest here (all counts >= 0), so no
   factor is ever inverted. */
inline SRatFunc generalized_character(const std::map<int, SRatFunc>& c, const CycleType& ct) {
    SRatFunc total = SRatFunc::one();
    for (const auto& [l, m] : ct.counts) {
        if (m <= 0) continue;
        auto it = c.find(l);
        if (it == c.end())
            throw std::invalid_argument("generalized_character: missing c_" + std::to_string(l));
        SRatFunc base = it->second + SRatFunc(BigRational(o_value(l, ct)));
        SRatFunc factor = base;
        for (int i = 0; i <= m - 2; ++i)
            factor *= base + SRatFunc(BigRational(static_cast<long long>(l) * (m - 2 - 2 * i)));
        total *= factor;
    }
    return total;
}

/* Poincare polynomial of the degree-n real locus:
   prod_{0 <= i <= floor((n-3)/2)} (1 - (n-3-2i)^2 t). */
inline GradedCharacter poincare_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("poincare_polynomial: n must be >= 1");
    SPoly p = SPoly::one();
    for (int i = 0; 2 * i <= n - 3; ++i) {
        long long a = n - 3 - 2 * i;
        SPoly factor = SPoly::one();
        factor.add_coeff(2, BigRational(-a * a));
        p *= factor;
    }
    return GradedCharacter::from_sratfunc(SRatFunc(p));
}

/* Euler characteristic by direct case analysis.  Nonzero only when either
   (1) pi has a fixed point, its order is a power of two, the counts
       n_1 = ... = n_{2^{k-1}} all equal 1 and n_{2^k} is even, or
   (2) pi is fixed-point free and there is a d > 1 with n_d odd such that
       every cycle length is 2^j d.
   Counts here are virtual (n_1 = fixed points - 1). */
inline BigInt euler_character(const CycleType& ct) {
    const VirtualCycleType v = to_virtual(ct);

    // gamma_l(1) = sum over odd k | l of moebius(k): 1 when l is a power of
    // two, 0 otherwise.
    auto gamma1 = [](int l) { return is_power_of_two(l) ? 1LL : 0LL; };
    auto ones = [&](int l) { return BigInt(gamma1(l) + o_value(l, v)); };
    auto inner = [&](int l) {
        // prod_{0 <= i <= n_l - 2} (gamma_l(1) + o_l + l (n_l - 2 - 2 i))
        BigInt prod = 1;
        int nl = v.count(l);
        long long gl = gamma1(l) + o_value(l, v);
        for (int i = 0; i <= nl - 2; ++i) prod *= BigInt(gl + static_cast<long long>(l) * (nl - 2 - 2 * i));
        return prod;
    };

    if (v.n1 >= 0) {
        // fixed point present: order must be a power of two
        for (const auto& [l, m] : v.counts)
            if (m > 0 && !is_power_of_two(l)) return 0;
        // k = least j with n_{2^j} != 1; requires n_{2^k} even
        int k = 0;
        while (v.count(1 << k) == 1) ++k;
        if (v.count(1 << k) % 2 != 0) return 0;
        BigInt result = BigInt(1) << (k * (k - 1) / 2);
        for (int l = 1 << k; l <= v.n(); l <<= 1) {
            if (v.count(l) == 0) continue;  // factor is identically 1
            result *= ones(l) * inner(l);
        }
        return result;
    }

    // fixed-point free: let d be the shortest cycle length
    int d = 0;
    for (const auto& [l, m] : v.counts)
        if (m > 0) {
            d = l;
            break;
        }
    if (d == 0) throw std::invalid_argument("euler_character: empty cycle type");
    if (v.count(d) % 2 == 0) return 0;
    for (const auto& [l, m] : v.counts) {
        if (m <= 0) continue;
        if (l % d != 0 || !is_power_of_two(l / d)) return 0;  // length not of the form 2^j d
    }
    // leading scalar: sum over odd k | d of moebius(k) d / (2k)
    BigRational lead = 0;
    for (int k = 1; k <= d; k += 2) {
        if (d % k != 0) continue;
        lead += BigRational(moebius(k) * static_cast<long long>(d), 2LL * k);
    }
    BigRational result = lead;
    {
        // the l = d factor contributes only its inner product (gamma at 1)
        int nd = v.count(d);
        for (int i = 0; i <= nd - 2; ++i)
            result *= BigRational(static_cast<long long>(d) * (nd - 2 - 2 * i));
    }
    for (int l = 2 * d; l <= v.n(); l *= 2) {
        if (v.count(l) == 0) continue;
        result *= BigRational(ones(l) * inner(l));
    }
    return to_integer(result);
}

inline BigInt euler_character(const Partition& p) { return euler_character(CycleType(p)); }

}  // namespace realmoduli
