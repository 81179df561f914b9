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

#include "rational.hpp"
#include "spoly.hpp"

#include <algorithm>
#include <vector>

namespace realmoduli::poset {

/* A set partition of {0..m-1} in canonical form: every block ascending,
   blocks ordered by smallest element. */
using SetPartition = std::vector<std::vector<int>>;

inline SetPartition canonicalize(SetPartition p) {
    for (auto& block : p) std::sort(block.begin(), block.end());
    std::sort(p.begin(), p.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    return p;
}

/* All set partitions of {0..m-1} whose blocks all have odd size, excluding
   the partition into singletons and (for m odd) the one-block partition:
   the proper part of the poset ordered by refinement. */
inline std::vector<SetPartition> proper_odd_partitions(int m) {
    std::vector<SetPartition> out;
    SetPartition cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (next == m) {
            for (const auto& block : cur)
                if (block.size() % 2 == 0) return;
            if (static_cast<int>(cur.size()) == m) return;  // all singletons
            if (cur.size() == 1) return;                    // one block
            out.push_back(cur);
            return;
        }
        // index-based: the recursive call appends to cur and may reallocate
        const size_t nblocks = cur.size();
        for (size_t b = 0; b < nblocks; ++b) {
            cur[b].push_back(next);
            self(self, next + 1);
            cur[b].pop_back();
        }
        cur.push_back({next});
        self(self, next + 1);
        cur.pop_back();
    };
    rec(rec, 0);
    return out;
}

/* Does v refine w (v <= w)?  Every block of v must sit inside one block
   of w. */
inline bool refines(const SetPartition& v, const SetPartition& w, std::vector<int>& scratch) {
    scratch.assign(scratch.size(), -1);
    for (size_t b = 0; b < w.size(); ++b)
        for (int x : w[b]) scratch[static_cast<size_t>(x)] = static_cast<int>(b);
    for (const auto& block : v) {
        int target = scratch[static_cast<size_t>(block.front())];
        for (int x : block)
            if (scratch[static_cast<size_t>(x)] != target) return false;
    }
    return true;
}

/* p must be in canonical form (see canonicalize). */
inline bool is_invariant(const SetPartition& p, const std::vector<int>& perm) {
    SetPartition image = p;
    for (auto& block : image)
        for (int& x : block) x = perm[static_cast<size_t>(x)];
    return canonicalize(std::move(image)) == p;
}

/* Reduced Lefschetz number of perm acting on the order complex of the
   proper part: sum over invariant chains (the empty chain contributes -1)
   of (-1)^{#elements}.  A chain is invariant exactly when each of its
   partitions is, and each invariant chain is fixed with orientation +1.
   Counting uses h(v) = sum over invariant chains with minimum v, computed
   from the coarsest elements down:  h(v) = -1 - sum_{w > v} h(w). */
inline BigInt reduced_lefschetz(int m, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != m)
        throw std::invalid_argument("reduced_lefschetz: permutation size mismatch");
    std::vector<SetPartition> fixed;
    for (auto& p : proper_odd_partitions(m))
        if (is_invariant(p, perm)) fixed.push_back(std::move(p));

    std::vector<size_t> order(fixed.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return fixed[a].size() < fixed[b].size(); });

    std::vector<BigInt> h(fixed.size());
    std::vector<int> scratch(static_cast<size_t>(m));
    for (size_t oi = 0; oi < order.size(); ++oi) {
        size_t i = order[oi];
        BigInt hv = -1;
        for (size_t oj = 0; oj < oi; ++oj) {
            size_t j = order[oj];
            if (fixed[j].size() < fixed[i].size() && refines(fixed[i], fixed[j], scratch)) hv -= h[j];
        }
        h[i] = hv;
    }
    BigInt total = -1;
    for (const BigInt& hv : h) total -= hv;
    return total;
}

/* Trace of perm on the single nonzero reduced homology group of the order
   complex, m odd.  The proper part is empty for m in {1, 3}; for m = 1 the
   bottom and top coincide and the convention is trace 1. */
inline BigInt homology_trace(int m, const std::vector<int>& perm) {
    if (m % 2 == 0) throw std::invalid_argument("homology_trace: even ground set");
    if (m == 1) return 1;
    BigInt l = reduced_lefschetz(m, perm);
    return ((m - 1) / 2) % 2 == 0 ? l : -l;
}

/* The graded contribution of a size-m orbit block: Tr * (-t)^{(m-1)/2}. */
inline SPoly homology_contribution(int m, const std::vector<int>& perm) {
    BigInt tr = homology_trace(m, perm);
    int n = (m - 1) / 2;
    BigRational c(tr);
    if (n % 2 == 1) c = -c;
    return SPoly::term(c, 2 * n);
}

}  // namespace realmoduli::poset
