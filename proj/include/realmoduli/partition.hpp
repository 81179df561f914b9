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

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace realmoduli {

/* A partition is a weakly decreasing vector of positive parts; the empty
   vector is the partition of 0. */
using Partition = std::vector<int>;

inline int partition_weight(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

inline bool is_valid_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

inline void check_partition(const Partition& p) {
    if (!is_valid_partition(p)) throw std::invalid_argument("invalid partition");
}

/* cycle counts: part length -> multiplicity */
inline std::map<int, int> part_multiplicities(const Partition& p) {
    std::map<int, int> m;
    for (int x : p) ++m[x];
    return m;
}

/* z_lambda = prod_l l^{m_l} m_l!, the centralizer order of a permutation of
   cycle type lambda. */
inline BigInt z_lambda(const Partition& p) {
    check_partition(p);
    BigInt z = 1;
    for (const auto& [l, m] : part_multiplicities(p)) {
        for (int i = 0; i < m; ++i) z *= l;
        z *= factorial(m);
    }
    return z;
}

inline BigInt conjugacy_class_size(const Partition& p) {
    return factorial(partition_weight(p)) / z_lambda(p);
}

/* All partitions of n, sorted lexicographically as decreasing vectors
   ([1,1,1,1] < [2,1,1] < [2,2] < [3,1] < [4]).  This is the canonical
   enumeration order used everywhere (tests, CLI --all). */
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rem, maxpart); part >= 1; --part) {
            cur.push_back(part);
            self(self, rem - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    std::sort(out.begin(), out.end());
    return out;
}

/* All partitions of every size 1..n (used to sweep p-degrees). */
inline std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 1; k <= n; ++k) {
        auto pk = partitions_of(k);
        out.insert(out.end(), pk.begin(), pk.end());
    }
    return out;
}

inline std::string partition_str(const Partition& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

/* sign of any permutation of cycle type p */
inline int partition_sign(const Partition& p) {
    int even_parts = 0;
    for (int x : p)
        if (x % 2 == 0) ++even_parts;
    return even_parts % 2 == 0 ? 1 : -1;
}

/* A concrete permutation of {0..n-1} with the given cycle type, cycles laid
   out consecutively.  Deterministic representative of the class. */
inline std::vector<int> class_representative(const Partition& p) {
    check_partition(p);
    std::vector<int> perm(partition_weight(p));
    int base = 0;
    for (int len : p) {
        for (int i = 0; i < len; ++i) perm[base + i] = base + (i + 1) % len;
        base += len;
    }
    return perm;
}

inline Partition cycle_type_of_permutation(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    Partition type;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

}  // namespace realmoduli
