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

#include <map>

namespace realmoduli {

/* Irreducible character values of symmetric groups via the
   Murnaghan-Nakayama rule, phrased with beta numbers: represent lambda with
   m rows by the distinct set beta_i = lambda_i + (m-1-i).  Removing a border
   strip of length k is replacing some beta b by b-k (which must be fresh and
   nonnegative); the strip height is the number of betas strictly between
   b-k and b.  Only small n is ever needed, so a memoized recursion is
   plenty. */
class SnCharacters {
public:
    /* chi^lambda evaluated on the class of cycle type mu; |lambda| == |mu| */
    long long value(const Partition& lambda, const Partition& mu) {
        if (partition_weight(lambda) != partition_weight(mu))
            throw std::invalid_argument("SnCharacters::value: sizes differ");
        check_partition(lambda);
        check_partition(mu);
        return rec(lambda, mu, 0);
    }

private:
    long long rec(const Partition& lambda, const Partition& mu, size_t mi) {
        if (mi == mu.size()) return 1;  // both shapes exhausted
        auto key = std::make_pair(lambda, Partition(mu.begin() + mi, mu.end()));
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        const int k = mu[mi];
        const int m = static_cast<int>(lambda.size());
        std::vector<int> beta(m);
        for (int i = 0; i < m; ++i) beta[i] = lambda[i] + (m - 1 - i);
        // beta is strictly decreasing

        long long total = 0;
        for (int i = 0; i < m; ++i) {
            int b = beta[i] - k;
            if (b < 0) continue;
            bool fresh = true;
            int between = 0;
            for (int j = 0; j < m; ++j) {
                if (j == i) continue;
                if (beta[j] == b) {
                    fresh = false;
                    break;
                }
                if (beta[j] > b && beta[j] < beta[i]) ++between;
            }
            if (!fresh) continue;
            std::vector<int> nb = beta;
            nb[i] = b;
            std::sort(nb.rbegin(), nb.rend());
            Partition nu;
            for (int j = 0; j < m; ++j) {
                int part = nb[j] - (m - 1 - j);
                if (part > 0) nu.push_back(part);
            }
            long long sub = rec(nu, mu, mi + 1);
            total += (between % 2 == 0 ? sub : -sub);
        }
        memo_[key] = total;
        return total;
    }

    std::map<std::pair<Partition, Partition>, long long> memo_;
};

/* Full character table for S_n: table[i][j] = chi^{lambda_i}(mu_j) with both
   partitions enumerated by partitions_of(n). */
inline std::vector<std::vector<long long>> sn_character_table(int n) {
    auto parts = partitions_of(n);
    SnCharacters chars;
    std::vector<std::vector<long long>> table(parts.size(), std::vector<long long>(parts.size()));
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = 0; j < parts.size(); ++j) table[i][j] = chars.value(parts[i], parts[j]);
    return table;
}

}  // namespace realmoduli
