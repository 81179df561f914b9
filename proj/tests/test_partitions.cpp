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

#include "realmoduli/partition.hpp"
#include "realmoduli/sn_characters.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

using namespace realmoduli;

TEST_CASE("partition enumeration is complete and ordered") {
    auto p4 = partitions_of(4);
    std::vector<Partition> expect = {{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
    CHECK(p4 == expect);

    // counts match the partition numbers 1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42
    std::vector<size_t> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == counts[static_cast<size_t>(n)]);

    for (const auto& p : partitions_of(7)) {
        CHECK(is_valid_partition(p));
        CHECK(partition_weight(p) == 7);
    }
}

TEST_CASE("class sizes sum to the group order") {
    for (int n = 1; n <= 8; ++n) {
        BigInt total = 0;
        for (const auto& p : partitions_of(n)) total += conjugacy_class_size(p);
        CHECK(total == factorial(n));
    }
    CHECK(z_lambda({2, 2, 1}) == 8);             // 2^2 * 2! * 1 * 1!
    CHECK(conjugacy_class_size({2, 2, 1}) == 15);  // 120 / 8
}

TEST_CASE("class representatives have the right cycle type") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : partitions_of(n)) {
            auto perm = class_representative(p);
            CHECK(cycle_type_of_permutation(perm) == p);
        }
}

TEST_CASE("partition sign counts even parts") {
    CHECK(partition_sign({1, 1, 1}) == 1);
    CHECK(partition_sign({2, 1}) == -1);
    CHECK(partition_sign({2, 2}) == 1);
    CHECK(partition_sign({4, 3, 2}) == 1);
    CHECK(partition_sign({6, 5}) == -1);
}

TEST_CASE("symmetric group character tables") {
    SnCharacters chars;

    SECTION("S3") {
        // classes ordered [1,1,1] < [2,1] < [3]
        CHECK(chars.value({3}, {1, 1, 1}) == 1);
        CHECK(chars.value({3}, {2, 1}) == 1);
        CHECK(chars.value({3}, {3}) == 1);
        CHECK(chars.value({1, 1, 1}, {2, 1}) == -1);
        CHECK(chars.value({2, 1}, {1, 1, 1}) == 2);
        CHECK(chars.value({2, 1}, {2, 1}) == 0);
        CHECK(chars.value({2, 1}, {3}) == -1);
    }

    SECTION("hook lengths give dimensions at the identity") {
        CHECK(chars.value({3, 2}, {1, 1, 1, 1, 1}) == 5);
        CHECK(chars.value({3, 1, 1}, {1, 1, 1, 1, 1}) == 6);
        CHECK(chars.value({4, 4}, {1, 1, 1, 1, 1, 1, 1, 1}) == 14);
        CHECK(chars.value({2, 2, 2, 2}, {1, 1, 1, 1, 1, 1, 1, 1}) == 14);
    }

    SECTION("column orthogonality for every n up to 7") {
        for (int n = 2; n <= 7; ++n) {
            auto classes = partitions_of(n);
            auto table = sn_character_table(n);
            // rows: lambda index, columns: class index
            for (size_t a = 0; a < classes.size(); ++a)
                for (size_t b = a; b < classes.size(); ++b) {
                    BigInt dot = 0;
                    for (size_t l = 0; l < classes.size(); ++l)
                        dot += BigInt(table[l][a]) * table[l][b];
                    if (a == b)
                        CHECK(dot == factorial(n) / conjugacy_class_size(classes[a]));
                    else
                        CHECK(dot == 0);
                }
        }
    }

    SECTION("sign and standard characters") {
        for (const auto& mu : partitions_of(6)) {
            CHECK(chars.value({1, 1, 1, 1, 1, 1}, mu) == partition_sign(mu));
            // standard character: fixed points minus one
            long long fixed = static_cast<long long>(std::count(mu.begin(), mu.end(), 1));
            CHECK(chars.value({5, 1}, mu) == fixed - 1);
        }
    }
}
