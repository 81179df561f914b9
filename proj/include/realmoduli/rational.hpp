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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace realmoduli {

/* Exact arbitrary-precision scalars.  BigRational is kept in lowest terms
   with a positive denominator by the underlying representation. */
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/* Thrown when a computation would exceed a configured size bound. */
class resource_cap_error : public std::runtime_error {
public:
    explicit resource_cap_error(const std::string& what) : std::runtime_error(what) {}
};

inline BigInt num(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const BigRational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const BigRational& q) { return den(q) == 1; }

inline BigInt to_integer(const BigRational& q) {
    if (!is_integer(q)) throw std::domain_error("to_integer: value " + q.str() + " is not an integer");
    return num(q);
}

inline BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

/* Moebius function by trial factorization; exact for any 64-bit argument we
   ever see (cycle lengths are tiny). */
inline int moebius(long long n) {
    if (n <= 0) throw std::invalid_argument("moebius: argument must be positive");
    int factors = 0;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            ++factors;
            if (n % p == 0) return 0;  // square factor
        }
    }
    if (n > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

/* 2-adic valuation. */
inline int val2(long long n) {
    if (n <= 0) throw std::invalid_argument("val2: argument must be positive");
    int v = 0;
    while (n % 2 == 0) { n /= 2; ++v; }
    return v;
}

inline bool is_power_of_two(long long n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace realmoduli
