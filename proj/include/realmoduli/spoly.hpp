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

#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace realmoduli {

/* Laurent polynomial in s, where s^2 = t.  Every half-integer power of t
   that the character formulas produce lives on the integer exponent grid of
   s, so all arithmetic stays exact.  Exponents may be negative. */
class SPoly {
public:
    SPoly() = default;
    /* constant */
    explicit SPoly(const BigRational& c) {
        if (c != 0) coeffs_[0] = c;
    }
    explicit SPoly(long long c) : SPoly(BigRational(c)) {}

    /* c * s^e */
    static SPoly term(const BigRational& c, int e) {
        SPoly p;
        if (c != 0) p.coeffs_[e] = c;
        return p;
    }
    static SPoly s_power(int e) { return term(1, e); }
    static SPoly t_power(int k) { return term(1, 2 * k); }  // t^k = s^(2k)
    static SPoly one() { return SPoly(1); }

    bool is_zero() const { return coeffs_.empty(); }

    bool is_constant() const {
        return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
    }

    /* exponent range; calling on zero is a programming error */
    int min_exp() const {
        if (is_zero()) throw std::domain_error("SPoly::min_exp on zero polynomial");
        return coeffs_.begin()->first;
    }
    int max_exp() const {
        if (is_zero()) throw std::domain_error("SPoly::max_exp on zero polynomial");
        return coeffs_.rbegin()->first;
    }

    BigRational coeff(int e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? BigRational(0) : it->second;
    }
    BigRational leading_coeff() const { return coeffs_.rbegin()->second; }

    const std::map<int, BigRational>& coeffs() const { return coeffs_; }

    void set_coeff(int e, const BigRational& c) {
        if (c == 0)
            coeffs_.erase(e);
        else
            coeffs_[e] = c;
    }
    void add_coeff(int e, const BigRational& c) { set_coeff(e, coeff(e) + c); }

    SPoly operator-() const {
        SPoly r = *this;
        for (auto& [e, c] : r.coeffs_) c = -c;
        return r;
    }

    SPoly& operator+=(const SPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_coeff(e, c);
        return *this;
    }
    SPoly& operator-=(const SPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_coeff(e, -c);
        return *this;
    }
    friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
    friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }

    friend SPoly operator*(const SPoly& a, const SPoly& b) {
        SPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_coeff(ea + eb, ca * cb);
        return r;
    }
    SPoly& operator*=(const SPoly& o) { return *this = *this * o; }

    SPoly& scale(const BigRational& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [e, v] : coeffs_) v *= c;
        return *this;
    }
    friend SPoly operator*(const BigRational& c, SPoly p) { return p.scale(c); }

    /* multiply by s^k */
    SPoly shifted(int k) const {
        SPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
        return r;
    }

    /* substitute s -> s^i (used by plethysm slots) */
    SPoly subs_s_power(int i) const {
        if (i < 1) throw std::invalid_argument("SPoly::subs_s_power: exponent factor must be >= 1");
        SPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[e * i] = c;
        return r;
    }

    BigRational eval(const BigRational& s) const {
        BigRational acc = 0;
        for (const auto& [e, c] : coeffs_) {
            if (e >= 0) {
                BigRational p = 1;
                for (int i = 0; i < e; ++i) p *= s;
                acc += c * p;
            } else {
                if (s == 0) throw std::domain_error("SPoly::eval: negative exponent at s = 0");
                BigRational p = 1;
                for (int i = 0; i < -e; ++i) p *= s;
                acc += c / p;
            }
        }
        return acc;
    }

    friend bool operator==(const SPoly& a, const SPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const SPoly& a, const SPoly& b) { return !(a == b); }
    friend bool operator<(const SPoly& a, const SPoly& b) { return a.coeffs_ < b.coeffs_; }

    /* Division with remainder in Q[s]; both operands must have exponents
       >= 0.  Returns {quotient, remainder}. */
    static std::pair<SPoly, SPoly> divmod(const SPoly& a, const SPoly& b) {
        if (b.is_zero()) throw std::domain_error("SPoly::divmod: division by zero");
        if ((!a.is_zero() && a.min_exp() < 0) || b.min_exp() < 0)
            throw std::invalid_argument("SPoly::divmod: operands must be ordinary polynomials");
        SPoly q, r = a;
        const int db = b.max_exp();
        const BigRational lb = b.leading_coeff();
        while (!r.is_zero() && r.max_exp() >= db) {
            int e = r.max_exp() - db;
            BigRational c = r.leading_coeff() / lb;
            SPoly m = term(c, e);
            q += m;
            r -= m * b;
        }
        return {q, r};
    }

    /* Monic gcd in Q[s] (Euclidean algorithm). */
    static SPoly gcd(SPoly a, SPoly b) {
        while (!b.is_zero()) {
            SPoly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        a.scale(1 / a.leading_coeff());
        return a;
    }

    /* Multiplicative inverse as a power series in s, modulo s^order.
       Requires a nonzero constant term. */
    SPoly series_inverse(int order) const {
        if (coeff(0) == 0)
            throw std::domain_error("SPoly::series_inverse: constant term is zero");
        SPoly inv = term(1 / coeff(0), 0);
        // Newton iteration: inv <- inv * (2 - f * inv), doubling precision.
        for (int prec = 1; prec < order;) {
            prec *= 2;
            SPoly prod = truncated(*this, prec) * inv;
            SPoly two_minus = SPoly(2) - prod;
            inv = truncated(inv * two_minus, prec);
        }
        return truncated(inv, order);
    }

    /* drop every term with exponent >= bound */
    static SPoly truncated(const SPoly& p, int bound) {
        SPoly r;
        for (const auto& [e, c] : p.coeffs_) {
            if (e < bound) r.coeffs_[e] = c;
        }
        return r;
    }

    /* Render in the variable t, writing odd s-exponents as half powers of t:
       s^3 -> t^(3/2).  Terms are listed from low to high exponent. */
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
            BigRational a = c;
            if (first) {
                if (a < 0) {
                    out << "-";
                    a = -a;
                }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            std::string power;
            if (e == 0) {
                power = "";
            } else if (e == 2) {
                power = "t";
            } else if (e % 2 == 0) {
                power = "t^" + std::to_string(e / 2);
            } else {
                power = "t^(" + std::to_string(e) + "/2)";
            }
            if (power.empty()) {
                out << a.str();
            } else if (a == 1) {
                out << power;
            } else {
                out << a.str() << "*" << power;
            }
        }
        return out.str();
    }

private:
    std::map<int, BigRational> coeffs_;  // exponent of s -> coefficient, no zeros stored
};

}  // namespace realmoduli
