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

#include "spoly.hpp"

namespace realmoduli {

/* Rational function in s (s^2 = t), stored as a reduced fraction.
   Invariants after construction:
     - den is an ordinary polynomial (no negative exponents), monic, with a
       nonzero constant term; all Laurent units are pushed into num;
     - gcd(num cleared of its s-unit, den) = 1.
   The numerator may be a genuine Laurent polynomial. */
class SRatFunc {
public:
    SRatFunc() : num_(), den_(SPoly::one()) {}
    explicit SRatFunc(const SPoly& n) : num_(n), den_(SPoly::one()) {}
    explicit SRatFunc(const BigRational& c) : num_(SPoly(c)), den_(SPoly::one()) {}
    explicit SRatFunc(long long c) : num_(SPoly(c)), den_(SPoly::one()) {}

    SRatFunc(const SPoly& n, const SPoly& d) : num_(n), den_(d) { normalize(); }

    static SRatFunc one() { return SRatFunc(1); }
    static SRatFunc s_power(int e) { return SRatFunc(SPoly::s_power(e)); }
    static SRatFunc t_power(int k) { return SRatFunc(SPoly::t_power(k)); }

    const SPoly& num() const { return num_; }
    const SPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == SPoly::one(); }

    /* The underlying Laurent polynomial; a nontrivial denominator is a
       domain error for callers that require polynomial output. */
    const SPoly& as_polynomial() const {
        if (!is_polynomial())
            throw std::domain_error("SRatFunc::as_polynomial: nontrivial denominator " + den_.str());
        return num_;
    }

    /* Value at t = 1 (i.e. s = 1), taken after full cancellation; a
       denominator vanishing at s = 1 is then a genuine pole. */
    BigRational eval_at_t1() const {
        BigRational d = den_.eval(1);
        if (d == 0) throw std::domain_error("SRatFunc::eval_at_t1: pole at t = 1");
        return num_.eval(1) / d;
    }

    SRatFunc operator-() const {
        SRatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend SRatFunc operator+(const SRatFunc& a, const SRatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return SRatFunc(a.num_ + b.num_, a.den_);
        return SRatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend SRatFunc operator-(const SRatFunc& a, const SRatFunc& b) { return a + (-b); }

    friend SRatFunc operator*(const SRatFunc& a, const SRatFunc& b) {
        if (a.is_zero() || b.is_zero()) return SRatFunc();
        return SRatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend SRatFunc operator/(const SRatFunc& a, const SRatFunc& b) {
        if (b.is_zero()) throw std::domain_error("SRatFunc: division by zero");
        if (a.is_zero()) return SRatFunc();
        return SRatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    SRatFunc& operator+=(const SRatFunc& o) { return *this = *this + o; }
    SRatFunc& operator-=(const SRatFunc& o) { return *this = *this - o; }
    SRatFunc& operator*=(const SRatFunc& o) { return *this = *this * o; }
    SRatFunc& operator/=(const SRatFunc& o) { return *this = *this / o; }

    /* substitute s -> s^i; reducedness is preserved */
    SRatFunc subs_s_power(int i) const {
        SRatFunc r;
        r.num_ = num_.subs_s_power(i);
        r.den_ = den_.subs_s_power(i);
        return r;
    }

    friend bool operator==(const SRatFunc& a, const SRatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const SRatFunc& a, const SRatFunc& b) { return !(a == b); }
    friend bool operator<(const SRatFunc& a, const SRatFunc& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        std::string n = num_.str(), d = den_.str();
        bool npar = n.find(' ') != std::string::npos;
        bool dpar = d.find(' ') != std::string::npos || d.find('*') != std::string::npos;
        return (npar ? "(" + n + ")" : n) + "/" + (dpar ? "(" + d + ")" : d);
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("SRatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = SPoly::one();
            return;
        }
        // Push all s-units into the numerator so den(0) != 0.
        int dshift = den_.min_exp();
        if (dshift != 0) {
            den_ = den_.shifted(-dshift);
            num_ = num_.shifted(-dshift);
        }
        // Cancel the polynomial gcd against the cleared numerator.
        int nshift = num_.min_exp();
        SPoly ncleared = num_.shifted(-nshift);
        SPoly g = SPoly::gcd(ncleared, den_);
        if (!(g == SPoly::one())) {
            ncleared = SPoly::divmod(ncleared, g).first;
            den_ = SPoly::divmod(den_, g).first;
        }
        // Make the denominator monic.
        BigRational lead = den_.leading_coeff();
        if (lead != 1) {
            den_.scale(1 / lead);
            ncleared.scale(1 / lead);
        }
        num_ = ncleared.shifted(nshift);
    }

    SPoly num_, den_;
};

}  // namespace realmoduli
