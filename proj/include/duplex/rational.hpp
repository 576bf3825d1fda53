// Copyright 2026 The Duplex Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational arithmetic on arbitrary-precision integers.
 *
 * The sole scalar type of the library. Every value is kept in canonical
 * form: denominator > 0, gcd(|num|, den) = 1, zero is 0/1. No floating
 * point enters any computation; decimals only appear when a value is
 * rendered for display.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "duplex/errors.hpp"

namespace duplex {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}          // NOLINT: implicit by design
    Rational(const BigInt& n) : num_(n), den_(1) {}      // NOLINT
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw ArithmeticError("rational: zero denominator");
        canonicalize();
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw ArithmeticError("rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    // Canonical form makes equality structural.
    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    std::strong_ordering operator<=>(const Rational& o) const {
        // a/b <=> c/d  iff  a*d <=> c*b, denominators positive.
        const BigInt lhs = num_ * o.den_;
        const BigInt rhs = o.num_ * den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// Canonical text form: "p" when integral, "p/q" otherwise.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Fixed-point rendering with `places` digits after the separator,
    /// rounded half away from zero. `comma` selects a decimal comma
    /// over a dot.
    std::string to_decimal(unsigned places, bool comma = false) const {
        BigInt scale = 1;
        for (unsigned i = 0; i < places; ++i) scale *= 10;
        BigInt scaled_num = boost::multiprecision::abs(num_) * scale;
        BigInt quot = scaled_num / den_;
        BigInt rem = scaled_num % den_;
        if (2 * rem >= den_) ++quot;

        std::string digits = quot.str();
        if (digits.size() <= places) {
            digits.insert(0, places + 1 - digits.size(), '0');
        }
        std::string out;
        if (num_ < 0 && quot != 0) out += '-';
        out += digits.substr(0, digits.size() - places);
        if (places > 0) {
            out += comma ? ',' : '.';
            out += digits.substr(digits.size() - places);
        }
        return out;
    }

    /// Parses "p", "p/q", or a finite decimal. Both "," and "." are
    /// accepted as the decimal separator ("0,33" and "0.33" are the
    /// same value); decimals convert exactly, d digits giving 10^d.
    static Rational parse(std::string_view text);

private:
    void canonicalize() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_; // carries the sign
    BigInt den_; // always > 0
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

inline BigInt digits_to_bigint(std::string_view s) {
    return BigInt(std::string(s));
}

} // namespace detail

inline Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    if (s.empty()) throw ParseError("rational: empty text");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("rational: sign without digits in '" + std::string(text) + "'");

    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        std::string_view p = s.substr(0, slash);
        std::string_view q = s.substr(slash + 1);
        if (!detail::all_digits(p) || !detail::all_digits(q)) {
            throw ParseError("rational: malformed fraction '" + std::string(text) + "'");
        }
        BigInt num = detail::digits_to_bigint(p);
        BigInt den = detail::digits_to_bigint(q);
        if (den == 0) throw ParseError("rational: zero denominator in '" + std::string(text) + "'");
        if (negative) num = -num;
        return Rational(num, den);
    }

    auto sep = s.find_first_of(".,");
    if (sep != std::string_view::npos) {
        std::string_view ip = s.substr(0, sep);
        std::string_view fp = s.substr(sep + 1);
        if (!detail::all_digits(fp) || (!ip.empty() && !detail::all_digits(ip))) {
            throw ParseError("rational: malformed decimal '" + std::string(text) + "'");
        }
        BigInt num = ip.empty() ? BigInt(0) : detail::digits_to_bigint(ip);
        BigInt den = 1;
        for (char c : fp) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
        if (negative) num = -num;
        return Rational(num, den);
    }

    if (!detail::all_digits(s)) {
        throw ParseError("rational: malformed number '" + std::string(text) + "'");
    }
    BigInt num = detail::digits_to_bigint(s);
    if (negative) num = -num;
    return Rational(num);
}

/// Convenience for tests and literals: rat("65/2"), rat("3,125").
inline Rational rat(std::string_view text) { return Rational::parse(text); }

} // namespace duplex
