// Copyright 2026 The wernerlp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace wernerlp {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value type over GMP's mpq_class. Every constructor canonicalizes, so
/// two equal values always have identical numerator and denominator.
class Rational {
   public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt &value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt &numerator, const BigInt &denominator);
    Rational(long numerator, long denominator) : Rational(BigInt(numerator), BigInt(denominator)) {}

    /// Parses "num/den" or "num" (optionally signed). Throws ParseError.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class &raw() const { return value_; }

    /// Always "num/den", including integers ("3/1", "0/1").
    std::string str() const;
    double to_double() const { return value_.get_d(); }
    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }

    Rational pow(unsigned long exponent) const;

    Rational &operator+=(const Rational &o) {
        value_ += o.value_;
        return *this;
    }
    Rational &operator-=(const Rational &o) {
        value_ -= o.value_;
        return *this;
    }
    Rational &operator*=(const Rational &o) {
        value_ *= o.value_;
        return *this;
    }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) {
        Rational r;
        r.value_ = -a.value_;
        return r;
    }

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

   private:
    mpq_class value_;
};

std::ostream &operator<<(std::ostream &out, const Rational &value);

Rational min(const Rational &a, const Rational &b);
Rational max(const Rational &a, const Rational &b);

/// log2 of a positive rational, accurate even when num/den overflow double.
double log2_of(const Rational &value);

/// 2^exponent as a big integer.
BigInt pow2(unsigned long exponent);

/// base^exponent for a (possibly negative) machine integer base.
BigInt ipow(long base, unsigned long exponent);

}  // namespace wernerlp
