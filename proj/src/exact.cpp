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

#include "wernerlp/exact.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "wernerlp/errors.hpp"

namespace wernerlp {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

BigInt parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) {
        throw ParseError("not an integer: '" + std::string(s) + "'");
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    return BigInt(std::string(s), 10);
}

double log2_of_positive(const BigInt &v) {
    long exponent = 0;
    double mantissa = mpz_get_d_2exp(&exponent, v.get_mpz_t());
    return std::log2(mantissa) + static_cast<double>(exponent);
}

}  // namespace

Rational::Rational(const BigInt &numerator, const BigInt &denominator) : value_(numerator, denominator) {
    if (denominator == 0) {
        throw InvalidArgument("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    BigInt num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') {
        throw ParseError("denominator must be positive: '" + std::string(text) + "'");
    }
    BigInt den = parse_integer(den_text);
    if (den == 0) {
        throw ParseError("zero denominator: '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string Rational::str() const { return value_.get_num().get_str() + "/" + value_.get_den().get_str(); }

Rational Rational::pow(unsigned long exponent) const {
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
    Rational r;
    // Powers of coprime integers stay coprime; no canonicalization needed.
    r.value_.get_num() = num;
    r.value_.get_den() = den;
    return r;
}

Rational &Rational::operator/=(const Rational &o) {
    if (o.is_zero()) {
        throw InvalidArgument("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::ostream &operator<<(std::ostream &out, const Rational &value) { return out << value.str(); }

Rational min(const Rational &a, const Rational &b) { return b < a ? b : a; }
Rational max(const Rational &a, const Rational &b) { return a < b ? b : a; }

double log2_of(const Rational &value) {
    if (value.sign() <= 0) {
        throw InvalidArgument("log2 of a non-positive rational");
    }
    return log2_of_positive(value.numerator()) - log2_of_positive(value.denominator());
}

BigInt pow2(unsigned long exponent) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
    return r;
}

BigInt ipow(long base, unsigned long exponent) {
    BigInt b(base);
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exponent);
    return r;
}

}  // namespace wernerlp
