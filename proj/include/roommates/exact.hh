// Copyright 2026 The roommates Authors.
//
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

#ifndef ROOMMATES_EXACT_HH
#define ROOMMATES_EXACT_HH

#include <roommates/core.hh>

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace roommates
{
    ROOMMATES_ERROR(UndecidedComparison);

    /* num / den in lowest terms; the two-argument mpq_class constructor does not reduce. */
    inline auto rational(long num, long den) -> mpq_class
    {
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }

    /* constant + sum of c_t cos(2 pi t). Terms are normalised so every t lies in
     * (0, 1/4) with t != 1/6: cos is even, 1-periodic, cos(1/2 - t) = -cos(t),
     * and the rational values at 0, 1/6, 1/4 are folded into the constant. Every
     * stored cos value is therefore in (0, 1) and irrational. */
    class ExactReal
    {
        private:
            mpq_class _constant;
            std::map<mpq_class, mpq_class> _cos;

            auto add_cos(const mpq_class & coef, mpq_class turns) -> void;

        public:
            ExactReal() = default;
            ExactReal(const mpq_class & q) : _constant(q) { _constant.canonicalize(); }
            ExactReal(long v) : _constant(v) { }

            static auto cos_turns(const mpq_class & turns, const mpq_class & coef = 1) -> ExactReal;
            static auto sin_turns(const mpq_class & turns, const mpq_class & coef = 1) -> ExactReal;

            auto constant() const -> const mpq_class & { return _constant; }
            auto terms() const -> const std::map<mpq_class, mpq_class> & { return _cos; }
            auto is_rational() const -> bool { return _cos.empty(); }
            auto is_zero() const -> bool { return _cos.empty() && _constant == 0; }

            auto operator+= (const ExactReal & o) -> ExactReal &;
            auto operator-= (const ExactReal & o) -> ExactReal &;
            auto operator*= (const mpq_class & q) -> ExactReal &;

            friend auto operator+ (ExactReal a, const ExactReal & b) -> ExactReal { a += b; return a; }
            friend auto operator- (ExactReal a, const ExactReal & b) -> ExactReal { a -= b; return a; }
            friend auto operator- (ExactReal a) -> ExactReal { a *= mpq_class(-1); return a; }
            friend auto operator* (ExactReal a, const mpq_class & q) -> ExactReal { a *= q; return a; }
            friend auto operator* (const mpq_class & q, ExactReal a) -> ExactReal { a *= q; return a; }
            friend auto operator* (const ExactReal & a, const ExactReal & b) -> ExactReal;

            auto operator== (const ExactReal & o) const -> bool { return _constant == o._constant && _cos == o._cos; }

            auto to_string() const -> std::string;
    };

    enum class Certificate
    {
        Rational,
        Angle,
        Interval
    };

    auto certificate_name(Certificate c) -> std::string;

    struct Sign
    {
        int sign;
        Certificate certificate;
    };

    inline constexpr long max_precision_bits = 1L << 15;

    /* Certified sign. Zero is only ever returned for structural zeros; anything
     * else is either decided or raises UndecidedComparison. */
    auto certified_sign(const ExactReal & x) -> Sign;

    /* Certified enclosure [lo, hi] at the given precision. */
    auto enclose(const ExactReal & x, long precision_bits) -> std::pair<mpq_class, mpq_class>;

    /* A positive rational below |x|, for x structurally nonzero. */
    auto abs_lower_bound(const ExactReal & x) -> mpq_class;
    /* A rational above |x|. */
    auto abs_upper_bound(const ExactReal & x) -> mpq_class;

    /* Round-to-nearest evaluation, not certified. Only for cross-checks and plotting. */
    auto evaluate_naive(const ExactReal & x, long precision_bits) -> mpq_class;
    auto to_double(const ExactReal & x) -> double;

    /* Polynomial in a symbolic large parameter R, coefficient i multiplies R^i.
     * Used for the R -> infinity limit; ordinary values have degree 0. */
    class RPoly
    {
        private:
            std::vector<ExactReal> _c;

            auto trim() -> void;

        public:
            RPoly() = default;
            RPoly(const ExactReal & x) : _c{ x } { trim(); }
            RPoly(const mpq_class & q) : RPoly(ExactReal(q)) { }
            RPoly(long v) : RPoly(ExactReal(v)) { }
            static auto linear(const ExactReal & scale, const ExactReal & base) -> RPoly;

            auto degree() const -> int { return int(_c.size()) - 1; }
            auto coefficient(int i) const -> ExactReal { return i < int(_c.size()) ? _c[i] : ExactReal(); }
            auto is_zero() const -> bool { return _c.empty(); }

            auto operator+= (const RPoly & o) -> RPoly &;
            auto operator-= (const RPoly & o) -> RPoly &;
            friend auto operator+ (RPoly a, const RPoly & b) -> RPoly { a += b; return a; }
            friend auto operator- (RPoly a, const RPoly & b) -> RPoly { a -= b; return a; }
            friend auto operator* (const RPoly & a, const RPoly & b) -> RPoly;
            auto operator== (const RPoly & o) const -> bool { return _c == o._c; }

            /* Substitutes a concrete value for R. */
            auto at(const mpq_class & r) const -> ExactReal;
    };

    /* Sign as R -> infinity: the leading structurally nonzero coefficient decides. */
    auto certified_sign(const RPoly & x) -> Sign;

    auto q_to_string(const mpq_class & q) -> std::string;
}

#endif
