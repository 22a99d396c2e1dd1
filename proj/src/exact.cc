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

#include <roommates/exact.hh>

#include <mpfr.h>

#include <sstream>

namespace roommates
{
    namespace
    {
        const mpq_class quarter(1, 4), half(1, 2), sixth(1, 6);

        auto sgn(const mpq_class & q) -> int
        {
            return ::sgn(q);
        }

        /* Minimal RAII wrapper around an mpfr_t. */
        class Float
        {
            private:
                mpfr_t _v;

            public:
                explicit Float(long precision) { mpfr_init2(_v, precision); mpfr_set_zero(_v, 1); }
                ~Float() { mpfr_clear(_v); }
                Float(const Float &) = delete;
                auto operator= (const Float &) -> Float & = delete;

                auto get() -> mpfr_ptr { return _v; }
                auto get() const -> mpfr_srcptr { return _v; }
                auto to_q() const -> mpq_class
                {
                    mpq_class q;
                    mpfr_get_q(q.get_mpq_t(), _v);
                    return q;
                }
        };

        struct Enclosure
        {
            Float lo, hi;

            explicit Enclosure(long precision) : lo(precision), hi(precision) { }
        };

        /* cos(2 pi t) for t in (0, 1/4): 2 pi t lies in (0, pi/2) where cos is
         * decreasing, so rounding pi down and up brackets the argument and the
         * directed cos evaluations bracket the value. */
        auto cos_enclosure(const mpq_class & t, long precision, Enclosure & out) -> void
        {
            Float pi_lo(precision), pi_hi(precision), x_lo(precision), x_hi(precision);
            mpq_class two_t = 2 * t;
            mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
            mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
            mpfr_mul_q(x_lo.get(), pi_lo.get(), two_t.get_mpq_t(), MPFR_RNDD);
            mpfr_mul_q(x_hi.get(), pi_hi.get(), two_t.get_mpq_t(), MPFR_RNDU);
            mpfr_cos(out.lo.get(), x_hi.get(), MPFR_RNDD);
            mpfr_cos(out.hi.get(), x_lo.get(), MPFR_RNDU);
            if (mpfr_sgn(out.lo.get()) < 0)
                mpfr_set_zero(out.lo.get(), 1);
            if (mpfr_cmp_ui(out.hi.get(), 1) > 0)
                mpfr_set_ui(out.hi.get(), 1, MPFR_RNDU);
        }

        auto interval(const ExactReal & x, long precision, Enclosure & out) -> void
        {
            mpfr_set_q(out.lo.get(), x.constant().get_mpq_t(), MPFR_RNDD);
            mpfr_set_q(out.hi.get(), x.constant().get_mpq_t(), MPFR_RNDU);
            Enclosure c(precision);
            Float a(precision), b(precision);
            for (auto & [t, coef] : x.terms()) {
                cos_enclosure(t, precision, c);
                /* coef * [clo, chi]; endpoints swap for negative coefficients. */
                bool neg = sgn(coef) < 0;
                mpfr_mul_q(a.get(), neg ? c.hi.get() : c.lo.get(), coef.get_mpq_t(), MPFR_RNDD);
                mpfr_mul_q(b.get(), neg ? c.lo.get() : c.hi.get(), coef.get_mpq_t(), MPFR_RNDU);
                mpfr_add(out.lo.get(), out.lo.get(), a.get(), MPFR_RNDD);
                mpfr_add(out.hi.get(), out.hi.get(), b.get(), MPFR_RNDU);
            }
        }
    }

    auto ExactReal::add_cos(const mpq_class & coef, mpq_class t) -> void
    {
        if (coef == 0)
            return;
        t.canonicalize();
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
        t -= fl;
        if (t > half)
            t = 1 - t;
        mpq_class c = coef;
        if (t > quarter) {
            t = half - t;
            c = -c;
        }
        if (t == 0)
            _constant += c;
        else if (t == sixth)
            _constant += c / 2;
        else if (t == quarter)
            return;
        else {
            auto & slot = _cos[t];
            slot += c;
            if (slot == 0)
                _cos.erase(t);
        }
    }

    auto ExactReal::cos_turns(const mpq_class & turns, const mpq_class & coef) -> ExactReal
    {
        ExactReal r;
        r.add_cos(coef, turns);
        return r;
    }

    auto ExactReal::sin_turns(const mpq_class & turns, const mpq_class & coef) -> ExactReal
    {
        return cos_turns(turns - quarter, coef);
    }

    auto ExactReal::operator+= (const ExactReal & o) -> ExactReal &
    {
        _constant += o._constant;
        for (auto & [t, c] : o._cos)
            add_cos(c, t);
        return *this;
    }

    auto ExactReal::operator-= (const ExactReal & o) -> ExactReal &
    {
        _constant -= o._constant;
        for (auto & [t, c] : o._cos)
            add_cos(-c, t);
        return *this;
    }

    auto ExactReal::operator*= (const mpq_class & q) -> ExactReal &
    {
        if (q == 0) {
            _constant = 0;
            _cos.clear();
            return *this;
        }
        _constant *= q;
        for (auto & [t, c] : _cos)
            c *= q;
        return *this;
    }

    auto operator* (const ExactReal & a, const ExactReal & b) -> ExactReal
    {
        ExactReal r(a._constant * b._constant);
        for (auto & [t, c] : b._cos)
            r.add_cos(a._constant * c, t);
        for (auto & [t, c] : a._cos)
            r.add_cos(b._constant * c, t);
        /* cos A cos B = (cos(A - B) + cos(A + B)) / 2 */
        for (auto & [t, c] : a._cos)
            for (auto & [u, d] : b._cos) {
                mpq_class h = c * d / 2;
                r.add_cos(h, t - u);
                r.add_cos(h, t + u);
            }
        return r;
    }

    auto ExactReal::to_string() const -> std::string
    {
        std::ostringstream out;
        out << _constant.get_str();
        for (auto & [t, c] : _cos)
            out << (sgn(c) < 0 ? " - " : " + ") << mpq_class(abs(c)).get_str() << "*cos(2pi*" << t.get_str() << ")";
        return out.str();
    }

    auto certificate_name(Certificate c) -> std::string
    {
        switch (c) {
            case Certificate::Rational: return "rational";
            case Certificate::Angle:    return "angle";
            case Certificate::Interval: return "interval";
        }
        return "?";
    }

    auto certified_sign(const ExactReal & x) -> Sign
    {
        auto & terms = x.terms();
        if (terms.empty())
            return { sgn(x.constant()), Certificate::Rational };

        /* Every stored cos value is positive, so agreeing signs decide. */
        int first = sgn(terms.begin()->second);
        bool agree = sgn(x.constant()) == 0 || sgn(x.constant()) == first;
        for (auto & [t, c] : terms)
            agree = agree && sgn(c) == first;
        if (agree)
            return { first, Certificate::Angle };

        /* c (cos t1 - cos t2): cos is decreasing on (0, 1/4). */
        if (terms.size() == 2 && x.constant() == 0) {
            auto a = terms.begin(), b = std::next(a);
            if (a->second == -b->second)
                return { sgn(a->second), Certificate::Angle };
        }

        for (long p = 64 ; p <= max_precision_bits ; p *= 2) {
            Enclosure e(p);
            interval(x, p, e);
            if (mpfr_sgn(e.lo.get()) > 0)
                return { 1, Certificate::Interval };
            if (mpfr_sgn(e.hi.get()) < 0)
                return { -1, Certificate::Interval };
        }
        throw UndecidedComparison("sign of " + x.to_string() + " undecided at " + std::to_string(max_precision_bits) + " bits");
    }

    auto enclose(const ExactReal & x, long precision_bits) -> std::pair<mpq_class, mpq_class>
    {
        Enclosure e(precision_bits);
        interval(x, precision_bits, e);
        return { e.lo.to_q(), e.hi.to_q() };
    }

    auto abs_lower_bound(const ExactReal & x) -> mpq_class
    {
        if (x.is_zero())
            throw std::logic_error("abs_lower_bound of zero");
        for (long p = 64 ; p <= max_precision_bits ; p *= 2) {
            auto [lo, hi] = enclose(x, p);
            if (lo > 0)
                return lo;
            if (hi < 0)
                return -hi;
        }
        throw UndecidedComparison("cannot separate " + x.to_string() + " from zero");
    }

    auto abs_upper_bound(const ExactReal & x) -> mpq_class
    {
        auto [lo, hi] = enclose(x, 64);
        return std::max(abs(lo), abs(hi));
    }

    auto evaluate_naive(const ExactReal & x, long precision_bits) -> mpq_class
    {
        Float sum(precision_bits), pi(precision_bits), arg(precision_bits), c(precision_bits);
        mpfr_set_q(sum.get(), x.constant().get_mpq_t(), MPFR_RNDN);
        mpfr_const_pi(pi.get(), MPFR_RNDN);
        for (auto & [t, coef] : x.terms()) {
            mpq_class two_t = 2 * t;
            mpfr_mul_q(arg.get(), pi.get(), two_t.get_mpq_t(), MPFR_RNDN);
            mpfr_cos(c.get(), arg.get(), MPFR_RNDN);
            mpfr_mul_q(c.get(), c.get(), coef.get_mpq_t(), MPFR_RNDN);
            mpfr_add(sum.get(), sum.get(), c.get(), MPFR_RNDN);
        }
        return sum.to_q();
    }

    auto to_double(const ExactReal & x) -> double
    {
        return evaluate_naive(x, 64).get_d();
    }

    auto RPoly::trim() -> void
    {
        while (! _c.empty() && _c.back().is_zero())
            _c.pop_back();
    }

    auto RPoly::linear(const ExactReal & scale, const ExactReal & base) -> RPoly
    {
        RPoly r;
        r._c = { base, scale };
        r.trim();
        return r;
    }

    auto RPoly::operator+= (const RPoly & o) -> RPoly &
    {
        if (_c.size() < o._c.size())
            _c.resize(o._c.size());
        for (std::size_t i = 0 ; i < o._c.size() ; ++i)
            _c[i] += o._c[i];
        trim();
        return *this;
    }

    auto RPoly::operator-= (const RPoly & o) -> RPoly &
    {
        if (_c.size() < o._c.size())
            _c.resize(o._c.size());
        for (std::size_t i = 0 ; i < o._c.size() ; ++i)
            _c[i] -= o._c[i];
        trim();
        return *this;
    }

    auto operator* (const RPoly & a, const RPoly & b) -> RPoly
    {
        RPoly r;
        if (a.is_zero() || b.is_zero())
            return r;
        r._c.assign(a._c.size() + b._c.size() - 1, ExactReal());
        for (std::size_t i = 0 ; i < a._c.size() ; ++i)
            for (std::size_t j = 0 ; j < b._c.size() ; ++j)
                r._c[i + j] += a._c[i] * b._c[j];
        r.trim();
        return r;
    }

    auto RPoly::at(const mpq_class & r) const -> ExactReal
    {
        ExactReal sum;
        mpq_class power = 1;
        for (auto & c : _c) {
            sum += c * power;
            power *= r;
        }
        return sum;
    }

    auto certified_sign(const RPoly & x) -> Sign
    {
        if (x.is_zero())
            return { 0, Certificate::Rational };
        return certified_sign(x.coefficient(x.degree()));
    }

    auto q_to_string(const mpq_class & q) -> std::string
    {
        return q.get_str();
    }
}
