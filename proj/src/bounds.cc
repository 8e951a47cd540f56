#include <fodef/bounds.hh>
#include <fodef/errors.hh>

#include <cmath>
#include <limits>

namespace fodef
{
    namespace
    {
        constexpr int interval_bits = 512;
        /// Mantissa size up to which q is evaluated exactly.
        constexpr long long exact_bits = 1 << 17;

        auto pow2(long long e) -> Integer
        {
            return Integer(1) << static_cast<unsigned>(e);
        }

        auto binomial(const Integer & n, int r) -> Integer
        {
            if (r < 0 || n < r)
                return 0;
            Integer result = 1;
            for (int i = 0; i < r; ++i)
                result = result * (n - i) / (i + 1);
            return result;
        }

        auto power_rounded(const Dyadic & base, const Integer & e, bool up) -> Dyadic
        {
            Dyadic result{1, 0};
            if (e == 0)
                return result;
            for (auto bit = static_cast<long long>(boost::multiprecision::msb(e)); bit >= 0; --bit) {
                result = round_dyadic(result * result, interval_bits, up);
                if (boost::multiprecision::bit_test(e, static_cast<unsigned>(bit)))
                    result = round_dyadic(result * base, interval_bits, up);
            }
            return result;
        }
    }

    auto Dyadic::to_rational() const -> Rational
    {
        if (exponent >= 0)
            return Rational(mantissa << static_cast<unsigned>(exponent));
        return Rational(mantissa, pow2(-exponent));
    }

    auto Dyadic::log2() const -> double
    {
        if (mantissa == 0)
            return -std::numeric_limits<double>::infinity();
        auto top = static_cast<long long>(boost::multiprecision::msb(mantissa));
        long long shift = std::max(0LL, top - 52);
        auto head = static_cast<double>(static_cast<unsigned long long>(mantissa >> static_cast<unsigned>(shift)));
        return std::log2(head) + static_cast<double>(shift + exponent);
    }

    auto operator<(const Dyadic & a, const Dyadic & b) -> bool
    {
        if (a.exponent >= b.exponent)
            return (a.mantissa << static_cast<unsigned>(a.exponent - b.exponent)) < b.mantissa;
        return a.mantissa < (b.mantissa << static_cast<unsigned>(b.exponent - a.exponent));
    }

    auto operator*(const Dyadic & a, const Dyadic & b) -> Dyadic
    {
        return Dyadic{a.mantissa * b.mantissa, a.exponent + b.exponent};
    }

    auto round_dyadic(const Dyadic & x, int bits, bool up) -> Dyadic
    {
        if (x.mantissa == 0)
            return x;
        auto top = static_cast<long long>(boost::multiprecision::msb(x.mantissa));
        if (top < bits)
            return x;
        auto shift = static_cast<unsigned>(top + 1 - bits);
        Dyadic r{x.mantissa >> shift, x.exponent + shift};
        if (up && (r.mantissa << shift) != x.mantissa)
            r.mantissa += 1;
        return r;
    }

    auto alice_k(int ell) -> int
    {
        if (ell < 2)
            throw InvalidArgument("alice_k: l must be at least 2");
        Integer fourth = Integer(ell) * ell * ell * ell;
        for (int k = (ell + 4) / 2;; --k) {
            long long e = ell + 4 - 2LL * k;
            if (e >= 0 && fourth <= pow2(e))
                return k;
        }
    }

    auto alice_lower_bound(int ell) -> BoundReport
    {
        if (ell < 2)
            throw InvalidArgument("alice_lower_bound: l must be at least 2");
        if (ell > 200)
            throw GuardExceeded("alice_lower_bound: limited to l <= 200");

        BoundReport r;
        r.ell = ell;
        r.applicable = ell >= 16;
        r.log2_n = ell % 2 == 0 ? ell / 2 - 1 : (ell - 3) / 2;
        r.n = pow2(r.log2_n);
        r.k = alice_k(ell);
        r.lower_bound = r.k + 1;

        Integer falling = 1;
        for (int i = 0; i < ell; ++i)
            falling *= r.n - i;
        if (falling < 0)
            falling = 0;
        r.p = Rational(falling, pow2(static_cast<long long>(ell) * (ell - 1) / 2));
        r.p_threshold = Rational(1, 2 * r.n);
        r.p_holds = r.p < r.p_threshold;

        r.q_threshold = Dyadic{1, 1 - 11LL * r.log2_n};
        if (r.k < 2 || r.n < r.k - 1) {
            // No extension requirement to bound.
            r.q = Rational(0);
            r.q_interval = DyadicInterval{Dyadic{0, 0}, Dyadic{0, 0}};
            r.q_holds = true;
            return r;
        }

        int j = r.k - 1;
        Integer m = r.n - j;
        Integer coefficient = binomial(r.n, j) << static_cast<unsigned>(j);
        Dyadic base{pow2(j) - 1, -j};
        if (m * j <= exact_bits) {
            auto e = static_cast<unsigned>(m);
            Dyadic exact{coefficient * boost::multiprecision::pow(base.mantissa, e), -static_cast<long long>(j) * static_cast<long long>(e)};
            r.q = exact.to_rational();
            r.q_interval = DyadicInterval{exact, exact};
            r.q_holds = exact < r.q_threshold;
        }
        else {
            Dyadic c{coefficient, 0};
            r.q_interval.lower = round_dyadic(c * power_rounded(base, m, false), interval_bits, false);
            r.q_interval.upper = round_dyadic(c * power_rounded(base, m, true), interval_bits, true);
            r.q_holds = r.q_interval.upper < r.q_threshold;
        }
        return r;
    }

    auto turan_tail_bound(int k, long long n) -> Rational
    {
        if (k < 2)
            throw InvalidArgument("turan_tail_bound: k must be at least 2");
        if (n < 0)
            throw InvalidArgument("turan_tail_bound: n must be nonnegative");
        Integer c = binomial(Integer(k) * n, k - 1) << static_cast<unsigned>(k - 1);
        auto e = static_cast<unsigned>(n);
        Integer num = c * boost::multiprecision::pow(pow2(k - 1) - 1, e);
        Integer den = pow2(static_cast<long long>(k - 1) * n);
        return Rational(num, den);
    }

    auto turan_tail_decreasing_at(int k, long long n) -> bool
    {
        if (k < 2 || n < 1)
            throw InvalidArgument("turan_tail_decreasing_at: requires k >= 2 and n >= 1");
        Integer a = binomial(Integer(k) * (n + 1), k - 1) * (pow2(k - 1) - 1);
        Integer b = binomial(Integer(k) * n, k - 1) * pow2(k - 1);
        return a < b;
    }

    auto turan_tail_peak(int k) -> long long
    {
        long long n = 1;
        while (! turan_tail_decreasing_at(k, n))
            ++n;
        return n;
    }

    auto turan_tail_threshold(int k) -> long long
    {
        long long peak = turan_tail_peak(k);
        for (long long n = 1; n <= peak; ++n)
            if (turan_tail_bound(k, n) < 1)
                return n;
        long long lo = peak, hi = 2 * peak;
        while (turan_tail_bound(k, hi) >= 1) {
            lo = hi;
            hi *= 2;
        }
        while (hi - lo > 1) {
            long long mid = lo + (hi - lo) / 2;
            if (turan_tail_bound(k, mid) < 1)
                hi = mid;
            else
                lo = mid;
        }
        return hi;
    }

    auto to_string(const Rational & r) -> std::string
    {
        auto num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
        if (den == 1)
            return num.str();
        return num.str() + "/" + den.str();
    }
}
