#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace fodef
{
    using Integer = boost::multiprecision::cpp_int;
    using Rational = boost::multiprecision::cpp_rational;

    /// mantissa * 2^exponent, mantissa >= 0.
    struct Dyadic
    {
        Integer mantissa = 0;
        long long exponent = 0;

        auto to_rational() const -> Rational;
        /// Approximate log2, for display only. -inf for zero.
        auto log2() const -> double;
    };

    auto operator<(const Dyadic & a, const Dyadic & b) -> bool;
    auto operator*(const Dyadic & a, const Dyadic & b) -> Dyadic;

    /// Keeps the top `bits` bits of the mantissa, rounding down or up.
    auto round_dyadic(const Dyadic & x, int bits, bool up) -> Dyadic;

    struct DyadicInterval
    {
        Dyadic lower, upper;
    };

    /// Quantities behind the lower bound A[F] >= floor(l/2 - 2 log2 l + 3)
    /// for pattern graphs on l vertices, via G(n, 1/2).
    struct BoundReport
    {
        int ell = 0;
        /// 2^(l/2 - 1) for even l, 2^((l - 3)/2) for odd l.
        Integer n;
        /// log2 n.
        int log2_n = 0;
        /// floor(l/2 - 2 log2 l + 2), decided exactly.
        int k = 0;
        /// k + 1, the lower bound on A[F].
        int lower_bound = 0;

        /// n(n-1)...(n-l+1) 2^(-l(l-1)/2).
        Rational p;
        /// 1/(2n).
        Rational p_threshold;
        bool p_holds = false;

        /// C(n, k-1) 2^(k-1) (1 - 2^(-k+1))^(n-k+1). Exact when small
        /// enough, and always enclosed by q_interval.
        std::optional<Rational> q;
        DyadicInterval q_interval;
        /// 2 n^-11.
        Dyadic q_threshold;
        /// Decided from the exact value or the upper end of the enclosure.
        bool q_holds = false;
        /// Whether the inequalities are part of the claim (l >= 16).
        bool applicable = false;
    };

    /// Largest integer k with l^4 <= 2^(l + 4 - 2k).
    auto alice_k(int ell) -> int;

    auto alice_lower_bound(int ell) -> BoundReport;

    /// C(kn, k-1) 2^(k-1) (1 - 2^(-k+1))^n.
    auto turan_tail_bound(int k, long long n) -> Rational;

    /// Whether turan_tail_bound(k, n + 1) < turan_tail_bound(k, n), decided
    /// from the exact ratio of consecutive terms.
    auto turan_tail_decreasing_at(int k, long long n) -> bool;

    /// The least n >= 1 from which the bound strictly decreases. The ratio of
    /// consecutive terms decreases in n, so the bound is unimodal.
    auto turan_tail_peak(int k) -> long long;

    /// Least n >= 1 with turan_tail_bound(k, n) < 1.
    auto turan_tail_threshold(int k) -> long long;

    auto to_string(const Rational & r) -> std::string;
}
