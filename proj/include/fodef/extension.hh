#pragma once

#include <fodef/graph.hh>
#include <fodef/pebble.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fodef
{
    struct EaReport
    {
        int k = 0;
        bool holds = false;
        /// Disjoint (X, Y), |X u Y| < k, with no vertex outside X u Y
        /// adjacent to all of X and none of Y.
        std::optional<std::pair<std::vector<int>, std::vector<int>>> counterexample;
    };

    /// The k-extension property. Every set S of at most k - 1 vertices is
    /// visited in lexicographic order with all 2^|S| splits refined
    /// incrementally, so the first counterexample is deterministic.
    /// k = 1 asks only for a vertex. Refuses k > 5 and oversized enumerations.
    auto check_ea(const Graph & g, int k, Execution execution = Execution::Parallel) -> EaReport;

    /// Direct enumeration of every (X, Y) and every candidate vertex. Kept as
    /// a reference for testing check_ea.
    auto check_ea_reference(const Graph & g, int k) -> bool;

    /// Evidence that A[F] >= k: H satisfies ea_(k-1) and has no induced F.
    struct WitnessCertificate
    {
        Graph f;
        int k = 0;
        Graph h;
        EaReport ea;
        std::optional<std::vector<int>> f_copy;

        auto ea_holds() const -> bool { return ea.holds; }
        auto f_free() const -> bool { return ! f_copy.has_value(); }
        auto valid() const -> bool { return ea_holds() && f_free(); }
        /// Empty when valid, otherwise the failing checks.
        auto failure() const -> std::string;
    };

    auto certify_extension_lower(const Graph & f, int k, const Graph & h) -> WitnessCertificate;

    enum class WitnessStrategy
    {
        /// Labeled graphs with |V(F)| <= n <= 8 by edge count, then mask.
        ExhaustiveSmall,
        /// G(n, 1/2) samples over increasing n.
        GnpSampling,
        /// Random half-density subgraphs of Turan graphs over increasing part sizes.
        TuranRandomSampling
    };

    struct WitnessSearch
    {
        WitnessStrategy strategy = WitnessStrategy::ExhaustiveSmall;
        /// Candidate graphs examined, counting isomorphic duplicates.
        long long budget = 1'000'000;
        std::uint64_t seed = 0;
        /// Number of parts for TuranRandomSampling.
        int parts = 3;
        /// Vertex counts (gnp) or part sizes (Turan); defaults when empty.
        std::vector<int> sizes;
        double p = 0.5;
    };

    struct WitnessResult
    {
        std::optional<WitnessCertificate> certificate;
        long long examined = 0;
        /// Candidates skipped as isomorphic to one already examined.
        long long duplicates = 0;
        std::string description;
    };

    /// First valid certificate in the strategy's deterministic order.
    auto search_witness(const Graph & f, int k, const WitnessSearch & search) -> WitnessResult;

    /// chi(F), a lower bound on A[F]. Refuses |V(F)| > 16.
    auto chi_lower(const Graph & f) -> int;

    /// Fraction of gnp(n, 1/2, stream_seed(seed, i)), i < samples, passing check_ea(., k).
    auto empirical_ea_rate(int n, int k, int samples, std::uint64_t seed, Execution execution = Execution::Parallel) -> double;
}
