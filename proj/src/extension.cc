#include <fodef/constructors.hh>
#include <fodef/errors.hh>
#include <fodef/extension.hh>
#include <fodef/operations.hh>
#include <fodef/patterns.hh>
#include <fodef/random.hh>
#include <fodef/structure.hh>

#include <algorithm>
#include <map>
#include <sstream>

using std::optional;
using std::pair;
using std::vector;

namespace fodef
{
    namespace
    {
        constexpr long double ea_guard = 5e9L;

        auto ea_work(int n, int k) -> long double
        {
            long double total = 0, binom = 1;
            for (int j = 1; j < k; ++j) {
                binom = binom * (n - j + 1) / j;
                total += binom * static_cast<long double>(1u << j);
            }
            return total;
        }

        auto validate_ea(const Graph & g, int k) -> void
        {
            if (k < 1)
                throw InvalidArgument("check_ea: k must be at least 1");
            if (k > 5)
                throw GuardExceeded("check_ea: limited to k <= 5, got " + std::to_string(k));
            if (ea_work(g.size(), k) > ea_guard)
                throw GuardExceeded("check_ea: too many (X, Y) patterns for n = " + std::to_string(g.size()) + ", k = " + std::to_string(k));
        }

        using Counterexample = pair<vector<int>, vector<int>>;

        /// Depth-first over sets S in lexicographic order. levels[j] holds
        /// 2^j candidate sets; bit i of a pattern index says chosen[i] is in X.
        class EaSearch
        {
            const Graph & _g;
            const Graph & _co;
            int _k, _n, _w;
            vector<vector<Word>> _levels;
            vector<int> _chosen;

            auto failure(int depth, std::size_t pattern) const -> Counterexample
            {
                Counterexample c;
                for (int i = 0; i < depth; ++i)
                    ((pattern >> i) & 1 ? c.first : c.second).push_back(_chosen[i]);
                return c;
            }

            /// Builds level depth + 1 by adding s; returns a failing pattern if any.
            auto refine(int depth, int s) -> optional<Counterexample>
            {
                auto & from = _levels[depth];
                auto & to = _levels[depth + 1];
                std::size_t patterns = std::size_t{1} << depth;
                auto in_x = _g.row(s), in_y = _co.row(s);
                _chosen[depth] = s;
                for (std::size_t p = 0; p < patterns; ++p) {
                    Word any_y = 0, any_x = 0;
                    auto * src = from.data() + p * _w;
                    auto * dst_y = to.data() + p * _w;
                    auto * dst_x = to.data() + (p + patterns) * _w;
                    for (int x = 0; x < _w; ++x) {
                        dst_y[x] = src[x] & in_y[x];
                        dst_x[x] = src[x] & in_x[x];
                        any_y |= dst_y[x];
                        any_x |= dst_x[x];
                    }
                    if (! any_y)
                        return failure(depth + 1, p);
                    if (! any_x)
                        return failure(depth + 1, p + patterns);
                }
                return std::nullopt;
            }

            auto descend(int depth) -> optional<Counterexample>
            {
                if (depth >= _k - 1)
                    return std::nullopt;
                for (int s = _chosen[depth - 1] + 1; s < _n; ++s) {
                    if (auto c = refine(depth, s))
                        return c;
                    if (auto c = descend(depth + 1))
                        return c;
                }
                return std::nullopt;
            }

        public:
            EaSearch(const Graph & g, const Graph & co, int k) :
                _g(g),
                _co(co),
                _k(k),
                _n(g.size()),
                _w(g.words_per_row()),
                _levels(k),
                _chosen(k, -1)
            {
                for (int j = 0; j < k; ++j)
                    _levels[j].assign((std::size_t{1} << j) * _w, 0);
                VertexSet all(_n, true);
                std::copy(all.words().begin(), all.words().end(), _levels[0].begin());
            }

            /// Sets whose least member is s.
            auto from_vertex(int s) -> optional<Counterexample>
            {
                if (auto c = refine(0, s))
                    return c;
                return descend(1);
            }
        };
    }

    auto check_ea(const Graph & g, int k, Execution execution) -> EaReport
    {
        validate_ea(g, k);
        EaReport report{k, true, std::nullopt};
        int n = g.size();
        if (n == 0) {
            report.holds = false;
            report.counterexample = Counterexample{};
            return report;
        }
        if (k == 1)
            return report;

        auto co = complement(g);
        optional<Counterexample> found;
        int found_at = n;

        if (execution == Execution::Parallel) {
#pragma omp parallel
            {
                EaSearch search(g, co, k);
#pragma omp for schedule(dynamic, 1)
                for (int s = 0; s < n; ++s) {
                    int current;
#pragma omp atomic read
                    current = found_at;
                    if (s > current)
                        continue;
                    if (auto c = search.from_vertex(s)) {
#pragma omp critical(fodef_check_ea)
                        {
                            if (s < found_at) {
                                found_at = s;
                                found = std::move(c);
                            }
                        }
                    }
                }
            }
        }
        else {
            EaSearch search(g, co, k);
            for (int s = 0; s < n && ! found; ++s)
                found = search.from_vertex(s);
        }

        if (found) {
            report.holds = false;
            report.counterexample = std::move(found);
        }
        return report;
    }

    namespace
    {
        struct ReferenceEa
        {
            const Graph & g;
            int k;
            vector<int> label;

            auto extendable() const -> bool
            {
                for (int z = 0; z < g.size(); ++z) {
                    if (label[z] != 0)
                        continue;
                    bool ok = true;
                    for (int v = 0; v < g.size() && ok; ++v)
                        if (label[v] != 0)
                            ok = g.adjacent(z, v) == (label[v] == 1);
                    if (ok)
                        return true;
                }
                return false;
            }

            /// label: 0 outside X u Y, 1 in X, 2 in Y.
            auto all(int v, int used) -> bool
            {
                if (v == g.size())
                    return extendable();
                label[v] = 0;
                if (! all(v + 1, used))
                    return false;
                if (used + 1 < k)
                    for (int l = 1; l <= 2; ++l) {
                        label[v] = l;
                        if (! all(v + 1, used + 1))
                            return false;
                    }
                label[v] = 0;
                return true;
            }
        };
    }

    auto check_ea_reference(const Graph & g, int k) -> bool
    {
        if (k < 1)
            throw InvalidArgument("check_ea_reference: k must be at least 1");
        ReferenceEa r{g, k, vector<int>(g.size(), 0)};
        return r.all(0, 0);
    }

    auto WitnessCertificate::failure() const -> std::string
    {
        std::string out;
        if (! ea_holds())
            out += "H does not satisfy ea_" + std::to_string(k - 1);
        if (! f_free()) {
            if (! out.empty())
                out += "; ";
            out += "H contains an induced copy of F";
        }
        return out;
    }

    auto certify_extension_lower(const Graph & f, int k, const Graph & h) -> WitnessCertificate
    {
        if (k < 1)
            throw InvalidArgument("certify_extension_lower: k must be at least 1");
        WitnessCertificate cert;
        cert.f = f;
        cert.k = k;
        cert.h = h;
        if (k == 1)
            cert.ea = EaReport{0, true, std::nullopt};
        else
            cert.ea = check_ea(h, k - 1, Execution::Serial);
        cert.f_copy = contains_induced(h, f);
        return cert;
    }

    namespace
    {
        /// Sorted degrees followed by the triangle count.
        auto invariant_key(const Graph & g) -> vector<long long>
        {
            vector<long long> key;
            long long triangles = 0;
            for (int u = 0; u < g.size(); ++u) {
                key.push_back(g.degree(u));
                for (int v : g.neighbours(u))
                    if (v > u) {
                        auto common = g.neighbourhood(u);
                        common.intersect_with(g.row(v));
                        common.for_each([&](int w) { triangles += w > v ? 1 : 0; });
                    }
            }
            std::sort(key.begin(), key.end());
            key.push_back(triangles);
            return key;
        }

        auto next_same_popcount(std::uint64_t x) -> std::uint64_t
        {
            std::uint64_t c = x & (~x + 1);
            std::uint64_t r = x + c;
            return (((r ^ x) >> 2) / c) | r;
        }

        auto exhaustive(const Graph & f, int k, const WitnessSearch & search) -> WitnessResult
        {
            WitnessResult result;
            std::map<vector<long long>, vector<Graph>> seen;
            for (int n = std::max(1, f.size()); n <= 8; ++n) {
                int bits = n * (n - 1) / 2;
                std::uint64_t limit = std::uint64_t{1} << bits;
                for (int e = 0; e <= bits; ++e) {
                    std::uint64_t mask = e == 0 ? 0 : (std::uint64_t{1} << e) - 1;
                    for (; mask < limit; mask = e == 0 ? limit : next_same_popcount(mask)) {
                        if (result.examined >= search.budget) {
                            result.description = "budget exhausted";
                            return result;
                        }
                        ++result.examined;
                        auto h = graph_from_mask(n, mask);
                        auto & bucket = seen[invariant_key(h)];
                        if (std::any_of(bucket.begin(), bucket.end(), [&](const Graph & other) { return isomorphic(h, other); })) {
                            ++result.duplicates;
                            continue;
                        }
                        bucket.push_back(h);
                        auto cert = certify_extension_lower(f, k, h);
                        if (cert.valid()) {
                            result.certificate = std::move(cert);
                            result.description = "n=" + std::to_string(n) + " edges=" + std::to_string(e) + " mask=" + std::to_string(mask);
                            return result;
                        }
                    }
                }
            }
            result.description = "no witness with at most 8 vertices";
            return result;
        }

        auto sampling(const Graph & f, int k, const WitnessSearch & search) -> WitnessResult
        {
            bool turan_mode = search.strategy == WitnessStrategy::TuranRandomSampling;
            auto sizes = search.sizes;
            if (sizes.empty())
                sizes = turan_mode ? vector<int>{4, 8, 16, 32, 48, 64} : vector<int>{8, 16, 32, 64, 128};
            if (turan_mode && search.parts < 1)
                throw InvalidArgument("search_witness: parts must be at least 1");

            WitnessResult result;
            long long per_size = std::max<long long>(1, search.budget / static_cast<long long>(sizes.size()));
            for (std::size_t s = 0; s < sizes.size(); ++s)
                for (long long j = 0; j < per_size; ++j) {
                    if (result.examined >= search.budget) {
                        result.description = "budget exhausted";
                        return result;
                    }
                    ++result.examined;
                    auto sample_seed = stream_seed(search.seed, (static_cast<std::uint64_t>(s) << 32) | static_cast<std::uint64_t>(j));
                    auto h = turan_mode ? turan_random(search.parts, sizes[s], sample_seed) : gnp(sizes[s], search.p, sample_seed);
                    auto cert = certify_extension_lower(f, k, h);
                    if (cert.valid()) {
                        std::ostringstream d;
                        if (turan_mode)
                            d << "turan_random:" << search.parts << "," << sizes[s] << "," << sample_seed;
                        else
                            d << "gnp:" << sizes[s] << "," << search.p << "," << sample_seed;
                        result.certificate = std::move(cert);
                        result.description = d.str();
                        return result;
                    }
                }
            result.description = "no witness among samples";
            return result;
        }
    }

    auto search_witness(const Graph & f, int k, const WitnessSearch & search) -> WitnessResult
    {
        if (k < 1)
            throw InvalidArgument("search_witness: k must be at least 1");
        if (search.budget < 0)
            throw InvalidArgument("search_witness: budget must be nonnegative");
        if (search.strategy == WitnessStrategy::ExhaustiveSmall)
            return exhaustive(f, k, search);
        return sampling(f, k, search);
    }

    auto chi_lower(const Graph & f) -> int
    {
        return chromatic_number(f);
    }

    auto empirical_ea_rate(int n, int k, int samples, std::uint64_t seed, Execution execution) -> double
    {
        if (samples <= 0)
            throw InvalidArgument("empirical_ea_rate: samples must be positive");
        if (n < 0)
            throw InvalidArgument("empirical_ea_rate: n must be nonnegative");
        validate_ea(Graph(n), k);
        long long passed = 0;
        auto one = [&](int i) { return check_ea(gnp(n, 0.5, stream_seed(seed, i)), k, Execution::Serial).holds ? 1 : 0; };
        if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : passed)
            for (int i = 0; i < samples; ++i)
                passed += one(i);
        }
        else
            for (int i = 0; i < samples; ++i)
                passed += one(i);
        return static_cast<double>(passed) / samples;
    }
}
