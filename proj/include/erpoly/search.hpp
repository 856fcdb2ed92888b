#pragma once

// Exhaustive search over coefficient boxes for cubics with emergent
// reducibility at depth 1. Candidate pipeline: rational-root reducibility
// precheck (complete for cubics), self-composition, mod-p irreducibility
// filters, then full factorization of the survivors. Work is split into
// disjoint sub-boxes along the outermost coefficient; hit lists are a pure
// function of the spec — independent of shard count, thread schedule, and
// rng seed — because results are merged and canonically sorted at the end.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "erpoly/fppoly.hpp"
#include "erpoly/ints.hpp"
#include "erpoly/zfactor.hpp"
#include "erpoly/zpoly.hpp"

namespace erpoly {

struct SearchSpec {
    bool monic = true;
    int degree = 3;  // fixed by design: the cubic box
    long long bound = 1;
    int depth = 1;  // fixed by design: depth-2 needs degree-81 factorizations
    std::vector<std::uint64_t> filter_primes = {2, 3, 5, 7, 11};
};

inline void validate(const SearchSpec& spec) {
    if (spec.degree != 3) throw std::invalid_argument("search: only degree 3 is supported");
    if (spec.depth != 1) throw std::invalid_argument("search: only depth 1 is supported");
    if (spec.bound < 1) throw std::invalid_argument("search: bound must be >= 1");
    if (spec.filter_primes.empty())
        throw std::invalid_argument("search: filter_primes must be nonempty");
    for (std::uint64_t p : spec.filter_primes)
        if (!detail::is_prime_u64(p))
            throw std::invalid_argument("search: filter primes must be prime");
}

struct SearchHit {
    ZPoly poly;
    unsigned depth;                    // always 1 here
    std::vector<long> factor_degrees;  // of compose(poly, poly), ascending
    Factorization factors;             // full factorization of the composition
    bool conjugate_partner_present;    // is -poly(-x) also in the hit set?
};

/// Inclusive range of the outermost coefficient (x^2 coefficient for monic
/// search, leading coefficient otherwise); empty when outer_lo > outer_hi.
struct SearchBox {
    long long outer_lo;
    long long outer_hi;
};

/// Disjoint cover of the coefficient box by near-equal contiguous chunks
/// of the outermost coefficient range. Extra shards come back empty.
inline std::vector<SearchBox> partition(const SearchSpec& spec, unsigned shards) {
    validate(spec);
    if (shards < 1) throw std::invalid_argument("partition: shards must be >= 1");
    const long long n = 2 * spec.bound + 1;
    std::vector<SearchBox> boxes;
    boxes.reserve(shards);
    for (unsigned i = 0; i < shards; ++i) {
        const long long start = static_cast<long long>(i) * n / shards;
        const long long end = static_cast<long long>(i + 1) * n / shards;
        boxes.push_back({-spec.bound + start, -spec.bound + end - 1});
    }
    return boxes;
}

struct SearchCounters {
    unsigned long long candidates = 0;  // cubics enumerated
    unsigned long long root_skips = 0;  // reducible cubics (rational root found)
    unsigned long long filtered = 0;    // compositions certified irreducible mod p
    unsigned long long factored = 0;    // full factorizations run
};

struct SearchOutcome {
    std::vector<SearchHit> hits;  // canonical order
    SearchCounters counters;
    bool interrupted = false;                // stopped before the box was exhausted
    std::vector<long long> completed_outer;  // fully processed outer values, sorted
};

/// State carried across an interrupted run: which outer slices finished,
/// the hits they produced, and their counters.
struct SearchCheckpoint {
    std::vector<long long> completed;
    std::vector<SearchHit> hits;
    SearchCounters counters;
};

struct SearchOptions {
    bool use_filters = true;
    unsigned shards = 1;
    unsigned threads = 1;
    std::uint64_t rng_seed = 0;
    // Polled between outer slices; return true to stop early (the outcome
    // is then marked interrupted and resumable from its completed slices).
    std::function<bool()> should_stop;
    // Invoked (serialized) after each completed outer slice with the merged
    // progress so far — the checkpointing hook.
    std::function<void(const SearchCheckpoint&)> on_progress;
};

namespace detail {

inline void search_slice(const SearchSpec& spec, long long outer, bool use_filters,
                         std::uint64_t rng_seed, std::vector<SearchHit>& hits,
                         SearchCounters& ctr) {
    const long long B = spec.bound;
    auto consider = [&](ZPoly f) {
        ++ctr.candidates;
        // A cubic is reducible over Q iff it has a rational root.
        if (!rational_roots(f).empty()) {
            ++ctr.root_skips;
            return;
        }
        const ZPoly comp = compose(f, f);
        if (use_filters) {
            for (std::uint64_t p : spec.filter_primes) {
                if (comp.leading() % Int(p) == 0) continue;
                if (is_irreducible_mod_p(reduce_mod_p(comp, p))) {
                    ++ctr.filtered;
                    return;
                }
            }
        }
        ++ctr.factored;
        Factorization fac = factor(comp, rng_seed);
        if (!is_nontrivial(fac)) return;
        SearchHit hit{std::move(f), 1, {}, std::move(fac), false};
        for (const auto& zf : hit.factors.factors)
            for (unsigned m = 0; m < zf.multiplicity; ++m)
                hit.factor_degrees.push_back(zf.poly.degree());
        hits.push_back(std::move(hit));
    };
    if (spec.monic) {
        for (long long c = -B; c <= B; ++c)
            for (long long d = -B; d <= B; ++d) consider(zpoly({d, c, outer, 1}));
    } else {
        if (outer == 0) return;  // leading coefficient must not vanish
        for (long long b = -B; b <= B; ++b)
            for (long long c = -B; c <= B; ++c)
                for (long long d = -B; d <= B; ++d) consider(zpoly({d, c, b, outer}));
    }
}

}  // namespace detail

/// Run the search. Hits are canonically sorted and annotated with
/// conjugate-partner presence; pass a checkpoint to skip already-completed
/// outer slices and merge their results in.
inline SearchOutcome run_search(const SearchSpec& spec, const SearchOptions& options = {},
                                const SearchCheckpoint* resume = nullptr) {
    validate(spec);
    const std::vector<SearchBox> boxes = partition(spec, std::max(1u, options.shards));

    SearchOutcome outcome;
    if (resume != nullptr) {
        outcome.hits = resume->hits;
        outcome.counters = resume->counters;
        outcome.completed_outer = resume->completed;
        std::sort(outcome.completed_outer.begin(), outcome.completed_outer.end());
    }
    std::mutex merge_mutex;
    std::atomic<bool> stop{false};
    std::atomic<std::size_t> next_box{0};

    auto worker = [&]() {
        for (;;) {
            const std::size_t bi = next_box.fetch_add(1);
            if (bi >= boxes.size()) return;
            for (long long outer = boxes[bi].outer_lo; outer <= boxes[bi].outer_hi; ++outer) {
                if (stop.load()) return;
                if (options.should_stop && options.should_stop()) {
                    stop.store(true);
                    return;
                }
                {
                    std::lock_guard<std::mutex> lock(merge_mutex);
                    if (std::binary_search(outcome.completed_outer.begin(),
                                           outcome.completed_outer.end(), outer))
                        continue;  // resumed checkpoint already covers this slice
                }
                std::vector<SearchHit> slice_hits;
                SearchCounters slice_ctr;
                detail::search_slice(spec, outer, options.use_filters, options.rng_seed,
                                     slice_hits, slice_ctr);
                std::lock_guard<std::mutex> lock(merge_mutex);
                for (auto& h : slice_hits) outcome.hits.push_back(std::move(h));
                outcome.counters.candidates += slice_ctr.candidates;
                outcome.counters.root_skips += slice_ctr.root_skips;
                outcome.counters.filtered += slice_ctr.filtered;
                outcome.counters.factored += slice_ctr.factored;
                outcome.completed_outer.insert(
                    std::upper_bound(outcome.completed_outer.begin(),
                                     outcome.completed_outer.end(), outer),
                    outer);
                if (options.on_progress)
                    options.on_progress(
                        SearchCheckpoint{outcome.completed_outer, outcome.hits, outcome.counters});
            }
        }
    };

    const unsigned nthreads = std::max(1u, std::min<unsigned>(options.threads,
                                                              static_cast<unsigned>(boxes.size())));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    outcome.interrupted = stop.load();

    std::sort(outcome.hits.begin(), outcome.hits.end(),
              [](const SearchHit& a, const SearchHit& b) {
                  return canonical_less(a.poly, b.poly);
              });
    std::vector<ZPoly> polys;
    polys.reserve(outcome.hits.size());
    for (const auto& h : outcome.hits) polys.push_back(h.poly);
    for (auto& h : outcome.hits) {
        const ZPoly conj = conjugate_family(h.poly);
        h.conjugate_partner_present =
            std::binary_search(polys.begin(), polys.end(), conj,
                               [](const ZPoly& a, const ZPoly& b) { return canonical_less(a, b); });
    }
    return outcome;
}

}  // namespace erpoly
