#pragma once

// Emergent reducibility at depth n: f^(i) irreducible for 0 <= i <= n-1 and
// f^(n) reducible, where n counts compositions and f^(0) = f. Depth 0 means
// f itself is reducible (the irreducibility range is empty).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "erpoly/ints.hpp"
#include "erpoly/zfactor.hpp"
#include "erpoly/zpoly.hpp"

namespace erpoly {

/// Raised when a request would require factoring iterates past the design
/// envelope of the Zassenhaus stage.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterate degrees d^(n+1) must stay at or below this to be factorable
/// here; degree 81 (a cubic composed three times) is already out.
constexpr long kMaxIterateDegree = 80;

struct EmergenceReport {
    ZPoly poly;
    std::optional<unsigned> depth;  // nullopt: no reducible iterate within max_depth
    unsigned iterates_checked;
    std::vector<long> first_reducible_factor_degrees;  // ascending; empty when no depth
    std::optional<Factorization> factors;              // of the first reducible iterate
};

/// Smallest n <= max_depth such that iterate(f, n) is reducible, with the
/// full factorization of that iterate; every earlier iterate is certified
/// irreducible along the way.
inline EmergenceReport emergent_depth(const ZPoly& f, unsigned max_depth,
                                      std::uint64_t rng_seed = 0) {
    if (f.degree() < 2)
        throw std::invalid_argument("emergent_depth: degree must be >= 2");
    if (pow_int(Int(f.degree()), max_depth + 1) > kMaxIterateDegree)
        throw BudgetError("emergent_depth: iterate degree " +
                          pow_int(Int(f.degree()), max_depth + 1).str() +
                          " exceeds the factorization envelope (" +
                          std::to_string(kMaxIterateDegree) + ")");

    EmergenceReport report{f, std::nullopt, 0, {}, std::nullopt};
    ZPoly it = f;
    for (unsigned n = 0; n <= max_depth; ++n) {
        if (n > 0) it = compose(f, it);
        ++report.iterates_checked;
        IrreducibilityResult res = is_irreducible(it, rng_seed);
        if (!res.irreducible) {
            report.depth = n;
            // A reducible verdict always comes from the factorization route.
            report.factors = std::move(res.factorization);
            for (const auto& fac : report.factors->factors)
                for (unsigned m = 0; m < fac.multiplicity; ++m)
                    report.first_reducible_factor_degrees.push_back(fac.poly.degree());
            break;
        }
    }
    return report;
}

/// Predicate form: true iff the emergent depth of f is exactly n.
inline bool check_er_at_depth(const ZPoly& f, unsigned n, std::uint64_t rng_seed = 0) {
    const EmergenceReport report = emergent_depth(f, n, rng_seed);
    return report.depth.has_value() && *report.depth == n;
}

}  // namespace erpoly
