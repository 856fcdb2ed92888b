#pragma once

// JSON views of the domain types. The coefficient convention everywhere is
// ascending degree: index i holds the coefficient of x^i.

#include <utility>

#include "erpoly/emergence.hpp"
#include "erpoly/family.hpp"
#include "erpoly/fppoly.hpp"
#include "erpoly/json.hpp"
#include "erpoly/search.hpp"
#include "erpoly/zfactor.hpp"
#include "erpoly/zpoly.hpp"

namespace erpoly {

inline json::Value to_json(const ZPoly& f) {
    json::Value arr = json::Value::array();
    for (const auto& c : f.coeffs()) arr.push(json::Value::number(c));
    return arr;
}

inline json::Value to_json(const FpPoly& f) {
    json::Value arr = json::Value::array();
    for (auto c : f.coeffs()) arr.push(json::Value::number(static_cast<unsigned long long>(c)));
    return arr;
}

inline json::Value to_json(const BiPoly& f) {
    json::Value arr = json::Value::array();
    for (const auto& ca : f.coeffs()) arr.push(to_json(ca));
    return arr;
}

inline json::Value to_json(const Factorization& fac) {
    json::Value factors = json::Value::array();
    for (const auto& zf : fac.factors) {
        json::Value one = json::Value::object();
        one.add("coeffs", to_json(zf.poly));
        one.add("multiplicity", json::Value::number(static_cast<unsigned long long>(zf.multiplicity)));
        factors.push(std::move(one));
    }
    json::Value out = json::Value::object();
    out.add("content", json::Value::number(fac.content));
    out.add("factors", std::move(factors));
    return out;
}

inline json::Value to_json(const EmergenceReport& rep) {
    json::Value out = json::Value::object();
    out.add("poly", to_json(rep.poly));
    out.add("depth", rep.depth ? json::Value::number(static_cast<unsigned long long>(*rep.depth))
                               : json::Value::null());
    out.add("iterates_checked",
            json::Value::number(static_cast<unsigned long long>(rep.iterates_checked)));
    json::Value degs = json::Value::array();
    for (long d : rep.first_reducible_factor_degrees)
        degs.push(json::Value::number(static_cast<long long>(d)));
    out.add("first_reducible_factor_degrees", std::move(degs));
    out.add("factors", rep.factors ? to_json(*rep.factors) : json::Value::null());
    return out;
}

inline json::Value to_json(const SearchHit& hit) {
    json::Value out = json::Value::object();
    out.add("poly", to_json(hit.poly));
    out.add("depth", json::Value::number(static_cast<unsigned long long>(hit.depth)));
    json::Value degs = json::Value::array();
    for (long d : hit.factor_degrees) degs.push(json::Value::number(static_cast<long long>(d)));
    out.add("factor_degrees", std::move(degs));
    out.add("content", json::Value::number(hit.factors.content));
    json::Value factors = json::Value::array();
    for (const auto& zf : hit.factors.factors) {
        json::Value one = json::Value::object();
        one.add("coeffs", to_json(zf.poly));
        one.add("multiplicity", json::Value::number(static_cast<unsigned long long>(zf.multiplicity)));
        factors.push(std::move(one));
    }
    out.add("factors", std::move(factors));
    out.add("conjugate_partner_present", json::Value::boolean(hit.conjugate_partner_present));
    return out;
}

inline json::Value to_json(const ScanReport& rep) {
    json::Value out = json::Value::object();
    out.add("from", json::Value::number(rep.from));
    out.add("to", json::Value::number(rep.to));
    out.add("checked", json::Value::number(rep.checked));
    out.add("mod3_certified", json::Value::number(rep.mod3_certified));
    out.add("other_prime_certified", json::Value::number(rep.other_prime_certified));
    json::Value flagged = json::Value::array();
    for (long long a : rep.flagged) flagged.push(json::Value::number(a));
    out.add("flagged", std::move(flagged));
    json::Value anomalies = json::Value::array();
    for (const auto& s : rep.anomalies) anomalies.push(json::Value::string(s));
    out.add("anomalies", std::move(anomalies));
    return out;
}

inline json::Value to_json(const SearchCounters& c) {
    json::Value out = json::Value::object();
    out.add("candidates", json::Value::number(c.candidates));
    out.add("root_skips", json::Value::number(c.root_skips));
    out.add("filtered", json::Value::number(c.filtered));
    out.add("factored", json::Value::number(c.factored));
    return out;
}

inline json::Value to_json(const SearchSpec& spec, bool use_filters) {
    json::Value out = json::Value::object();
    out.add("monic", json::Value::boolean(spec.monic));
    out.add("degree", json::Value::number(spec.degree));
    out.add("bound", json::Value::number(spec.bound));
    out.add("depth", json::Value::number(spec.depth));
    json::Value primes = json::Value::array();
    for (std::uint64_t p : spec.filter_primes)
        primes.push(json::Value::number(static_cast<unsigned long long>(p)));
    out.add("filter_primes", std::move(primes));
    out.add("use_filters", json::Value::boolean(use_filters));
    return out;
}

namespace detail {

// Checkpoints are read back with a general-purpose JSON parser whose
// integers saturate at 64 bits, so any value that can outgrow that is
// stored as a decimal string and reparsed exactly.
inline json::Value coeff_strings(const ZPoly& f) {
    json::Value arr = json::Value::array();
    for (const auto& c : f.coeffs()) arr.push(json::Value::string(c.str()));
    return arr;
}

}  // namespace detail

inline json::Value to_json_checkpoint(const SearchCheckpoint& cp, const SearchSpec& spec,
                                      bool use_filters) {
    json::Value out = json::Value::object();
    out.add("schema", json::Value::string("erpoly-search-checkpoint/1"));
    out.add("spec", to_json(spec, use_filters));
    json::Value completed = json::Value::array();
    for (long long v : cp.completed) completed.push(json::Value::number(v));
    out.add("completed", std::move(completed));
    out.add("counters", to_json(cp.counters));
    json::Value hits = json::Value::array();
    for (const auto& h : cp.hits) {
        json::Value one = json::Value::object();
        one.add("poly", detail::coeff_strings(h.poly));
        one.add("depth", json::Value::number(static_cast<unsigned long long>(h.depth)));
        json::Value degs = json::Value::array();
        for (long d : h.factor_degrees) degs.push(json::Value::number(static_cast<long long>(d)));
        one.add("factor_degrees", std::move(degs));
        one.add("content", json::Value::string(h.factors.content.str()));
        json::Value factors = json::Value::array();
        for (const auto& zf : h.factors.factors) {
            json::Value fv = json::Value::object();
            fv.add("coeffs", detail::coeff_strings(zf.poly));
            fv.add("multiplicity",
                   json::Value::number(static_cast<unsigned long long>(zf.multiplicity)));
            factors.push(std::move(fv));
        }
        one.add("factors", std::move(factors));
        hits.push(std::move(one));
    }
    out.add("hits", std::move(hits));
    return out;
}

}  // namespace erpoly
