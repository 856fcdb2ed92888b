// erpoly: exact certification and search for emergent reducibility of
// integer polynomials under self-composition.
//
// Coefficient lists on the command line are ASCENDING: "1,3,-10,-8" is
// 1 + 3x - 10x^2 - 8x^3. Expressions in x are also accepted ("x^3-2x+1").
//
// Exit codes: 0 success, 1 verification failed, 2 usage error, 3 budget
// exceeded, 4 search interrupted (checkpoint written when a path is known).

#include <atomic>
#include <chrono>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"  // nlohmann; reads checkpoints back

#include "erpoly/emergence.hpp"
#include "erpoly/family.hpp"
#include "erpoly/search.hpp"
#include "erpoly/serialize.hpp"
#include "erpoly/version.hpp"
#include "erpoly/zfactor.hpp"
#include "erpoly/zpoly.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInterrupted = 4;

std::atomic<bool> g_interrupted{false};

void handle_sigint(int) { g_interrupted.store(true); }

struct Global {
    bool json = false;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

void emit(const erpoly::json::Value& v) { std::cout << v.dump() << "\n"; }

erpoly::json::Value header(const char* command) {
    erpoly::json::Value out = erpoly::json::Value::object();
    out.add("command", erpoly::json::Value::string(command));
    out.add("schema_version", erpoly::json::Value::string(erpoly::kSchemaVersion));
    return out;
}

const char* route_name(erpoly::IrreducibilityRoute route) {
    switch (route) {
        case erpoly::IrreducibilityRoute::kDegreeOne: return "degree-one";
        case erpoly::IrreducibilityRoute::kModularCertificate: return "modular-certificate";
        case erpoly::IrreducibilityRoute::kFactorization: return "factorization";
    }
    return "unknown";
}

std::string factorization_display(const erpoly::Factorization& fac) {
    std::ostringstream out;
    bool first = true;
    if (fac.content != 1 || fac.factors.empty()) {
        out << fac.content.str();
        first = false;
    }
    for (const auto& zf : fac.factors) {
        if (!first) out << " * ";
        out << "(" << erpoly::format_zpoly(zf.poly) << ")";
        if (zf.multiplicity > 1) out << "^" << zf.multiplicity;
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// verify-identity
// ---------------------------------------------------------------------------

int cmd_verify_identity(const Global& g) {
    const erpoly::SymbolicIdentity id = erpoly::verify_identity_symbolic();
    const erpoly::HilbertPremise prem = erpoly::hilbert_premise_check();
    const bool ok = id.holds && prem.holds;
    if (g.json) {
        erpoly::json::Value out = header("verify-identity");
        out.add("holds", erpoly::json::Value::boolean(ok));
        out.add("identity_holds", erpoly::json::Value::boolean(id.holds));
        out.add("premise_holds", erpoly::json::Value::boolean(prem.holds));
        out.add("composition", erpoly::to_json(id.composition));
        out.add("product", erpoly::to_json(id.product));
        out.add("expansion", erpoly::to_json(id.expansion));
        emit(out);
    } else {
        std::cout << (id.holds ? "identity holds: f(a, f(a, x)) = g(a, x) * h(a, x), and the "
                                 "composition matches the expansion table coefficient-for-"
                                 "coefficient\n"
                               : "identity FAILED\n");
        std::cout << (prem.holds
                          ? "premise holds: f(a, x) = a * (" + erpoly::format_zpoly(prem.c1) +
                                ") + (" + erpoly::format_zpoly(prem.c0) + "), gcd 1\n"
                          : "premise FAILED\n");
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// check-family
// ---------------------------------------------------------------------------

int cmd_check_family(const Global& g, long long a) {
    const erpoly::Int A(a);
    const erpoly::FamilyTriple t = erpoly::family_coeffs(A);
    const erpoly::FactorizationWitness wit = erpoly::verify_factorization(A);
    const bool mod3_applicable = (a % 3) != 0;
    std::optional<erpoly::Mod3Class> m3;
    if (mod3_applicable) m3 = erpoly::mod3_class(A);
    const erpoly::IrreducibilityResult irr = erpoly::is_irreducible(t.f, g.seed);
    const bool degrees_ok = t.g.degree() == 3 && t.h.degree() == 6;
    const bool ok = wit.holds && irr.irreducible && degrees_ok;

    if (g.json) {
        erpoly::json::Value out = header("check-family");
        out.add("a", erpoly::json::Value::number(a));
        out.add("holds", erpoly::json::Value::boolean(ok));
        out.add("f", erpoly::to_json(t.f));
        out.add("g", erpoly::to_json(t.g));
        out.add("h", erpoly::to_json(t.h));
        erpoly::json::Value m3v = erpoly::json::Value::object();
        m3v.add("applicable", erpoly::json::Value::boolean(mod3_applicable));
        if (m3) {
            m3v.add("residue", erpoly::json::Value::number(m3->residue));
            m3v.add("monic_form", erpoly::to_json(m3->monic_form));
        }
        out.add("mod3", std::move(m3v));
        out.add("irreducible", erpoly::json::Value::boolean(irr.irreducible));
        out.add("route", erpoly::json::Value::string(route_name(irr.route)));
        out.add("certificate_prime",
                irr.route == erpoly::IrreducibilityRoute::kModularCertificate
                    ? erpoly::json::Value::number(
                          static_cast<unsigned long long>(irr.certificate_prime))
                    : erpoly::json::Value::null());
        out.add("identity_holds", erpoly::json::Value::boolean(wit.holds));
        erpoly::json::Value degs = erpoly::json::Value::array();
        degs.push(erpoly::json::Value::number(static_cast<long long>(t.g.degree())));
        degs.push(erpoly::json::Value::number(static_cast<long long>(t.h.degree())));
        out.add("degrees", std::move(degs));
        emit(out);
    } else {
        std::cout << "a = " << a << "\n";
        std::cout << "f = " << erpoly::format_zpoly(t.f) << "\n";
        std::cout << "irreducible: " << (irr.irreducible ? "yes" : "NO");
        if (m3)
            std::cout << " (mod 3, case a = " << m3->residue << ": monic form "
                      << erpoly::format_fppoly(m3->monic_form) << ")";
        else if (irr.route == erpoly::IrreducibilityRoute::kModularCertificate)
            std::cout << " (certificate prime " << irr.certificate_prime << ")";
        std::cout << "\n";
        std::cout << "f o f = g * h: " << (wit.holds ? "yes" : "NO") << "\n";
        std::cout << "  g = " << erpoly::format_zpoly(t.g) << " (degree " << t.g.degree()
                  << ")\n";
        std::cout << "  h = " << erpoly::format_zpoly(t.h) << " (degree " << t.h.degree()
                  << ")\n";
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// scan-family
// ---------------------------------------------------------------------------

int cmd_scan_family(const Global& g, long long from, long long to, long long report_every) {
    erpoly::ScanProgress progress;
    if (report_every > 0) {
        progress = [](long long a, const erpoly::ScanReport& sofar) {
            std::cerr << "scan-family: a = " << a << " (checked " << sofar.checked << ")\n";
        };
    }
    const erpoly::ScanReport rep = erpoly::scan_family(from, to, report_every, progress);
    const bool ok = rep.anomalies.empty();
    if (g.json) {
        erpoly::json::Value out = header("scan-family");
        out.add("holds", erpoly::json::Value::boolean(ok));
        out.merge(erpoly::to_json(rep));
        emit(out);
    } else {
        std::cout << "scanned a in [" << rep.from << ", " << rep.to << "]: " << rep.checked
                  << " values\n";
        std::cout << "  mod-3 certified:       " << rep.mod3_certified << "\n";
        std::cout << "  other-prime certified: " << rep.other_prime_certified << "\n";
        std::cout << "  flagged (uncertified): " << rep.flagged.size() << "\n";
        std::cout << "  anomalies:             " << rep.anomalies.size() << "\n";
        for (const auto& s : rep.anomalies) std::cout << "  anomaly: " << s << "\n";
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// factor / iterate / er-depth
// ---------------------------------------------------------------------------

int cmd_factor(const Global& g, const std::string& coeffs) {
    const erpoly::ZPoly f = erpoly::parse_zpoly(coeffs);
    const erpoly::Factorization fac = erpoly::factor(f, g.seed);
    const bool irreducible =
        fac.factors.size() == 1 && fac.factors[0].multiplicity == 1 && f.degree() >= 1;
    if (g.json) {
        erpoly::json::Value out = header("factor");
        out.add("poly", erpoly::to_json(f));
        out.add("irreducible", erpoly::json::Value::boolean(irreducible));
        out.merge(erpoly::to_json(fac));
        emit(out);
    } else {
        std::cout << erpoly::format_zpoly(f) << " = " << factorization_display(fac) << "\n";
        if (irreducible) std::cout << "irreducible over Q\n";
    }
    return kExitOk;
}

int cmd_iterate(const Global& g, const std::string& coeffs, unsigned n) {
    const erpoly::ZPoly f = erpoly::parse_zpoly(coeffs);
    if (f.degree() >= 2 && erpoly::pow_int(erpoly::Int(f.degree()), n + 1) > 1000000)
        throw erpoly::BudgetError("iterate: result degree exceeds 10^6");
    const erpoly::ZPoly it = erpoly::iterate(f, n);
    if (g.json) {
        erpoly::json::Value out = header("iterate");
        out.add("poly", erpoly::to_json(f));
        out.add("n", erpoly::json::Value::number(static_cast<unsigned long long>(n)));
        out.add("degree", erpoly::json::Value::number(static_cast<long long>(it.degree())));
        out.add("result", erpoly::to_json(it));
        emit(out);
    } else {
        std::cout << erpoly::format_zpoly(it) << "\n";
    }
    return kExitOk;
}

int cmd_er_depth(const Global& g, const std::string& coeffs, unsigned max_depth) {
    const erpoly::ZPoly f = erpoly::parse_zpoly(coeffs);
    const erpoly::EmergenceReport rep = erpoly::emergent_depth(f, max_depth, g.seed);
    if (g.json) {
        erpoly::json::Value out = header("er-depth");
        out.merge(erpoly::to_json(rep));
        emit(out);
    } else {
        std::cout << "f = " << erpoly::format_zpoly(f) << "\n";
        if (rep.depth) {
            std::cout << "depth " << *rep.depth << ": iterate factors with degrees [";
            for (std::size_t i = 0; i < rep.first_reducible_factor_degrees.size(); ++i)
                std::cout << (i ? ", " : "") << rep.first_reducible_factor_degrees[i];
            std::cout << "]\n";
            std::cout << "factorization: " << factorization_display(*rep.factors) << "\n";
        } else {
            std::cout << "no reducible iterate through depth " << max_depth << " ("
                      << rep.iterates_checked << " iterates certified irreducible)\n";
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

erpoly::Int int_from_json(const nlohmann::json& v) {
    if (v.is_string()) return erpoly::detail::parse_integer(v.get<std::string>());
    return erpoly::Int(v.get<long long>());
}

erpoly::ZPoly zpoly_from_json(const nlohmann::json& arr) {
    std::vector<erpoly::Int> coeffs;
    for (const auto& c : arr) coeffs.push_back(int_from_json(c));
    return erpoly::ZPoly(std::move(coeffs));
}

erpoly::SearchCheckpoint load_checkpoint(const std::string& path, const erpoly::SearchSpec& spec,
                                         bool use_filters) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open checkpoint: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed checkpoint " + path + ": " + e.what());
    }
    try {
        if (j.at("schema").get<std::string>() != "erpoly-search-checkpoint/1")
            throw std::invalid_argument("unrecognized checkpoint schema in " + path);
        const auto& js = j.at("spec");
        std::vector<std::uint64_t> primes;
        for (const auto& p : js.at("filter_primes")) primes.push_back(p.get<std::uint64_t>());
        if (js.at("monic").get<bool>() != spec.monic ||
            js.at("degree").get<int>() != spec.degree ||
            js.at("bound").get<long long>() != spec.bound ||
            js.at("depth").get<int>() != spec.depth || primes != spec.filter_primes ||
            js.at("use_filters").get<bool>() != use_filters)
            throw std::invalid_argument("checkpoint " + path +
                                        " does not match the requested search");
        erpoly::SearchCheckpoint cp;
        for (const auto& v : j.at("completed")) cp.completed.push_back(v.get<long long>());
        const auto& jc = j.at("counters");
        cp.counters.candidates = jc.at("candidates").get<unsigned long long>();
        cp.counters.root_skips = jc.at("root_skips").get<unsigned long long>();
        cp.counters.filtered = jc.at("filtered").get<unsigned long long>();
        cp.counters.factored = jc.at("factored").get<unsigned long long>();
        for (const auto& jh : j.at("hits")) {
            erpoly::SearchHit hit;
            hit.poly = zpoly_from_json(jh.at("poly"));
            hit.depth = jh.at("depth").get<unsigned>();
            for (const auto& d : jh.at("factor_degrees"))
                hit.factor_degrees.push_back(d.get<long>());
            hit.factors.content = int_from_json(jh.at("content"));
            for (const auto& jf : jh.at("factors"))
                hit.factors.factors.push_back(
                    {zpoly_from_json(jf.at("coeffs")), jf.at("multiplicity").get<unsigned>()});
            hit.conjugate_partner_present = false;  // recomputed after the merge
            cp.hits.push_back(std::move(hit));
        }
        return cp;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed checkpoint " + path + ": " + e.what());
    }
}

void write_checkpoint_atomic(const std::string& path, const erpoly::json::Value& v) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << v.dump() << "\n";
        if (!out) throw std::runtime_error("cannot write checkpoint: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

int cmd_search(const Global& g, const erpoly::SearchSpec& spec, unsigned shards, bool no_filters,
               const std::string& resume_path, const std::string& checkpoint_path) {
    const bool use_filters = !no_filters;
    erpoly::SearchCheckpoint resume;
    bool have_resume = false;
    if (!resume_path.empty()) {
        resume = load_checkpoint(resume_path, spec, use_filters);
        have_resume = true;
    }
    // Where interrupted progress lands: --checkpoint wins, else the resume
    // file is updated in place.
    const std::string write_path = checkpoint_path.empty() ? resume_path : checkpoint_path;

    erpoly::SearchOptions options;
    options.use_filters = use_filters;
    options.shards = shards;
    options.threads = g.threads;
    options.rng_seed = g.seed;
    options.should_stop = [] { return g_interrupted.load(); };
    if (!write_path.empty()) {
        options.on_progress = [&](const erpoly::SearchCheckpoint& cp) {
            write_checkpoint_atomic(write_path, erpoly::to_json_checkpoint(cp, spec, use_filters));
        };
    }

    std::signal(SIGINT, handle_sigint);
    const auto t0 = std::chrono::steady_clock::now();
    const erpoly::SearchOutcome outcome =
        erpoly::run_search(spec, options, have_resume ? &resume : nullptr);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    for (const auto& hit : outcome.hits) {
        if (g.json) {
            emit(erpoly::to_json(hit));
        } else {
            std::cout << erpoly::format_zpoly(hit.poly) << "  ->  degrees [";
            for (std::size_t i = 0; i < hit.factor_degrees.size(); ++i)
                std::cout << (i ? ", " : "") << hit.factor_degrees[i];
            std::cout << "]" << (hit.conjugate_partner_present ? "  (conjugate present)" : "")
                      << "\n";
        }
    }

    std::ostringstream summary;
    summary << "search: bound=" << spec.bound << (spec.monic ? " monic" : " general")
            << " candidates=" << outcome.counters.candidates
            << " root_skips=" << outcome.counters.root_skips
            << " filtered=" << outcome.counters.filtered
            << " factored=" << outcome.counters.factored << " hits=" << outcome.hits.size()
            << " elapsed=" << elapsed << "s";
    if (outcome.interrupted) {
        summary << " INTERRUPTED";
        if (!write_path.empty()) summary << " (checkpoint: " << write_path << ")";
    }
    std::cerr << summary.str() << "\n";
    return outcome.interrupted ? kExitInterrupted : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{"exact certification and search for emergent reducibility of integer "
                 "polynomials under self-composition.\nCoefficient lists are ASCENDING: "
                 "\"1,3,-10,-8\" means 1 + 3x - 10x^2 - 8x^3."};
    app.set_version_flag("--version", std::string("erpoly ") + erpoly::kVersion + " (schema " +
                                          erpoly::kSchemaVersion + ")");
    app.require_subcommand(1);

    Global g;
    app.add_flag("--json", g.json, "machine-readable JSON on stdout");
    app.add_option("--seed", g.seed, "seed for randomized equal-degree splitting")
        ->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads for search")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();

    CLI::App* sc_vi = app.add_subcommand(
        "verify-identity", "check g(a,x) * h(a,x) = f(a, f(a,x)) symbolically in Z[a][x]");
    sc_vi->fallthrough();

    CLI::App* sc_cf = app.add_subcommand("check-family", "certify one family member f_a");
    sc_cf->fallthrough();
    long long cf_a = 1;
    sc_cf->add_option("--a", cf_a, "parameter a (nonzero integer)")->required();

    CLI::App* sc_sf =
        app.add_subcommand("scan-family", "certify every family member in a range of a");
    sc_sf->fallthrough();
    long long sf_from = 1, sf_to = 1, sf_every = 0;
    sc_sf->add_option("--from", sf_from, "first a (range must exclude 0)")->required();
    sc_sf->add_option("--to", sf_to, "last a (inclusive)")->required();
    sc_sf->add_option("--report-every", sf_every, "progress to stderr every N values")
        ->capture_default_str();

    CLI::App* sc_fa = app.add_subcommand("factor", "factor an integer polynomial over Z");
    sc_fa->fallthrough();
    std::string fa_coeffs;
    sc_fa->add_option("--coeffs", fa_coeffs,
                      "ascending coefficients (\"0,0,-1,1\" is x^3 - x^2) or an expression "
                      "(\"x^3-x^2\")")
        ->required();

    CLI::App* sc_it = app.add_subcommand("iterate", "compose a polynomial with itself n times");
    sc_it->fallthrough();
    std::string it_coeffs;
    unsigned it_n = 1;
    sc_it->add_option("--coeffs", it_coeffs, "ascending coefficients or an expression")
        ->required();
    sc_it->add_option("-n,--n", it_n, "number of compositions (0 returns the input)")
        ->required()
        ->check(CLI::Range(0u, 1000000u));

    CLI::App* sc_er = app.add_subcommand(
        "er-depth", "first depth at which an iterate of an irreducible polynomial factors");
    sc_er->fallthrough();
    std::string er_coeffs;
    unsigned er_depth = 1;
    sc_er->add_option("--coeffs", er_coeffs, "ascending coefficients or an expression")
        ->required();
    sc_er->add_option("--max-depth", er_depth, "largest composition depth to certify")
        ->required();

    CLI::App* sc_se = app.add_subcommand(
        "search", "exhaustive cubic box search for emergent reducibility at depth 1");
    sc_se->fallthrough();
    erpoly::SearchSpec spec;
    unsigned se_shards = 1;
    bool se_no_filters = false;
    std::string se_resume, se_checkpoint;
    sc_se->add_flag("--monic,!--general", spec.monic,
                    "monic cubics only (default) / all leading coefficients in the box");
    sc_se->add_option("--bound", spec.bound, "absolute value cap per coefficient")->required();
    sc_se->add_option("--depth", spec.depth, "emergence depth (only 1 is supported)")
        ->capture_default_str();
    sc_se->add_option("--degree", spec.degree, "candidate degree (only 3 is supported)")
        ->capture_default_str();
    sc_se->add_option("--shards", se_shards, "partition count for the outer coefficient")
        ->check(CLI::Range(1u, 4096u))
        ->capture_default_str();
    sc_se->add_flag("--no-filters", se_no_filters,
                    "disable the modular pre-filters (same hits, much slower)");
    sc_se->add_option("--resume", se_resume, "checkpoint file to resume from");
    sc_se->add_option("--checkpoint", se_checkpoint,
                      "where to write progress (defaults to the --resume path)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sc_vi->parsed()) return cmd_verify_identity(g);
        if (sc_cf->parsed()) return cmd_check_family(g, cf_a);
        if (sc_sf->parsed()) return cmd_scan_family(g, sf_from, sf_to, sf_every);
        if (sc_fa->parsed()) return cmd_factor(g, fa_coeffs);
        if (sc_it->parsed()) return cmd_iterate(g, it_coeffs, it_n);
        if (sc_er->parsed()) return cmd_er_depth(g, er_coeffs, er_depth);
        if (sc_se->parsed())
            return cmd_search(g, spec, se_shards, se_no_filters, se_resume, se_checkpoint);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const erpoly::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
}
