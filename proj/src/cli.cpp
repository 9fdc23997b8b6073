#include "nilorb/cli.hpp"

#include "nilorb/cache.hpp"
#include "nilorb/envelope.hpp"
#include "nilorb/errors.hpp"
#include "nilorb/format.hpp"
#include "nilorb/oracle.hpp"
#include "nilorb/pipeline.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

namespace nilorb::cli {

namespace {

using nlohmann::json;

struct ComputeArgs {
    std::string kind;
    int g = 0;
    int n = 0;
    int order = 0;
    std::string format = "json";
    std::string cache_dir;
    bool timing = false;
};

struct VerifyArgs {
    std::string identity;
    int g = 0;
    int order = 0;
    int q_order = 0;
    std::string perturb;
    std::string format = "json";
};

struct OracleArgs {
    std::string check;
    int g = 0;
    int n = 0;
    int q = 0;
    std::string lambda;
    std::string f;
    std::string format = "table";
};

struct ScanArgs {
    int g = 0;
    int n_max = 0;
    std::string format = "json";
};

struct CacheArgs {
    std::string action;
    std::string cache_dir;
};

std::vector<int> parse_int_list(const std::string& s, const char* what)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string("cannot parse ") + what + " '" + s + "'");
        }
    }
    if (out.empty()) throw UsageError(std::string("empty ") + what);
    return out;
}

// Monic polynomial over the prime subfield written like "x^2+x+1" or "x-1".
oracle::FieldPoly parse_field_poly(const std::string& text, const FiniteField& field)
{
    std::map<int, long> terms;
    std::size_t i = 0;
    const auto fail = [&] { throw UsageError("cannot parse polynomial '" + text + "'"); };
    if (text.empty()) fail();
    while (i < text.size()) {
        long sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        }
        long coeff = 1;
        bool have_coeff = false;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) {
            coeff = std::stol(text.substr(start, i - start));
            have_coeff = true;
        }
        int exponent = 0;
        if (i < text.size() && text[i] == 'x') {
            ++i;
            exponent = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                start = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (i == start) fail();
                exponent = std::stoi(text.substr(start, i - start));
            }
        } else if (!have_coeff) {
            fail();
        }
        terms[exponent] += sign * coeff;
        if (i < text.size() && text[i] != '+' && text[i] != '-') fail();
    }
    const int degree = terms.rbegin()->first;
    const int p = field.characteristic();
    oracle::FieldPoly f(static_cast<std::size_t>(degree) + 1, 0);
    for (auto [e, c] : terms) f[static_cast<std::size_t>(e)] = static_cast<FiniteField::Elem>(((c % p) + p) % p);
    if (f.back() != 1) throw UsageError("polynomial '" + text + "' is not monic");
    return f;
}

BigInt integer_value(const CountingPolynomial& p, int q)
{
    const BigRat v = p.value.evaluate(BigRat(q));
    NILORB_ASSERT(is_integer(v), "non-integral value of a counting polynomial at q = " + std::to_string(q));
    return v.get_num();
}

std::string label(Kind kind, int g, int n)
{
    return std::string(1, kind_letter(kind)) + "_" + std::to_string(g) + "(" + std::to_string(n) + ",q)";
}

json envelope(const std::string& command, json parameters)
{
    json j;
    j["command"] = command;
    j["engine_version"] = kEngineVersion;
    j["parameters"] = std::move(parameters);
    return j;
}

int cmd_compute(const ComputeArgs& a, std::ostream& out, std::ostream& err)
{
    const auto started = std::chrono::steady_clock::now();
    const Kind kind = parse_kind(a.kind);
    if (a.g < 1) throw UsageError("--g must be a positive integer");
    const bool single = a.n != 0;
    if (single == (a.order != 0)) throw UsageError("give exactly one of --n and --N");
    if ((single ? a.n : a.order) < 1) throw UsageError("--n/--N must be a positive integer");
    if (a.format != "json" && a.format != "csv" && a.format != "pretty") throw UsageError("unknown --format " + a.format);
    if (a.format == "csv" && kind == Kind::H) throw UsageError("csv output is only defined for polynomial kinds");

    std::vector<int> ns;
    if (single) {
        ns.push_back(a.n);
    } else {
        for (int n = (kind == Kind::M ? 0 : 1); n <= a.order; ++n) ns.push_back(n);
    }

    std::optional<ResultCache> cache;
    if (!a.cache_dir.empty()) cache.emplace(a.cache_dir, kEngineVersion, err);

    Pipeline pipeline(a.g);
    pipeline.reserve(ns.back());
    std::optional<std::vector<CountingPolynomial>> m_values;
    std::vector<CountingPolynomial> results;
    for (int n : ns) {
        if (cache) {
            if (auto hit = cache->load(kind, a.g, n)) {
                results.push_back(std::move(*hit));
                continue;
            }
        }
        CountingPolynomial p;
        switch (kind) {
        case Kind::A: p = pipeline.A(n); break;
        case Kind::I: p = pipeline.I(n); break;
        case Kind::H: p = CountingPolynomial{Kind::H, a.g, n, pipeline.H(n)}; break;
        case Kind::M:
            if (!m_values) m_values = pipeline.M(ns.back());
            p = (*m_values)[static_cast<std::size_t>(n)];
            break;
        }
        if (cache) cache->store(p);
        results.push_back(std::move(p));
    }

    if (a.format == "csv") {
        out << to_csv(results);
    } else if (a.format == "pretty") {
        if (single) {
            out << to_pretty(results.front().value) << '\n';
        } else {
            for (const auto& p : results) out << label(p.kind, p.g, p.n) << " = " << to_pretty(p.value) << '\n';
        }
    } else {
        json params{{"kind", a.kind}, {"g", a.g}};
        if (single)
            params["n"] = a.n;
        else
            params["N"] = a.order;
        json j = envelope("compute", std::move(params));
        j["outputs"] = json::array();
        for (const auto& p : results) j["outputs"].push_back(to_json(p));
        if (a.timing) {
            const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
            j["timing"] = {{"wall_ms", elapsed.count()}};
        }
        out << canonical_dump(j) << '\n';
    }
    return kSuccess;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream&)
{
    if (a.format != "json" && a.format != "pretty") throw UsageError("unknown --format " + a.format);
    if (a.order < 1) throw UsageError("--N must be a positive integer");
    VerificationReport report;
    if (a.identity == "thm5-routes") {
        if (a.g < 1) throw UsageError("--g must be a positive integer");
        Pipeline pipeline(a.g);
        report = verify_m_routes(pipeline, a.order);
    } else if (a.identity == "kwi") {
        if (a.g < 1) throw UsageError("--g must be a positive integer");
        if (a.q_order < 1) throw UsageError("--Q must be a positive integer");
        std::optional<KwiPerturbation> perturbation;
        if (!a.perturb.empty()) {
            const auto v = parse_int_list(a.perturb, "--perturb");
            if (v.size() != 3 || v[0] < 1 || v[1] < 0) throw UsageError("--perturb expects n,s,delta with n >= 1, s >= 0");
            perturbation = KwiPerturbation{v[0], v[1], v[2]};
        }
        Pipeline pipeline(a.g);
        report = verify_kwi(pipeline, a.order, a.q_order, perturbation);
    } else if (a.identity == "g1-product") {
        if (a.g != 0 && a.g != 1) throw UsageError("g1-product is defined for g = 1 only");
        if (a.q_order < 1) throw UsageError("--Q must be a positive integer");
        report = verify_g1_product(a.order, a.q_order);
    } else {
        throw UsageError("unknown identity '" + a.identity + "' (expected thm5-routes, kwi or g1-product)");
    }

    if (a.format == "pretty") {
        out << report.identity << " g=" << report.g << " N=" << report.x_order;
        if (report.q_order) out << " Q=" << report.q_order;
        out << ": " << (report.passed ? "pass" : "FAIL") << '\n';
        if (report.mismatch) {
            const auto& m = *report.mismatch;
            out << "  first mismatch at X^" << m.x_degree;
            if (m.q_degree >= 0) out << " q^" << m.q_degree;
            out << ": lhs " << m.lhs << ", rhs " << m.rhs << '\n';
        }
    } else {
        json params{{"identity", a.identity}, {"g", report.g}, {"N", a.order}, {"Q", a.q_order}};
        if (!a.perturb.empty()) params["perturb"] = a.perturb;
        json j = envelope("verify", std::move(params));
        j["reports"] = json::array({to_json(report)});
        out << canonical_dump(j) << '\n';
    }
    return report.passed ? kSuccess : kVerificationFailed;
}

struct ComparisonRow {
    std::string quantity;
    BigInt expected;
    BigInt observed;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out, std::ostream&)
{
    if (a.format != "table" && a.format != "json") throw UsageError("unknown --format " + a.format);
    if (a.q < 2) throw UsageError("--q is required");
    const FiniteField field(a.q);
    std::vector<ComparisonRow> rows;
    std::string expected_label = "pipeline";

    if (a.check == "M" || a.check == "IA") {
        if (a.g < 1 || a.n < 1) throw UsageError("--g and --n must be positive integers");
        Pipeline pipeline(a.g);
        const auto m = pipeline.M(a.n);
        const BigInt m_at_q = integer_value(m[static_cast<std::size_t>(a.n)], a.q);
        const std::string suffix = "_" + std::to_string(a.g) + "(" + std::to_string(a.n) + "," + std::to_string(a.q) + ")";
        if (a.check == "M") {
            rows.push_back({"M" + suffix + " burnside", m_at_q, oracle::burnside_M(a.g, a.n, field)});
            rows.push_back({"M" + suffix + " orbits",
                            m_at_q, BigInt(static_cast<unsigned long>(oracle::enumerate_orbits(a.g, a.n, field).size()))});
        } else {
            const auto counts = oracle::bruteforce_counts(a.g, a.n, field);
            rows.push_back({"M" + suffix, m_at_q, counts.M});
            rows.push_back({"I" + suffix, integer_value(pipeline.I(a.n), a.q), counts.I});
            rows.push_back({"A" + suffix, integer_value(pipeline.A(a.n), a.q), counts.A});
        }
    } else if (a.check == "nilcount") {
        if (a.lambda.empty() || a.f.empty()) throw UsageError("nilcount needs --lambda and --f");
        const Partition lambda(parse_int_list(a.lambda, "--lambda"));
        const auto f = parse_field_poly(a.f, field);
        const auto r = oracle::count_nilpotent_commutant(lambda, f, field);
        expected_label = "formula";
        const int d = static_cast<int>(f.size()) - 1;
        rows.push_back({"nilpotents commuting with J" + lambda.to_string() + "(" + a.f + ")", r.formula, r.enumerated});
        rows.push_back({"commutant dimension", BigInt(static_cast<long>(d) * inner_product(lambda, lambda)),
                        BigInt(r.commutant_dimension)});
    } else if (a.check == "nilcount-total") {
        if (a.n < 1) throw UsageError("--n must be a positive integer");
        expected_label = "formula";
        BigInt formula;
        mpz_ui_pow_ui(formula.get_mpz_t(), static_cast<unsigned long>(a.q), static_cast<unsigned long>(a.n * a.n - a.n));
        rows.push_back({"nilpotent " + std::to_string(a.n) + "x" + std::to_string(a.n) + " matrices", formula,
                        BigInt(static_cast<unsigned long>(oracle::enumerate_nilpotent(a.n, field).size()))});
    } else {
        throw UsageError("unknown check '" + a.check + "' (expected M, IA, nilcount or nilcount-total)");
    }

    bool all = true;
    for (const auto& r : rows) all = all && r.expected == r.observed;

    if (a.format == "json") {
        json params{{"check", a.check}, {"g", a.g}, {"n", a.n}, {"q", a.q}};
        if (!a.lambda.empty()) params["lambda"] = a.lambda;
        if (!a.f.empty()) params["f"] = a.f;
        json j = envelope("oracle", std::move(params));
        j["rows"] = json::array();
        for (const auto& r : rows)
            j["rows"].push_back({{"quantity", r.quantity},
                                 {expected_label, r.expected.get_str()},
                                 {"oracle", r.observed.get_str()},
                                 {"match", r.expected == r.observed}});
        j["pass"] = all;
        out << canonical_dump(j) << '\n';
    } else {
        out << std::left << std::setw(44) << "quantity" << std::setw(12) << expected_label << std::setw(12) << "oracle"
            << "match\n";
        for (const auto& r : rows)
            out << std::left << std::setw(44) << r.quantity << std::setw(12) << r.expected.get_str() << std::setw(12)
                << r.observed.get_str() << (r.expected == r.observed ? "yes" : "NO") << '\n';
    }
    return all ? kSuccess : kVerificationFailed;
}

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream&)
{
    if (a.format != "json" && a.format != "pretty") throw UsageError("unknown --format " + a.format);
    if (a.g < 2) throw UsageError("conjecture-scan needs --g >= 2");
    if (a.n_max < 1) throw UsageError("--Nmax must be a positive integer");
    Pipeline pipeline(a.g);
    const ConjectureReport report = conjecture_scan(pipeline, a.n_max);
    if (a.format == "pretty") {
        for (const auto& p : report.polynomials) out << label(p.kind, p.g, p.n) << " = " << to_pretty(p.value) << '\n';
        out << "negative coefficients: " << report.negatives.size() << '\n';
        for (const auto& neg : report.negatives)
            out << "  n=" << neg.n << " s=" << neg.s << " a=" << neg.value.get_str() << '\n';
    } else {
        json j = envelope("conjecture-scan", {{"g", a.g}, {"Nmax", a.n_max}});
        j["outputs"] = json::array();
        for (const auto& p : report.polynomials) j["outputs"].push_back(to_json(p));
        j["negatives"] = json::array();
        for (const auto& neg : report.negatives)
            j["negatives"].push_back({{"n", neg.n}, {"s", neg.s}, {"value", neg.value.get_str()}});
        out << canonical_dump(j) << '\n';
    }
    return kSuccess;
}

int cmd_cache(const CacheArgs& a, std::ostream& out, std::ostream& err)
{
    if (a.cache_dir.empty()) throw UsageError("no cache directory: pass --cache-dir or set NILORB_CACHE");
    ResultCache cache(a.cache_dir, kEngineVersion, err);
    if (a.action == "list") {
        for (const auto& p : cache.entries()) out << p.filename().string() << '\n';
    } else if (a.action == "clear") {
        out << "removed " << cache.clear() << " entries\n";
    } else {
        throw UsageError("unknown cache action '" + a.action + "' (expected list or clear)");
    }
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Counting orbits of nilpotent matrix tuples under simultaneous conjugation", "nilorb"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Compute A, I, M or H counting functions");
    c->add_option("--kind", compute.kind, "A, I, M or H")->required();
    c->add_option("--g", compute.g, "Tuple length")->required();
    c->add_option("--n", compute.n, "Single matrix order");
    c->add_option("--N", compute.order, "All orders up to N");
    c->add_option("--format", compute.format, "json, csv or pretty");
    c->add_option("--cache-dir", compute.cache_dir, "Result cache directory")->envname("NILORB_CACHE");
    c->add_flag("--timing", compute.timing, "Include wall-clock timing in JSON output");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Verify a product identity at finite truncation");
    v->add_option("identity", verify.identity, "thm5-routes, kwi or g1-product")->required();
    v->add_option("--g", verify.g, "Tuple length");
    v->add_option("--N", verify.order, "Truncation order in X")->required();
    v->add_option("--Q", verify.q_order, "Truncation order in q");
    v->add_option("--perturb", verify.perturb, "n,s,delta: shift a_{n,s} by delta (negative control)");
    v->add_option("--format", verify.format, "json or pretty");

    OracleArgs orc;
    auto* o = app.add_subcommand("oracle", "Compare the pipeline with brute-force finite-field counts");
    o->add_option("--check", orc.check, "M, IA, nilcount or nilcount-total")->required();
    o->add_option("--g", orc.g, "Tuple length");
    o->add_option("--n", orc.n, "Matrix order");
    o->add_option("--q", orc.q, "Field size (2, 3, 4, 5, 7, 8, 9)")->required();
    o->add_option("--lambda", orc.lambda, "Partition, e.g. 2,1");
    o->add_option("--f", orc.f, "Monic irreducible polynomial, e.g. x^2+x+1");
    o->add_option("--format", orc.format, "table or json");

    ScanArgs scan;
    auto* s = app.add_subcommand("conjecture-scan", "Report negative coefficients of A_g(n,q)");
    s->add_option("--g", scan.g, "Tuple length")->required();
    s->add_option("--Nmax", scan.n_max, "Largest n")->required();
    s->add_option("--format", scan.format, "json or pretty");

    CacheArgs cache;
    auto* k = app.add_subcommand("cache", "Inspect or clear the result cache");
    k->add_option("action", cache.action, "list or clear")->required();
    k->add_option("--cache-dir", cache.cache_dir, "Result cache directory")->envname("NILORB_CACHE");

    std::vector<std::string> argv_store{"nilorb"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (c->parsed()) return cmd_compute(compute, out, err);
        if (v->parsed()) return cmd_verify(verify, out, err);
        if (o->parsed()) return cmd_oracle(orc, out, err);
        if (s->parsed()) return cmd_scan(scan, out, err);
        if (k->parsed()) return cmd_cache(cache, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const InternalAssertion& e) {
        err << "internal assertion failed: " << e.what() << '\n';
        return kInternalError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kUsageError;
}

} // namespace nilorb::cli
