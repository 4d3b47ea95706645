#include "sdlab/cli.hpp"

#include "sdlab/carlitz.hpp"
#include "sdlab/dedekind.hpp"
#include "sdlab/error.hpp"
#include "sdlab/poly_json.hpp"
#include "sdlab/semigroup.hpp"
#include "sdlab/suite.hpp"
#include "sdlab/torus.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace sdlab {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

Format parse_format(const std::string& name) {
    if (name == "json")
        return Format::json;
    if (name == "csv")
        return Format::csv;
    return Format::text;
}

void add_format_option(CLI::App* app, std::string& target, const char* help = "text, json or csv") {
    app->add_option("--format", target, help)->check(CLI::IsMember({"text", "json", "csv"}));
}

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << (i ? sep : "") << xs[i];
    return os.str();
}

json semigroup_json(const NumericalSemigroup& S) {
    return json{{"generators", S.generators()},
                {"frobenius", S.frobenius()},
                {"genus", S.genus()},
                {"gaps", S.gaps()}};
}

json integer_json(const BigInt& x) {
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

unsigned default_threads() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("SDLAB_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(cap, &end, 10);
        if (end != cap && *end == '\0' && v >= 1)
            n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
    return n;
}

// ---- semigroup ---------------------------------------------------------------

struct SemigroupArgs {
    std::vector<long> gens;
    std::vector<long> pair;
    std::optional<long> apery_modulus;
    std::optional<long> quotient_d;
    std::optional<long> hilbert_n;
    bool polys = false;
    std::string format = "text";
};

int cmd_semigroup(const SemigroupArgs& args, std::ostream& out) {
    if (args.gens.empty() == args.pair.empty())
        throw CLI::ValidationError("semigroup", "give exactly one of --gens or --pair");
    NumericalSemigroup S = [&] {
        if (!args.pair.empty()) {
            if (args.pair.size() != 2)
                throw CLI::ValidationError("--pair", "expects two integers a,b");
            return CoprimePair(args.pair[0], args.pair[1]).semigroup();
        }
        return NumericalSemigroup::from_generators(args.gens);
    }();

    // Compute everything that can throw before building json literals.
    std::optional<AperySet> ap;
    if (args.apery_modulus)
        ap = apery(S, *args.apery_modulus);
    std::optional<NumericalSemigroup> quot;
    if (args.quotient_d)
        quot = quotient(S, *args.quotient_d);
    std::optional<LaurentPoly> hilbert;
    if (args.hilbert_n)
        hilbert = hilbert_trunc(S, *args.hilbert_n);

    json doc = semigroup_json(S);
    if (ap)
        doc["apery"] = {{"modulus", ap->modulus}, {"elements", ap->elements}};
    if (args.polys) {
        doc["gap_poly"] = to_json(gap_poly(S));
        doc["semigroup_poly"] = to_json(semigroup_poly(S));
    }
    if (args.hilbert_n)
        doc["hilbert"] = {{"N", *args.hilbert_n}, {"poly", to_json(*hilbert)}};
    if (quot) {
        json q = semigroup_json(*quot);
        q["d"] = *args.quotient_d;
        doc["quotient"] = q;
    }

    switch (parse_format(args.format)) {
    case Format::json: out << doc.dump() << '\n'; break;
    case Format::csv:
        out << "field,value\n";
        out << "generators," << join(S.generators(), ";") << '\n';
        out << "gaps," << join(S.gaps(), ";") << '\n';
        out << "frobenius," << S.frobenius() << '\n';
        out << "genus," << S.genus() << '\n';
        if (args.apery_modulus)
            out << "apery," << join(ap->elements, ";") << '\n';
        if (args.polys) {
            out << "gap_poly," << to_string(gap_poly(S)) << '\n';
            out << "semigroup_poly," << to_string(semigroup_poly(S)) << '\n';
        }
        if (args.hilbert_n)
            out << "hilbert," << to_string(*hilbert) << '\n';
        if (quot) {
            out << "quotient_gaps," << join(quot->gaps(), ";") << '\n';
            out << "quotient_genus," << quot->genus() << '\n';
        }
        break;
    case Format::text:
        out << "generators: " << join(S.generators()) << '\n';
        out << "gaps: " << join(S.gaps()) << '\n';
        out << "frobenius: " << S.frobenius() << '\n';
        out << "genus: " << S.genus() << '\n';
        if (args.apery_modulus)
            out << "apery(" << *args.apery_modulus << "): ["
                << join(ap->elements) << "]\n";
        if (args.polys) {
            out << "gap_poly: " << to_string(gap_poly(S)) << '\n';
            out << "semigroup_poly: " << to_string(semigroup_poly(S)) << '\n';
        }
        if (args.hilbert_n)
            out << "hilbert(" << *args.hilbert_n << "): " << to_string(*hilbert) << '\n';
        if (quot) {
            out << "quotient(" << *args.quotient_d << "): gaps " << join(quot->gaps()) << ", genus "
                << quot->genus() << '\n';
        }
        break;
    }
    return exit_ok;
}

// ---- dedekind ----------------------------------------------------------------

struct DedekindArgs {
    long a = 0;
    long b = 0;
    bool sum = false;
    std::vector<unsigned> voronoi; // m n
    bool carlitz = false;
    bool zolotarev = false;
    std::string format = "text";
};

constexpr DedekindRoute kRoutes[] = {DedekindRoute::sawtooth, DedekindRoute::weighted,
                                     DedekindRoute::voronoi,  DedekindRoute::roots,
                                     DedekindRoute::cayley,   DedekindRoute::cotangent};

std::string render(const DedekindValue& v) {
    if (const Rational* r = std::get_if<Rational>(&v))
        return to_display_string(*r);
    return format_float(std::get<double>(v));
}

int cmd_dedekind(DedekindArgs args, std::ostream& out) {
    require_coprime(args.a, args.b);
    if (!args.sum && args.voronoi.empty() && !args.carlitz && !args.zolotarev)
        args.sum = true;
    const long a = args.a, b = args.b;

    json doc{{"a", a}, {"b", b}};
    std::vector<std::pair<std::string, std::string>> rows;
    if (args.sum) {
        json routes;
        for (DedekindRoute route : kRoutes) {
            DedekindValue v = dedekind_sum(a, b, route);
            if (const Rational* r = std::get_if<Rational>(&v))
                routes[to_string(route)] = to_fraction_string(*r);
            else
                routes[to_string(route)] = std::get<double>(v);
            rows.emplace_back(std::string("s(a,b) ") + to_string(route), render(v));
        }
        doc["dedekind_sum"] = routes;
    }
    if (!args.voronoi.empty()) {
        const unsigned m = args.voronoi[0], n = args.voronoi[1];
        BigInt v = voronoi_sum({a, b, m, n});
        doc["voronoi"] = {{"m", m}, {"n", n}, {"value", integer_json(v)}};
        rows.emplace_back("V_{" + std::to_string(m) + "," + std::to_string(n) + "}", v.get_str());
    }
    if (args.carlitz) {
        BiLaurent c = carlitz_poly(a, b);
        doc["carlitz"] = to_json(c);
        rows.emplace_back("c(q,t)", to_string(c));
    }
    if (args.zolotarev) {
        ZolotarevPerm pi = zolotarev(a, b);
        doc["zolotarev"] = pi.images;
        rows.emplace_back("zolotarev", "[" + join(pi.images) + "]");
    }

    switch (parse_format(args.format)) {
    case Format::json: out << doc.dump() << '\n'; break;
    case Format::csv:
        out << "quantity,value\n";
        for (const auto& [k, v] : rows)
            out << k << ',' << (v.find(',') == std::string::npos ? v : "\"" + v + "\"") << '\n';
        break;
    case Format::text:
        for (const auto& [k, v] : rows)
            out << k << ": " << v << '\n';
        break;
    }
    return exit_ok;
}

// ---- verify ------------------------------------------------------------------

struct VerifyArgs {
    std::optional<long> pairs_max;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "json";
    std::vector<std::string> identities;
    std::optional<int> semigroups;
    std::optional<unsigned> threads;
    bool timing = false;
    std::optional<double> tol_relative;
    std::optional<double> tol_prop2;
    std::optional<double> tol_absolute;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    if (args.format == "text")
        throw CLI::ValidationError("--format", "verify writes json or csv");
    SuiteOptions opt;
    if (args.pairs_max) {
        if (*args.pairs_max < 0)
            throw CLI::ValidationError("--pairs-max", "must be >= 0");
        opt.ranges = opt.ranges.capped(*args.pairs_max);
    }
    if (args.semigroups)
        opt.ranges.semigroups = *args.semigroups;
    opt.seed = args.seed;
    opt.identities = args.identities;
    opt.timing = args.timing;
    opt.threads = args.threads ? std::max(1u, *args.threads) : default_threads();
    if (args.tol_relative)
        opt.tolerances.relative = *args.tol_relative;
    if (args.tol_prop2)
        opt.tolerances.prop2 = *args.tol_prop2;
    if (args.tol_absolute)
        opt.tolerances.absolute = *args.tol_absolute;

    std::vector<IdentityReport> reports = run_suite(opt);
    std::string body = args.format == "csv" ? reports_to_csv(reports) : reports_to_json(reports);
    if (args.out_path.empty()) {
        out << body;
    } else {
        std::ofstream file(args.out_path, std::ios::binary);
        if (!file)
            throw CLI::ValidationError("--out", "cannot open " + args.out_path);
        file << body;
    }
    VerdictCounts c = count_verdicts(reports);
    err << "verify: " << c.total() << " checks, " << c.pass << " pass, " << c.fail << " fail, "
        << c.expected_discrepancy << " expected-discrepancy\n";
    return c.fail == 0 ? exit_ok : exit_verification_failed;
}

// ---- table -------------------------------------------------------------------

struct TableArgs {
    std::string kind;
    long max_value = 12;
    unsigned m = 1;
    unsigned n = 1;
    std::string format = "text";
};

int cmd_table(const TableArgs& args, std::ostream& out) {
    std::vector<std::string> header{"a", "b"};
    if (args.kind == "dedekind")
        header.push_back("s");
    else if (args.kind == "voronoi")
        header.push_back("V_" + std::to_string(args.m) + "_" + std::to_string(args.n));
    else if (args.kind == "torus")
        header.insert(header.end(), {"genus", "frobenius", "alexander"});
    else if (args.kind == "prop6")
        header.insert(header.end(), {"V_1_1", "trig_part", "correction"});

    std::vector<std::vector<std::string>> rows;
    for (long b = 2; b <= args.max_value; ++b)
        for (long a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1)
                continue;
            std::vector<std::string> row{std::to_string(a), std::to_string(b)};
            if (args.kind == "dedekind") {
                row.push_back(to_display_string(dedekind_sum(a, b)));
            } else if (args.kind == "voronoi") {
                row.push_back(voronoi_sum({a, b, args.m, args.n}).get_str());
            } else if (args.kind == "torus") {
                CoprimePair p(a, b);
                NumericalSemigroup S = p.semigroup();
                row.push_back(std::to_string(S.genus()));
                row.push_back(std::to_string(S.frobenius()));
                row.push_back(to_string(alexander_closed_form(p)));
            } else {
                Rational V(voronoi_sum({a, b, 1, 1}));
                Rational correction = make_rational((a - 1) * (b - 1) * (b - 1), 4);
                row.push_back(to_display_string(V));
                row.push_back(to_display_string(V - correction));
                row.push_back(to_display_string(correction));
            }
            rows.push_back(std::move(row));
        }

    switch (parse_format(args.format)) {
    case Format::json: {
        json arr = json::array();
        for (const auto& row : rows) {
            json obj;
            for (std::size_t i = 0; i < header.size(); ++i)
                obj[header[i]] = row[i];
            arr.push_back(obj);
        }
        out << arr.dump() << '\n';
        break;
    }
    case Format::csv:
        out << join(header) << '\n';
        for (const auto& row : rows)
            out << join(row) << '\n';
        break;
    case Format::text: {
        std::vector<std::size_t> width(header.size());
        for (std::size_t i = 0; i < header.size(); ++i) {
            width[i] = header[i].size();
            for (const auto& row : rows)
                width[i] = std::max(width[i], row[i].size());
        }
        auto print = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i)
                out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << cells[i];
            out << '\n';
        };
        print(header);
        for (const auto& row : rows)
            print(row);
        break;
    }
    }
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical semigroups, Dedekind-type sums and torus-knot Alexander polynomials",
                 "sdlab"};
    app.require_subcommand(1);

    SemigroupArgs sg;
    CLI::App* semigroup = app.add_subcommand("semigroup", "Gaps, Frobenius number, genus, Apery sets");
    semigroup->add_option("--gens", sg.gens, "Generators, comma separated")->delimiter(',');
    semigroup->add_option("--pair", sg.pair, "Coprime pair a,b for <a,b>")->delimiter(',');
    semigroup->add_option("--apery", sg.apery_modulus, "Apery set with respect to this element");
    semigroup->add_option("--quotient", sg.quotient_d, "Also describe S/d");
    semigroup->add_option("--hilbert", sg.hilbert_n, "Hilbert series truncated at degree N");
    semigroup->add_flag("--poly", sg.polys, "Print the gap and semigroup polynomials");
    add_format_option(semigroup, sg.format);

    DedekindArgs dk;
    CLI::App* dedekind = app.add_subcommand("dedekind", "Dedekind sums and related objects for (a, b)");
    dedekind->add_option("a", dk.a)->required();
    dedekind->add_option("b", dk.b)->required();
    dedekind->add_flag("--sum", dk.sum, "s(a,b) by every route (default)");
    dedekind->add_option("--voronoi", dk.voronoi, "V_{m,n}(a,b)")->expected(2);
    dedekind->add_flag("--carlitz", dk.carlitz, "Dedekind-Carlitz polynomial c(q,t;a,b)");
    dedekind->add_flag("--zolotarev", dk.zolotarev, "Zolotarev permutation k -> ak mod b");
    add_format_option(dedekind, dk.format);

    VerifyArgs vf;
    CLI::App* verify = app.add_subcommand("verify", "Run the identity verification sweep");
    verify->add_option("--pairs-max", vf.pairs_max, "Cap every parameter range at N");
    verify->add_option("--seed", vf.seed, "Seed for the random semigroup population");
    verify->add_option("--out", vf.out_path, "Write the report here instead of stdout");
    add_format_option(verify, vf.format, "json or csv");
    verify->add_option("--identity", vf.identities, "Only identities with this id prefix (repeatable)");
    verify->add_option("--semigroups", vf.semigroups, "Size of the random semigroup population");
    verify->add_option("--threads", vf.threads, "Worker threads (default: cores, capped by SDLAB_THREADS)");
    verify->add_flag("--timing", vf.timing, "Record elapsed_ms (reports are then not reproducible)");
    verify->add_option("--tol-relative", vf.tol_relative, "Scaled float tolerance");
    verify->add_option("--tol-prop2", vf.tol_prop2, "Scaled float tolerance for composition sums");
    verify->add_option("--tol-absolute", vf.tol_absolute, "Absolute float tolerance");

    TableArgs tb;
    CLI::App* table = app.add_subcommand("table", "Tabulate values over coprime 1 <= a < b <= max");
    table->add_option("kind", tb.kind, "dedekind | voronoi | torus | prop6")
        ->required()
        ->check(CLI::IsMember({"dedekind", "voronoi", "torus", "prop6"}));
    table->add_option("--max", tb.max_value, "Largest b");
    table->add_option("--m", tb.m, "Exponent m for voronoi");
    table->add_option("--n", tb.n, "Exponent n for voronoi");
    add_format_option(table, tb.format);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (*semigroup)
            return cmd_semigroup(sg, out);
        if (*dedekind)
            return cmd_dedekind(dk, out);
        if (*verify)
            return cmd_verify(vf, out, err);
        return cmd_table(tb, out);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace sdlab
