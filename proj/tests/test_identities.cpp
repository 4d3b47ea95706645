#include "oracles.hpp"

#include "sdlab/error.hpp"
#include "sdlab/identities.hpp"
#include "sdlab/roots.hpp"
#include "sdlab/semigroup.hpp"
#include "sdlab/suite.hpp"
#include "sdlab/torus.hpp"

#include <doctest.h>

#include <numeric>

using namespace sdlab;

namespace {

NumericalSemigroup gen(std::vector<long> g) { return NumericalSemigroup::from_generators(std::move(g)); }

bool passes(const IdentityReport& r) { return r.verdict == Verdict::pass; }

} // namespace

TEST_CASE("Hilbert series and Alexander polynomial chain") {
    CHECK(passes(check_eq1(2, 3, 12)));
    CHECK(passes(check_eq1(1, 5, 10)));
    CHECK(passes(check_eq1(3, 5, 30)));
    CHECK_THROWS_AS(check_eq1(3, 5, 10), Error);
    for (long b = 2; b <= 12; ++b)
        for (long a = 1; a < b; ++a)
            if (std::gcd(a, b) == 1) {
                CHECK(passes(check_mordell(a, b)));
                CHECK(passes(check_restricted_sum(a, b)));
                CHECK(passes(check_alexander_chain(a, b)));
            }
}

TEST_CASE("Apery column identities") {
    for (Mode mode : {Mode::exact, Mode::floating}) {
        CHECK(passes(check_prop1(gen({3, 5}), 5, 2, mode)));
        CHECK(passes(check_prop1(gen({1}), 1, 0, mode)));
        CHECK(passes(check_prop1(gen({4, 7, 9}), 4, 1, mode)));
        CHECK(passes(check_prop1_ab(3, 5, 4, mode)));
        CHECK(passes(check_prop1_ab(3, 5, 0, mode)));
        CHECK(passes(check_prop1_ab(2, 3, 2, mode)));
    }
    CHECK_THROWS_AS(check_prop1(gen({3, 5}), 5, 5, Mode::exact), Error);
    CHECK_THROWS_AS(check_prop1(gen({3, 5}), 4, 0, Mode::exact), Error);

    // floor(a_k / s) counts the gaps congruent to k mod s.
    NumericalSemigroup S = gen({5, 8, 11});
    std::vector<long> g = oracle::gaps(S.generators());
    for (long s : {5L, 8L, 10L, 13L}) {
        std::vector<long> ap = oracle::apery(S.generators(), s);
        for (long k = 0; k < s; ++k) {
            long count = std::count_if(g.begin(), g.end(), [&](long x) { return x % s == k; });
            CHECK(ap[k] / s == count);
        }
        CHECK(passes(check_eq6(S, s)));
    }
}

TEST_CASE("composition sums") {
    for (Prop2Form form : {Prop2Form::mirimanoff, Prop2Form::apostol}) {
        CHECK(passes(check_prop2(3, 5, 2, 2, form)));
        CHECK(passes(check_prop2(1, 4, 1, 3, form)));
        CHECK(passes(check_prop2_vm1(7, 11, 2, form)));
    }
    CHECK_THROWS_AS(check_prop2(3, 13, 1, 1, Prop2Form::mirimanoff), Error);
    CHECK_THROWS_AS(check_prop2(3, 5, 1, 4, Prop2Form::mirimanoff), Error);
    CHECK(passes(check_mirimanoff_apostol(5, 1, 1)));
    CHECK(passes(check_mirimanoff_apostol_exact(-1, 1, 2, 5)));
}

TEST_CASE("Carlitz-type identities") {
    for (auto [a, b] : {std::pair{3L, 5L}, {2L, 3L}, {1L, 6L}, {7L, 12L}}) {
        CHECK(passes(check_prop3(a, b, Mode::exact)));
        CHECK(passes(check_prop3(a, b, Mode::floating)));
        CHECK(passes(check_prop4(a, b).first));
        CHECK(passes(check_cor510(a, b)));
        CHECK(passes(check_sawtooth_poly(a, b)));
        CHECK(passes(check_prop5(a, b, Mode::exact)));
        CHECK(passes(check_prop5(a, b, Mode::floating)));
    }
}

TEST_CASE("T-form check records both values") {
    IdentityReport T = check_prop4(3, 5).second;
    CHECK(T.id == "prop4.T11");
    CHECK(T.verdict != Verdict::fail);
    CHECK(T.values.count("definition_at_q2_t3") == 1);
    CHECK(T.values.count("display_core_at_q2_t3") == 1);
    CHECK(T.values.count("matching_bindings") == 1);
}

TEST_CASE("gap values at roots of unity") {
    // C(1) is the genus (a-1)(b-1)/2.
    for (long b = 2; b <= 15; ++b)
        for (long a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1)
                continue;
            std::vector<long> g = oracle::gaps({a, b});
            CHECK(static_cast<long>(g.size()) == (a - 1) * (b - 1) / 2);
            for (long k = 0; k < b; ++k) {
                CHECK(passes(check_gap_values(a, b, k)));
                CxVal direct = oracle::gap_eval(g, root_of_unity(b, k));
                CHECK(std::abs(direct - root_eval(gap_poly(CoprimePair(a, b).semigroup()), b, k)) < 1e-9);
            }
        }
}

TEST_CASE("Dedekind checkers") {
    for (Mode mode : {Mode::exact, Mode::floating}) {
        CHECK(passes(check_dedekind_routes(3, 5, mode)));
        CHECK(passes(check_prop6(3, 5, mode)));
        CHECK(passes(check_prop6(2, 3, mode)));
        CHECK(passes(check_prop6(1, 9, mode)));
    }
    CHECK(passes(check_reciprocity(5, 12)));
    IdentityReport r = check_prop6(3, 5, Mode::exact);
    CHECK(r.id == "prop6.eq7");
}

TEST_CASE("quotient genus formulas") {
    CHECK(passes(check_prop7(gen({3, 5}), 2)));
    CHECK(passes(check_prop7(gen({4, 7, 9}), 3)));
    CHECK(passes(check_quotient_trig(gen({3, 5}), 2)));
    CHECK(passes(check_quotient_trig(gen({4, 7, 9}), 3)));
    std::vector<long> members = quotient_members(gen({3, 5}), 2);
    CHECK(std::find(members.begin(), members.end(), 3) != members.end());
    long brute = static_cast<long>(oracle::quotient_gaps({4, 7, 9}, 3).size());
    CHECK(genus_quotient_trig(gen({4, 7, 9}), 3) == brute);
}

TEST_CASE("suite") {
    SuiteOptions none;
    none.ranges = SuiteRanges::none();
    CHECK(run_suite(none).empty());

    SuiteOptions small;
    small.ranges = SuiteRanges{}.capped(8);
    std::vector<IdentityReport> one = run_suite(small);
    small.threads = 3;
    std::vector<IdentityReport> three = run_suite(small);
    CHECK(reports_to_json(one) == reports_to_json(three));
    CHECK(count_verdicts(one).fail == 0);
    CHECK(std::is_sorted(one.begin(), one.end(), canonical_less));
    for (const IdentityReport& r : one)
        CHECK(r.elapsed_ms == 0);

    SuiteOptions filtered = small;
    filtered.identities = {"prop4"};
    for (const IdentityReport& r : run_suite(filtered))
        CHECK(r.id.rfind("prop4.", 0) == 0);

    CHECK(matches_identity("prop2.vm1.apostol", {"prop2"}));
    CHECK(matches_identity("prop2.vm1.apostol", {"prop2.vm1"}));
    CHECK_FALSE(matches_identity("prop2.vm1.apostol", {"prop2.vm"}));
    CHECK(matches_identity("eq6", {}));
}

TEST_CASE("report serialization") {
    IdentityReport r;
    r.id = "x";
    r.params = {{"b", 5}, {"a", 3}};
    r.mode = Mode::floating;
    r.residual = 1.5e-10;
    r.verdict = Verdict::expected_discrepancy;
    std::string json = reports_to_json({r});
    CHECK(json.find("\"mode\":\"float\"") != std::string::npos);
    CHECK(json.find("\"verdict\":\"expected-discrepancy\"") != std::string::npos);
    CHECK(json.find("\"params\":{\"a\":3,\"b\":5}") != std::string::npos);
    std::string csv = reports_to_csv({r});
    CHECK(csv.rfind("id,params,mode,residual,verdict,elapsed_ms", 0) == 0);
    CHECK(csv.find("x,a=3;b=5,float,1.5e-10,expected-discrepancy,0") != std::string::npos);
    CHECK(format_float(0.1) == "0.1");
}
