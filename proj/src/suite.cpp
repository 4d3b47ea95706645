#include "sdlab/suite.hpp"

#include "sdlab/error.hpp"
#include "sdlab/torus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

namespace sdlab {

SuiteRanges SuiteRanges::capped(long limit) const {
    SuiteRanges r = *this;
    for (long* bound : {&r.torus_max, &r.identity_max, &r.prop2_max, &r.vm1_max, &r.gap_values_max,
                        &r.dedekind_max, &r.reciprocity_max, &r.prop6_max, &r.gens_max, &r.member_max})
        *bound = std::min(*bound, limit);
    return r;
}

SuiteRanges SuiteRanges::none() {
    SuiteRanges r = SuiteRanges{}.capped(0);
    r.semigroups = 0;
    r.quotient_d_max = 0;
    return r;
}

namespace {

// Uniform on [lo, hi] by rejection; std::uniform_int_distribution is not
// reproducible across standard libraries.
long draw(std::mt19937_64& rng, long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
}

} // namespace

std::vector<NumericalSemigroup> random_semigroups(int count, long gens_max, std::uint64_t seed) {
    std::vector<NumericalSemigroup> out;
    if (gens_max < 3)
        return out;
    std::mt19937_64 rng(seed);
    while (static_cast<int>(out.size()) < count) {
        long n = draw(rng, 2, 4);
        std::vector<long> gens;
        long g = 0;
        for (long i = 0; i < n; ++i) {
            gens.push_back(draw(rng, 2, gens_max));
            g = std::gcd(g, gens.back());
        }
        if (g == 1)
            out.push_back(NumericalSemigroup::from_generators(std::move(gens)));
    }
    return out;
}

bool matches_identity(const std::string& id, const std::vector<std::string>& filters) {
    if (filters.empty())
        return true;
    for (const auto& f : filters)
        if (id == f || (id.size() > f.size() && id.compare(0, f.size(), f) == 0 && id[f.size()] == '.'))
            return true;
    return false;
}

namespace {

using Task = std::function<std::vector<IdentityReport>()>;

class TaskList {
  public:
    explicit TaskList(const std::vector<std::string>& filters) : filters_(filters) {}

    // id is the identity the task produces; filtered out tasks are never built.
    void add(const std::string& id, Task task) {
        if (matches_identity(id, filters_))
            tasks_.push_back(std::move(task));
    }

    template <class F>
    void add_single(const std::string& id, F f) {
        add(id, [f]() { return std::vector<IdentityReport>{f()}; });
    }

    std::vector<Task>& tasks() { return tasks_; }

  private:
    const std::vector<std::string>& filters_;
    std::vector<Task> tasks_;
};

std::vector<NumericalSemigroup> torus_semigroups(long max_value) {
    std::vector<NumericalSemigroup> out;
    for (long b = 2; b <= max_value; ++b)
        for (long a = 1; a < b; ++a)
            if (std::gcd(a, b) == 1)
                out.push_back(CoprimePair(a, b).semigroup());
    return out;
}

void build_tasks(const SuiteOptions& opt, TaskList& list) {
    const SuiteRanges& r = opt.ranges;
    const Tolerances tol = opt.tolerances;

    for (const CoprimePair& p : coprime_pairs(r.torus_max)) {
        const long a = p.a(), b = p.b();
        list.add_single("eq1.hilbert", [=] { return check_eq1(a, b, a * b + b); });
        list.add_single("eq1.mordell", [=] { return check_mordell(a, b); });
        list.add_single("eq1.alexander", [=] { return check_alexander_chain(a, b); });
        for (long k = 0; k < b; ++k)
            for (Mode mode : {Mode::exact, Mode::floating})
                list.add_single("prop1.ab", [=] { return check_prop1_ab(a, b, k, mode, tol); });
    }

    const std::vector<NumericalSemigroup> population =
        random_semigroups(r.semigroups, r.gens_max, opt.seed);
    for (const NumericalSemigroup& S : population)
        for (long s = 1; s <= r.member_max; ++s) {
            if (!S.contains(s))
                continue;
            list.add_single("eq6", [=] { return check_eq6(S, s); });
            for (long k = 0; k < s; ++k)
                for (Mode mode : {Mode::exact, Mode::floating})
                    list.add_single("prop1", [=] { return check_prop1(S, s, k, mode, tol); });
        }

    for (const CoprimePair& p : coprime_pairs(r.prop2_max)) {
        const long a = p.a(), b = p.b();
        for (unsigned m = 1; m <= r.prop2_m_max; ++m)
            for (unsigned n = 1; n <= r.prop2_n_max; ++n)
                for (Prop2Form form : {Prop2Form::mirimanoff, Prop2Form::apostol})
                    list.add_single(form == Prop2Form::mirimanoff ? "prop2.mirimanoff" : "prop2.apostol",
                                    [=] { return check_prop2(a, b, m, n, form, tol); });
    }
    for (const CoprimePair& p : coprime_pairs(r.vm1_max)) {
        const long a = p.a(), b = p.b();
        for (unsigned m = 1; m <= r.prop2_m_max; ++m)
            for (Prop2Form form : {Prop2Form::mirimanoff, Prop2Form::apostol})
                list.add_single(form == Prop2Form::mirimanoff ? "prop2.vm1.mirimanoff"
                                                              : "prop2.vm1.apostol",
                                [=] { return check_prop2_vm1(a, b, m, form, tol); });
    }
    for (long b = 1; b <= r.prop2_max; ++b)
        for (unsigned m = 0; m <= r.prop2_m_max; ++m) {
            for (long j = 1; j < b; ++j)
                list.add_single("mirimanoff.apostol",
                                [=] { return check_mirimanoff_apostol(b, j, m, tol); });
            for (auto [num, den] : {std::pair{-1L, 1L}, {2L, 1L}, {1L, 2L}, {-2L, 3L}})
                list.add_single("mirimanoff.apostol",
                                [=] { return check_mirimanoff_apostol_exact(num, den, m, b); });
        }

    for (const CoprimePair& p : coprime_pairs(r.identity_max)) {
        const long a = p.a(), b = p.b();
        list.add_single("eq1.restricted", [=] { return check_restricted_sum(a, b); });
        list.add_single("cor510", [=] { return check_cor510(a, b); });
        list.add_single("sawtooth.poly", [=] { return check_sawtooth_poly(a, b); });
        for (Mode mode : {Mode::exact, Mode::floating}) {
            list.add_single("prop3", [=] { return check_prop3(a, b, mode, tol); });
            list.add_single("prop5", [=] { return check_prop5(a, b, mode, tol); });
        }
        if (matches_identity("prop4.R11", opt.identities) || matches_identity("prop4.T11", opt.identities))
            list.add("prop4", [=] {
                auto [R, T] = check_prop4(a, b);
                std::vector<IdentityReport> out;
                if (matches_identity(R.id, opt.identities))
                    out.push_back(R);
                if (matches_identity(T.id, opt.identities))
                    out.push_back(T);
                return out;
            });
    }

    for (const CoprimePair& p : coprime_pairs(r.gap_values_max))
        for (long k = 0; k < p.b(); ++k) {
            const long a = p.a(), b = p.b();
            list.add_single("gap.values", [=] { return check_gap_values(a, b, k, tol); });
        }
    for (const CoprimePair& p : coprime_pairs(r.dedekind_max)) {
        const long a = p.a(), b = p.b();
        for (Mode mode : {Mode::exact, Mode::floating})
            list.add_single("dedekind.routes", [=] { return check_dedekind_routes(a, b, mode, tol); });
    }
    for (const CoprimePair& p : coprime_pairs(r.reciprocity_max)) {
        const long a = p.a(), b = p.b();
        list.add_single("dedekind.reciprocity", [=] { return check_reciprocity(a, b); });
    }
    for (const CoprimePair& p : coprime_pairs(r.prop6_max)) {
        const long a = p.a(), b = p.b();
        for (Mode mode : {Mode::exact, Mode::floating})
            list.add_single("prop6.eq7", [=] { return check_prop6(a, b, mode, tol); });
    }

    std::vector<NumericalSemigroup> quotient_population = population;
    for (NumericalSemigroup& S : torus_semigroups(r.identity_max))
        quotient_population.push_back(std::move(S));
    for (const NumericalSemigroup& S : quotient_population)
        for (long d = 1; d <= r.quotient_d_max; ++d) {
            if (!quotient_members(S, d).empty())
                list.add_single("prop7", [=] { return check_prop7(S, d); });
            list.add_single("sec6.trig", [=] { return check_quotient_trig(S, d, tol); });
        }
}

} // namespace

std::vector<IdentityReport> run_suite(const SuiteOptions& options) {
    TaskList list(options.identities);
    build_tasks(options, list);
    std::vector<Task>& tasks = list.tasks();

    std::vector<std::vector<IdentityReport>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                auto start = std::chrono::steady_clock::now();
                results[i] = tasks[i]();
                double ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
                for (auto& rep : results[i])
                    rep.elapsed_ms = options.timing ? ms : 0.0;
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };

    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<IdentityReport> out;
    for (auto& batch : results)
        for (auto& rep : batch)
            out.push_back(std::move(rep));
    std::stable_sort(out.begin(), out.end(), canonical_less);
    return out;
}

} // namespace sdlab
