#include <regramsey/arith.hpp>
#include <regramsey/search.hpp>

#include "../support/dpll.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace regramsey;
using regramsey::testing::dpll;

namespace {
    // Largest min-homogeneous (or homogeneous) subset by trying every subset.
    auto naive_largest(const Coloring & c, Interval d, bool homogeneous, Nat cap = 64) -> Nat
    {
        std::vector<Nat> pts;
        for (Nat x = d.lo; x < d.hi; ++x)
            pts.push_back(x);
        Nat best = 0;
        std::vector<Nat> chosen;
        // grow subsets in lexicographic order, checking the new last element only
        auto rec = [&](auto & self, std::size_t from) -> void {
            best = std::max<Nat>(best, chosen.size());
            if (best >= cap)
                return;
            for (std::size_t i = from; i < pts.size(); ++i) {
                chosen.push_back(pts[i]);
                bool ok = true;
                for (std::size_t a = 0; a + 1 < chosen.size() && ok; ++a) {
                    auto ref = c.color_of(chosen[a], chosen[a + 1]);
                    if (c.color_of(chosen[a], chosen.back()) != ref)
                        ok = false;
                    if (homogeneous && ref != c.color_of(chosen[0], chosen[1]))
                        ok = false;
                }
                if (ok)
                    self(self, i + 1);
                chosen.pop_back();
            }
        };
        rec(rec, 0);
        return best;
    }

    // Every g-regressive coloring of [0, N), no symmetry breaking.
    auto naive_bad_exists(const BoundFn & g, Nat k, Nat N) -> bool
    {
        std::vector<std::pair<Nat, Nat>> cells;
        for (Nat n = 1; n < N; ++n)
            for (Nat m = 0; m < n; ++m)
                cells.emplace_back(m, n);
        BadColoring b;
        b.N = N;
        b.colors.resize(N);
        for (Nat n = 0; n < N; ++n)
            b.colors[n].assign(n, 0);
        auto rec = [&](auto & self, std::size_t at) -> bool {
            if (at == cells.size()) {
                auto t = b.to_table();
                return N == 0 || naive_largest(*t, t->domain(), false, k) < k;
            }
            auto [m, n] = cells[at];
            for (Nat q = 0; q <= std::min<Nat>(g(m), N - m - 2); ++q) {
                b.colors[n][m] = q;
                if (self(self, at + 1))
                    return true;
            }
            return false;
        };
        return rec(rec, 0);
    }


    auto single_thread() -> SearchBudget
    {
        SearchBudget b;
        b.parallelism = 1;
        return b;
    }
}

TEST_CASE("trivial searches")
{
    auto constant = constant_coloring({0, 10}, 3);
    auto out = max_min_homogeneous(*constant, {0, 10}, 10);
    REQUIRE(out.witness);
    CHECK(out.witness->elements == std::vector<Nat>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(out.exhaustive);

    auto hom = max_homogeneous(*constant, {0, 10}, 10);
    REQUIRE(hom.witness);
    CHECK(hom.witness->elements.size() == 10);

    auto random = TableColoring::random({5, 40}, 6, 3);
    auto pair = max_min_homogeneous(*random, {5, 40}, 2);
    REQUIRE(pair.witness);
    CHECK(pair.witness->elements == std::vector<Nat>{5, 6});

    auto none = max_min_homogeneous(*constant, {2, 4}, 3);
    CHECK(! none.witness);
    CHECK(none.exhaustive);

    CHECK_THROWS_AS(max_min_homogeneous(*constant, {0, 11}, 3), std::out_of_range);
    CHECK(parse_search_mode("hom") == SearchMode::homogeneous);
    CHECK_THROWS_AS(parse_search_mode("x"), std::invalid_argument);
}

TEST_CASE("engine, reference and the naive oracle agree")
{
    std::mt19937_64 rng{2024};
    for (int trial = 0; trial < 120; ++trial) {
        Nat size = 4 + rng() % 17;
        Nat colors = 1 + rng() % 4;
        Nat lo = rng() % 50;
        auto t = TableColoring::random({lo, lo + size}, colors, rng());
        Interval d = t->domain();
        auto oracle = naive_largest(*t, d, false);
        auto fast = largest_min_homogeneous(*t, d);
        auto ref = largest_min_homogeneous_reference(*t, d, single_thread());
        REQUIRE(fast.exhaustive);
        REQUIRE(ref.exhaustive);
        REQUIRE(fast.size == oracle);
        REQUIRE(ref.size == oracle);
        REQUIRE(fast.witness);
        CHECK(verify_witness(*t, *fast.witness));
        CHECK(fast.witness->elements.size() == oracle);

        auto hom_oracle = naive_largest(*t, d, true);
        auto hom = largest_homogeneous(*t, d);
        auto hom_ref = largest_homogeneous_reference(*t, d);
        REQUIRE(hom.size == hom_oracle);
        REQUIRE(hom_ref.size == hom_oracle);
        CHECK(is_homogeneous(*t, hom.witness->elements));

        for (Nat target = 1; target <= oracle + 1; ++target) {
            auto o = max_min_homogeneous(*t, d, target);
            REQUIRE(o.exhaustive);
            REQUIRE(o.witness.has_value() == (target <= oracle));
            if (o.witness)
                CHECK(o.witness->elements.size() == target);
        }
    }
}

TEST_CASE("results do not depend on the thread count")
{
    auto t = TableColoring::random({0, 150}, 3, 99);
    auto one = largest_min_homogeneous(*t, {0, 150}, single_thread());
    SearchBudget many;
    many.parallelism = 4;
    auto four = largest_min_homogeneous(*t, {0, 150}, many);
    CHECK(one.size == four.size);
    CHECK(one.witness->elements == four.witness->elements);
}

TEST_CASE("budgets never produce false certificates")
{
    auto t = TableColoring::random({0, 300}, 3, 5);
    SearchBudget tiny;
    tiny.max_nodes = 10;
    auto out = max_min_homogeneous(*t, {0, 300}, 50, tiny);
    CHECK(! out.exhaustive);
    CHECK(! out.witness);

    std::stop_source stop;
    stop.request_stop();
    SearchBudget stopped;
    stopped.stop = stop.get_token();
    auto s = largest_min_homogeneous(*t, {0, 300}, stopped);
    CHECK(! s.exhaustive);
    if (s.witness)
        CHECK(verify_witness(*t, *s.witness));
}

TEST_CASE("no min-homogeneous k+1 set for c_g at toy scale")
{
    for (Nat k : {2, 3}) {
        auto c = cg_coloring(BoundFn::identity(), k);
        auto d = c->domain();
        auto out = max_min_homogeneous(*c, d, k + 1);
        CHECK(out.exhaustive);
        CHECK(! out.witness);
        auto best = largest_min_homogeneous_reference(*c, d);
        CHECK(best.size <= k);
    }
}

TEST_CASE("zero padding adds at most the padded points plus one")
{
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        auto inner = TableColoring::random({6, 26}, 3, seed);
        auto before = largest_min_homogeneous(*inner, inner->domain()).size;
        for (Nat lo : {3, 5}) {
            auto padded = zero_padded_coloring(inner, lo);
            auto after = largest_min_homogeneous(*padded, padded->domain()).size;
            CHECK(after >= before);
            CHECK(after <= before + (6 - lo) + 1);
            CHECK(after == naive_largest(*padded, padded->domain(), false));
        }
    }
}

TEST_CASE("greedy min-homogeneous chains")
{
    auto constant = constant_coloring({0, 30}, 0);
    CHECK(greedy_min_hom(*constant, 30, 1).elements.size() == 30);
    CHECK(greedy_homogeneous(*constant, 30, 1).elements.size() == 30);

    for (Nat C : {2, 3})
        for (Nat k : {2, 3, 4}) {
            Nat N = 1;
            for (Nat i = 0; i < k; ++i)
                N *= C;
            CHECK(greedy_chain_guarantee(N, C) >= k);
            for (std::uint64_t seed = 0; seed < 100; ++seed) {
                auto t = TableColoring::random({0, N}, C, seed * 31 + C + k);
                auto w = greedy_min_hom(*t, N, C);
                REQUIRE(w.elements.size() >= k);
                REQUIRE(verify_witness(*t, w));
            }
        }

    auto three = TableColoring::random({0, 40}, 3, 1);
    CHECK_THROWS_AS(greedy_min_hom(*three, 40, 2), std::invalid_argument);
    CHECK_THROWS_AS(greedy_min_hom(*three, 41, 3), std::out_of_range);
}

TEST_CASE("greedy homogeneous sets")
{
    for (Nat k : {2, 3}) {
        Nat N = 1;
        for (Nat i = 0; i < 2 * k; ++i)
            N *= 2;
        CHECK(greedy_homogeneous_guarantee(N, 2) >= k);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            auto t = TableColoring::random({0, N}, 2, seed + 1000 * k);
            auto w = greedy_homogeneous(*t, N, 2);
            REQUIRE(w.elements.size() >= k);
            REQUIRE(is_homogeneous(*t, w.elements));
        }
    }
    // an adversarial coloring: color by the parity of the minimum
    std::vector<std::uint32_t> packed;
    for (Nat m = 0; m < 64; ++m)
        for (Nat n = m + 1; n < 64; ++n)
            packed.push_back(m % 2);
    TableColoring parity{{0, 64}, packed};
    auto w = greedy_homogeneous(parity, 64, 2);
    CHECK(w.elements.size() >= 3);
    CHECK(is_homogeneous(parity, w.elements));
}

TEST_CASE("greedy guarantees")
{
    CHECK(greedy_chain_guarantee(0, 2) == 0);
    CHECK(greedy_chain_guarantee(1, 2) == 1);
    CHECK(greedy_chain_guarantee(8, 2) == 4);
    CHECK(greedy_chain_guarantee(7, 2) == 3);
    CHECK(greedy_chain_guarantee(81, 3) == 5);
    CHECK(greedy_chain_guarantee(30, 1) == 30);
    CHECK_THROWS_AS(greedy_chain_guarantee(5, 0), std::invalid_argument);
    CHECK(greedy_homogeneous_guarantee(64, 2) == 4);
    CHECK(greedy_homogeneous_guarantee(16, 2) == 3);
    CHECK(greedy_homogeneous_guarantee(1, 2) == 1);
}

TEST_CASE("upper bound N")
{
    // beta = 1 below 100 and 2 from there, g = isqrt <= iroot(n, beta(n))
    auto g = BoundFn::root(2);
    MonotoneFn beta = [](Nat n) { return n < 100 ? Nat{1} : Nat{2}; };
    auto report = upper_bound_N(g, beta, 2, 20'000);
    REQUIRE(report.N);
    CHECK(*report.N == 100);
    CHECK(report.colors == 11);
    CHECK(report.textbook_condition);
    CHECK(report.greedy_guarantee);
    CHECK(! report.precondition_violation);

    // a schedule root drops at interval ends, which the monotonicity sample sees
    Schedule s{{0, 43, 10'000}, {11, 6}};
    MonotoneFn sbeta = [&](Nat n) { return n < s.end() ? beta_of(s, n) : Nat{3}; };
    auto stitched = upper_bound_N(BoundFn::schedule_root(s), sbeta, 2, 9'999, 9'999);
    REQUIRE(stitched.N);
    CHECK(*stitched.N == 43);
    CHECK(stitched.precondition_violation == Nat{43});

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto t = TableColoring::random({0, 100}, report.colors, seed, &g);
        CHECK(greedy_min_hom(*t, 100, report.colors).elements.size() >= 2);
    }

    auto bad = upper_bound_N(BoundFn::identity(), beta, 2, 20'000);
    CHECK(bad.precondition_violation);

    MonotoneFn never = [](Nat) { return Nat{1}; };
    CHECK(! upper_bound_N(BoundFn::constant(0), never, 2, 500).N);

    MonotoneFn always = [](Nat) { return Nat{2}; };
    auto zero = upper_bound_N(BoundFn::constant(0), always, 2, 500);
    CHECK(zero.N == Nat{0});
}

TEST_CASE("exact nu values")
{
    for (Nat k = 2; k <= 6; ++k) {
        auto r = nu_exact(BoundFn::constant(0), k, 64);
        REQUIRE(r.status == NuStatus::found);
        CHECK(*r.value == k);
    }
    for (auto g : {"const:1", "id", "const:3", "root:2"})
        CHECK(*nu_exact(BoundFn::parse(g), 2, 64).value == 2);

    auto one = nu_exact(BoundFn::constant(1), 3, 64);
    CHECK(one.status == NuStatus::found);
    CHECK(*one.value == 4);
    CHECK(one.progress.proven_bad_up_to == 3);
    REQUIRE(one.progress.bad_coloring);
    CHECK(! has_min_homogeneous_set(*one.progress.bad_coloring, 3));

    CHECK(*nu_exact(BoundFn::identity(), 3, 64).value == 3);
    CHECK(*nu_exact(BoundFn::identity(), 4, 64).value == 5);
    CHECK(*nu_exact(BoundFn::constant(2), 3, 64).value == 5);
    // two colors: the greedy chain halves, so nu = 2^(k-1)
    CHECK(*nu_exact(BoundFn::constant(1), 4, 64).value == 8);

    // weakly increasing in k
    Nat previous = 0;
    for (Nat k = 2; k <= 4; ++k) {
        auto r = nu_exact(BoundFn::constant(1), k, 64);
        REQUIRE(r.status == NuStatus::found);
        CHECK(*r.value >= previous);
        previous = *r.value;
    }

    CHECK_THROWS_AS(nu_exact(BoundFn::constant(1), 1, 10), std::invalid_argument);
}

TEST_CASE("backtracker agrees with brute force")
{
    for (auto name : {"const:1", "id", "const:2", "root:2"})
        for (Nat k = 3; k <= 4; ++k)
            for (Nat N = k; N <= 6; ++N) {
                auto g = BoundFn::parse(name);
                double colorings = 1;
                for (Nat m = 0; m + 1 < N; ++m)
                    for (Nat n = m + 1; n < N; ++n)
                        colorings *= static_cast<double>(std::min<Nat>(g(m), N - m - 2) + 1);
                if (colorings > 50'000)
                    continue;
                auto fast = bad_coloring_exists(g, k, N);
                REQUIRE(fast);
                CAPTURE(name);
                CAPTURE(k);
                CAPTURE(N);
                CHECK(fast->has_value() == naive_bad_exists(g, k, N));
            }
}

TEST_CASE("nu budget and checkpoints")
{
    SearchBudget tiny;
    tiny.max_nodes = 3;
    auto cut = nu_exact(BoundFn::constant(1), 5, 64, tiny);
    CHECK(cut.status == NuStatus::budget_exhausted);
    CHECK(! cut.value);

    std::vector<Nat> seen;
    auto full = nu_exact(BoundFn::constant(1), 4, 64, {}, std::nullopt,
        [&](const NuCheckpoint & c) { seen.push_back(c.proven_bad_up_to); });
    REQUIRE(full.status == NuStatus::found);
    CHECK(! seen.empty());
    CHECK(seen.back() + 1 == *full.value);

    auto json = full.progress.to_json();
    auto back = NuCheckpoint::from_json(json);
    CHECK(back.proven_bad_up_to == full.progress.proven_bad_up_to);
    CHECK(back.bad_coloring->colors == full.progress.bad_coloring->colors);
    auto resumed = nu_exact(BoundFn::constant(1), 4, 64, {}, back);
    CHECK(resumed.value == full.value);
    CHECK(resumed.nodes_explored <= full.nodes_explored);

    NuCheckpoint wrong = back;
    wrong.k = 7;
    CHECK_THROWS_AS(nu_exact(BoundFn::constant(1), 4, 64, {}, wrong), std::invalid_argument);

    auto below = nu_exact(BoundFn::constant(1), 5, 6);
    CHECK(below.status == NuStatus::not_found_below_limit);
    CHECK(below.progress.proven_bad_up_to == 6);
}

TEST_CASE("CNF export")
{
    auto g0 = BoundFn::constant(0);
    auto g1 = BoundFn::constant(1);
    for (auto enc : {CnfEncoding::direct, CnfEncoding::equality}) {
        CnfOptions opt;
        opt.encoding = enc;
        CHECK(! dpll(export_cnf(g0, 2, 2, opt)));

        auto sat = export_cnf(g1, 3, 3, opt);
        auto model = dpll(sat);
        REQUIRE(model);
        auto decoded = sat.decode(*model);
        CHECK(! has_min_homogeneous_set(decoded, 3));

        auto bad = nu_exact(g1, 3, 64).progress.bad_coloring;
        REQUIRE(bad);
        CHECK(satisfies(sat, sat.encode(*bad)));

        CHECK(! dpll(export_cnf(g1, 3, 4, opt)));

        auto text = sat.to_dimacs();
        CHECK(text.find("p cnf " + std::to_string(sat.variables) + " " + std::to_string(sat.clauses.size())) !=
            std::string::npos);
        CHECK(text.find("c pair 0 1") != std::string::npos);
    }
}

TEST_CASE("CNF agrees with the backtracker")
{
    for (auto name : {"const:1", "id", "const:2", "root:2"})
        for (Nat k = 3; k <= 4; ++k)
            for (Nat N = k; N <= 7; ++N)
                for (auto enc : {CnfEncoding::direct, CnfEncoding::equality}) {
                    auto g = BoundFn::parse(name);
                    auto exists = bad_coloring_exists(g, k, N);
                    REQUIRE(exists);
                    CnfOptions opt;
                    opt.encoding = enc;
                    auto cnf = export_cnf(g, k, N, opt);
                    auto model = dpll(cnf);
                    CAPTURE(name);
                    CAPTURE(k);
                    CAPTURE(N);
                    CHECK(model.has_value() == exists->has_value());
                    CHECK(estimate_cnf_clauses(g, k, N, enc) == cnf.clauses.size());
                    if (*exists)
                        CHECK(satisfies(cnf, cnf.encode(**exists)));
                }
}

TEST_CASE("CNF size guard")
{
    CHECK_THROWS_AS(export_cnf(BoundFn::constant(1), 3, 65), std::length_error);
    CnfOptions small;
    small.max_clauses = 100;
    CHECK_THROWS_AS(export_cnf(BoundFn::identity(), 5, 30, small), std::length_error);
    CHECK(estimate_cnf_clauses(BoundFn::identity(), 6, 64, CnfEncoding::direct) > 50'000'000);
}

TEST_CASE("witness JSON")
{
    auto c = base10_coloring();
    Witness w{{43, 1044, 1145, 1156, 1157}, SearchMode::min_homogeneous, c->describe()};
    CHECK(verify_witness(*c, w));
    auto back = witness_from_json(witness_to_json(w));
    CHECK(back.elements == w.elements);
    CHECK(back.mode == w.mode);
    nlohmann::json broken = witness_to_json(w);
    broken["elements"] = {5, 3};
    CHECK_THROWS_AS(witness_from_json(broken), std::invalid_argument);

    SearchOutcome o;
    o.target = 4;
    o.exhaustive = true;
    auto j = outcome_to_json(o);
    CHECK(j["result"] == "none_up_to");
    CHECK(j.contains("nodes_explored"));
    CHECK(j.contains("wall_time_ms"));
}
