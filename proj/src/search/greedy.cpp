#include <regramsey/arith.hpp>
#include <regramsey/search.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace regramsey {

namespace {
    struct Chain
    {
        std::vector<Nat> elements;
        std::vector<Nat> colors;   // colors[j] = c(elements[j], everything after it)
    };

    auto pre_homogeneous_chain(const Coloring & coloring, Nat N, Nat C) -> Chain
    {
        auto d = coloring.domain();
        if (N > d.size())
            throw std::out_of_range("greedy: N = " + std::to_string(N) + " exceeds the coloring's domain");
        std::vector<Nat> cand(N);
        for (Nat i = 0; i < N; ++i)
            cand[i] = d.lo + i;

        Chain chain;
        while (! cand.empty()) {
            Nat x = cand.front();
            chain.elements.push_back(x);
            std::map<Nat, std::vector<Nat>> classes;
            for (std::size_t i = 1; i < cand.size(); ++i)
                classes[coloring.color_unchecked(x, cand[i])].push_back(cand[i]);
            if (classes.empty())
                break;
            if (classes.size() > C)
                throw std::invalid_argument("greedy: element " + std::to_string(x) + " sees " +
                    std::to_string(classes.size()) + " colors, more than C = " + std::to_string(C));
            // map order makes the first maximum the smallest color
            auto best = classes.begin();
            for (auto it = classes.begin(); it != classes.end(); ++it)
                if (it->second.size() > best->second.size())
                    best = it;
            chain.colors.push_back(best->first);
            cand = std::move(best->second);
        }
        return chain;
    }
}

auto greedy_min_hom(const Coloring & coloring, Nat N, Nat C) -> Witness
{
    auto chain = pre_homogeneous_chain(coloring, N, C);
    Witness w{std::move(chain.elements), SearchMode::min_homogeneous, coloring.describe()};
    if (! verify_witness(coloring, w))
        throw std::logic_error("greedy chain is not min-homogeneous");
    return w;
}

auto greedy_homogeneous(const Coloring & coloring, Nat N, Nat C) -> Witness
{
    auto chain = pre_homogeneous_chain(coloring, N, C);
    Witness w{{}, SearchMode::homogeneous, coloring.describe()};
    if (chain.elements.empty())
        return w;

    std::map<Nat, Nat> frequency;
    for (auto c : chain.colors)
        ++frequency[c];
    std::optional<Nat> color;
    Nat best = 0;
    for (auto [c, count] : frequency)
        if (count > best) {
            best = count;
            color = c;
        }
    for (std::size_t j = 0; j < chain.colors.size(); ++j)
        if (chain.colors[j] == color)
            w.elements.push_back(chain.elements[j]);
    w.elements.push_back(chain.elements.back());
    if (! verify_witness(coloring, w))
        throw std::logic_error("greedy homogeneous set is not homogeneous");
    return w;
}

auto greedy_chain_guarantee(Nat N, Nat C) -> Nat
{
    if (C == 0 && N > 1)
        throw std::invalid_argument("no coloring of two or more elements uses zero colors");
    Nat steps = 0;
    for (Nat r = N; r > 0; r = C ? (r - 1 + C - 1) / C : 0)
        ++steps;
    return steps;
}

auto greedy_homogeneous_guarantee(Nat N, Nat C) -> Nat
{
    auto length = greedy_chain_guarantee(N, C);
    if (length == 0)
        return 0;
    return C ? (length - 1 + C - 1) / C + 1 : 1;
}

auto upper_bound_N(const BoundFn & g, const MonotoneFn & beta, Nat k, Nat limit, Nat samples) -> UpperBoundReport
{
    UpperBoundReport report;
    report.N = beta_inverse(beta, k, limit);

    Nat top = report.N ? std::min(limit, *report.N) : limit;
    Nat count = std::max<Nat>(samples, 1);
    std::optional<Nat> previous_g, previous_beta;
    for (Nat s = 0; s <= count; ++s) {
        Nat n = count >= top ? std::min(s, top) : static_cast<Nat>((static_cast<unsigned __int128>(top) * s) / count);
        Nat b = beta(n);
        Nat gn = g(n);
        bool bad = (b > 0 && gn > iroot(n, static_cast<unsigned>(std::min<Nat>(b, 64)))) ||
            (previous_g && gn < *previous_g) || (previous_beta && b < *previous_beta);
        if (bad) {
            report.precondition_violation = n;
            break;
        }
        previous_g = gn;
        previous_beta = b;
        if (count >= top && s >= top)
            break;
    }

    if (! report.N)
        return report;
    Nat N = *report.N;
    Nat gN = g(N);
    report.colors = gN == std::numeric_limits<Nat>::max() ? gN : gN + 1;
    auto power = checked_pow(gN, static_cast<unsigned>(std::min<Nat>(k, 64)));
    report.textbook_condition = k <= 64 ? (power && *power <= N) : gN <= 1 && gN <= N;
    report.greedy_guarantee = greedy_chain_guarantee(N, report.colors) >= k;
    return report;
}

} // namespace regramsey
