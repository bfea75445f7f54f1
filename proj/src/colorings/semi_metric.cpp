#include <regramsey/arith.hpp>
#include <regramsey/colorings.hpp>

#include <algorithm>
#include <stdexcept>

namespace regramsey {

SemiMetric::SemiMetric(HierarchySpec spec, Nat mu, Nat end) :
    _spec(std::move(spec)), _mu(mu), _end(end)
{
    if (end < mu)
        throw std::invalid_argument("semi-metric working end lies below mu");

    // Level i+1 advances from an orbit point x by step(x) points of the level
    // i orbit, so every orbit is a subsequence of the one below. Level 1 is
    // the run mu, mu+1, ..., end and is never stored.
    auto level_one_size = end - mu + 1;
    auto point = [&](const std::vector<Nat> * below, Nat index) { return below ? (*below)[index] : mu + index; };

    const std::vector<Nat> * below = nullptr;
    Nat below_size = level_one_size;
    while (true) {
        std::vector<Nat> next{mu};
        Nat index = 0;
        while (true) {
            Nat x = point(below, index);
            Nat step = _spec.step(x);
            if (step == 0)
                throw std::domain_error("orbit of level " + std::to_string(_orbits.size() + 2) + " stalls at " +
                    std::to_string(x) + " (zero step) inside the working interval");
            if (step >= below_size - index)
                break;
            index += step;
            next.push_back(point(below, index));
        }
        bool empty_above_mu = next.size() == 1;
        _orbits.push_back(std::move(next));
        if (empty_above_mu)
            break;
        below = &_orbits.back();
        below_size = below->size();
    }
    // the last stored level contains only mu; it is the first level with d = 0 everywhere
    _orbits.pop_back();
}

auto SemiMetric::orbit(unsigned i) const -> const std::vector<Nat> &
{
    if (i < 2 || i - 2 >= _orbits.size())
        throw std::out_of_range("no cached orbit for level " + std::to_string(i));
    return _orbits[i - 2];
}

auto SemiMetric::check_range(Nat m, Nat n) const -> void
{
    if (m < _mu || n > _end || m > n)
        throw std::out_of_range("semi-metric arguments (" + std::to_string(m) + ", " + std::to_string(n) +
            ") outside mu <= m <= n <= end = " + std::to_string(_end));
}

auto SemiMetric::d(unsigned i, Nat m, Nat n) const -> Nat
{
    check_range(m, n);
    if (i == 0)
        throw std::invalid_argument("semi-metric level must be >= 1");
    if (i == 1)
        return n - m;
    if (i - 2 >= _orbits.size())
        return 0;
    auto & o = _orbits[i - 2];
    return static_cast<Nat>(std::upper_bound(o.begin(), o.end(), n) - std::upper_bound(o.begin(), o.end(), m));
}

auto SemiMetric::i_and_d(Nat m, Nat n) const -> std::pair<Nat, Nat>
{
    check_range(m, n);
    if (m == n)
        throw std::invalid_argument("I and D are defined for m < n only");
    for (unsigned i = top_level(); i >= 2; --i)
        if (Nat dist = d(i, m, n); dist > 0)
            return {i, dist};
    return {1, n - m};
}

CgColoring::CgColoring(std::shared_ptr<const SemiMetric> metric, std::string bound_descriptor) :
    _metric(std::move(metric)), _bound(std::move(bound_descriptor))
{
}

auto CgColoring::parameters() const -> nlohmann::json
{
    return {{"g", _bound}, {"mu", _metric->mu()}, {"end", _metric->end()}, {"hierarchy", _metric->spec().describe()}};
}

auto CgColoring::color_unchecked(Nat m, Nat n) const -> Nat
{
    auto [i, dist] = _metric->i_and_d(m, n);
    return pair_encode(i, dist);
}

auto cg_interval(const BoundFn & g, Nat k, Nat search_limit, const EvalContext & ctx) -> CgInterval
{
    auto mu = mu_g(g, k, search_limit);
    if (! mu)
        throw std::domain_error("mu_g(" + std::to_string(k) + ") not found below " + std::to_string(search_limit) +
            " for g = " + g.descriptor());
    if (k == 0)
        return {*mu, *mu};
    auto end = fg_eval(g, static_cast<unsigned>(k), *mu, ctx).as_u64();
    if (! end)
        throw std::overflow_error("(f_g)_k(mu) does not fit in 64 bits");
    return {*mu, *end};
}

auto cg_coloring(const BoundFn & g, Nat k, Nat search_limit) -> std::shared_ptr<const CgColoring>
{
    auto [mu, end] = cg_interval(g, k, search_limit);
    auto metric = std::make_shared<const SemiMetric>(HierarchySpec::g_step(g), mu, end);
    return std::make_shared<const CgColoring>(metric, g.descriptor());
}

} // namespace regramsey
