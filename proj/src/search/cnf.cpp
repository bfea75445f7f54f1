#include <regramsey/arith.hpp>
#include <regramsey/search.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace regramsey {

namespace {
    auto color_range(const BoundFn & g, Nat m, Nat N) -> Nat
    {
        // colors 0..result for row m
        return std::min<Nat>(g(m), N - m - 2);
    }

    auto ranges(const BoundFn & g, Nat N) -> std::vector<Nat>
    {
        std::vector<Nat> r(N, 0);
        for (Nat m = 0; m + 1 < N; ++m)
            r[m] = color_range(g, m, N);
        return r;
    }

    // calls visit(subset) for every k-subset of [0, N) in lexicographic order
    template <class Visit>
    auto for_each_subset(Nat N, Nat k, Visit && visit) -> void
    {
        if (k > N)
            return;
        std::vector<Nat> s(k);
        for (Nat i = 0; i < k; ++i)
            s[i] = i;
        while (true) {
            visit(s);
            Nat i = k;
            while (i > 0 && s[i - 1] == N - k + i - 1)
                --i;
            if (i == 0)
                return;
            ++s[i - 1];
            for (Nat j = i; j < k; ++j)
                s[j] = s[j - 1] + 1;
        }
    }
}

auto estimate_cnf_clauses(const BoundFn & g, Nat k, Nat N, CnfEncoding encoding) -> BigNat
{
    if (k < 2)
        throw std::invalid_argument("CNF export needs k >= 2");
    auto r = ranges(g, N);
    BigNat total = 0;
    for (Nat m = 0; m + 1 < N; ++m) {
        BigNat width = BigNat(r[m]) + 1;
        total += BigNat(N - m - 1) * (1 + width * (width - 1) / 2);
    }
    if (k > N)
        return total;

    if (encoding == CnfEncoding::equality) {
        for (Nat m = 0; m + 2 < N; ++m) {
            Nat rest = N - m - 1;
            total += BigNat(r[m] + 1) * (BigNat(rest) * (rest - 1) / 2);
        }
        return total + binomial(N, k);
    }

    // e[t][i]: weighted count of t-element tails starting at i; all but the
    // last two elements carry weight r + 1 (one blocking clause per color)
    std::vector<BigNat> prev(N), cur(N);
    for (Nat i = 0; i < N; ++i)
        prev[i] = N - 1 - i;   // t = 2
    for (Nat t = 3; t <= k; ++t) {
        BigNat suffix = 0;
        for (Nat i = N; i-- > 0;) {
            cur[i] = BigNat(r[i] + 1) * suffix;
            suffix += prev[i];
        }
        std::swap(prev, cur);
    }
    for (auto & v : prev)
        total += v;
    return total;
}

auto export_cnf(const BoundFn & g, Nat k, Nat N, const CnfOptions & options) -> Cnf
{
    if (k < 2)
        throw std::invalid_argument("CNF export needs k >= 2");
    if (N > options.max_N)
        throw std::length_error("CNF export refuses N = " + std::to_string(N) + " > " + std::to_string(options.max_N));
    auto estimate = estimate_cnf_clauses(g, k, N, options.encoding);
    if (estimate > options.max_clauses)
        throw std::length_error("CNF export would need about " + estimate.str() + " clauses, over the limit of " +
            std::to_string(options.max_clauses));

    auto r = ranges(g, N);
    Cnf cnf;
    cnf.color_var.resize(N);
    std::int32_t next = 1;
    for (Nat n = 1; n < N; ++n) {
        cnf.color_var[n].resize(n);
        for (Nat m = 0; m < n; ++m)
            for (Nat q = 0; q <= r[m]; ++q)
                cnf.color_var[n][m].push_back(next++);
    }
    auto x = [&](Nat m, Nat n, Nat q) { return cnf.color_var[n][m][q]; };

    std::ostringstream head;
    head << "regramsey bad-coloring instance: g = " << g.descriptor() << ", k = " << k << ", N = " << N
         << ", encoding = " << (options.encoding == CnfEncoding::direct ? "direct" : "equality");
    cnf.comments.push_back(head.str());
    cnf.comments.push_back("satisfiable iff some g-regressive coloring of [0, N) has no min-homogeneous k-set");
    cnf.comments.push_back("variable x(m,n,q) means c(m,n) = q; row m uses colors 0..min(g(m), N-m-2)");
    cnf.comments.push_back("pairs are numbered by n ascending, then m ascending; each pair owns a consecutive block");
    for (Nat n = 1; n < N; ++n)
        for (Nat m = 0; m < n; ++m) {
            std::ostringstream line;
            line << "pair " << m << ' ' << n << " colors 0.." << r[m] << " vars " << x(m, n, 0) << ".." << x(m, n, r[m]);
            cnf.comments.push_back(line.str());
        }

    for (Nat n = 1; n < N; ++n)
        for (Nat m = 0; m < n; ++m) {
            std::vector<std::int32_t> some;
            for (Nat q = 0; q <= r[m]; ++q)
                some.push_back(x(m, n, q));
            cnf.clauses.push_back(some);
            for (Nat a = 0; a <= r[m]; ++a)
                for (Nat b = a + 1; b <= r[m]; ++b)
                    cnf.clauses.push_back({-x(m, n, a), -x(m, n, b)});
        }

    if (options.encoding == CnfEncoding::direct) {
        for_each_subset(N, k, [&](const std::vector<Nat> & s) {
            // one color per weighted element (all but the last two)
            std::vector<Nat> pattern(k - 2, 0);
            while (true) {
                std::vector<std::int32_t> clause;
                for (Nat j = 0; j + 2 < k; ++j)
                    for (Nat l = j + 1; l < k; ++l)
                        clause.push_back(-x(s[j], s[l], pattern[j]));
                cnf.clauses.push_back(std::move(clause));
                Nat j = 0;
                while (j + 2 < k && pattern[j] == r[s[j]])
                    pattern[j++] = 0;
                if (j + 2 >= k)
                    break;
                ++pattern[j];
            }
        });
    }
    else {
        // s(m,a,b) is implied by c(m,a) = c(m,b) = q for any q
        std::int32_t first_aux = next;
        std::vector<std::vector<std::vector<std::int32_t>>> eq(N);
        for (Nat m = 0; m < N; ++m) {
            eq[m].assign(N, std::vector<std::int32_t>(N, 0));
            for (Nat a = m + 1; a < N; ++a)
                for (Nat b = a + 1; b < N; ++b) {
                    eq[m][a][b] = next++;
                    for (Nat q = 0; q <= r[m]; ++q)
                        cnf.clauses.push_back({-x(m, a, q), -x(m, b, q), eq[m][a][b]});
                }
        }
        if (next > first_aux)
            cnf.comments.push_back("equality variables " + std::to_string(first_aux) + ".." + std::to_string(next - 1) +
                ": s(m,a,b) for m < a < b in lexicographic order, implied by c(m,a) = c(m,b)");
        for_each_subset(N, k, [&](const std::vector<Nat> & s) {
            std::vector<std::int32_t> clause;
            for (Nat j = 0; j + 2 < k; ++j)
                for (Nat l = j + 2; l < k; ++l)
                    clause.push_back(-eq[s[j]][s[j + 1]][s[l]]);
            cnf.clauses.push_back(std::move(clause));
        });
        cnf.aux_equal = std::move(eq);
    }
    cnf.variables = static_cast<std::uint32_t>(next - 1);
    return cnf;
}

auto Cnf::to_dimacs() const -> std::string
{
    std::ostringstream out;
    for (auto & c : comments)
        out << "c " << c << '\n';
    out << "p cnf " << variables << ' ' << clauses.size() << '\n';
    for (auto & clause : clauses) {
        for (auto lit : clause)
            out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

auto Cnf::decode(const std::vector<std::int32_t> & model) const -> BadColoring
{
    std::vector<bool> truth(variables + 1, false);
    for (auto lit : model)
        if (lit > 0 && static_cast<std::uint32_t>(lit) <= variables)
            truth[lit] = true;
    BadColoring b;
    b.N = color_var.size();
    b.colors.resize(b.N);
    for (Nat n = 1; n < b.N; ++n)
        for (Nat m = 0; m < n; ++m) {
            auto & block = color_var[n][m];
            auto it = std::find_if(block.begin(), block.end(), [&](std::int32_t v) { return truth[v]; });
            if (it == block.end())
                throw std::invalid_argument("model leaves pair (" + std::to_string(m) + ", " + std::to_string(n) + ") uncolored");
            b.colors[n].push_back(static_cast<Nat>(it - block.begin()));
        }
    return b;
}

auto Cnf::encode(const BadColoring & coloring) const -> std::vector<std::int32_t>
{
    if (coloring.N != color_var.size())
        throw std::invalid_argument("coloring size does not match the CNF");
    std::vector<std::int32_t> assignment(variables);
    for (std::uint32_t v = 1; v <= variables; ++v)
        assignment[v - 1] = -static_cast<std::int32_t>(v);
    for (Nat n = 1; n < coloring.N; ++n)
        for (Nat m = 0; m < n; ++m) {
            auto q = coloring.color(m, n);
            if (q >= color_var[n][m].size())
                throw std::out_of_range("color " + std::to_string(q) + " of pair (" + std::to_string(m) + ", " +
                    std::to_string(n) + ") is outside the encoded range");
            auto v = color_var[n][m][q];
            assignment[v - 1] = v;
        }
    for (Nat m = 0; m < aux_equal.size(); ++m)
        for (Nat a = m + 1; a < aux_equal.size(); ++a)
            for (Nat b = a + 1; b < aux_equal.size(); ++b)
                if (coloring.color(m, a) == coloring.color(m, b))
                    assignment[aux_equal[m][a][b] - 1] = aux_equal[m][a][b];
    return assignment;
}

auto satisfies(const Cnf & cnf, const std::vector<std::int32_t> & assignment) -> bool
{
    std::vector<bool> truth(cnf.variables + 1, false);
    for (auto lit : assignment)
        if (lit > 0 && static_cast<std::uint32_t>(lit) <= cnf.variables)
            truth[lit] = true;
    return std::all_of(cnf.clauses.begin(), cnf.clauses.end(), [&](auto & clause) {
        return std::any_of(clause.begin(), clause.end(), [&](std::int32_t lit) { return lit > 0 ? truth[lit] : ! truth[-lit]; });
    });
}

} // namespace regramsey
