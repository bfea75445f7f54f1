#include <regramsey/arith.hpp>
#include <regramsey/colorings.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace regramsey {

namespace detail {
    // generated from data/r55_42.hex at configure time
    extern const char * const shipped_graph_text;
}

auto base10_color(Nat m, Nat n) -> Nat
{
    if (! (base10_domain.lo <= m && m < n && n < base10_domain.hi))
        throw std::out_of_range("base-10 coloring is defined for 43 <= m < n < 10^4");
    Nat x = n - m;
    Nat d1 = 0, power = 1;
    while (d1 < 3 && power * 10 < x) {
        power *= 10;
        ++d1;
    }
    Nat digit = (x / power) % 10;
    return pair_encode(d1, digit + 1);
}

auto base_s_color(Nat s, Nat m, Nat n) -> Nat
{
    if (s < 2)
        throw std::invalid_argument("base must be >= 2");
    if (m == 0 || m >= n)
        throw std::invalid_argument("base-s coloring needs 1 <= m < n");
    auto lm = ilog(m, s);
    if (lm != ilog(n, s))
        return lm;
    Nat index = 0;
    while (m % s == n % s) {
        m /= s;
        n /= s;
        ++index;
    }
    return index;
}

namespace {
    class Base10Coloring : public Coloring
    {
    public:
        auto domain() const -> Interval override { return base10_domain; }
        auto name() const -> std::string override { return "base10"; }
        auto color_unchecked(Nat m, Nat n) const -> Nat override { return base10_color(m, n); }
    };

    class BaseSColoring : public Coloring
    {
    public:
        BaseSColoring(Nat s, Nat hi) : _s(s), _hi(hi)
        {
            if (s < 2)
                throw std::invalid_argument("base must be >= 2");
        }

        auto domain() const -> Interval override { return {1, _hi}; }
        auto name() const -> std::string override { return "base-s"; }
        auto parameters() const -> nlohmann::json override { return {{"s", _s}}; }
        auto color_unchecked(Nat m, Nat n) const -> Nat override { return base_s_color(_s, m, n); }

    private:
        Nat _s;
        Nat _hi;
    };

    class SmallIntervalColoring : public Coloring
    {
    public:
        explicit SmallIntervalColoring(const RamseyGraph & graph) : _graph(graph) {}

        auto domain() const -> Interval override { return {0, RamseyGraph::vertices + 1}; }
        auto name() const -> std::string override { return "small-interval"; }
        auto parameters() const -> nlohmann::json override
        {
            std::ostringstream crc;
            crc << std::hex << std::setw(8) << std::setfill('0') << _graph.checksum();
            return {{"graph_crc32", crc.str()}};
        }
        auto color_unchecked(Nat m, Nat n) const -> Nat override
        {
            if (m < 2)
                return 0;
            return _graph.edge(static_cast<unsigned>(m - 1), static_cast<unsigned>(n - 1)) ? 1 : 0;
        }

    private:
        RamseyGraph _graph;
    };

    class GraphColoring : public Coloring
    {
    public:
        explicit GraphColoring(const RamseyGraph & graph) : _graph(graph) {}

        auto domain() const -> Interval override { return {0, RamseyGraph::vertices}; }
        auto name() const -> std::string override { return "graph"; }
        auto parameters() const -> nlohmann::json override
        {
            std::ostringstream crc;
            crc << std::hex << std::setw(8) << std::setfill('0') << _graph.checksum();
            return {{"graph_crc32", crc.str()}};
        }
        auto color_unchecked(Nat m, Nat n) const -> Nat override
        {
            return _graph.edge(static_cast<unsigned>(m), static_cast<unsigned>(n)) ? 1 : 0;
        }

    private:
        RamseyGraph _graph;
    };

    auto rows_text(const std::vector<std::uint64_t> & rows) -> std::string
    {
        std::ostringstream out;
        for (auto r : rows)
            out << std::hex << std::setw(11) << std::setfill('0') << r << '\n';
        return out.str();
    }
}

auto base10_coloring() -> ColoringPtr
{
    return std::make_shared<Base10Coloring>();
}

auto base_s_coloring(Nat s, Nat hi) -> ColoringPtr
{
    return std::make_shared<BaseSColoring>(s, hi);
}

auto small_interval_coloring(const RamseyGraph & graph) -> ColoringPtr
{
    return std::make_shared<SmallIntervalColoring>(graph);
}

auto graph_coloring(const RamseyGraph & graph) -> ColoringPtr
{
    return std::make_shared<GraphColoring>(graph);
}

auto RamseyGraph::parse(const std::string & text) -> RamseyGraph
{
    std::istringstream in{text};
    std::string line;
    std::optional<std::uint32_t> declared_crc;
    std::optional<unsigned> declared_vertices;
    RamseyGraph g;

    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream words{line};
        std::string key;
        words >> key;
        if (key == "vertices") {
            unsigned v;
            words >> v;
            declared_vertices = v;
        }
        else if (key == "crc32") {
            std::uint32_t c;
            words >> std::hex >> c;
            declared_crc = c;
        }
        else {
            if (key.size() != 11 || key.find_first_not_of("0123456789abcdef") != std::string::npos)
                throw std::invalid_argument("bad adjacency row '" + key + "'");
            g._rows.push_back(std::stoull(key, nullptr, 16));
        }
    }

    if (declared_vertices != vertices || g._rows.size() != vertices)
        throw std::invalid_argument("graph file must describe exactly 42 vertices");
    if (! declared_crc || *declared_crc != g.checksum())
        throw std::invalid_argument("graph checksum mismatch");
    for (unsigned u = 0; u < vertices; ++u) {
        if (g.edge(u, u) || (g._rows[u] >> vertices) != 0)
            throw std::invalid_argument("graph row " + std::to_string(u) + " has a loop or stray bits");
        for (unsigned v = 0; v < vertices; ++v)
            if (g.edge(u, v) != g.edge(v, u))
                throw std::invalid_argument("graph adjacency is not symmetric");
    }
    return g;
}

auto RamseyGraph::from_file(const std::string & path) -> RamseyGraph
{
    std::ifstream in{path};
    if (! in)
        throw std::runtime_error("cannot open graph file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

auto RamseyGraph::shipped() -> const RamseyGraph &
{
    static const RamseyGraph graph = parse(detail::shipped_graph_text);
    return graph;
}

auto RamseyGraph::checksum() const -> std::uint32_t
{
    auto text = rows_text(_rows);
    return crc32(text.data(), text.size());
}

auto RamseyGraph::to_text() const -> std::string
{
    std::ostringstream out;
    out << "# 2-coloring of the pairs of 42 vertices, one adjacency row per vertex\n"
        << "# row u is a 42-bit hex mask; bit v set means {u, v} has color 1\n"
        << "vertices " << vertices << '\n'
        << "crc32 " << std::hex << std::setw(8) << std::setfill('0') << checksum() << '\n'
        << rows_text(_rows);
    return out.str();
}

} // namespace regramsey
