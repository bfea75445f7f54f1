#include <regramsey/search.hpp>

#include <algorithm>
#include <stdexcept>

namespace regramsey {

auto witness_to_json(const Witness & w) -> nlohmann::json
{
    return {{"mode", to_string(w.mode)}, {"elements", w.elements}, {"coloring", w.coloring}};
}

auto witness_from_json(const nlohmann::json & j) -> Witness
{
    Witness w;
    w.mode = parse_search_mode(j.at("mode").get<std::string>());
    w.elements = j.at("elements").get<std::vector<Nat>>();
    w.coloring = j.value("coloring", nlohmann::json::object());
    if (! std::is_sorted(w.elements.begin(), w.elements.end()) ||
        std::adjacent_find(w.elements.begin(), w.elements.end()) != w.elements.end())
        throw std::invalid_argument("witness elements must be strictly increasing");
    return w;
}

auto outcome_to_json(const SearchOutcome & o) -> nlohmann::json
{
    nlohmann::json j{
        {"target", o.target},
        {"exhaustive", o.exhaustive},
        {"nodes_explored", o.nodes_explored},
        {"wall_time_ms", o.wall_time_ms},
    };
    if (o.witness) {
        j["result"] = "witness";
        j.update(witness_to_json(*o.witness));
    }
    else
        j["result"] = o.exhaustive ? "none_up_to" : "unknown";
    return j;
}

auto maximum_to_json(const MaximumOutcome & o) -> nlohmann::json
{
    nlohmann::json j{
        {"size", o.size},
        {"exhaustive", o.exhaustive},
        {"nodes_explored", o.nodes_explored},
        {"wall_time_ms", o.wall_time_ms},
    };
    if (o.witness)
        j.update(witness_to_json(*o.witness));
    return j;
}

} // namespace regramsey
