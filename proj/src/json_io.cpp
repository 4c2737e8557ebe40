#include "domdraw/json_io.hpp"

#include <stdexcept>

namespace domdraw {

using nlohmann::json;

json drawing_to_json(const Drawing& dr) {
    return json{{"d", dr.dims()}, {"orders", dr.orders}};
}

Drawing drawing_from_json(const json& j) {
    const json* obj = &j;
    if (obj->is_object() && obj->contains("drawing")) obj = &(*obj)["drawing"];
    if (!obj->is_object() || !obj->contains("orders"))
        throw std::invalid_argument("expected an object with an 'orders' key");
    const json& orders = (*obj)["orders"];
    if (!orders.is_array() || orders.empty())
        throw std::invalid_argument("'orders' must be a non-empty array of arrays");
    Drawing dr;
    for (const json& row : orders) {
        if (!row.is_array())
            throw std::invalid_argument("'orders' must be a non-empty array of arrays");
        std::vector<int> order;
        for (const json& item : row) {
            if (!item.is_number_integer())
                throw std::invalid_argument("vertex ids must be integers");
            order.push_back(item.get<int>());
        }
        dr.orders.push_back(std::move(order));
    }
    if (obj->contains("d") && (*obj)["d"].get<int>() != dr.dims())
        throw std::invalid_argument("'d' disagrees with the number of orders");
    return dr;
}

json fip_report_to_json(const FipReport& report) {
    json pairs = json::array();
    for (auto [u, v] : report.fips) pairs.push_back(json::array({u, v}));
    return json{{"count", report.count}, {"cost", report.cost}, {"fips", pairs}};
}

json md_node_to_json(const MdNode& node) {
    json children = json::array();
    for (const MdNode& child : node.children) children.push_back(md_node_to_json(child));
    return json{{"kind", to_string(node.kind)},
                {"members", node.members},
                {"children", children}};
}

json opt_result_to_json(const OptResult& result) {
    return json{{"cost", result.cost},
                {"explored", result.explored},
                {"k", result.k},
                {"d", result.d},
                {"drawing", drawing_to_json(result.drawing)}};
}

json index_stats_to_json(const IndexStats& stats) {
    return json{{"queries", stats.queries},
                {"certificates", stats.certificates},
                {"fallbacks", stats.fallbacks},
                {"fallback_fips", stats.fallback_fips}};
}

}  // namespace domdraw
