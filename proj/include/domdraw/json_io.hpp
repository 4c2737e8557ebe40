#pragma once

#include <json.hpp>

#include "domdraw/drawing.hpp"
#include "domdraw/fips.hpp"
#include "domdraw/md_tree.hpp"
#include "domdraw/optimizer.hpp"
#include "domdraw/reach_index.hpp"

namespace domdraw {

nlohmann::json drawing_to_json(const Drawing& dr);

// Accepts either a bare drawing {"d", "orders"} or any object carrying one
// under a "drawing" key, so optimizer output can be fed back directly.
Drawing drawing_from_json(const nlohmann::json& j);

nlohmann::json fip_report_to_json(const FipReport& report);
nlohmann::json md_node_to_json(const MdNode& node);
nlohmann::json opt_result_to_json(const OptResult& result);
nlohmann::json index_stats_to_json(const IndexStats& stats);

}  // namespace domdraw
