#include <doctest.h>

#include <json.hpp>
#include <string>

#include "domdraw/dag.hpp"
#include "domdraw/fips.hpp"
#include "domdraw/json_io.hpp"
#include "domdraw/md_tree.hpp"
#include "domdraw/optimizer.hpp"
#include "domdraw/reachability.hpp"
#include "domdraw/svg.hpp"

using namespace domdraw;
using nlohmann::json;

namespace {

Drawing make(std::vector<std::vector<int>> orders) {
    Drawing dr;
    dr.orders = std::move(orders);
    return dr;
}

}  // namespace

TEST_SUITE("json") {
    TEST_CASE("drawing round trip") {
        Drawing dr = make({{0, 1, 2}, {2, 0, 1}});
        json j = drawing_to_json(dr);
        CHECK(j["d"] == 2);
        CHECK(j["orders"].size() == 2);
        Drawing back = drawing_from_json(j);
        CHECK(back.orders == dr.orders);
    }

    TEST_CASE("optimizer output feeds back in directly") {
        OptResult res = fpt_min_fips(gen_antichain(3), 2);
        json j = opt_result_to_json(res);
        CHECK(j.contains("cost"));
        CHECK(j.contains("explored"));
        CHECK(j.contains("k"));
        CHECK(j.contains("d"));
        Drawing back = drawing_from_json(j);
        CHECK(back.orders == res.drawing.orders);
    }

    TEST_CASE("drawing parse errors") {
        CHECK_THROWS_AS(drawing_from_json(json::array()), std::invalid_argument);
        CHECK_THROWS_AS(drawing_from_json(json{{"orders", json::array()}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(drawing_from_json(json{{"orders", {1, 2}}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(drawing_from_json(json{{"orders", {{0, 1}}}, {"d", 2}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(drawing_from_json(json{{"orders", {{0.5}}}}),
                        std::invalid_argument);
        CHECK(drawing_from_json(json{{"orders", {{0, 1}}}, {"d", 1}}).dims() == 1);
    }

    TEST_CASE("report and stats key sets") {
        Reachability r = transitive_closure(gen_antichain(2));
        json rep = fip_report_to_json(fips(r, make({{0, 1}, {0, 1}})));
        CHECK(rep["count"] == 1);
        CHECK(rep["cost"] == 1);
        CHECK(rep["fips"] == json::array({json::array({0, 1})}));

        IndexStats stats;
        stats.queries = 6;
        stats.certificates = 3;
        stats.fallbacks = 3;
        stats.fallback_fips = 1;
        json s = index_stats_to_json(stats);
        CHECK(s == json{{"queries", 6}, {"certificates", 3}, {"fallbacks", 3},
                        {"fallback_fips", 1}});
    }

    TEST_CASE("decomposition tree serialization") {
        Dag g = gen_chain(3);
        MdTree tree = md_tree(g, transitive_closure(g));
        json j = md_node_to_json(tree.root);
        CHECK(j["kind"] == "series");
        CHECK(j["members"] == json::array({0, 1, 2}));
        CHECK(j["children"].size() == 3);
        CHECK(j["children"][0]["kind"] == "leaf");
        CHECK(j["children"][0]["children"].empty());
    }
}

TEST_SUITE("svg") {
    TEST_CASE("two-dimensional drawings render") {
        Dag g = gen_crown(3);
        Drawing dr = make({{0, 1, 2, 3, 4, 5}, {2, 1, 0, 5, 4, 3}});
        std::string svg = render_svg(g, dr);
        CHECK(svg.find("<?xml") == 0);
        CHECK(svg.find("<svg") != std::string::npos);
        CHECK(svg.find("</svg>") != std::string::npos);
        // One node per vertex and one line per edge.
        std::size_t circles = 0, pos = 0;
        while ((pos = svg.find("<circle", pos)) != std::string::npos) {
            ++circles;
            pos += 7;
        }
        CHECK(circles == 6);
        CHECK(svg.find("marker-end") != std::string::npos);
    }

    TEST_CASE("fip highlighting adds dashed segments") {
        Dag g = gen_antichain(2);
        Drawing dr = make({{0, 1}, {0, 1}});
        SvgOptions opts;
        CHECK(render_svg(g, dr, opts).find("stroke-dasharray") == std::string::npos);
        opts.highlight_fips = true;
        CHECK(render_svg(g, dr, opts).find("stroke-dasharray") != std::string::npos);
    }

    TEST_CASE("only the planar case is supported") {
        Dag g = gen_chain(2);
        CHECK_THROWS_AS(render_svg(g, make({{0, 1}})), std::invalid_argument);
        CHECK_THROWS_AS(render_svg(g, make({{0, 1}, {0, 1}, {0, 1}})),
                        std::invalid_argument);
        CHECK_THROWS_AS(render_svg(g, make({{1, 0}, {0, 1}})), std::invalid_argument);
    }
}
