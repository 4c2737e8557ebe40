#include "domdraw/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "domdraw/fips.hpp"
#include "domdraw/reachability.hpp"

namespace domdraw {

std::string render_svg(const Dag& g, const Drawing& dr, const SvgOptions& opts) {
    if (dr.dims() != 2)
        throw std::invalid_argument("svg rendering needs exactly two dimensions");
    if (!validate(g, dr))
        throw std::invalid_argument("drawing is not topological in every dimension");
    auto rank = ranks_of(dr);
    const int n = g.n();
    const int cell = opts.cell;
    const int side = (n + 1) * cell;

    auto x_of = [&](int v) { return rank[0][v] * cell; };
    auto y_of = [&](int v) { return (n + 1 - rank[1][v]) * cell; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side
        << "\" height=\"" << side << "\" viewBox=\"0 0 " << side << " " << side
        << "\">\n";
    svg << "  <defs>\n"
        << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" "
           "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">\n"
        << "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#334\"/>\n"
        << "    </marker>\n"
        << "  </defs>\n";
    svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (opts.highlight_fips) {
        Reachability r = transitive_closure(g);
        for (auto [u, v] : fips(r, dr).fips)
            svg << "  <line x1=\"" << x_of(u) << "\" y1=\"" << y_of(u) << "\" x2=\""
                << x_of(v) << "\" y2=\"" << y_of(v)
                << "\" stroke=\"#c22\" stroke-width=\"1.5\" stroke-dasharray=\"5 4\"/>\n";
    }

    for (auto [u, v] : g.edges()) {
        double dx = x_of(v) - x_of(u), dy = y_of(v) - y_of(u);
        double len = std::max(1.0, std::sqrt(dx * dx + dy * dy));
        // Stop the line at the target circle so the arrowhead stays visible.
        double tx = x_of(v) - dx / len * opts.radius;
        double ty = y_of(v) - dy / len * opts.radius;
        svg << "  <line x1=\"" << x_of(u) << "\" y1=\"" << y_of(u) << "\" x2=\"" << tx
            << "\" y2=\"" << ty
            << "\" stroke=\"#334\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
    }

    for (int v = 0; v < n; ++v) {
        svg << "  <circle cx=\"" << x_of(v) << "\" cy=\"" << y_of(v) << "\" r=\""
            << opts.radius << "\" fill=\"#e8ecff\" stroke=\"#334\"/>\n";
        if (opts.labels)
            svg << "  <text x=\"" << x_of(v) << "\" y=\"" << y_of(v) + 4
                << "\" text-anchor=\"middle\" font-size=\"11\" "
                   "font-family=\"sans-serif\">"
                << v << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace domdraw
