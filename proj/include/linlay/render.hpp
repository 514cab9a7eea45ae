#ifndef LINLAY_RENDER_HPP
#define LINLAY_RENDER_HPP

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "linlay/layout.hpp"
#include "linlay/verify.hpp"

namespace linlay {

struct RenderSpec {
    enum class Mode { Grid, Arcs };
    Mode mode = Mode::Grid;
    int cell = 18;  // grid cell edge / arc diagram vertex spacing
    bool check_validity = true;
};

namespace detail {

// Distinct page colors by golden-angle hue stepping.
inline std::string page_color(std::size_t page) {
    int hue = static_cast<int>(std::fmod(page * 137.508, 360.0));
    return "hsl(" + std::to_string(hue) + ",65%,42%)";
}

inline bool upper_first(EdgeType t) { return t == EdgeType::HH || t == EdgeType::HT; }
inline bool wraps(EdgeType t) { return t == EdgeType::HT || t == EdgeType::TH; }

inline void svg_header(std::ostringstream& os, int w, int h) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
       << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
}

inline std::string render_grid(const LinearLayout& layout, const RenderSpec& spec) {
    const int n = layout.graph.num_vertices();
    const int cell = spec.cell;
    const int margin = cell;
    const int size = margin * 2 + cell * std::max(n - 1, 1);
    std::ostringstream os;
    svg_header(os, size, size);
    os << "<rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";
    for (int k = 0; k < n; ++k) {
        int x = margin + k * cell;
        os << "<line x1=\"" << x << "\" y1=\"" << margin << "\" x2=\"" << x << "\" y2=\""
           << size - margin << "\" stroke=\"#eee\"/>\n";
        os << "<line x1=\"" << margin << "\" y1=\"" << x << "\" x2=\"" << size - margin
           << "\" y2=\"" << x << "\" stroke=\"#eee\"/>\n";
    }
    const double r = cell * 0.32;
    for (std::size_t p = 0; p < layout.pages.size(); ++p) {
        std::string color = detail::page_color(p);
        for (const TypedEdge& e : layout.pages[p].edges) {
            int i = std::min(layout.order.rank_of(e.u), layout.order.rank_of(e.v));
            int j = std::max(layout.order.rank_of(e.u), layout.order.rank_of(e.v));
            double cx = margin + i * cell;
            double cy = margin + j * cell;
            // Solid marks for type-(i) edges, dashed hollow marks for the
            // wrapping ones; circles start at the head, triangles at the tail.
            bool solid = !wraps(e.type);
            if (upper_first(e.type)) {
                os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" ";
            } else {
                os << "<path d=\"M" << cx - r << " " << cy - r << " L" << cx + r << " "
                   << cy - r << " L" << cx << " " << cy + r << " Z\" ";
            }
            if (solid)
                os << "fill=\"" << color << "\" stroke=\"none\"";
            else
                os << "fill=\"none\" stroke=\"" << color
                   << "\" stroke-width=\"2\" stroke-dasharray=\"3,2\"";
            os << "/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

inline std::string render_arcs(const LinearLayout& layout, const RenderSpec& spec) {
    const int n = layout.graph.num_vertices();
    const int cell = spec.cell;
    const int band = cell * 10;
    const int margin = cell * 2;
    // Wrap lanes at the right: ordered by decreasing start rank, which is a
    // crossing-free wrap order for every valid page.
    const int wrap_zone = cell * 3;
    const int width = margin * 2 + cell * std::max(n - 1, 1) + wrap_zone;
    const int height = static_cast<int>(layout.pages.size()) * band + margin;
    std::ostringstream os;
    svg_header(os, width, height);
    os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    for (std::size_t p = 0; p < layout.pages.size(); ++p) {
        std::string color = detail::page_color(p);
        double y0 = band * (static_cast<double>(p) + 0.5);
        double x_last = margin + cell * std::max(n - 1, 1);
        os << "<line x1=\"" << margin << "\" y1=\"" << y0 << "\" x2=\"" << x_last
           << "\" y2=\"" << y0 << "\" stroke=\"#999\"/>\n";
        for (int r = 0; r < n; ++r)
            os << "<circle cx=\"" << margin + r * cell << "\" cy=\"" << y0
               << "\" r=\"2.5\" fill=\"#333\"/>\n";

        std::vector<std::size_t> wrap_order;
        for (std::size_t k = 0; k < layout.pages[p].edges.size(); ++k)
            if (detail::wraps(layout.pages[p].edges[k].type)) wrap_order.push_back(k);
        std::sort(wrap_order.begin(), wrap_order.end(), [&](std::size_t a, std::size_t b) {
            const TypedEdge& ea = layout.pages[p].edges[a];
            const TypedEdge& eb = layout.pages[p].edges[b];
            int sa = std::min(layout.order.rank_of(ea.u), layout.order.rank_of(ea.v));
            int sb = std::min(layout.order.rank_of(eb.u), layout.order.rank_of(eb.v));
            return sa > sb;
        });
        std::vector<double> wrap_x(layout.pages[p].edges.size(), 0.0);
        for (std::size_t lane = 0; lane < wrap_order.size(); ++lane)
            wrap_x[wrap_order[lane]] =
                x_last + wrap_zone * (static_cast<double>(lane) + 1.0) /
                             (static_cast<double>(wrap_order.size()) + 1.0);

        for (std::size_t k = 0; k < layout.pages[p].edges.size(); ++k) {
            const TypedEdge& e = layout.pages[p].edges[k];
            int i = std::min(layout.order.rank_of(e.u), layout.order.rank_of(e.v));
            int j = std::max(layout.order.rank_of(e.u), layout.order.rank_of(e.v));
            double xi = margin + i * cell, xj = margin + j * cell;
            auto semicircle = [&](double xa, double xb, bool above) {
                double rad = (xb - xa) / 2.0;
                os << "<path d=\"M" << xa << " " << y0 << " A" << rad << " "
                   << rad * 0.75 << " 0 0 " << (above ? 1 : 0) << " " << xb << " " << y0
                   << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.3\"/>\n";
            };
            switch (e.type) {
                case EdgeType::HH: semicircle(xi, xj, true); break;
                case EdgeType::TT: semicircle(xi, xj, false); break;
                case EdgeType::HT:
                    semicircle(xi, wrap_x[k], true);
                    semicircle(xj, wrap_x[k], false);
                    break;
                case EdgeType::TH:
                    semicircle(xi, wrap_x[k], false);
                    semicircle(xj, wrap_x[k], true);
                    break;
            }
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace detail

// Renders a verified layout to SVG. Invalid layouts are refused.
inline std::string render_svg(const LinearLayout& layout, const RenderSpec& spec = {}) {
    if (spec.check_validity && !validate_layout(layout).valid())
        throw std::invalid_argument("render_svg: layout does not validate");
    return spec.mode == RenderSpec::Mode::Grid ? detail::render_grid(layout, spec)
                                               : detail::render_arcs(layout, spec);
}

}  // namespace linlay

#endif
