#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "linlay/constructions.hpp"
#include "linlay/render.hpp"

using namespace linlay;

namespace {

// Rudimentary XML well-formedness: tags balance and attributes are quoted.
bool well_formed_xml(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        std::size_t close = text.find('>', i);
        if (close == std::string::npos) return false;
        std::string tag = text.substr(i + 1, close - i - 1);
        i = close + 1;
        if (tag.empty()) return false;
        if (tag[0] == '?') continue;  // declaration
        if (tag[0] == '/') {
            if (stack.empty()) return false;
            if (stack.back() != tag.substr(1)) return false;
            stack.pop_back();
            continue;
        }
        bool self_closing = tag.back() == '/';
        std::string name = tag.substr(0, tag.find_first_of(" \t\n/"));
        if (!self_closing) stack.push_back(name);
        // quotes must balance
        if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
    }
    return stack.empty();
}

}  // namespace

TEST_CASE("grid rendering of a large rique layout uses one color per page") {
    LinearLayout layout = rique_layout_kn(30);
    RenderSpec spec;
    spec.mode = RenderSpec::Mode::Grid;
    std::string svg = render_svg(layout, spec);
    CHECK(well_formed_xml(svg));
    std::set<std::string> hues;
    std::size_t pos = 0;
    while ((pos = svg.find("hsl(", pos)) != std::string::npos) {
        hues.insert(svg.substr(pos, svg.find(')', pos) - pos));
        ++pos;
    }
    CHECK(hues.size() == 9);  // nine pages, nine distinct colors
}

TEST_CASE("single-edge graphs render one mark") {
    LinearLayout layout{Graph(2, {Edge(0, 1)}),
                        VertexOrder::natural(2),
                        {Page{{TypedEdge(0, 1, EdgeType::HH)}}},
                        LayoutKind::Deque};
    std::string svg = render_svg(layout);
    CHECK(well_formed_xml(svg));
    // one vertex-grid mark: exactly one filled circle besides the frame
    CHECK(svg.find("circle") != std::string::npos);
}

TEST_CASE("arc rendering covers all four categories") {
    LinearLayout layout = deque_layout_knn(39);
    RenderSpec spec;
    spec.mode = RenderSpec::Mode::Arcs;
    std::string svg = render_svg(layout, spec);
    CHECK(well_formed_xml(svg));
    CHECK(svg.find("<path") != std::string::npos);
}

TEST_CASE("invalid layouts are refused") {
    LinearLayout bad{Graph(4, {Edge(0, 2), Edge(1, 3)}),
                     VertexOrder::natural(4),
                     {Page{{TypedEdge(0, 2, EdgeType::HH), TypedEdge(1, 3, EdgeType::HH)}}},
                     LayoutKind::Deque};
    CHECK_THROWS_AS(render_svg(bad), std::invalid_argument);
}
