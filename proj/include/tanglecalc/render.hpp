#pragma once

// Illustrative SVG pictures of twist-word tangles and their numerator
// closures. The drawings follow the staircase layout of the reflection-free
// build (east twists to the right, south twists downward) and make no
// claim about layout quality.

#include <cstdio>
#include <string>
#include <vector>

#include "tanglecalc/diagram.hpp"
#include "tanglecalc/tangle.hpp"

namespace tanglecalc {
namespace svg {

struct Point {
    double x = 0, y = 0;
};

struct Scene {
    std::vector<std::vector<Point>> wires;  // polylines
    std::vector<std::pair<Point, Point>> over_strokes;
    std::vector<std::pair<Point, Point>> under_strokes;  // drawn with a gap

    void wire(std::initializer_list<Point> pts) { wires.emplace_back(pts); }
};

// Geometric shadow of TangleDiagramBuilder: four pens trace the strands
// dangling at the boundary corners.
class TangleSketch {
public:
    enum Corner { NW = 0, NE = 1, SW = 2, SE = 3 };

    static TangleSketch horizontal(Scene& scene, double x0) {
        TangleSketch t(scene, x0);
        t.scene_->wire({{x0, 0}, {x0 + 1, 0}});
        t.scene_->wire({{x0, 2}, {x0 + 1, 2}});
        t.pen_[NW] = {x0, 0};
        t.pen_[NE] = {x0 + 1, 0};
        t.pen_[SW] = {x0, 2};
        t.pen_[SE] = {x0 + 1, 2};
        return t;
    }

    static TangleSketch vertical(Scene& scene, double x0) {
        TangleSketch t(scene, x0);
        t.scene_->wire({{x0, 0}, {x0, 2}});
        t.scene_->wire({{x0 + 1, 0}, {x0 + 1, 2}});
        t.pen_[NW] = {x0, 0};
        t.pen_[SW] = {x0, 2};
        t.pen_[NE] = {x0 + 1, 0};
        t.pen_[SE] = {x0 + 1, 2};
        return t;
    }

    void twist_east(int sign) {
        east_ += 1;
        Point c{east_, 0.5 * (pen_[NE].y + pen_[SE].y)};
        crossing(c, sign, pen_[NE], pen_[SE], /*from_north=*/false);
        if (c.y > south_ - 1) south_ = c.y + 1;
    }

    void twist_south(int sign) {
        south_ += 1;
        Point c{0.5 * (pen_[SW].x + pen_[SE].x), south_};
        crossing(c, sign, pen_[SW], pen_[SE], /*from_north=*/true);
        if (c.x > east_ - 1) east_ = c.x + 1;
    }

    Point pen(Corner c) const { return pen_[c]; }
    double east() const { return east_; }
    double south() const { return south_; }

private:
    TangleSketch(Scene& scene, double x0) : scene_(&scene), east_(x0 + 1), south_(2) {}

    // Pulls the two named pens into a crossing at c. For east twists the
    // incoming strands take the west ports and leave at the east ports; for
    // south twists they take the north ports and leave south.
    void crossing(Point c, int sign, Point& first, Point& second, bool from_north) {
        const double r = 0.35;
        Point nw{c.x - r, c.y - r}, ne{c.x + r, c.y - r};
        Point sw{c.x - r, c.y + r}, se{c.x + r, c.y + r};
        if (from_north) {
            scene_->wire({first, nw});
            scene_->wire({second, ne});
            first = sw;
            second = se;
        } else {
            scene_->wire({first, nw});
            scene_->wire({second, sw});
            first = ne;
            second = se;
        }
        // A positive twist puts the NW-SE strand on top.
        if (sign > 0) {
            scene_->over_strokes.push_back({nw, se});
            scene_->under_strokes.push_back({sw, ne});
        } else {
            scene_->over_strokes.push_back({sw, ne});
            scene_->under_strokes.push_back({nw, se});
        }
    }

    Scene* scene_;
    Point pen_[4];
    double east_;
    double south_;
};

inline TangleSketch sketch_word(Scene& scene, const TwistWord& w, double x0) {
    ReflectionFreeWord form = reflection_free_form(w);
    TangleSketch t = form.start_horizontal ? TangleSketch::horizontal(scene, x0)
                                           : TangleSketch::vertical(scene, x0);
    for (auto [kind, count] : form.twists) {
        int sign = count < 0 ? -1 : 1;
        for (Int i = 0; i < (count < 0 ? -count : count); ++i) {
            if (kind == MoveKind::horizontal) t.twist_east(sign);
            else t.twist_south(sign);
        }
    }
    return t;
}

inline std::string emit(const Scene& scene, double pad = 1.2, double scale = 42) {
    double min_x = 1e9, min_y = 1e9, max_x = -1e9, max_y = -1e9;
    auto grow = [&](Point p) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    };
    for (const auto& w : scene.wires)
        for (const auto& p : w) grow(p);
    for (const auto& [a, b] : scene.over_strokes) { grow(a); grow(b); }

    auto X = [&](double x) { return (x - min_x + pad) * scale; };
    auto Y = [&](double y) { return (y - min_y + pad) * scale; };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.1f", v);
        return std::string(buf);
    };
    auto line = [&](Point a, Point b) {
        return "  <line x1=\"" + num(X(a.x)) + "\" y1=\"" + num(Y(a.y)) + "\" x2=\"" +
               num(X(b.x)) + "\" y2=\"" + num(Y(b.y)) + "\"/>\n";
    };

    std::string out;
    double w = (max_x - min_x + 2 * pad) * scale;
    double h = (max_y - min_y + 2 * pad) * scale;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" +
           num(h) + "\">\n";
    out += "<g fill=\"none\" stroke=\"black\" stroke-width=\"2.4\" stroke-linecap=\"round\">\n";
    for (const auto& wire : scene.wires) {
        out += "  <polyline points=\"";
        for (std::size_t i = 0; i < wire.size(); ++i) {
            if (i) out += " ";
            out += num(X(wire[i].x)) + "," + num(Y(wire[i].y));
        }
        out += "\"/>\n";
    }
    for (const auto& [a, b] : scene.under_strokes) {
        // Leave the middle third open so the other strand reads as above.
        Point a1{a.x + (b.x - a.x) / 3, a.y + (b.y - a.y) / 3};
        Point b1{b.x - (b.x - a.x) / 3, b.y - (b.y - a.y) / 3};
        out += line(a, a1);
        out += line(b1, b);
    }
    for (const auto& [a, b] : scene.over_strokes) out += line(a, b);
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace svg

// A twist-word tangle, optionally with its numerator closure drawn around it.
inline std::string render_twist_word_svg(const TwistWord& w, bool close_numerator) {
    svg::Scene scene;
    svg::TangleSketch t = svg::sketch_word(scene, w, 0);
    if (close_numerator) {
        double top = -1.0, bottom = t.south() + 1.0;
        auto nw = t.pen(svg::TangleSketch::NW), ne = t.pen(svg::TangleSketch::NE);
        auto sw = t.pen(svg::TangleSketch::SW), se = t.pen(svg::TangleSketch::SE);
        scene.wire({nw, {nw.x - 0.7, top}, {ne.x + 0.7, top}, ne});
        scene.wire({sw, {sw.x - 0.7, bottom}, {se.x + 0.7, bottom}, se});
    } else {
        for (auto c : {svg::TangleSketch::NW, svg::TangleSketch::NE, svg::TangleSketch::SW,
                       svg::TangleSketch::SE}) {
            auto p = t.pen(c);
            double dx = (c == svg::TangleSketch::NW || c == svg::TangleSketch::SW) ? -0.5 : 0.5;
            double dy = (c == svg::TangleSketch::NW || c == svg::TangleSketch::NE) ? -0.5 : 0.5;
            scene.wire({p, {p.x + dx, p.y + dy}});
        }
    }
    return svg::emit(scene);
}

// The numerator closure of a left-to-right tangle sum.
inline std::string render_sum_closure_svg(const std::vector<RationalTangle>& summands) {
    if (summands.empty()) throw std::invalid_argument("nothing to render");
    svg::Scene scene;
    std::vector<svg::TangleSketch> parts;
    double x0 = 0;
    for (const auto& t : summands) {
        parts.push_back(svg::sketch_word(scene, tangle_to_word(t), x0));
        x0 = parts.back().east() + 1.5;
    }
    double bottom = 2.0;
    for (const auto& p : parts) bottom = std::max(bottom, p.south());
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        scene.wire({parts[i].pen(svg::TangleSketch::NE), parts[i + 1].pen(svg::TangleSketch::NW)});
        scene.wire({parts[i].pen(svg::TangleSketch::SE), parts[i + 1].pen(svg::TangleSketch::SW)});
    }
    auto nw = parts.front().pen(svg::TangleSketch::NW);
    auto sw = parts.front().pen(svg::TangleSketch::SW);
    auto ne = parts.back().pen(svg::TangleSketch::NE);
    auto se = parts.back().pen(svg::TangleSketch::SE);
    scene.wire({nw, {nw.x - 0.7, -1.0}, {ne.x + 0.7, -1.0}, ne});
    scene.wire({sw, {sw.x - 0.7, bottom + 1.0}, {se.x + 0.7, bottom + 1.0}, se});
    return svg::emit(scene);
}

}  // namespace tanglecalc
