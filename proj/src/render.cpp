#include "crossfold/render.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "crossfold/hypercube.hpp"

namespace crossfold {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << v;
    return os.str();
}

void svg_open(std::ostringstream& os, double w, double h) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(w)
       << "\" height=\"" << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\">\n";
}

void svg_caption(std::ostringstream& os, const std::string& text) {
    os << "  <text x=\"12\" y=\"22\" font-family=\"monospace\" font-size=\"16\">" << text
       << "</text>\n";
}

}  // namespace

std::string render_gamma_svg(const ArcDrawing& d, std::int64_t crossings) {
    if (d.n > kMaxRenderGamma) throw std::out_of_range("render_gamma_svg: n <= 8");

    double scale = 44.0;
    double margin = 40.0;
    double positions = static_cast<double>(std::size_t(1) << d.n);
    double max_span = positions - 1.0;
    double hscale = 140.0 / std::max(max_span, 1.0);  // arc height per unit span
    double axis_y = margin + 150.0;
    double width = margin * 2 + (positions - 1) * scale;
    double height = axis_y + 150.0 + margin;

    std::ostringstream os;
    svg_open(os, width, height);
    svg_caption(os, "gamma n=" + std::to_string(d.n) + ", crossings = " + std::to_string(crossings));
    os << "  <line x1=\"" << fmt(margin - 14) << "\" y1=\"" << fmt(axis_y) << "\" x2=\""
       << fmt(width - margin + 14) << "\" y2=\"" << fmt(axis_y)
       << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";

    auto xpix = [&](const Rational& coord) { return margin + coord.to_double() * scale; };

    for (const ArcSegment& s : d.segments) {
        double x1 = xpix(s.left), x2 = xpix(s.right);
        double span = s.right.to_double() - s.left.to_double();
        double h = span * hscale;  // proportional to span; apex sits at half the control offset
        double ctrl_y = (s.half == HalfPlane::upper) ? axis_y - 2.0 * h : axis_y + 2.0 * h;
        os << "  <path d=\"M " << fmt(x1) << " " << fmt(axis_y) << " Q " << fmt((x1 + x2) / 2)
           << " " << fmt(ctrl_y) << " " << fmt(x2) << " " << fmt(axis_y)
           << "\" fill=\"none\" stroke=\"#2b5f9e\" stroke-width=\"1.3\"/>\n";
    }

    for (std::size_t x = 0; x < d.vertex_position.size(); ++x) {
        double px = margin + d.vertex_position[x] * scale;
        os << "  <circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(axis_y)
           << "\" r=\"3\" fill=\"#222222\"/>\n";
        os << "  <text x=\"" << fmt(px) << "\" y=\"" << fmt(axis_y + 18)
           << "\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">"
           << VertexLabel(d.n, x).bits() << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_d3_svg(const CoordinateDrawing& d, std::int64_t crossings) {
    double scale = 70.0;
    double half = 3.0 * scale;
    double width = 2 * half, height = 2 * half;
    auto px = [&](const Rational& v) { return half + v.to_double() * scale; };
    auto py = [&](const Rational& v) { return half - v.to_double() * scale; };

    std::ostringstream os;
    svg_open(os, width, height);
    svg_caption(os, "crossings = " + std::to_string(crossings));
    for (auto [a, b] : d.edges)
        os << "  <line x1=\"" << fmt(px(d.points[a].x)) << "\" y1=\"" << fmt(py(d.points[a].y))
           << "\" x2=\"" << fmt(px(d.points[b].x)) << "\" y2=\"" << fmt(py(d.points[b].y))
           << "\" stroke=\"#2b5f9e\" stroke-width=\"1.3\"/>\n";
    for (std::size_t i = 0; i < d.vertices.size(); ++i) {
        double cx = px(d.points[i].x), cy = py(d.points[i].y);
        os << "  <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy)
           << "\" r=\"4\" fill=\"#222222\"/>\n";
        os << "  <text x=\"" << fmt(cx + 8) << "\" y=\"" << fmt(cy - 8)
           << "\" font-family=\"monospace\" font-size=\"12\">" << d.vertices[i].bits()
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace crossfold
