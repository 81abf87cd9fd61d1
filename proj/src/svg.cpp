#include "rectlay/svg.hpp"

#include <algorithm>
#include <sstream>

#include "rectlay/errors.hpp"

namespace rectlay {

std::string render_svg(const Layout& l, const RenderStyle& style) {
  if (style.scale < 1) throw InvalidParameters("render scale must be at least 1");
  const Coord s = style.scale;
  const BBox box = bounding_box(l);
  const Coord w = box.width() * s, h = box.height() * s;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w + 2 << "\" height=\"" << h + 2
      << "\" viewBox=\"-1 -1 " << w + 2 << ' ' << h + 2 << "\">\n";
  for (const auto& r : l.rects) {
    const Coord x = (r.x - box.x0) * s, y = (box.y1 - r.top()) * s;
    out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << r.w * s << "\" height=\"" << r.h * s << '"';
    if (r.gap())
      out << " class=\"gap\" fill=\"" << (style.shade_gaps ? "#bbbbbb" : "none") << "\" stroke=\"#888888\"";
    else
      out << " class=\"vertex\" data-id=\"" << r.id << "\" fill=\"#ffffff\" stroke=\"#000000\"";
    out << " stroke-width=\"1\"/>\n";
  }
  if (style.labels)
    for (const auto& r : l.rects) {
      if (r.gap()) continue;
      const Coord cx = (r.x - box.x0) * s + r.w * s / 2, cy = (box.y1 - r.top()) * s + r.h * s / 2;
      out << "  <text x=\"" << cx << "\" y=\"" << cy
          << "\" text-anchor=\"middle\" dominant-baseline=\"central\" font-family=\"monospace\" font-size=\""
          << std::max<Coord>(6, s / 2) << "\">" << r.id << "</text>\n";
    }
  out << "</svg>\n";
  return out.str();
}

}  // namespace rectlay
