#include "wil/svg.hpp"

#include <cstdio>

namespace wil {

namespace {

struct View {
  Point center;
  double scale;
  double half;

  double sx(double x) const { return half + (x - center.x) * scale; }
  double sy(double y) const { return half - (y - center.y) * scale; }
};

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

}  // namespace

std::string render_svg(const LayoutFile& file, const SvgOptions& options) {
  const double envelope = file.envelope_radius();
  const Point mc = std::visit([](const auto& l) { return l.mass_center; }, file.layout);
  const double half = 0.5 * options.canvas;
  const View view{mc, (half - options.margin) / envelope, half};

  std::string out;
  out += fmt(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
      "viewBox=\"0 0 %.0f %.0f\">\n",
      options.canvas, options.canvas, options.canvas, options.canvas);
  out += fmt("<rect width=\"%.0f\" height=\"%.0f\" fill=\"white\"/>\n", options.canvas,
             options.canvas);

  std::visit(
      [&](const auto& l) {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, CircleLayout>) {
          for (const auto& pc : l.placed)
            out += fmt(
                "<circle class=\"item\" data-id=\"%d\" cx=\"%.6f\" cy=\"%.6f\" r=\"%.6f\" "
                "fill=\"#9ecae1\" stroke=\"#08519c\"/>\n",
                pc.item.id, view.sx(pc.center.x), view.sy(pc.center.y), pc.item.radius * view.scale);
        } else {
          for (const auto& pr : l.placed) {
            const Bounds b = rect_bounds(pr.item, pr.placement);
            out += fmt(
                "<rect class=\"item\" data-id=\"%d\" x=\"%.6f\" y=\"%.6f\" width=\"%.6f\" "
                "height=\"%.6f\" fill=\"#a1d99b\" stroke=\"#006d2c\"/>\n",
                pr.item.id, view.sx(b.xmin), view.sy(b.ymax), (b.xmax - b.xmin) * view.scale,
                (b.ymax - b.ymin) * view.scale);
          }
        }
      },
      file.layout);

  out += fmt(
      "<circle class=\"envelope\" cx=\"%.6f\" cy=\"%.6f\" r=\"%.6f\" fill=\"none\" "
      "stroke=\"#d62728\" stroke-dasharray=\"6,4\"/>\n",
      view.sx(mc.x), view.sy(mc.y), envelope * view.scale);
  out += fmt(
      "<circle class=\"mass-center\" cx=\"%.6f\" cy=\"%.6f\" r=\"3\" fill=\"#d62728\"/>\n",
      view.sx(mc.x), view.sy(mc.y));
  out += "</svg>\n";
  return out;
}

}  // namespace wil
