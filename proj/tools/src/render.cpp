#include "render.hpp"

#include <array>
#include <cstdio>
#include <sstream>

namespace schottky::cli {
namespace {

constexpr std::array<const char*, 6> kPalette = {"#1f4e79", "#c0504d", "#4f8a3a", "#8064a2", "#d08a1c", "#2aa1a8"};
constexpr double kMinRadiusPx = 0.1;
constexpr double kMarkerPx = 1.5;

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

struct Drawn {
  Interval center;
  Interval radius;
};

template <Scalar T>
std::vector<std::vector<Drawn>> collect(const GeneratorSchedule& schedule, const RenderOptions& options) {
  std::vector<std::vector<Drawn>> levels;
  const auto tree = build_disk_tree<T>(schedule, options.window, options.depth,
                                       DiskTreeOptions{std::nullopt, options.backend.bits});
  for (const auto& level : tree.levels) {
    std::vector<Drawn> out;
    for (const auto& node : level) {
      out.push_back({to_interval(node.disk.center, options.backend.bits),
                     to_interval(node.disk.radius, options.backend.bits)});
    }
    levels.push_back(std::move(out));
  }
  return levels;
}

}  // namespace

std::string render_svg(const GeneratorSchedule& schedule, const RenderOptions& options) {
  const auto levels = options.backend.kind == BackendKind::exact ? collect<Rational>(schedule, options)
                                                                 : collect<Interval>(schedule, options);
  const mpfr_prec_t prec = options.backend.bits;
  const auto& first = schedule.entry(options.window.first());
  const auto& last = schedule.entry(options.window.last());
  const Rational lo = first.center - first.radius;
  const Rational hi = last.center + last.radius;
  const Rational margin = (hi - lo) / 20;
  const Rational x0 = lo - margin;
  const Rational span = hi - lo + 2 * margin;

  const int width = options.width;
  const int height = width / 2;
  const double axis_y = height * 0.9;
  const Interval scale = Interval(Rational(width), prec) / Interval(span, prec);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "  <desc>window k=" << options.window.k << " m=" << options.window.m << ", depth " << options.depth
      << ", x from " << to_decimal(x0, 12) << " to " << to_decimal(x0 + span, 12) << "</desc>\n";
  svg << "  <style>circle{fill:none;stroke-width:1}circle.tiny{fill:currentColor;stroke:none;opacity:0.7}</style>\n";
  svg << "  <line x1=\"0\" y1=\"" << fmt(axis_y) << "\" x2=\"" << width << "\" y2=\"" << fmt(axis_y)
      << "\" stroke=\"#888\" stroke-width=\"0.5\"/>\n";
  for (std::size_t n = 0; n < levels.size(); ++n) {
    const char* color = options.color_by_level ? kPalette[n % kPalette.size()] : kPalette[0];
    for (const auto& d : levels[n]) {
      const double cx = ((d.center - Interval(x0, prec)) * scale).mid();
      const double r = (d.radius * scale).mid();
      if (r < kMinRadiusPx) {
        svg << "  <circle class=\"tiny level-" << n + 1 << "\" cx=\"" << fmt(cx) << "\" cy=\"" << fmt(axis_y)
            << "\" r=\"" << fmt(kMarkerPx) << "\" color=\"" << color << "\"/>\n";
      } else {
        svg << "  <circle class=\"level-" << n + 1 << "\" cx=\"" << fmt(cx) << "\" cy=\"" << fmt(axis_y)
            << "\" r=\"" << fmt(r) << "\" stroke=\"" << color << "\"/>\n";
      }
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace schottky::cli
