#include "excseq/svg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace excseq {
namespace {

constexpr double kSize = 440.0;
constexpr double kCenter = 220.0;
constexpr double kRadius = 170.0;
constexpr double kLabelRadius = 198.0;

// Locale-independent fixed-point with exactly two decimals.
std::string fixed2(double value) {
  long long cents = std::llround(value * 100.0);
  std::string sign;
  if (cents < 0) {
    sign = "-";
    cents = -cents;
  }
  std::string out = std::to_string(cents / 100);
  const long long frac = cents % 100;
  out += '.';
  out += static_cast<char>('0' + frac / 10);
  out += static_cast<char>('0' + frac % 10);
  return sign + out;
}

struct Point {
  double x, y;
};

Point point_at(int k, int n, double radius) {
  const double angle =
      std::numbers::pi / 2 + 2.0 * std::numbers::pi * k / (n + 1);
  return {kCenter + radius * std::cos(angle), kCenter - radius * std::sin(angle)};
}

}  // namespace

std::string render_svg(const NCTree& tree) {
  const TreeCheck check = check_nc_spanning_tree(tree.chords, tree.n);
  if (!check.ok) throw std::invalid_argument("not a non-crossing spanning tree: " + check.detail);

  const int n = tree.n;
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) points.push_back(point_at(k, n, kRadius));

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed2(kSize) +
         "\" height=\"" + fixed2(kSize) + "\" viewBox=\"0 0 " + fixed2(kSize) + " " +
         fixed2(kSize) + "\">\n";
  svg += "  <circle class=\"disk\" cx=\"" + fixed2(kCenter) + "\" cy=\"" + fixed2(kCenter) +
         "\" r=\"" + fixed2(kRadius) + "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";

  for (const Chord& c : tree.chords) {
    const Point& a = points[static_cast<std::size_t>(c.p)];
    const Point& b = points[static_cast<std::size_t>(c.q)];
    svg += "  <line class=\"chord\" x1=\"" + fixed2(a.x) + "\" y1=\"" + fixed2(a.y) + "\" x2=\"" +
           fixed2(b.x) + "\" y2=\"" + fixed2(b.y) +
           "\" stroke=\"#1f6feb\" stroke-width=\"2\"/>\n";
  }
  for (int k = 0; k <= n; ++k) {
    const Point& p = points[static_cast<std::size_t>(k)];
    svg += "  <circle class=\"point\" cx=\"" + fixed2(p.x) + "\" cy=\"" + fixed2(p.y) +
           "\" r=\"4.00\" fill=\"#24292f\"/>\n";
  }
  for (int k = 0; k <= n; ++k) {
    const Point p = point_at(k, n, kLabelRadius);
    svg += "  <text class=\"label\" x=\"" + fixed2(p.x) + "\" y=\"" + fixed2(p.y) +
           "\" text-anchor=\"middle\" dominant-baseline=\"central\" font-family=\"sans-serif\" "
           "font-size=\"16\">" +
           std::to_string(k) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace excseq
