#include "levelplan/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "levelplan/crossings.hpp"

namespace levelplan {

namespace {

constexpr int kDx = 40;
constexpr int kDy = 60;

std::string fixed2(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", value);
  return buffer;
}

}  // namespace

bool is_dummy_vertex(const ProperLevelGraph& graph, const std::string& id) {
  if (graph.is_dummy(id)) {
    return true;
  }
  const auto first = id.find("__");
  if (first == std::string::npos) {
    return false;
  }
  const auto second = id.find("__", first + 2);
  if (second == std::string::npos) {
    return false;
  }
  const std::string k = id.substr(second + 2);
  if (k.empty() || !std::all_of(k.begin(), k.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return false;
  }
  return graph.graph().contains(id.substr(0, first)) &&
         graph.graph().contains(id.substr(first + 2, second - first - 2));
}

std::string render_svg(const ProperLevelGraph& graph, const Drawing& drawing, const SvgOptions& options) {
  const auto& index = graph.index();
  const auto pos = positions(index, drawing);
  int max_width = 0;
  for (int s = 0; s < static_cast<int>(index.levels().size()); ++s) {
    max_width = std::max(max_width, static_cast<int>(index.members(s).size()));
  }
  const int max_level = index.levels().empty() ? 0 : index.levels().back();
  const int width = kDx * (max_width + 1);
  const int height = kDy * (max_level + 1);
  auto x = [&](int v) { return kDx * (pos[v] + 1); };
  auto y = [&](int v) { return kDy * index.level(v); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<g class=\"edges\" stroke=\"#444444\" stroke-width=\"1.5\">\n";
  for (const auto& e : index.edges()) {
    out << "<line x1=\"" << x(e.lower) << "\" y1=\"" << y(e.lower) << "\" x2=\"" << x(e.upper) << "\" y2=\""
        << y(e.upper) << "\"/>\n";
  }
  out << "</g>\n<g class=\"vertices\">\n";
  for (int v = 0; v < index.vertex_count(); ++v) {
    const bool dummy = is_dummy_vertex(graph, index.id(v));
    out << "<circle cx=\"" << x(v) << "\" cy=\"" << y(v) << (dummy ? "\" r=\"3\" fill=\"#888888\"/>\n"
                                                                    : "\" r=\"6\" fill=\"white\" stroke=\"black\"/>\n");
    if (options.labels && !dummy) {
      out << "<text x=\"" << x(v) + 8 << "\" y=\"" << y(v) - 8 << "\" font-size=\"10\">" << index.id(v)
          << "</text>\n";
    }
  }
  out << "</g>\n<g class=\"crossings\" fill=\"red\">\n";
  for (const auto& [a, b] : crossing_pairs(index, pos)) {
    const auto& e = index.edges()[a];
    const auto& f = index.edges()[b];
    const double t = static_cast<double>(x(f.lower) - x(e.lower)) /
                     static_cast<double>((x(e.upper) - x(e.lower)) - (x(f.upper) - x(f.lower)));
    const double cx = x(e.lower) + t * (x(e.upper) - x(e.lower));
    const double cy = y(e.lower) + t * kDy;
    out << "<circle class=\"crossing\" cx=\"" << fixed2(cx) << "\" cy=\"" << fixed2(cy) << "\" r=\"4\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace levelplan
