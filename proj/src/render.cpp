#include "melon/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <tuple>

namespace melon {

namespace {

std::string header(const Watermelon& w) {
  std::ostringstream os;
  os << "watermelon N=" << w.n << " M=" << w.m << " k=" << w.k << " lambda=" << w.lambda.to_string()
     << " volume=" << w.volume();
  return os.str();
}

std::string ascii_watermelon(const Watermelon& w) {
  const auto paths = lattice_paths(w);
  const int width = 2 * static_cast<int>(w.n);   // columns 0 .. 2N-1
  const int height = static_cast<int>(w.n) + w.m;  // heights 0 .. N+M-1
  const int cols = 2 * width - 1;
  const int rows = 2 * height - 1;
  std::vector<std::string> canvas(static_cast<std::size_t>(std::max(rows, 0)),
                                  std::string(static_cast<std::size_t>(std::max(cols, 0)), ' '));
  auto at = [&](int cx, int cy) -> char& {
    return canvas[static_cast<std::size_t>(rows - 1 - cy)][static_cast<std::size_t>(cx)];
  };
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) at(2 * x, 2 * y) = '.';
  }
  for (const auto& path : paths) {
    for (std::size_t s = 0; s < path.size(); ++s) {
      at(2 * path[s].x, 2 * path[s].y) = '+';
      if (s == 0) continue;
      const auto& a = path[s - 1];
      const auto& b = path[s];
      if (a.x != b.x) at(2 * a.x + 1, 2 * a.y) = '-';
      else at(2 * a.x, 2 * a.y + 1) = '|';
    }
  }
  const auto starts = watermelon_starts(w.n);
  const auto shifted = watermelon_deviation_starts(w.n, w.k);
  const auto ends = watermelon_ends(w.n, w.m);
  for (std::size_t i = 0; i < w.n; ++i) {
    at(2 * starts[i].x, 2 * starts[i].y) = 'o';
    at(2 * ends[i].x, 2 * ends[i].y) = '*';
    if (w.k > 0 && std::find(paths[i].begin(), paths[i].end(), shifted[i]) != paths[i].end()) {
      at(2 * shifted[i].x, 2 * shifted[i].y) = 'd';
    }
  }
  std::ostringstream os;
  os << header(w) << '\n';
  for (auto& line : canvas) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

std::string svg_watermelon(const Watermelon& w) {
  constexpr int kStep = 20;
  constexpr int kMargin = 20;
  const auto paths = lattice_paths(w);
  const int width = 2 * static_cast<int>(w.n);
  const int height = static_cast<int>(w.n) + w.m;
  const int px_w = 2 * kMargin + (width - 1) * kStep;
  const int px_h = 2 * kMargin + (height - 1) * kStep;
  auto px = [&](const LatticePoint& p) {
    return std::pair<int, int>{kMargin + p.x * kStep, px_h - kMargin - p.y * kStep};
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px_w << "\" height=\"" << px_h << "\" viewBox=\"0 0 "
     << px_w << ' ' << px_h << "\">\n";
  os << "<title>" << header(w) << "</title>\n";
  os << "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (int x = 0; x < width; ++x) {
    const auto [x0, y0] = px({x, 0});
    const auto [x1, y1] = px({x, height - 1});
    os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y1 << "\"/>\n";
  }
  for (int y = 0; y < height; ++y) {
    const auto [x0, y0] = px({0, y});
    const auto [x1, y1] = px({width - 1, y});
    os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y1 << "\"/>\n";
  }
  os << "</g>\n<g fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"3\">\n";
  for (const auto& path : paths) {
    os << "<polyline points=\"";
    for (std::size_t s = 0; s < path.size(); ++s) {
      const auto [x, y] = px(path[s]);
      os << (s ? " " : "") << x << ',' << y;
    }
    os << "\"/>\n";
  }
  os << "</g>\n";
  for (const auto& p : watermelon_starts(w.n)) {
    const auto [x, y] = px(p);
    os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\"#2a9d3a\"/>\n";
  }
  for (const auto& p : watermelon_ends(w.n, w.m)) {
    const auto [x, y] = px(p);
    os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\"#c0392b\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string ascii_plane_partition(const BoxedPlanePartition& box) {
  std::ostringstream os;
  os << "plane partition in B(N=" << box.n << ",L=" << box.l << ",M=" << box.m << ") volume=" << box.pi.volume()
     << '\n';
  const auto& pi = box.pi;
  int digits = 1;
  for (int v = std::max(box.m, 1); v >= 10; v /= 10) ++digits;
  for (std::size_t i = 0; i < pi.rows(); ++i) {
    for (std::size_t j = 0; j < pi.cols(); ++j) {
      const std::string cell = std::to_string(pi(i, j));
      if (j) os << ' ';
      os << std::string(static_cast<std::size_t>(digits) - cell.size(), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

// Isometric projection: unit cube corner (x, y, z) with x along columns
// (j), y along rows (i) and z up.
std::string svg_plane_partition(const BoxedPlanePartition& box) {
  constexpr int kUnit = 20;
  const auto n = static_cast<int>(box.n);
  const auto l = static_cast<int>(box.l);
  const int m = box.m;
  // Screen coordinates scaled so everything stays integral:
  // sx = (x - y) * 2u, sy = (x + y) * u - z * 2u.
  auto project = [&](int x, int y, int z) { return std::pair<int, int>{(x - y) * 2 * kUnit, (x + y - 2 * z) * kUnit}; };
  const int min_x = -l * 2 * kUnit;
  const int max_x = n * 2 * kUnit;
  const int min_y = -2 * m * kUnit;
  const int max_y = (n + l) * kUnit;
  const int pad = kUnit;
  const int width = max_x - min_x + 2 * pad;
  const int height = max_y - min_y + 2 * pad;
  auto point = [&](int x, int y, int z) {
    const auto [sx, sy] = project(x, y, z);
    return std::to_string(sx - min_x + pad) + "," + std::to_string(sy - min_y + pad);
  };
  auto face = [&](std::ostringstream& os, const std::array<std::array<int, 3>, 4>& c, const char* fill) {
    os << "<polygon points=\"";
    for (std::size_t v = 0; v < 4; ++v) os << (v ? " " : "") << point(c[v][0], c[v][1], c[v][2]);
    os << "\" fill=\"" << fill << "\"/>\n";
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
     << width << ' ' << height << "\">\n";
  os << "<title>plane partition in B(" << n << "," << l << "," << m << ") volume=" << box.pi.volume() << "</title>\n";
  // Back walls of the box.
  os << "<g fill=\"none\" stroke=\"#999999\" stroke-width=\"1\">\n";
  os << "<polygon points=\"" << point(0, 0, 0) << ' ' << point(n, 0, 0) << ' ' << point(n, 0, m) << ' '
     << point(0, 0, m) << "\"/>\n";
  os << "<polygon points=\"" << point(0, 0, 0) << ' ' << point(0, l, 0) << ' ' << point(0, l, m) << ' '
     << point(0, 0, m) << "\"/>\n";
  os << "<polygon points=\"" << point(0, 0, 0) << ' ' << point(n, 0, 0) << ' ' << point(n, l, 0) << ' '
     << point(0, l, 0) << "\"/>\n";
  os << "</g>\n<g stroke=\"#333333\" stroke-width=\"1\">\n";
  // Painter's order: cubes nearer the viewer (larger x + y + z) last.
  std::vector<std::tuple<int, int, int>> cubes;
  for (int y = 0; y < l; ++y) {
    for (int x = 0; x < n; ++x) {
      for (int z = 0; z < box.pi(static_cast<std::size_t>(y), static_cast<std::size_t>(x)); ++z) cubes.emplace_back(x, y, z);
    }
  }
  std::stable_sort(cubes.begin(), cubes.end(), [](const auto& a, const auto& b) {
    const auto [ax, ay, az] = a;
    const auto [bx, by, bz] = b;
    return ax + ay + az < bx + by + bz;
  });
  for (const auto& [x, y, z] : cubes) {
    face(os, {{{x, y, z + 1}, {x + 1, y, z + 1}, {x + 1, y + 1, z + 1}, {x, y + 1, z + 1}}}, "#f2d16b");
    face(os, {{{x, y + 1, z}, {x + 1, y + 1, z}, {x + 1, y + 1, z + 1}, {x, y + 1, z + 1}}}, "#5b8cc9");
    face(os, {{{x + 1, y, z}, {x + 1, y + 1, z}, {x + 1, y + 1, z + 1}, {x + 1, y, z + 1}}}, "#c95b5b");
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace

std::string render_watermelon(const Watermelon& w, RenderStyle style) {
  return style == RenderStyle::Svg ? svg_watermelon(w) : ascii_watermelon(w);
}

std::string render_plane_partition(const BoxedPlanePartition& box, RenderStyle style) {
  return style == RenderStyle::Svg ? svg_plane_partition(box) : ascii_plane_partition(box);
}

}  // namespace melon
