// Copyright 2026 The entcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entcorr/contour.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace entcorr {

namespace {

struct Segment {
  std::size_t a;  // edge keys
  std::size_t b;
};

class LevelTracer {
 public:
  LevelTracer(const ScanGrid& grid, double level) : grid_(grid), n_(grid.spec.resolution), level_(level) {
    field_.resize(n_ * n_, std::numeric_limits<double>::quiet_NaN());
    const double level_sq = level * level;
    for (std::size_t i = 0; i < field_.size(); ++i) {
      if (const auto& eps = grid.cells[i].eps) field_[i] = (*eps) * (*eps) - level_sq;
    }
  }

  std::vector<Contour> trace() {
    collect_segments();
    return chain();
  }

 private:
  double f(std::size_t row, std::size_t col) const { return field_[row * n_ + col]; }

  // Horizontal edge (row, col)-(row, col+1) and vertical edge (row, col)-(row+1, col).
  std::size_t h_edge(std::size_t row, std::size_t col) const { return 2 * (row * n_ + col); }
  std::size_t v_edge(std::size_t row, std::size_t col) const { return 2 * (row * n_ + col) + 1; }

  ContourPoint crossing(std::size_t key) const {
    const std::size_t node = key / 2;
    const std::size_t row = node / n_;
    const std::size_t col = node % n_;
    const bool vertical = key % 2 == 1;
    const std::size_t row_b = vertical ? row + 1 : row;
    const std::size_t col_b = vertical ? col : col + 1;
    const double fa = f(row, col);
    const double fb = f(row_b, col_b);
    const double t = fa / (fa - fb);
    const auto& spec = grid_.spec;
    const double g = spec.g_at(col) + t * (spec.g_at(col_b) - spec.g_at(col));
    const double gp = spec.gp_at(row) + t * (spec.gp_at(row_b) - spec.gp_at(row));
    return {g, gp};
  }

  void collect_segments() {
    for (std::size_t row = 0; row + 1 < n_; ++row) {
      for (std::size_t col = 0; col + 1 < n_; ++col) {
        // Corners in cyclic order; edge k joins corner k and corner k+1.
        const std::array<double, 4> v{f(row, col), f(row, col + 1), f(row + 1, col + 1),
                                      f(row + 1, col)};
        if (std::isnan(v[0]) || std::isnan(v[1]) || std::isnan(v[2]) || std::isnan(v[3])) continue;
        const std::array<std::size_t, 4> edge{h_edge(row, col), v_edge(row, col + 1),
                                              h_edge(row + 1, col), v_edge(row, col)};
        std::array<bool, 4> inside{};
        for (int k = 0; k < 4; ++k) inside[k] = v[k] < 0.0;

        std::array<std::size_t, 4> cut{};
        std::size_t n_cut = 0;
        for (int k = 0; k < 4; ++k) {
          if (inside[k] != inside[(k + 1) % 4]) cut[n_cut++] = static_cast<std::size_t>(k);
        }
        if (n_cut == 2) {
          segments_.push_back({edge[cut[0]], edge[cut[1]]});
        } else if (n_cut == 4) {
          // Saddle: cut off the two corners whose side the centre is not on.
          const bool centre_inside = (v[0] + v[1] + v[2] + v[3]) < 0.0;
          for (int k = 0; k < 4; ++k) {
            if (inside[k] != centre_inside) {
              segments_.push_back({edge[(k + 3) % 4], edge[k]});
            }
          }
        }
      }
    }
  }

  std::vector<Contour> chain() {
    std::unordered_map<std::size_t, std::vector<std::size_t>> touching;
    for (std::size_t s = 0; s < segments_.size(); ++s) {
      touching[segments_[s].a].push_back(s);
      touching[segments_[s].b].push_back(s);
    }
    std::vector<bool> used(segments_.size(), false);

    auto walk = [&](std::size_t start, std::size_t start_key) {
      Contour c{level_, {}, false};
      used[start] = true;
      std::size_t key = segments_[start].a == start_key ? segments_[start].b : segments_[start].a;
      c.points.push_back(crossing(start_key));
      c.points.push_back(crossing(key));
      for (;;) {
        std::size_t next = segments_.size();
        for (auto s : touching[key]) {
          if (!used[s]) {
            next = s;
            break;
          }
        }
        if (next == segments_.size()) break;
        used[next] = true;
        key = segments_[next].a == key ? segments_[next].b : segments_[next].a;
        if (key == start_key) {
          c.closed = true;
          break;
        }
        c.points.push_back(crossing(key));
      }
      return c;
    };

    std::vector<Contour> out;
    // Open polylines start at an edge used by a single segment.
    for (std::size_t s = 0; s < segments_.size(); ++s) {
      if (used[s]) continue;
      for (auto key : {segments_[s].a, segments_[s].b}) {
        if (touching[key].size() == 1) {
          out.push_back(walk(s, key));
          break;
        }
      }
    }
    for (std::size_t s = 0; s < segments_.size(); ++s) {
      if (!used[s]) out.push_back(walk(s, segments_[s].a));
    }
    return out;
  }

  const ScanGrid& grid_;
  std::size_t n_;
  double level_;
  std::vector<double> field_;
  std::vector<Segment> segments_;
};

}  // namespace

std::vector<Contour> boundary_curves(const ScanGrid& grid, std::span<const double> levels) {
  std::vector<Contour> out;
  for (double level : levels) {
    auto traced = LevelTracer(grid, level).trace();
    out.insert(out.end(), std::make_move_iterator(traced.begin()),
               std::make_move_iterator(traced.end()));
  }
  return out;
}

std::vector<Contour> boundary_curves(const ScanGrid& grid) {
  const std::array levels{1.0, distillability_threshold()};
  return boundary_curves(grid, levels);
}

std::vector<Contour> boundary_curves(const ScanSpec& spec, std::size_t threads) {
  return boundary_curves(scan(spec, threads));
}

}  // namespace entcorr
