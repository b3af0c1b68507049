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

#pragma once

#include <span>
#include <vector>

#include "entcorr/scanner.hpp"

namespace entcorr {

struct ContourPoint {
  double g = 0.0;
  double gp = 0.0;
};

struct Contour {
  double level = 0.0;
  std::vector<ContourPoint> points;
  bool closed = false;  // last point connects back to the first
};

/// Marching squares over the cell-centre samples of `grid`, restricted to
/// squares whose four corners carry an eps value (bona-fide cells).
///
/// Crossings are located by linear interpolation of eps^2 - level^2 along
/// each edge; for the direct and swap fields eps^2 is bilinear in (g, g'),
/// so the crossings are exact. Saddles are resolved with the mean of the
/// four corners. Polylines are returned in discovery order.
std::vector<Contour> boundary_curves(const ScanGrid& grid, std::span<const double> levels);

/// Contours at eps = 1 and eps = e^-1.
std::vector<Contour> boundary_curves(const ScanGrid& grid);
std::vector<Contour> boundary_curves(const ScanSpec& spec, std::size_t threads = 1);

}  // namespace entcorr
