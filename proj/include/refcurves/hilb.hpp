// Copyright 2026 The refcurves Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REFCURVES_HILB_HPP
#define REFCURVES_HILB_HPP

#include <vector>

#include "refcurves/laurent.hpp"
#include "refcurves/partition.hpp"
#include "refcurves/toric.hpp"

namespace refcurves {

// Torus-fixed point of S^[n]: one monomial ideal (partition) per chart.
struct HilbFixedPoint {
  std::vector<Partition> partitions;
  int n = 0;
};

// Streams the fixed points of S^[n] for a surface with `charts` charts in a
// fixed order without materializing them.
class FixedPointStream {
 public:
  FixedPointStream(int charts, int n);
  // Writes the next fixed point into `out`; false once exhausted.
  bool next(HilbFixedPoint& out);

 private:
  bool advance_composition();

  int n_;
  std::vector<int> sizes_;
  std::vector<std::size_t> index_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<HilbFixedPoint> enumerate_fixed_points(const ToricSurfaceModel& s, int n);

// Number of fixed points, i.e. [q^n] prod_k (1 - q^k)^(-charts).
std::size_t count_fixed_points(int charts, int n);

// Tangent weights at the monomial ideal: per cell, (l+1) v - a w and
// -l v + (a+1) w with a = arm, l = leg. 2n weights.
std::vector<Weight> tangent_character(const ToricSurfaceModel& s, const HilbFixedPoint& fp);
void append_tangent_weights(const Chart& chart, const Partition& lambda, std::vector<Weight>& out);

// Weights of the fiber of L^[n]: per cell (r, c), mu - r v - c w. n weights.
std::vector<Weight> taut_character(const ToricSurfaceModel& s, const EquivLineBundle& L,
                                   const HilbFixedPoint& fp);
void append_taut_weights(const Chart& chart, const Weight& mu, const Partition& lambda,
                         std::vector<Weight>& out);

// Number of tangent weights pairing negatively with `covector`.
// Throws std::invalid_argument if the covector vanishes on a weight.
int bb_index(const ToricSurfaceModel& s, const HilbFixedPoint& fp, const Weight& covector);

// y^-n sum over fixed points of y^index, written in z = y^(1/2).
Laurent chi_y_bb(const ToricSurfaceModel& s, int n);

}  // namespace refcurves

#endif  // REFCURVES_HILB_HPP
