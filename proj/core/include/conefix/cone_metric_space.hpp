//------------------------------------------------------------------------------
//
//   Copyright 2026 The conefix Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conefix/cone.hpp"
#include "conefix/evector.hpp"
#include "conefix/norm.hpp"
#include "conefix/point.hpp"

namespace conefix {

using MetricFn = std::function<EVector(const Point &, const Point &)>;

/// A point domain M with an E-valued metric d: M x M -> P.
///
/// The metric is an opaque map; the axioms are checked empirically through
/// check_metric_axioms rather than enforced at construction.
class ConeMetricSpace
{
public:
  ConeMetricSpace(std::string label, PointDomain domain, Cone cone, MetricFn metric,
                  NormSpec norm = NormSpec::sup());

  const std::string &label() const noexcept { return label_; }
  const PointDomain &domain() const noexcept { return domain_; }
  const Cone &       cone() const noexcept { return cone_; }
  const NormSpec &   norm() const noexcept { return norm_; }
  std::size_t        e_dim() const noexcept { return cone_.dim(); }

  /// d(x, y). The metric is also evaluated on T-images, which need not lie
  /// in the domain, so no domain check happens here.
  EVector distance(const Point &x, const Point &y) const;

  /// ||d(x, y)||.
  Real distance_norm(const Point &x, const Point &y) const { return norm_(distance(x, y)); }

private:
  std::string label_;
  PointDomain domain_;
  Cone        cone_;
  MetricFn    metric_;
  NormSpec    norm_;
};

/// Default resolution for sampling e^t on [0, 1].
inline constexpr std::size_t kExpGridPoints = 8;

/// (e^{t_0}, ..., e^{t_{n-1}}) with t_j = j/(n-1) on [0, 1].
EVector exp_grid(std::size_t points = kExpGridPoints);

/// d(x, y) = |x - y| * w, with |.| the Euclidean distance of points.
MetricFn weighted_abs_metric(EVector weights);

/// E = R, d(x, y) = |x - y|.
ConeMetricSpace abs_metric_space(std::string label, PointDomain domain);

/// E = C[0,1] sampled on a uniform grid, d(x, y) = |x - y| e^t.
ConeMetricSpace exp_weighted_space(std::string label, PointDomain domain,
                                   std::size_t grid_points = kExpGridPoints);

/// E = R^2, d(x, y) = (|x - y|, alpha |x - y|).
ConeMetricSpace scaled_pair_space(std::string label, PointDomain domain, const Real &alpha);

struct AxiomResult
{
  std::string name;
  bool        passed = true;
  /// Largest tolerance-scaled violation seen; zero when passed cleanly.
  Real worst_violation = 0;
  /// Points realising the worst violation: (x, y) or (x, y, z).
  std::vector<Point> witness;
};

struct AxiomReport
{
  AxiomResult   positivity;
  AxiomResult   symmetry;
  AxiomResult   triangle;
  std::size_t   samples_used = 0;
  std::uint64_t seed         = 0;

  bool all_passed() const { return positivity.passed && symmetry.passed && triangle.passed; }
};

/// Samples triples from the domain (a lattice with odd resolution first,
/// then seeded random triples) and checks positivity, symmetry and the
/// triangle inequality under the cone order.
AxiomReport check_metric_axioms(const ConeMetricSpace &space, std::size_t sample_count,
                                std::uint64_t seed);

/// Lower bound on the normal constant: the largest ||x|| / ||y|| over sampled
/// pairs 0 <= x <= y. Vertex pairs of the unit box come first in the sample
/// stream, then seeded random pairs; a longer stream never lowers the value.
Real estimate_normal_constant(const Cone &cone, const NormSpec &norm, std::size_t sample_count,
                              std::uint64_t seed);

}  // namespace conefix
