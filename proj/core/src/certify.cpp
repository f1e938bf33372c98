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

#include "conefix/certify.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "conefix/errors.hpp"

namespace conefix {

std::string_view to_string(CertificateStatus status)
{
  return status == CertificateStatus::Satisfied ? "Satisfied" : "Violated";
}

namespace {

void require_nonnegative(const Real &a, const Real &b)
{
  if (!(a >= 0) || !(b >= 0))
  {
    throw PreconditionError("certify needs a >= 0 and b >= 0, got a = " + format_real(a) +
                            ", b = " + format_real(b));
  }
}

}  // namespace

Certificate certify(const ConstraintSet &set, const Real &a, const Real &b)
{
  require_nonnegative(a, b);

  Certificate cert;
  cert.ab           = {a, b};
  cert.samples_used = set.pairs_sampled;
  cert.seed         = set.seed;

  Real                 worst = -std::numeric_limits<Real>::infinity();
  std::vector<Witness> violations;
  for (const auto &c : set.constraints)
  {
    EVector r      = constraint_residual(c, a, b);
    Real    scaled = -std::numeric_limits<Real>::infinity();
    for (std::size_t i = 0; i < r.size(); ++i)
    {
      scaled = std::max(scaled, Real(r[i] / order_scale(c.lhs[i])));
    }
    worst = std::max(worst, scaled);
    if (scaled > Real(kOrderTol))
    {
      violations.push_back({c.x, c.y, scaled, std::move(r)});
    }
  }
  cert.worst_residual = set.constraints.empty() ? Real(0) : worst;
  cert.status         = violations.empty() ? CertificateStatus::Satisfied : CertificateStatus::Violated;

  const auto keep = std::min(kMaxWitnesses, violations.size());
  std::partial_sort(violations.begin(), violations.begin() + static_cast<std::ptrdiff_t>(keep), violations.end(),
                    [](const Witness &l, const Witness &r) {
                      if (l.residual != r.residual)
                      {
                        return l.residual > r.residual;
                      }
                      return std::tie(l.x, l.y) < std::tie(r.x, r.y);
                    });
  violations.resize(keep);
  cert.witnesses = std::move(violations);
  return cert;
}

Certificate certify(const MappingPair &pair, const Real &a, const Real &b, std::size_t sample_count,
                    std::uint64_t seed)
{
  require_nonnegative(a, b);
  return certify(build_constraints(pair, sample_count, seed), a, b);
}

}  // namespace conefix
