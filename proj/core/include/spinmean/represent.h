// Copyright 2026 The spinmean Authors
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

#ifndef SPINMEAN_REPRESENT_H
#define SPINMEAN_REPRESENT_H

#include "spinmean/qcore.h"

/// Conversions between the four descriptions of a qubit state: mean spin
/// projections, +1/2 probabilities along x/y/z, density matrix and spinor.
///
/// The mean triple is the hub. p_k = 1/2 + <s_k>, and
///
///     rho = [[1/2 + sz, sx - i sy],
///            [sx + i sy, 1/2 - sz]].
namespace spinmean {

/// (p1 - 1/2, p2 - 1/2, p3 - 1/2).
MeanSpinVector means_from_probabilities(const ProbabilityTriple &p);

/// (1/2 + sx, 1/2 + sy, 1/2 + sz). Inverts means_from_probabilities bit for
/// bit on every probability that is a multiple of 2^-53.
ProbabilityTriple probabilities_from_means(const MeanSpinVector &m);

DensityMatrix2 density_from_means(const MeanSpinVector &m);

/// Builds rho directly from the probability triple.
DensityMatrix2 density_from_probabilities(const ProbabilityTriple &p);

/// sz = (rho00 - rho11)/2, sx + i sy = rho10.
MeanSpinVector means_from_density(const DensityMatrix2 &rho);

/// Normalizes internally, so unnormalized spinors are accepted. The result
/// is always pure. Throws ZeroSpinor.
MeanSpinVector means_from_state(const Spinor &s);

/// Returns e^{i alpha} (sqrt(1/2 + sz), (sx + i sy) / sqrt(1/2 + sz)),
/// renormalized to unit norm.
///
/// With alpha = 0 the first component is real and non-negative, the gauge in
/// which the superposition rule is written. At the south pole
/// (1/2 + sz < 1e-12) the result is e^{i alpha} (0, 1).
///
/// Throws NotPure when | |m|^2 - 1/4 | > 1e-10. Slightly impure estimates
/// must be projected by the caller first (see project_to_pure).
Spinor state_from_means(const MeanSpinVector &m, double alpha = 0);

}  // namespace spinmean

#endif
