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

#ifndef SPINMEAN_SUPERPOSE_H
#define SPINMEAN_SUPERPOSE_H

#include <utility>

#include "spinmean/qcore.h"

/// Superposition of two pure qubit states written entirely in terms of mean
/// spin projections.
///
/// Inputs are the mean triples a = (sx, sy, sz) and b = (Sx, Sy, Sz) of two
/// pure states and a sigma triple encoding the coefficients (c1, c2). Both
/// states are taken in the gauge where the first spinor component is real and
/// non-negative, and c1 is real and non-negative. The output is the mean
/// triple of c1|a> + c2|b>, renormalized.
///
/// Two independent routes are provided:
///   * superpose_closed: real arithmetic on the nine input numbers only.
///   * superpose_oracle: builds the spinors, adds them, reads the means off.
/// superpose_checked runs both and refuses to answer when they disagree.
namespace spinmean {

/// Minimum allowed value of 1/2 + sz for either input state. The spinor
/// parametrization divides by its square root.
inline constexpr double kPoleMargin = 1e-8;
/// T below which the superposition is treated as complete cancellation.
inline constexpr double kDegenerateT = 1e-12;
/// Sup-norm threshold on the means for superpose_checked.
inline constexpr double kCheckedMeansTolerance = 1e-8;
/// Threshold on |T_closed - T_oracle| for superpose_checked.
inline constexpr double kCheckedTTolerance = 1e-10;

enum class SuperposeMethod { closed_form, oracle };

struct SuperpositionResult {
    MeanSpinVector means_out;
    /// Squared norm of c1|a> + c2|b> before normalization.
    double normalization_t;
    SuperposeMethod method;
};

struct CheckedSuperposition {
    /// The closed-form result.
    SuperpositionResult result;
    /// Sup-norm distance between the closed-form and oracle mean triples.
    double means_deviation;
    /// |T_closed - T_oracle|.
    double t_deviation;
};

/// Coefficients (c1, c2) in the gauge c1 >= 0.
struct Coefficients {
    Complex c1;
    Complex c2;
};

/// Multiplies both coefficients by e^{-i arg c1} so that c1 becomes real and
/// non-negative. Leaves (0, c2) untouched.
Coefficients fix_coefficient_gauge(Complex c1, Complex c2);

/// Sigma3 = |c1|^2 - 1/2, Sigma1 + i Sigma2 = c1 c2.
///
/// Throws NotNormalized unless |c1|^2 + |c2|^2 = 1 within 1e-10 and
/// NonzeroC1Phase unless c1 is real and non-negative within 1e-10.
SigmaTriple sigma_from_coefficients(Complex c1, Complex c2);

/// c1 = sqrt(1/2 + Sigma3), c2 = (Sigma1 + i Sigma2) / c1. When
/// 1/2 + Sigma3 < 1e-12 the coefficients are (0, 1) by convention.
Coefficients coefficients_from_sigma(const SigmaTriple &sig);

/// <chi|chi> for chi = c1|a> + c2|b>, evaluated from the means:
///
///     T = 1 + 2 / sqrt((1/2+sz)(1/2+Sz))
///           * [ Sigma1 (Sx sx + Sy sy + (1/2+sz)(1/2+Sz))
///             + Sigma2 (sy Sx - sx Sy) ].
///
/// Throws NotPure or PoleError when a or b violate the preconditions.
double normalization_t(const MeanSpinVector &a, const MeanSpinVector &b, const SigmaTriple &sig);

SuperpositionResult superpose_closed(const MeanSpinVector &a, const MeanSpinVector &b, const SigmaTriple &sig);

SuperpositionResult superpose_oracle(const MeanSpinVector &a, const MeanSpinVector &b, const SigmaTriple &sig);

/// Throws CrossCheckMismatch when the routes differ by more than
/// kCheckedMeansTolerance on the means or kCheckedTTolerance on T.
CheckedSuperposition superpose_checked(const MeanSpinVector &a, const MeanSpinVector &b, const SigmaTriple &sig);

}  // namespace spinmean

#endif
