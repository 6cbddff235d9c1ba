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

#ifndef SPINMEAN_QCORE_H
#define SPINMEAN_QCORE_H

#include <complex>

#include "spinmean/error.h"

/// Value types for a single spin-1/2 system and the handful of 2x2 complex
/// operations the rest of the library is built on.
///
/// Every type validates its invariants on construction and is immutable
/// afterwards, so a value that exists is a value that is valid. NaN and Inf
/// are rejected at every public boundary with ErrorCode::ValidationError.
namespace spinmean {

using Complex = std::complex<double>;

namespace tol {
/// Absolute tolerance for construction-time invariant checks.
inline constexpr double kConstruction = 1e-12;
/// Absolute tolerance when comparing two independent computation routes.
inline constexpr double kCrossCheck = 1e-10;
/// Allowed deviation of |m|^2 from 1/4 for a mean triple to count as pure.
inline constexpr double kPurity = 1e-10;
/// Allowed imaginary residue on a density-matrix diagonal.
inline constexpr double kDiagonalImag = 1e-14;
/// Squared norm at or below which a spinor is treated as the zero vector.
inline constexpr double kZeroNorm2 = 1e-24;
}  // namespace tol

/// Unvalidated real 3-vector. Used for raw estimates that may sit outside
/// the Bloch ball before they are projected back onto it.
struct Vec3 {
    double x = 0;
    double y = 0;
    double z = 0;

    double norm2() const {
        return x * x + y * y + z * z;
    }
    double norm() const;
    double sup_distance(const Vec3 &other) const;

    bool operator==(const Vec3 &) const = default;
};

/// Mean spin projections (<s_x>, <s_y>, <s_z>) with s_k = sigma_k / 2.
/// Lies in the Bloch ball |m| <= 1/2; the surface is the set of pure states.
class MeanSpinVector {
   public:
    /// Throws ConstraintViolation when |m|^2 > 1/4 + 1e-12.
    MeanSpinVector(double sx, double sy, double sz);

    double sx() const {
        return sx_;
    }
    double sy() const {
        return sy_;
    }
    double sz() const {
        return sz_;
    }
    Vec3 vec() const {
        return {sx_, sy_, sz_};
    }
    double norm2() const {
        return sx_ * sx_ + sy_ * sy_ + sz_ * sz_;
    }
    bool is_pure(double tolerance = tol::kPurity) const;

    bool operator==(const MeanSpinVector &) const = default;

   private:
    double sx_;
    double sy_;
    double sz_;
};

/// Probabilities of the +1/2 outcome along x, y and z.
class ProbabilityTriple {
   public:
    /// Throws ConstraintViolation outside [0,1]^3 or outside the ball
    /// (p1-1/2)^2 + (p2-1/2)^2 + (p3-1/2)^2 <= 1/4.
    ProbabilityTriple(double p1, double p2, double p3);

    double p1() const {
        return p1_;
    }
    double p2() const {
        return p2_;
    }
    double p3() const {
        return p3_;
    }

    bool operator==(const ProbabilityTriple &) const = default;

   private:
    double p1_;
    double p2_;
    double p3_;
};

/// Superposition coefficients (c1, c2) written as a formal mean triple.
/// Always on the sphere |sigma|^2 = 1/4, which is |c1|^2 + |c2|^2 = 1.
class SigmaTriple {
   public:
    /// Throws NotNormalized when | |sigma|^2 - 1/4 | > 1e-10.
    SigmaTriple(double sig1, double sig2, double sig3);

    double sig1() const {
        return sig1_;
    }
    double sig2() const {
        return sig2_;
    }
    double sig3() const {
        return sig3_;
    }
    Vec3 vec() const {
        return {sig1_, sig2_, sig3_};
    }

    bool operator==(const SigmaTriple &) const = default;

   private:
    double sig1_;
    double sig2_;
    double sig3_;
};

/// Two-component state vector (amplitude of m=+1/2, amplitude of m=-1/2).
/// Not necessarily normalized; operations that need a state normalize.
class Spinor {
   public:
    Spinor(Complex up, Complex down);

    Complex up() const {
        return up_;
    }
    Complex down() const {
        return down_;
    }
    double norm2() const {
        return std::norm(up_) + std::norm(down_);
    }
    bool is_normalized() const;

    /// Throws ZeroSpinor when norm2() <= 1e-24.
    Spinor normalized() const;

    bool operator==(const Spinor &) const = default;

   private:
    Complex up_;
    Complex down_;
};

/// Unit-trace positive semidefinite 2x2 Hermitian matrix.
///
/// Only the real diagonal and the (0,1) entry are stored; the (1,0) entry is
/// derived as the conjugate, so Hermiticity holds exactly.
class DensityMatrix2 {
   public:
    /// Throws InvalidDensity unless |r00 + r11 - 1| <= 1e-12 and
    /// r00*r11 - |r01|^2 >= -1e-12.
    DensityMatrix2(double r00, double r11, Complex r01);

    double r00() const {
        return r00_;
    }
    double r11() const {
        return r11_;
    }
    Complex r01() const {
        return r01_;
    }
    Complex r10() const {
        return std::conj(r01_);
    }
    /// Zero-based (row, col) access.
    Complex entry(int row, int col) const;

    double trace() const {
        return r00_ + r11_;
    }
    double determinant() const {
        return r00_ * r11_ - std::norm(r01_);
    }

    bool operator==(const DensityMatrix2 &) const = default;

   private:
    double r00_;
    double r11_;
    Complex r01_;
};

/// |s><s| / <s|s>. Throws ZeroSpinor for a (numerically) zero spinor.
DensityMatrix2 density_from_spinor(const Spinor &s);

/// Tr(rho^2), in [1/2, 1].
double purity(const DensityMatrix2 &rho);

}  // namespace spinmean

#endif
