#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops behind the distance and transform routines.
// Every operation exists as a scalar reference kernel plus ISA variants
// selected once at startup (override with MMHOI_GEOM_KERNEL=scalar|avx2).
//
// Bit-exactness contract: a squared distance is always evaluated as
// ((dx*dx + dy*dy) + dz*dz) and a transformed coordinate as
// ((r0*x + r1*y) + r2*z) + t, with no FMA contraction, so every variant
// returns bit-identical values and downstream reductions (min, ordered sums)
// cannot diverge between ISAs.

namespace mmhoi::kernels {

struct NnHit {
  double sqdist;
  std::uint32_t index;
};

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);

/// Variant the dispatcher resolved to (after the env override).
Isa active_isa();

bool avx2_compiled();
bool avx2_supported();

/// Min squared distance (and its index) of query q against n points in
/// structure-of-arrays layout. n >= 1. Ties resolve to the smallest index.
NnHit nn_scan(double qx, double qy, double qz,
              const double* xs, const double* ys, const double* zs, std::size_t n);

/// In-place x' = R x + t over SoA arrays; rot is row-major 3x3.
void transform_points(const double rot[9], const double trans[3],
                      double* xs, double* ys, double* zs, std::size_t n);

// Reference kernels and per-ISA entry points (for equivalence tests).
NnHit nn_scan_scalar(double qx, double qy, double qz,
                     const double* xs, const double* ys, const double* zs, std::size_t n);
void transform_points_scalar(const double rot[9], const double trans[3],
                             double* xs, double* ys, double* zs, std::size_t n);

/// Run a specific variant; throws Error if it is unavailable on this build/CPU.
NnHit nn_scan_isa(Isa isa, double qx, double qy, double qz,
                  const double* xs, const double* ys, const double* zs, std::size_t n);
void transform_points_isa(Isa isa, const double rot[9], const double trans[3],
                          double* xs, double* ys, double* zs, std::size_t n);

}  // namespace mmhoi::kernels
