#include "mmhoi/kernels.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "mmhoi/error.hpp"

namespace mmhoi::kernels {

NnHit nn_scan_scalar(double qx, double qy, double qz,
                     const double* xs, const double* ys, const double* zs, std::size_t n) {
  NnHit best{std::numeric_limits<double>::infinity(), 0};
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - qx;
    const double dy = ys[i] - qy;
    const double dz = zs[i] - qz;
    const double d = ((dx * dx + dy * dy) + dz * dz);
    if (d < best.sqdist) {
      best.sqdist = d;
      best.index = static_cast<std::uint32_t>(i);
    }
  }
  return best;
}

void transform_points_scalar(const double rot[9], const double trans[3],
                             double* xs, double* ys, double* zs, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double x = xs[i], y = ys[i], z = zs[i];
    xs[i] = ((rot[0] * x + rot[1] * y) + rot[2] * z) + trans[0];
    ys[i] = ((rot[3] * x + rot[4] * y) + rot[5] * z) + trans[1];
    zs[i] = ((rot[6] * x + rot[7] * y) + rot[8] * z) + trans[2];
  }
}

#if defined(MMHOI_KERNELS_AVX2)
// Defined in kernels_avx2.cpp (compiled with -mavx2).
NnHit nn_scan_avx2(double qx, double qy, double qz,
                   const double* xs, const double* ys, const double* zs, std::size_t n);
void transform_points_avx2(const double rot[9], const double trans[3],
                           double* xs, double* ys, double* zs, std::size_t n);
#endif

bool avx2_compiled() {
#if defined(MMHOI_KERNELS_AVX2)
  return true;
#else
  return false;
#endif
}

bool avx2_supported() {
#if defined(MMHOI_KERNELS_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "?";
}

static Isa resolve_isa() {
  if (const char* env = std::getenv("MMHOI_GEOM_KERNEL")) {
    const std::string v(env);
    if (v == "scalar") return Isa::scalar;
    if (v == "avx2") {
      if (!avx2_supported()) fail("MMHOI_GEOM_KERNEL=avx2 but AVX2 is unavailable");
      return Isa::avx2;
    }
    if (!v.empty()) fail("MMHOI_GEOM_KERNEL: unknown kernel variant '" + v + "'");
  }
  return avx2_supported() ? Isa::avx2 : Isa::scalar;
}

Isa active_isa() {
  static const Isa isa = resolve_isa();
  return isa;
}

NnHit nn_scan_isa(Isa isa, double qx, double qy, double qz,
                  const double* xs, const double* ys, const double* zs, std::size_t n) {
  switch (isa) {
    case Isa::scalar:
      return nn_scan_scalar(qx, qy, qz, xs, ys, zs, n);
    case Isa::avx2:
#if defined(MMHOI_KERNELS_AVX2)
      if (avx2_supported()) return nn_scan_avx2(qx, qy, qz, xs, ys, zs, n);
#endif
      fail("avx2 kernel variant unavailable");
  }
  fail("unknown kernel variant");
}

void transform_points_isa(Isa isa, const double rot[9], const double trans[3],
                          double* xs, double* ys, double* zs, std::size_t n) {
  switch (isa) {
    case Isa::scalar:
      transform_points_scalar(rot, trans, xs, ys, zs, n);
      return;
    case Isa::avx2:
#if defined(MMHOI_KERNELS_AVX2)
      if (avx2_supported()) {
        transform_points_avx2(rot, trans, xs, ys, zs, n);
        return;
      }
#endif
      fail("avx2 kernel variant unavailable");
  }
  fail("unknown kernel variant");
}

NnHit nn_scan(double qx, double qy, double qz,
              const double* xs, const double* ys, const double* zs, std::size_t n) {
  return nn_scan_isa(active_isa(), qx, qy, qz, xs, ys, zs, n);
}

void transform_points(const double rot[9], const double trans[3],
                      double* xs, double* ys, double* zs, std::size_t n) {
  transform_points_isa(active_isa(), rot, trans, xs, ys, zs, n);
}

}  // namespace mmhoi::kernels
