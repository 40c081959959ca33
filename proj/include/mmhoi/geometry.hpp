#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace mmhoi {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  bool operator==(const Vec3&) const = default;

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double squared_norm() const { return (x * x + y * y) + z * z; }
  double norm() const { return std::sqrt(squared_norm()); }
  double operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

struct Vec2 {
  double u = 0.0, v = 0.0;
  Vec2 operator-(const Vec2& o) const { return {u - o.u, v - o.v}; }
  bool operator==(const Vec2&) const = default;
  double norm() const { return std::sqrt(u * u + v * v); }
};

/// Row-major 3x3 matrix.
struct Mat3 {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  static Mat3 identity() { return Mat3{}; }

  double& operator()(int r, int c) { return m[3 * r + c]; }
  double operator()(int r, int c) const { return m[3 * r + c]; }
  bool operator==(const Mat3&) const = default;

  Vec3 operator*(const Vec3& v) const {
    return {(m[0] * v.x + m[1] * v.y) + m[2] * v.z,
            (m[3] * v.x + m[4] * v.y) + m[5] * v.z,
            (m[6] * v.x + m[7] * v.y) + m[8] * v.z};
  }

  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r(i, j) = m[3 * i] * o(0, j) + m[3 * i + 1] * o(1, j) + m[3 * i + 2] * o(2, j);
    return r;
  }

  Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  double det() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
  }
};

/// Rotation about an axis (x=0, y=1, z=2) by angle in radians.
Mat3 axis_rotation(int axis, double angle_rad);

/// True when r is orthonormal with determinant +1 within tol (max-norm on
/// R^T R - I, |det - 1| <= tol).
bool is_rotation(const Mat3& r, double tol = 1e-9);

struct RigidTransform {
  Mat3 rotation = Mat3::identity();
  Vec3 translation{};

  Vec3 apply(const Vec3& v) const { return rotation * v + translation; }

  /// this ∘ other: applies `other` first.
  RigidTransform compose(const RigidTransform& other) const {
    return {rotation * other.rotation, rotation * other.translation + translation};
  }
};

struct SimilarityTransform {
  double scale = 1.0;
  Mat3 rotation = Mat3::identity();
  Vec3 translation{};

  Vec3 apply(const Vec3& v) const { return scale * (rotation * v) + translation; }

  static SimilarityTransform from_rigid(const RigidTransform& t) {
    return {1.0, t.rotation, t.translation};
  }
};

void validate_transform(const RigidTransform& t, double tol = 1e-9);
void validate_transform(const SimilarityTransform& t, double tol = 1e-9);

struct CameraIntrinsics {
  double fx = 1.0, fy = 1.0, cx = 0.0, cy = 0.0;
};

void validate_camera(const CameraIntrinsics& cam);

/// Per-vertex body-part label value meaning "no part".
inline constexpr std::int16_t kNoPartLabel = -1;
inline constexpr int kBodyPartCount = 14;

/// Vertex set in meters with optional triangle faces and optional per-vertex
/// body-part labels (0..13, or kNoPartLabel).
struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::uint32_t, 3>> faces;
  std::vector<std::int16_t> part_labels;  // empty => unlabeled mesh

  bool labeled() const { return !part_labels.empty(); }
  std::size_t vertex_count() const { return vertices.size(); }
};

void validate_mesh(const Mesh& mesh);

Mesh apply_transform(const Mesh& mesh, const RigidTransform& t);
std::vector<Vec3> apply_transform(std::span<const Vec3> points, const RigidTransform& t);
std::vector<Vec3> apply_transform(std::span<const Vec3> points, const SimilarityTransform& t);

/// Mean nearest-neighbor distance from each point of `from` to the set `to`.
/// Accumulates distances in index order of `from`.
double mean_nn_distance(std::span<const Vec3> from, std::span<const Vec3> to);

/// Symmetric Chamfer distance in meters:
///   0.5 * (mean_nn(a -> b) + mean_nn(b -> a)).
/// Bit-identical with an exhaustive O(N*M) scan regardless of the spatial
/// index or SIMD variant in use.
double chamfer_distance(std::span<const Vec3> a, std::span<const Vec3> b);

/// Mean Euclidean distance over corresponding vertex pairs (same topology).
double v2v_distance(std::span<const Vec3> a, std::span<const Vec3> b);
double v2v_distance(const Mesh& a, const Mesh& b);

/// Pinhole projection u = fx*x/z + cx, v = fy*y/z + cy. Requires z > 0.
Vec2 project(const Vec3& p, const CameraIntrinsics& cam);
std::vector<Vec2> project(std::span<const Vec3> points, const CameraIntrinsics& cam);

}  // namespace mmhoi
