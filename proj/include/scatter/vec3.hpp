#pragma once

#include <cmath>
#include <ostream>

namespace scatter {

// Double-precision 3-vector in the z-up shading frame. Directions are unit
// length; sign of z encodes upward/downward travel.
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

using Direction = Vec3;

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double length(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalize(const Vec3& v) {
    const double len = length(v);
    return len > 0.0 ? v / len : Vec3{0.0, 0.0, 0.0};
}

inline bool is_unit(const Vec3& v, double tol = 1e-9) {
    return std::abs(dot(v, v) - 1.0) <= 2.0 * tol;
}

inline double cos_theta(const Vec3& v) { return v.z; }

// Spherical construction, theta measured from +z.
inline Vec3 from_spherical(double theta, double phi) {
    const double st = std::sin(theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

// Orthonormal basis completing n (Duff et al. branchless construction).
inline void make_frame(const Vec3& n, Vec3& t, Vec3& b) {
    const double sign = std::copysign(1.0, n.z);
    const double a = -1.0 / (sign + n.z);
    const double c = n.x * n.y * a;
    t = {1.0 + sign * n.x * n.x * a, sign * c, -sign * n.x};
    b = {c, sign + n.y * n.y * a, -n.y};
}

// Rotate the unit vector d by deflection angle theta, azimuth phi around d.
inline Vec3 deflect(const Vec3& d, double cos_def, double phi) {
    Vec3 t, b;
    make_frame(d, t, b);
    const double sin_def = std::sqrt(std::max(0.0, 1.0 - cos_def * cos_def));
    return normalize(t * (sin_def * std::cos(phi)) + b * (sin_def * std::sin(phi)) + d * cos_def);
}

inline Vec3 reflect(const Vec3& d, const Vec3& n) {
    return d - n * (2.0 * dot(d, n));
}

inline std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

} // namespace scatter
