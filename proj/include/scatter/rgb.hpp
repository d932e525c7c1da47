#pragma once

#include <algorithm>
#include <cmath>
#include <ostream>

namespace scatter {

// Three-channel quantity (reflectance, throughput, extinction per channel).
struct Rgb {
    double r = 0.0, g = 0.0, b = 0.0;

    constexpr Rgb() = default;
    constexpr explicit Rgb(double v) : r(v), g(v), b(v) {}
    constexpr Rgb(double r_, double g_, double b_) : r(r_), g(g_), b(b_) {}

    constexpr Rgb operator+(const Rgb& o) const { return {r + o.r, g + o.g, b + o.b}; }
    constexpr Rgb operator-(const Rgb& o) const { return {r - o.r, g - o.g, b - o.b}; }
    constexpr Rgb operator*(const Rgb& o) const { return {r * o.r, g * o.g, b * o.b}; }
    constexpr Rgb operator/(const Rgb& o) const { return {r / o.r, g / o.g, b / o.b}; }
    constexpr Rgb operator*(double s) const { return {r * s, g * s, b * s}; }
    constexpr Rgb operator/(double s) const { return {r / s, g / s, b / s}; }
    Rgb& operator+=(const Rgb& o) { r += o.r; g += o.g; b += o.b; return *this; }
    Rgb& operator*=(const Rgb& o) { r *= o.r; g *= o.g; b *= o.b; return *this; }
    Rgb& operator*=(double s) { r *= s; g *= s; b *= s; return *this; }
    Rgb& operator/=(double s) { r /= s; g /= s; b /= s; return *this; }

    double max() const { return std::max(r, std::max(g, b)); }
    double min() const { return std::min(r, std::min(g, b)); }
    double mean() const { return (r + g + b) / 3.0; }
    bool all_finite() const { return std::isfinite(r) && std::isfinite(g) && std::isfinite(b); }
    bool all_nonneg() const { return r >= 0.0 && g >= 0.0 && b >= 0.0; }
    double operator[](int i) const { return i == 0 ? r : (i == 1 ? g : b); }
};

constexpr Rgb operator*(double s, const Rgb& c) { return c * s; }

inline Rgb exp(const Rgb& c) { return {std::exp(c.r), std::exp(c.g), std::exp(c.b)}; }

inline std::ostream& operator<<(std::ostream& os, const Rgb& c) {
    return os << c.r << "," << c.g << "," << c.b;
}

} // namespace scatter
