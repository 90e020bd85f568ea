#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mzres {

/// Per-node 4-vector. Slot order for states is (p_gauge, u, v, T);
/// for residuals it is (continuity, x-momentum, y-momentum, energy).
using Vec4 = std::array<double, 4>;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
};

inline Vec4 operator+(const Vec4& a, const Vec4& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
inline Vec4 operator-(const Vec4& a, const Vec4& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
inline Vec4 operator*(const Vec4& a, double s) {
    return {a[0] * s, a[1] * s, a[2] * s, a[3] * s};
}
inline Vec4& operator+=(Vec4& a, const Vec4& b) {
    for (int i = 0; i < 4; ++i) a[i] += b[i];
    return a;
}
inline Vec4& operator-=(Vec4& a, const Vec4& b) {
    for (int i = 0; i < 4; ++i) a[i] -= b[i];
    return a;
}

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class GridError : public Error {
  public:
    using Error::Error;
};

class PhysicsError : public Error {
  public:
    using Error::Error;
};

class ConfigError : public Error {
  public:
    using Error::Error;
};

} // namespace mzres
