#ifndef SOCCER_GEOMETRY_HPP
#define SOCCER_GEOMETRY_HPP

#include <cmath>

namespace soccer {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2 &o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2 &o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }
    bool operator==(const Vec2 &o) const { return x == o.x && y == o.y; }

    double norm() const { return std::hypot(x, y); }
    double dist(const Vec2 &o) const { return (*this - o).norm(); }

    // zero vector maps to zero
    Vec2 unit() const {
        double n = norm();
        if (n <= 0.0) return {0.0, 0.0};
        return {x / n, y / n};
    }

    Vec2 rotated(double rad) const {
        double c = std::cos(rad);
        double s = std::sin(rad);
        return {x * c - y * s, x * s + y * c};
    }

    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double deg2rad(double deg) { return deg * M_PI / 180.0; }

inline double clamp01(double v) {
    if (v < 0.0) return 0.0;
    if (v > 1.0) return 1.0;
    return v;
}

// distance from p to the closed segment [a, b]; a == b degenerates to point distance
double dist_point_to_segment(const Vec2 &p, const Vec2 &a, const Vec2 &b);

} // namespace soccer

#endif
