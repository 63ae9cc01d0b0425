#include "soccer/geometry.hpp"

namespace soccer {

double dist_point_to_segment(const Vec2 &p, const Vec2 &a, const Vec2 &b) {
    Vec2 ab = b - a;
    double len2 = ab.x * ab.x + ab.y * ab.y;
    if (len2 <= 0.0) return p.dist(a);
    double t = ((p.x - a.x) * ab.x + (p.y - a.y) * ab.y) / len2;
    if (t < 0.0) t = 0.0;
    if (t > 1.0) t = 1.0;
    return p.dist(a + ab * t);
}

} // namespace soccer
