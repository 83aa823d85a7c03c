#ifndef MLBSIM_GEOMETRY_HPP
#define MLBSIM_GEOMETRY_HPP

#include <cmath>

namespace mlbsim
{

constexpr double kPi = 3.14159265358979323846;

inline double DegToRad(double deg)
{
    return deg * kPi / 180.0;
}

inline double RadToDeg(double rad)
{
    return rad * 180.0 / kPi;
}

/// Planar position or displacement in meters.
struct Vec2
{
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }

    double Norm() const { return std::hypot(x, y); }
};

/// Axis-aligned rectangle bounding UE motion.
struct Region
{
    double minX = 0.0;
    double minY = 0.0;
    double maxX = 0.0;
    double maxY = 0.0;

    double Width() const { return maxX - minX; }
    double Height() const { return maxY - minY; }
    bool IsValid() const { return maxX > minX && maxY > minY; }

    bool Contains(const Vec2& p, double tol = 0.0) const
    {
        return p.x >= minX - tol && p.x <= maxX + tol && p.y >= minY - tol && p.y <= maxY + tol;
    }

    Vec2 Clamp(const Vec2& p) const
    {
        Vec2 q = p;
        if (q.x < minX) q.x = minX;
        if (q.x > maxX) q.x = maxX;
        if (q.y < minY) q.y = minY;
        if (q.y > maxY) q.y = maxY;
        return q;
    }
};

/// Maps any angle in degrees onto (-180, 180].
inline double NormalizeAngleDeg(double deg)
{
    double a = std::fmod(deg, 360.0);
    if (a <= -180.0) a += 360.0;
    if (a > 180.0) a -= 360.0;
    return a;
}

/// Maps any angle in radians onto [0, 2*pi).
inline double WrapRadians(double rad)
{
    double a = std::fmod(rad, 2.0 * kPi);
    if (a < 0.0) a += 2.0 * kPi;
    return a;
}

} // namespace mlbsim

#endif // MLBSIM_GEOMETRY_HPP
