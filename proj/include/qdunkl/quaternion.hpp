#pragma once

#include <cmath>
#include <complex>
#include <iosfwd>

#include "qdunkl/errors.hpp"

namespace qdunkl {

// Element of the quaternion algebra H, components along 1, i, j, k.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion real(double r) { return {r, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr double re() const { return w; }
    constexpr Quaternion im() const { return {0.0, x, y, z}; }
    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
    constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
    constexpr Quaternion& operator+=(const Quaternion& q) {
        w += q.w; x += q.x; y += q.y; z += q.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& q) {
        w -= q.w; x -= q.x; y -= q.y; z -= q.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }
};

constexpr Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }
constexpr Quaternion operator/(Quaternion q, double s) { return q *= (1.0 / s); }

// Hamilton product (non-commutative).
constexpr Quaternion qmul(const Quaternion& p, const Quaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) { return qmul(p, q); }

// Multiplicative inverse q_bar / |q|^2.
inline Quaternion qinv(const Quaternion& q) {
    const double n2 = q.norm_sq();
    if (n2 == 0.0) throw ZeroQuaternion();
    return q.conj() / n2;
}

// Pure unit quaternion u (u^2 = -1); the subalgebra span{1, u} is an
// isomorphic copy of the complex plane inside H.
class UnitAxis {
public:
    // Normalizes the given pure direction; throws InvalidParam on the zero vector.
    UnitAxis(double x, double y, double z) {
        const double n = std::sqrt(x * x + y * y + z * z);
        if (!(n > 0.0)) throw InvalidParam("UnitAxis direction must be nonzero");
        x_ = x / n;
        y_ = y / n;
        z_ = z / n;
    }

    static UnitAxis i() { return UnitAxis(1.0, 0.0, 0.0); }
    static UnitAxis j() { return UnitAxis(0.0, 1.0, 0.0); }
    static UnitAxis k() { return UnitAxis(0.0, 0.0, 1.0); }

    double ax() const { return x_; }
    double ay() const { return y_; }
    double az() const { return z_; }

    Quaternion q() const { return {0.0, x_, y_, z_}; }

private:
    double x_, y_, z_;
};

// Embeds the complex number s + i t into span{1, u}.
inline Quaternion embed(std::complex<double> c, const UnitAxis& u) {
    return Quaternion::real(c.real()) + u.q() * c.imag();
}

// Projection of q onto span{1, u}: the complex coordinate (Re q, <Im q, u>).
// Exact when q already lies in the subalgebra.
inline std::complex<double> axis_complex(const Quaternion& q, const UnitAxis& u) {
    return {q.w, q.x * u.ax() + q.y * u.ay() + q.z * u.az()};
}

// e^{u t} = cos t + u sin t; always unimodular.
inline Quaternion axis_exp(const UnitAxis& u, double t) {
    return embed(std::polar(1.0, t), u);
}

// Principal-branch power (s + u t)^gamma inside span{1, u}:
// modulus^gamma * axis_exp(u, gamma * atan2(t, s)), argument in (-pi, pi].
inline Quaternion axis_complex_pow(double s, double t, const UnitAxis& u, double gamma) {
    if (s == 0.0 && t == 0.0) throw ZeroBase();
    const double mod = std::hypot(s, t);
    const double arg = std::atan2(t, s);
    return embed(std::polar(std::pow(mod, gamma), gamma * arg), u);
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

} // namespace qdunkl
