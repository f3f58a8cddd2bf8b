#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace maggrasp {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline bool all_finite(const Vec3& v) {
    return std::isfinite(v.x()) && std::isfinite(v.y()) && std::isfinite(v.z());
}

/// Skew-symmetric matrix such that hat(a) * b = a x b.
Mat3 hat(const Vec3& v);

/// Inverse of hat for (near-)skew-symmetric input.
Vec3 vee(const Mat3& m);

/// Proper rotation matrix, validated at construction.
///
/// Raw matrices with an orthonormality defect above 1e-9 are projected back
/// onto SO(3) (polar projection); defects above 1e-3 are rejected.
class Rotation {
public:
    Rotation() : m_(Mat3::Identity()) {}

    static Rotation identity() { return Rotation(); }
    static Rotation from_matrix(const Mat3& m);
    static Rotation axis_angle(const Vec3& axis, double angle_rad);
    static Rotation rot_x(double angle_rad);
    static Rotation rot_y(double angle_rad);
    static Rotation rot_z(double angle_rad);
    /// Rz(yaw) * Ry(pitch) * Rx(roll).
    static Rotation rpy(double roll, double pitch, double yaw);

    const Mat3& matrix() const { return m_; }
    Rotation inverse() const { return Rotation(m_.transpose(), Trusted{}); }

    Vec3 operator*(const Vec3& v) const { return m_ * v; }
    Rotation operator*(const Rotation& rhs) const {
        return Rotation(m_ * rhs.m_, Trusted{});
    }

    /// Project back onto SO(3); used by integrators that accumulate drift.
    Rotation renormalized() const;

    bool isApprox(const Rotation& other, double tol = 1e-9) const {
        return m_.isApprox(other.m_, tol);
    }

    /// max |R^T R - I| entry plus |det - 1|.
    static double orthonormality_defect(const Mat3& m);

private:
    struct Trusted {};
    Rotation(const Mat3& m, Trusted) : m_(m) {}
    Mat3 m_;
};

inline Rotation compose(const Rotation& r_ab, const Rotation& r_bc) { return r_ab * r_bc; }
inline Vec3 rotate(const Rotation& r, const Vec3& v) { return r * v; }

/// Attitude error between a reference and a measured rotation.
///
/// Vanishes iff the rotations agree and, fed through positive gains as a
/// desired angular rate, drives the measured attitude toward the reference.
Vec3 attitude_error(const Rotation& r_ref, const Rotation& r_meas);

/// Coordinate frame label: world, body, the i-th tactile sensor (i >= 1),
/// or the reference Hall sensor.
struct FrameTag {
    enum class Kind { World, Body, Sensor, ReferenceSensor };

    Kind kind = Kind::World;
    int sensor_index = 0;  // only meaningful for Kind::Sensor

    static FrameTag world() { return {Kind::World, 0}; }
    static FrameTag body() { return {Kind::Body, 0}; }
    static FrameTag reference_sensor() { return {Kind::ReferenceSensor, 0}; }
    static FrameTag sensor(int i) {
        if (i < 1) throw std::invalid_argument("sensor frame index must be >= 1");
        return {Kind::Sensor, i};
    }

    bool operator==(const FrameTag&) const = default;
    std::string to_string() const;
};

}  // namespace maggrasp
