#include "maggrasp/geometry.hpp"

#include <cmath>

namespace maggrasp {

Mat3 hat(const Vec3& v) {
    Mat3 m;
    m << 0.0, -v.z(), v.y(),
         v.z(), 0.0, -v.x(),
        -v.y(), v.x(), 0.0;
    return m;
}

Vec3 vee(const Mat3& m) {
    return Vec3(m(2, 1), m(0, 2), m(1, 0));
}

double Rotation::orthonormality_defect(const Mat3& m) {
    const Mat3 gram = m.transpose() * m - Mat3::Identity();
    return gram.cwiseAbs().maxCoeff() + std::abs(m.determinant() - 1.0);
}

static Mat3 polar_project(const Mat3& m) {
    Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Mat3 r = svd.matrixU() * svd.matrixV().transpose();
    if (r.determinant() < 0.0) {
        Mat3 flip = Mat3::Identity();
        flip(2, 2) = -1.0;
        r = svd.matrixU() * flip * svd.matrixV().transpose();
    }
    return r;
}

Rotation Rotation::from_matrix(const Mat3& m) {
    if (!m.allFinite()) throw std::invalid_argument("rotation matrix has non-finite entries");
    const double defect = orthonormality_defect(m);
    if (defect <= 1e-9) return Rotation(m, Trusted{});
    if (defect > 1e-3) {
        throw std::invalid_argument("matrix is not a rotation (defect " +
                                    std::to_string(defect) + ")");
    }
    return Rotation(polar_project(m), Trusted{});
}

Rotation Rotation::renormalized() const {
    return Rotation(polar_project(m_), Trusted{});
}

Rotation Rotation::axis_angle(const Vec3& axis, double angle_rad) {
    const double n = axis.norm();
    if (n < 1e-15) {
        if (std::abs(angle_rad) < 1e-15) return identity();
        throw std::invalid_argument("zero axis with nonzero angle");
    }
    return Rotation(Eigen::AngleAxisd(angle_rad, axis / n).toRotationMatrix(), Trusted{});
}

Rotation Rotation::rot_x(double a) { return axis_angle(Vec3::UnitX(), a); }
Rotation Rotation::rot_y(double a) { return axis_angle(Vec3::UnitY(), a); }
Rotation Rotation::rot_z(double a) { return axis_angle(Vec3::UnitZ(), a); }

Rotation Rotation::rpy(double roll, double pitch, double yaw) {
    return rot_z(yaw) * rot_y(pitch) * rot_x(roll);
}

Vec3 attitude_error(const Rotation& r_ref, const Rotation& r_meas) {
    const Mat3& rd = r_ref.matrix();
    const Mat3& r = r_meas.matrix();
    // Sign picked so that omega_d = K_R * R_e with positive K_R reduces the
    // error: a measured yaw of +eps beyond the reference yields R_e_z = -eps.
    const Mat3 skew = 0.5 * (r.transpose() * rd - rd.transpose() * r);
    return vee(skew);
}

std::string FrameTag::to_string() const {
    switch (kind) {
        case Kind::World: return "world";
        case Kind::Body: return "body";
        case Kind::ReferenceSensor: return "ref_sensor";
        case Kind::Sensor: return "sensor" + std::to_string(sensor_index);
    }
    return "?";
}

}  // namespace maggrasp
