#pragma once

#include "maggrasp/errors.hpp"
#include "maggrasp/geometry.hpp"

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace maggrasp {

/// Hall device saturation bound, per component.
inline constexpr double kFluxSaturationUt = 5000.0;

/// Three-axis magnetic flux reading from one sensor node.
struct FluxSample {
    Vec3 b_ut = Vec3::Zero();  // Bx, By, Bz in microtesla
    int node_id = 0;
    double timestamp = 0.0;  // seconds

    bool within_saturation() const {
        return all_finite(b_ut) && b_ut.cwiseAbs().maxCoeff() < kFluxSaturationUt;
    }
};

/// Affine corrections B_z' = k1*Bz + c1 and B_z'' = k2*Bz + c2 that absorb
/// the non-ideal centripetal magnetization of the film.
struct CompensationCoefficients {
    double k1 = 1.0;
    double c1 = 0.0;
    double k2 = 1.0;
    double c2 = 0.0;

    void validate() const {
        if (!(k1 > 0.0) || !(k2 > 0.0))
            throw std::invalid_argument("compensation factors k1, k2 must be positive");
    }

    /// Values optimized for the physical film within the +/-3 mm, -10 +/- 2 mm
    /// working region.
    static CompensationCoefficients reference_film() {
        return {2.27851, 0.0010535, 0.878725, -0.0000785667};
    }
};

struct BzCompensated {
    double bz_prime = 0.0;
    double bz_dprime = 0.0;
};

/// Displacement region where the decoupling model is calibrated and valid.
struct WorkingEnvelope {
    double xy_limit_mm = 3.0;
    double z_center_mm = -10.0;
    double z_halfwidth_mm = 2.0;
};

/// Per-sensor gains, offsets and mounting pose turning flux into force.
struct SensorCalibration {
    Vec3 gain = Vec3::Ones();          // a, newton per decoupled unit
    Vec3 offset = Vec3::Zero();        // b, newton
    Rotation mount_rotation;           // body <- sensor
    Vec3 contact_normal = Vec3::UnitZ();  // sensor frame, unit
    WorkingEnvelope envelope;
    /// Decoupled units per millimetre of film displacement; links the
    /// dimensionless decoupling output to the working envelope.
    double s_per_mm = 1.0 / 3.0;

    void validate() const;
    /// Decoupled value the film produces at rest (zero force), implied by
    /// gain and offset.
    Vec3 rest_s() const { return -offset.cwiseQuotient(gain); }
};

struct ForceEstimate {
    Vec3 force_n = Vec3::Zero();  // sensor frame
    bool valid = false;           // implied displacement inside the envelope
};

/// Eq-style affine Bz corrections.
BzCompensated compensate_bz(double bz, const CompensationCoefficients& c);
inline BzCompensated compensate_bz(const FluxSample& b, const CompensationCoefficients& c) {
    return compensate_bz(b.b_ut.z(), c);
}

/// Closed-form decoupling map S(B). Throws DegenerateFlux outside the valid
/// branch (denominator magnitude < 1e-12 or log argument <= 0).
Vec3 decouple_s(const Vec3& b_ut, const CompensationCoefficients& c);
inline Vec3 decouple_s(const FluxSample& b, const CompensationCoefficients& c) {
    return decouple_s(b.b_ut, c);
}

/// Jacobian dS/dB of the decoupling map, for the forward Newton solve.
Mat3 decouple_s_jacobian(const Vec3& b_ut, const CompensationCoefficients& c);

/// f = a (.) S(B) + b with envelope validity flag.
ForceEstimate flux_to_force(const FluxSample& b, const SensorCalibration& cal,
                            const CompensationCoefficients& c);

/// Initial-guess map selecting which preimage of S the forward solve lands
/// on. Distinct gauges may give distinct flux for the same force.
struct ForwardGauge {
    double bz_branch = +1.0;    // sign of (Bz'' - 1/2) at zero lateral flux
    double lateral_gain = 0.5;  // scale of the lateral flux seed
};

/// Numerical inverse of the decoupling model: returns B with
/// flux_to_force(B) = f to within 1e-9 N. Deterministic for a fixed gauge.
/// Throws NoSolution if damped Newton fails within 100 iterations or the
/// result exceeds the saturation bound.
FluxSample force_to_flux(const Vec3& force_n, const SensorCalibration& cal,
                         const CompensationCoefficients& c,
                         const ForwardGauge& gauge = {}, int node_id = 0,
                         double timestamp = 0.0);

/// Result of the per-axis least-squares gain/offset fit.
struct CalibrationFit {
    Vec3 gain = Vec3::Ones();
    Vec3 offset = Vec3::Zero();
    Vec3 residual_rms = Vec3::Zero();  // newton, per axis
};

/// Fits (a, b) per axis from (flux, true force) pairs by linear least
/// squares. Needs >= 4 pairs; throws RankDeficient when an axis has fewer
/// than two distinct decoupled values.
CalibrationFit calibrate(std::span<const std::pair<FluxSample, Vec3>> pairs,
                         const CompensationCoefficients& c);

/// Offset that makes the mean no-load force estimate exactly zero.
/// Needs >= 10 samples.
Vec3 zero_offset(std::span<const FluxSample> no_load_samples, const Vec3& gain,
                 const CompensationCoefficients& c);

/// Calibration bundle file IO (dotted-key text; lossless at 17 significant
/// digits).
std::string serialize_calibration_bundle(const std::map<int, SensorCalibration>& bundle);
std::map<int, SensorCalibration> parse_calibration_bundle(const std::string& text);
void save_calibration_bundle(const std::string& path,
                             const std::map<int, SensorCalibration>& bundle);
std::map<int, SensorCalibration> load_calibration_bundle(const std::string& path);

}  // namespace maggrasp
