#pragma once

#include <stdexcept>
#include <string>

namespace maggrasp {

/// Flux sample lies outside the valid branch of the decoupling model
/// (vanishing denominator or non-positive log argument).
struct DegenerateFlux : std::runtime_error {
    explicit DegenerateFlux(const std::string& what) : std::runtime_error(what) {}
};

/// The forward (force -> flux) solve failed to converge; the requested
/// force is outside the representable range of the sensor model.
struct NoSolution : std::runtime_error {
    explicit NoSolution(const std::string& what) : std::runtime_error(what) {}
};

/// Calibration data does not excite an axis (fewer than two distinct
/// decoupled values), so the per-axis linear fit is underdetermined.
struct RankDeficient : std::runtime_error {
    explicit RankDeficient(const std::string& what) : std::runtime_error(what) {}
};

/// Sensor id has no entry in the mounting graph.
struct UnknownNode : std::runtime_error {
    explicit UnknownNode(const std::string& what) : std::runtime_error(what) {}
};

/// Value does not fit the wire encoding.
struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

/// A force estimate is older than the permitted staleness bound.
struct StaleData : std::runtime_error {
    explicit StaleData(const std::string& what) : std::runtime_error(what) {}
};

/// No-load baseline variance exceeds the configured noise level,
/// indicating contact during offset initialization.
struct ContaminatedBaseline : std::runtime_error {
    explicit ContaminatedBaseline(const std::string& what) : std::runtime_error(what) {}
};

/// Simulation state left its sanity bounds.
struct NumericalDivergence : std::runtime_error {
    explicit NumericalDivergence(const std::string& what) : std::runtime_error(what) {}
};

/// Config parse/validation failure. `path` is the dotted field path.
struct ConfigError : std::runtime_error {
    std::string path;
    ConfigError(std::string field_path, const std::string& what)
        : std::runtime_error(field_path.empty() ? what : field_path + ": " + what),
          path(std::move(field_path)) {}
};

}  // namespace maggrasp
