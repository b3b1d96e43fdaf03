#pragma once

#include <stdexcept>
#include <string>

namespace atomlaser {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-finite or otherwise out-of-domain argument to a kernel function.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Scaled value cannot be represented as a plain double.
class OverflowError : public Error {
  public:
    using Error::Error;
};

/// Invalid physical configuration (non-positive mass, frequency, ...).
/// Carries the offending field path when raised during config parsing.
class ConfigError : public Error {
  public:
    ConfigError(const std::string& field, const std::string& msg)
        : Error(field.empty() ? msg : field + ": " + msg), field_(field) {}
    const std::string& field() const { return field_; }

  private:
    std::string field_;
};

/// Geometry outside the supported class (cylindrical symmetry required).
class UnsupportedGeometryError : public Error {
  public:
    using Error::Error;
};

/// Detector position outside the validity region of the requested formula.
class UnsupportedRegionError : public Error {
  public:
    using Error::Error;
};

/// Noise spectrum support extends beyond the tabulated resolution curve.
class CoverageError : public Error {
  public:
    CoverageError(double missing_lo, double missing_hi, const std::string& msg)
        : Error(msg), missing_lo_(missing_lo), missing_hi_(missing_hi) {}
    double missing_lo() const { return missing_lo_; }
    double missing_hi() const { return missing_hi_; }

  private:
    double missing_lo_;
    double missing_hi_;
};

/// Curve does not admit the requested diagnostic (e.g. no interior maximum).
class DiagnosticError : public Error {
  public:
    using Error::Error;
};

} // namespace atomlaser
