// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QMETRIC_ERRORS_HPP_
#define QMETRIC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qmetric {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input exceeds the Hermiticity tolerance (1e-10 in max-entry norm).
class NonHermitianError : public Error {
 public:
  NonHermitianError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// The iterative eigensolver or the simplex optimizer failed to converge.
class ConvergenceFailureError : public Error {
 public:
  using Error::Error;
};

/// An eigenvalue fell below the PSD clipping threshold of -1e-10.
class NotPsdError : public Error {
 public:
  NotPsdError(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// Why a matrix was rejected as a density matrix.
enum class InvalidStateReason { NonHermitian, TraceNotOne, NotPSD };

inline const char* to_string(InvalidStateReason r) {
  switch (r) {
    case InvalidStateReason::NonHermitian: return "NonHermitian";
    case InvalidStateReason::TraceNotOne: return "TraceNotOne";
    case InvalidStateReason::NotPSD: return "NotPSD";
  }
  return "Unknown";
}

/// A matrix failed density-matrix validation. Carries the offending residual.
class InvalidStateError : public Error {
 public:
  InvalidStateError(InvalidStateReason reason, double residual)
      : Error(std::string("InvalidState(") + to_string(reason) +
              "): residual " + std::to_string(residual)),
        reason_(reason),
        residual_(residual) {}
  InvalidStateReason reason() const { return reason_; }
  double residual() const { return residual_; }

 private:
  InvalidStateReason reason_;
  double residual_;
};

/// Operands have incompatible dimensions.
class DimMismatchError : public Error {
 public:
  using Error::Error;
};

/// A Bloch vector lies outside the state body (the operator it generates
/// has a negative eigenvalue).
class NotPositiveError : public Error {
 public:
  NotPositiveError(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// Generator bases require dimension >= 2.
class DimensionTooSmallError : public Error {
 public:
  using Error::Error;
};

/// Requested rank outside [1, dim].
class BadRankError : public Error {
 public:
  using Error::Error;
};

/// A pure state cannot be built from the zero vector.
class ZeroVectorError : public Error {
 public:
  using Error::Error;
};

/// Bloch-form qubit operations require dimension 2.
class NotQubitError : public Error {
 public:
  using Error::Error;
};

/// Structurally malformed input (non-square matrix, empty Kraus list,
/// impossible channel shape).
class BadShapeError : public Error {
 public:
  using Error::Error;
};

/// Kraus operators violate the trace-preservation completeness relation.
class InvalidChannelError : public Error {
 public:
  InvalidChannelError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// A run configuration failed validation.
class BadConfigError : public Error {
 public:
  using Error::Error;
};

/// File could not be read, written, or parsed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qmetric

#endif  // QMETRIC_ERRORS_HPP_
