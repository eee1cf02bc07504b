#ifndef WTOMO_TYPES_HPP
#define WTOMO_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace wtomo {

using Complex = std::complex<double>;

using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using MatrixXc = Eigen::MatrixXcd;
using Vector2c = Eigen::Vector2cd;
using Vector4c = Eigen::Vector4cd;
using VectorXc = Eigen::VectorXcd;

/// A density matrix is an ordinary dense complex matrix; validate_density()
/// enforces the Hermitian / unit-trace / PSD invariants where they matter.
using DensityMatrix = MatrixXc;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NotPsd : public Error {
 public:
  using Error::Error;
};

class TraceNotOne : public Error {
 public:
  using Error::Error;
};

class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidMean : public Error {
 public:
  using Error::Error;
};

class DegenerateParams : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file; line() is 1-based, 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, long line)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  explicit ParseError(const std::string& msg) : Error(msg) {}
  long line() const { return line_; }

 private:
  long line_ = 0;
};

}  // namespace wtomo

#endif  // WTOMO_TYPES_HPP
