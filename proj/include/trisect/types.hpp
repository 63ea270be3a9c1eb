#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace trisect {

using BigInt = boost::multiprecision::mpz_int;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using RowVec = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IntMatrix = Mat<BigInt>;
using IntVector = Vec<BigInt>;
using IntRow = RowVec<BigInt>;
using Index = Eigen::Index;

enum class ErrorKind {
  NotSquare,
  NotSymmetric,
  Degenerate,
  NotUnimodular,
  DimensionMismatch,
  NotIsotropic,
  NotPrimitive,
  WrongRank,
  InvalidDiagram,
  NonInvertiblePairing,
  AsymmetricResult,
  StandardizationFailed,
  InvalidChain,
  NoIntegerSolution,
  OddRank,
  DegeneratePairing,
  InvalidBasis,
  IncompleteLinkingData,
  OddForm,
  ParseError,
};

const char* to_string(ErrorKind kind);

/// Every failure in the library carries a machine-readable kind. The CLI
/// prints `kind_name()` so that callers can tell which invariant broke.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  const char* kind_name() const noexcept { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace trisect
