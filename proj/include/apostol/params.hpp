#pragma once

#include "apostol/rational.hpp"

namespace apostol {

// Singularity class of the generating-function denominator
// lambda*e^t + (1 - mu) at t = 0:
//   Regular           constant term lambda + 1 - mu != 0
//   BernoulliSingular lambda + 1 - mu = 0 and mu = 2 (lambda = 1, mu = 2); the
//                     numerator reduces to t and cancels the simple zero
//   IllDefined        lambda + 1 - mu = 0 and mu != 2; pole at t = 0, no
//                     formal power series exists
enum class ParamsKind { Regular, BernoulliSingular, IllDefined };

class Params {
 public:
  /// Rejects lambda = 0 and mu = 1 (std::invalid_argument).
  Params(Rational lambda, Rational mu);

  const Rational& lambda() const { return lambda_; }
  const Rational& mu() const { return mu_; }
  ParamsKind kind() const { return kind_; }

  /// Throws IllDefinedError unless the pair admits a formal power series.
  void require_series() const;

 private:
  Rational lambda_;
  Rational mu_;
  ParamsKind kind_;
};

const char* to_string(ParamsKind kind);

}  // namespace apostol
