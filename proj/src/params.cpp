#include "apostol/params.hpp"

namespace apostol {

Params::Params(Rational lambda, Rational mu) : lambda_(std::move(lambda)), mu_(std::move(mu)) {
  if (lambda_ == 0) throw std::invalid_argument("lambda = 0: parameter must be a nonzero rational");
  if (mu_ == 1) throw std::invalid_argument("mu = 1: parameter excluded from the family domain");
  if (lambda_ + 1 - mu_ != 0)
    kind_ = ParamsKind::Regular;
  else
    kind_ = (mu_ == 2) ? ParamsKind::BernoulliSingular : ParamsKind::IllDefined;
}

void Params::require_series() const {
  if (kind_ == ParamsKind::IllDefined)
    throw IllDefinedError("lambda = mu - 1: generating function has a pole at t=0");
}

const char* to_string(ParamsKind kind) {
  switch (kind) {
    case ParamsKind::Regular: return "Regular";
    case ParamsKind::BernoulliSingular: return "BernoulliSingular";
    case ParamsKind::IllDefined: return "IllDefined";
  }
  return "?";
}

}  // namespace apostol
