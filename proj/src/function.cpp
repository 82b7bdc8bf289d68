#include "modcone/function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace modcone {

namespace {

void require_exact(const PowerSeries& p, const char* what) {
  if (!p.is_exact()) throw Error(ErrorCode::InvalidInput, std::string(what) + " must be an exact polynomial");
}

}  // namespace

ComplexFunction ComplexFunction::polynomial(PowerSeries p) {
  require_exact(p, "polynomial");
  return ComplexFunction(Form::Polynomial, std::move(p), std::nullopt);
}

ComplexFunction ComplexFunction::rational(PowerSeries numer, PowerSeries denom) {
  require_exact(numer, "numerator");
  require_exact(denom, "denominator");
  if (std::all_of(denom.coeffs().begin(), denom.coeffs().end(),
                  [](complex c) { return c == complex{}; })) {
    throw Error(ErrorCode::InvalidInput, "denominator is identically zero");
  }
  return ComplexFunction(Form::Rational, std::move(numer), std::move(denom));
}

ComplexFunction ComplexFunction::exp_of(const ComplexFunction& inner) {
  if (inner.form_ == Form::ExpOf) {
    throw Error(ErrorCode::InvalidInput, "exp nesting depth is limited to one");
  }
  ComplexFunction f(Form::ExpOf, inner.first_, std::nullopt);
  f.inner_ = std::make_shared<const ComplexFunction>(inner);
  return f;
}

complex ComplexFunction::operator()(complex z) const {
  switch (form_) {
    case Form::Polynomial:
      return evaluate(first_, z);
    case Form::Rational: {
      const complex d = evaluate(*second_, z);
      if (d == complex{}) return {std::numeric_limits<double>::infinity(), 0.0};
      return evaluate(first_, z) / d;
    }
    case Form::ExpOf:
      return std::exp((*inner_)(z));
  }
  return {};
}

PowerSeries ComplexFunction::expand(complex center, int order) const {
  switch (form_) {
    case Form::Polynomial:
      return recenter(first_, center);
    case Form::Rational:
      return rational_expansion(first_, *second_, center, order);
    case Form::ExpOf:
      return exp_series(inner_->expand(center, order), order);
  }
  return first_;
}

int ComplexFunction::degree() const {
  switch (form_) {
    case Form::Polynomial:
      return first_.truncation_order();
    case Form::Rational:
      return std::max(first_.truncation_order(), second_->truncation_order());
    case Form::ExpOf:
      return inner_->degree();
  }
  return 0;
}

}  // namespace modcone
