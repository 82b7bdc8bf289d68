#pragma once

#include <memory>
#include <optional>

#include "modcone/series.hpp"

namespace modcone {

/// A function given in closed form: a polynomial, a ratio of polynomials, or
/// exp of one of those. Evaluation is exact (no truncation), so it stays
/// meaningful far outside any local expansion's radius of validity.
class ComplexFunction {
 public:
  enum class Form { Polynomial, Rational, ExpOf };

  static ComplexFunction polynomial(PowerSeries p);
  static ComplexFunction rational(PowerSeries numer, PowerSeries denom);
  /// exp(inner); inner must not itself be an ExpOf.
  static ComplexFunction exp_of(const ComplexFunction& inner);

  Form form() const noexcept { return form_; }

  /// Value at z. A pole (exactly vanishing denominator) evaluates to +inf.
  complex operator()(complex z) const;

  /// Local expansion about `center`. Polynomials come back exact; other
  /// forms are truncated at `order`.
  PowerSeries expand(complex center, int order) const;

  /// Largest polynomial degree appearing in the closed form.
  int degree() const;

 private:
  ComplexFunction(Form form, PowerSeries first, std::optional<PowerSeries> second)
      : form_(form), first_(std::move(first)), second_(std::move(second)) {}

  Form form_;
  PowerSeries first_;                  // polynomial or numerator
  std::optional<PowerSeries> second_;  // denominator
  std::shared_ptr<const ComplexFunction> inner_;
};

}  // namespace modcone
