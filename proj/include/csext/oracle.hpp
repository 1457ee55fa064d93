#pragma once

// Closed-form Ext^1 answers between completely splittable simples, for GL(n)
// with p-restricted highest weights and for the symmetric group, plus the
// matching predictions for the radical of the Weyl / Specht module.
//
// Every answer is gated on the hypotheses under which it is known; a query
// outside them yields a ScopeError instead of a guessed value.

#include <optional>
#include <string>
#include <variant>

#include "csext/combinatorics.hpp"

namespace csext {

struct ScopeError {
  ScopeReason reason;
  std::string detail;
};

/// dim is 0 or 1; witness is present exactly when dim == 1.
template <class Label>
struct ExtAnswer {
  int dim = 0;
  std::optional<Label> witness;
};

/// Zero radical, or a radical that is a nonzero homomorphic image of the
/// standard module labelled by `image_of`.
template <class Label>
struct RadicalPrediction {
  std::optional<Label> image_of;
  bool is_zero() const noexcept { return !image_of.has_value(); }
};

template <class T>
using Scoped = std::variant<T, ScopeError>;

template <class T>
bool in_scope(const Scoped<T>& r) noexcept {
  return std::holds_alternative<T>(r);
}

using GlExt = ExtAnswer<Weight>;
using SymExt = ExtAnswer<Partition>;

/// Ext^1_{GL(n)}(L(lambda), L(mu)). Requires equal ranks (std::invalid_argument otherwise).
Scoped<GlExt> ext1_gl(const Weight& lambda, const Weight& mu, Prime p);

/// Ext^1_{Sigma_m}(D^lambda, D^mu). Requires equal degrees (std::invalid_argument otherwise).
Scoped<SymExt> ext1_sym(const Partition& lambda, const Partition& mu, Prime p);

Scoped<RadicalPrediction<Weight>> rad_weyl_prediction(const Weight& lambda, Prime p);
Scoped<RadicalPrediction<Partition>> rad_specht_prediction(const Partition& lambda, Prime p);

}  // namespace csext
