#include "csext/oracle.hpp"

namespace csext {

namespace {

ScopeError scope(ScopeReason reason, std::string detail) { return ScopeError{reason, std::move(detail)}; }

// Common GL-side gate: dominant, p-restricted, completely splittable.
std::optional<ScopeError> gl_gate(const Weight& lambda, Prime p) {
  if (!lambda.is_dominant()) return scope(ScopeReason::NonDominant, "lambda=" + lambda.to_string());
  if (!is_p_restricted(lambda, p))
    return scope(ScopeReason::NotPRestricted, "lambda=" + lambda.to_string());
  if (!is_cs_weight(lambda, p))
    return scope(ScopeReason::NotCompletelySplittable,
                 "psi(" + lambda.to_string() + ")=" + std::to_string(psi(lambda)) + " > p");
  return std::nullopt;
}

std::optional<ScopeError> sym_gate(const Partition& lambda, Prime p) {
  if (p.value() == 2) return scope(ScopeReason::CharTwo, "p=2");
  if (!is_cs_partition(lambda, p))
    return scope(ScopeReason::NotCompletelySplittable,
                 "chi(" + lambda.to_string() + ")=" + std::to_string(chi(lambda)) + " > p");
  if (!is_p_regular(lambda, p)) return scope(ScopeReason::NotPRegular, "lambda=" + lambda.to_string());
  return std::nullopt;
}

}  // namespace

Scoped<GlExt> ext1_gl(const Weight& lambda, const Weight& mu, Prime p) {
  if (lambda.rank() != mu.rank()) throw std::invalid_argument("ext1_gl: rank mismatch");
  if (!mu.is_dominant()) return scope(ScopeReason::NonDominant, "mu=" + mu.to_string());
  if (auto err = gl_gate(lambda, p)) return *err;
  const auto [lam, nu] = normalize_pair(lambda, mu);
  if (weight_less(lam, nu))
    return scope(ScopeReason::OrderHypothesisFails, lambda.to_string() + " < " + mu.to_string());
  if (is_big_weight(lam, p) && nu == hat(lam, p)) return GlExt{1, mu};
  return GlExt{0, std::nullopt};
}

Scoped<SymExt> ext1_sym(const Partition& lambda, const Partition& mu, Prime p) {
  if (lambda.degree() != mu.degree()) throw std::invalid_argument("ext1_sym: degree mismatch");
  if (auto err = sym_gate(lambda, p)) return *err;
  if (!is_p_regular(mu, p)) return scope(ScopeReason::NotPRegular, "mu=" + mu.to_string());
  if (lambda != mu && dominates(lambda, mu))
    return scope(ScopeReason::OrderHypothesisFails, lambda.to_string() + " strictly dominates " + mu.to_string());
  if (is_big_partition(lambda, p) && mu == tilde(lambda, p)) return SymExt{1, mu};
  return SymExt{0, std::nullopt};
}

Scoped<RadicalPrediction<Weight>> rad_weyl_prediction(const Weight& lambda, Prime p) {
  if (auto err = gl_gate(lambda, p)) return *err;
  if (is_big_weight(lambda, p)) return RadicalPrediction<Weight>{hat(lambda, p)};
  return RadicalPrediction<Weight>{};
}

Scoped<RadicalPrediction<Partition>> rad_specht_prediction(const Partition& lambda, Prime p) {
  if (auto err = sym_gate(lambda, p)) return *err;
  if (is_big_partition(lambda, p)) return RadicalPrediction<Partition>{tilde(lambda, p)};
  return RadicalPrediction<Partition>{};
}

}  // namespace csext
