#pragma once

#include "klmkit/longmoody.hpp"

namespace klmkit {

/// The subspace LM_lambda(V)^{[i]} for lambda outside {0,1}: slot i carries
/// Ker(rho(x_i) - 1), every other slot is zero. i is 1-based.
Subspace subspace_fixed_i(const Representation& rep, const Scalar& lambda,
                          std::size_t i);

/// The F_n-invariant subspace of LM_lambda(V) for lambda outside {0,1}:
/// each v with (lambda rho(x_1)...rho(x_n)) v = v embeds as the vector with
/// slot i = rho(x_{i+1})...rho(x_n) v and slot n = v.
Subspace subspace_infinity(const Representation& rep, const Scalar& lambda);

struct KlmDims {
  std::size_t lm_dim = 0;
  std::vector<std::size_t> fixed_i_dims;  // empty on the lambda = 1 path
  std::size_t infinity_dim = 0;
  std::size_t klm_dim = 0;
};

struct KlmResult {
  Representation rep;
  Scalar lambda;
  KlmDims dims;
};

/// The Katz-Long-Moody functor: quotient of LM_lambda(V) by the sum of the
/// slot-fixed subspaces and the F_n-invariant subspace. For lambda = 1 the
/// kernel of the multiplication map is used instead, and the quotient is
/// certified isomorphic to the image sub-representation inside V.
KlmResult klm(const Representation& rep, const Scalar& lambda);

/// dim KLM_lambda(V) without building the Long-Moody module:
/// n d - sum_i dim Ker(rho(x_i) - 1) - dim Ker(lambda rho(x_1...x_n) - 1).
std::size_t klm_rank(const Representation& rep, const Scalar& lambda);

struct DrResult {
  std::vector<ExactMatrix> x_mats;
  KlmDims dims;
};

/// Independent Dettweiler-Reiter middle-convolution oracle on a bare matrix
/// tuple: same block matrices, but the quotient kernel is assembled from
/// per-slot kernels and the joint fixed space of the block matrices computed
/// as a kernel intersection, not from the closed-form embedding.
DrResult dr_middle_convolution(const std::vector<ExactMatrix>& x_mats,
                               const Scalar& lambda);

}  // namespace klmkit
