#pragma once

#include "klmkit/rep.hpp"

namespace klmkit {

/// Block matrix of the twisted F_n-action on V^n: identity everywhere
/// except block row i (1-based), which reads
///   lambda(rho(x_1)-1), ..., lambda(rho(x_{i-1})-1), lambda rho(x_i),
///   rho(x_{i+1})-1, ..., rho(x_n)-1.
ExactMatrix lm_x_matrix(const Representation& rep, const Scalar& lambda,
                        std::size_t i);

/// Block matrix of the G-action on V^n via the reversed Fox derivative:
/// block (i, j) = rho(delta_i(alpha(g)(x_j))) rho(g). Independent of the
/// twist.
ExactMatrix lm_g_matrix(const Representation& rep, std::size_t gen_idx);

struct LongMoodyResult {
  Representation rep;   // dimension n * dim(V), same group data
  Scalar lambda;
  std::size_t source_dim = 0;
};

/// The twisted Long-Moody module on V^n, assembled from lm_x_matrix and
/// lm_g_matrix and re-validated (the compatibility of the twisted action
/// with the G-action is an exact identity; failure aborts).
LongMoodyResult long_moody(const Representation& rep, const Scalar& lambda);

/// Matrix of the multiplication map V^n -> V,
/// (v_1,...,v_n) -> sum_i (rho(x_i)-1) v_i.
ExactMatrix nabla(const Representation& rep);

}  // namespace klmkit
