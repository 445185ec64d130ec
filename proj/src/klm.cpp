#include "klmkit/klm.hpp"

namespace klmkit {

namespace {

void check_lambda_not_0_1(const Scalar& lambda, const char* what) {
  if (lambda.is_zero() || lambda.is_one())
    throw domain_error(std::string(what) +
                       ": lambda must avoid 0 and 1, got " + lambda.str());
}

ExactMatrix embed_slot(const ExactMatrix& basis, std::size_t slot,
                       std::size_t n) {
  const std::size_t d = basis.rows();
  ExactMatrix out(n * d, basis.cols(), basis.field());
  out.set_block(slot * d, 0, basis);
  return out;
}

ExactMatrix x_product(const Representation& rep) {
  ExactMatrix prod = ExactMatrix::identity(rep.dim, rep.field);
  for (const ExactMatrix& m : rep.x_mats) prod = prod * m;
  return prod;
}

std::vector<ExactMatrix> all_generator_matrices(const Representation& rep) {
  std::vector<ExactMatrix> mats = rep.x_mats;
  mats.insert(mats.end(), rep.g_mats.begin(), rep.g_mats.end());
  return mats;
}

KlmResult quotient_to_result(const Representation& lm, const Subspace& K,
                             const Scalar& lambda, KlmDims dims) {
  for (const ExactMatrix& m : all_generator_matrices(lm))
    for (std::size_t j = 0; j < K.dim(); ++j)
      if (!K.contains(m.apply(K.basis().col(j))))
        throw internal_error(
            "klm: reduction subspace is not invariant under the assembled "
            "action");
  QuotientAction qa = quotient_action(K, all_generator_matrices(lm));

  KlmResult res{Representation{}, lambda, std::move(dims)};
  res.rep.field = lm.field;
  res.rep.n = lm.n;
  res.rep.dim = lm.dim - K.dim();
  res.rep.group = lm.group;
  res.rep.x_mats.assign(qa.induced.begin(), qa.induced.begin() + lm.n);
  res.rep.g_mats.assign(qa.induced.begin() + lm.n, qa.induced.end());
  res.dims.klm_dim = res.rep.dim;

  ValidationReport r = validate(res.rep);
  if (!r.ok())
    throw internal_error("klm produced an invalid representation: " + r.str());
  return res;
}

}  // namespace

Subspace subspace_fixed_i(const Representation& rep, const Scalar& lambda,
                          std::size_t i) {
  check_lambda_not_0_1(lambda, "subspace_fixed_i");
  if (i < 1 || i > rep.n)
    throw domain_error("subspace_fixed_i: index out of range");
  Subspace fixed =
      kernel(rep.x_mats[i - 1] - ExactMatrix::identity(rep.dim, rep.field));
  return Subspace::span(embed_slot(fixed.basis(), i - 1, rep.n));
}

Subspace subspace_infinity(const Representation& rep, const Scalar& lambda) {
  check_lambda_not_0_1(lambda, "subspace_infinity");
  const std::size_t d = rep.dim, n = rep.n;
  ExactMatrix scaled_prod = x_product(rep).scaled(lambda);
  Subspace fixed = kernel(scaled_prod - ExactMatrix::identity(d, rep.field));
  // suffix products rho(x_{i+1}) ... rho(x_n)
  std::vector<ExactMatrix> suffix(n, ExactMatrix::identity(d, rep.field));
  for (std::size_t i = n - 1; i-- > 0;)
    suffix[i] = rep.x_mats[i + 1] * suffix[i + 1];
  std::vector<std::vector<Scalar>> cols;
  for (std::size_t j = 0; j < fixed.dim(); ++j) {
    std::vector<Scalar> v = fixed.basis().col(j);
    std::vector<Scalar> big;
    big.reserve(n * d);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Scalar> slot = suffix[i].apply(v);
      big.insert(big.end(), slot.begin(), slot.end());
    }
    cols.push_back(std::move(big));
  }
  return Subspace::span(
      ExactMatrix::from_columns(n * d, rep.field, cols));
}

KlmResult klm(const Representation& rep, const Scalar& lambda) {
  if (lambda.is_zero()) throw domain_error("klm: lambda must be nonzero");
  LongMoodyResult lm = long_moody(rep, lambda);
  KlmDims dims;
  dims.lm_dim = lm.rep.dim;

  if (lambda.is_one()) {
    // Ker of the multiplication map equals the F_n-invariant subspace here.
    ExactMatrix del = nabla(rep);
    Subspace K = kernel(del);
    dims.infinity_dim = K.dim();
    KlmResult res = quotient_to_result(lm.rep, K, lambda, dims);

    // The quotient must be isomorphic to the image sub-representation of V,
    // with the multiplication map itself inducing the isomorphism.
    Subspace W = image(del);
    Representation sub;
    sub.field = rep.field;
    sub.n = rep.n;
    sub.dim = W.dim();
    sub.group = rep.group;
    for (const ExactMatrix& m : rep.x_mats)
      sub.x_mats.push_back(restrict_action(W, m));
    for (const ExactMatrix& m : rep.g_mats)
      sub.g_mats.push_back(restrict_action(W, m));

    QuotientAction qa = quotient_action(K, all_generator_matrices(lm.rep));
    ExactMatrix S(W.dim(), res.rep.dim, rep.field);
    for (std::size_t j = 0; j < res.rep.dim; ++j) {
      auto coords = W.coordinates(del.apply(qa.complement.col(j)));
      if (!coords)
        throw internal_error("klm: multiplication image escaped its span");
      S.set_col(j, *coords);
    }
    if (!is_invertible(S))
      throw internal_error("klm: induced multiplication map is singular");
    std::vector<ExactMatrix> quot_gens = all_generator_matrices(res.rep);
    std::vector<ExactMatrix> sub_gens = all_generator_matrices(sub);
    for (std::size_t g = 0; g < quot_gens.size(); ++g)
      if (S * quot_gens[g] != sub_gens[g] * S)
        throw internal_error(
            "klm: quotient and image sub-representation disagree");
    return res;
  }

  Subspace K = subspace_infinity(rep, lambda);
  dims.infinity_dim = K.dim();
  std::size_t parts = K.dim();
  for (std::size_t i = 1; i <= rep.n; ++i) {
    Subspace fi = subspace_fixed_i(rep, lambda, i);
    dims.fixed_i_dims.push_back(fi.dim());
    parts += fi.dim();
    K = subspace_sum(K, fi);
  }
  if (K.dim() != parts)
    throw internal_error("klm: reduction sum failed to be direct");
  return quotient_to_result(lm.rep, K, lambda, dims);
}

std::size_t klm_rank(const Representation& rep, const Scalar& lambda) {
  check_lambda_not_0_1(lambda, "klm_rank");
  const ExactMatrix id = ExactMatrix::identity(rep.dim, rep.field);
  std::size_t total = rep.n * rep.dim;
  for (const ExactMatrix& m : rep.x_mats)
    total -= kernel(m - id).dim();
  total -= kernel(x_product(rep).scaled(lambda) - id).dim();
  return total;
}

DrResult dr_middle_convolution(const std::vector<ExactMatrix>& x_mats,
                               const Scalar& lambda) {
  check_lambda_not_0_1(lambda, "dr_middle_convolution");
  if (x_mats.empty())
    throw domain_error("dr_middle_convolution: empty matrix tuple");
  Representation rep;
  rep.field = x_mats[0].field();
  rep.n = x_mats.size();
  rep.dim = x_mats[0].rows();
  rep.x_mats = x_mats;
  rep.group = GroupKind::trivial();
  require_valid(rep, "dr_middle_convolution input");

  const std::size_t d = rep.dim, n = rep.n;
  const ExactMatrix id = ExactMatrix::identity(d, rep.field);
  std::vector<ExactMatrix> blocks;
  for (std::size_t i = 1; i <= n; ++i)
    blocks.push_back(lm_x_matrix(rep, lambda, i));

  KlmDims dims;
  dims.lm_dim = n * d;

  // K: per-slot fixed vectors of the small matrices, assembled directly.
  std::vector<std::vector<Scalar>> k_cols;
  for (std::size_t i = 0; i < n; ++i) {
    Subspace fixed = kernel(x_mats[i] - id);
    dims.fixed_i_dims.push_back(fixed.dim());
    ExactMatrix emb = embed_slot(fixed.basis(), i, n);
    for (std::size_t j = 0; j < emb.cols(); ++j) k_cols.push_back(emb.col(j));
  }
  Subspace K = Subspace::span(
      ExactMatrix::from_columns(n * d, rep.field, k_cols));

  // L: joint fixed space of the block matrices, found by intersecting their
  // kernels (deliberately not the closed-form embedding).
  const ExactMatrix big_id = ExactMatrix::identity(n * d, rep.field);
  Subspace L = Subspace::full(n * d, rep.field);
  for (const ExactMatrix& b : blocks)
    L = subspace_intersect(L, kernel(b - big_id));
  dims.infinity_dim = L.dim();

  Subspace red = subspace_sum(K, L);
  QuotientAction qa = quotient_action(red, blocks);
  dims.klm_dim = n * d - red.dim();
  return DrResult{std::move(qa.induced), std::move(dims)};
}

}  // namespace klmkit
