#include "klmkit/longmoody.hpp"

namespace klmkit {

ExactMatrix lm_x_matrix(const Representation& rep, const Scalar& lambda,
                        std::size_t i) {
  if (lambda.field() != rep.field)
    throw domain_error("lm_x_matrix: lambda field mismatch");
  if (lambda.is_zero()) throw domain_error("lm_x_matrix: lambda must be nonzero");
  if (i < 1 || i > rep.n) throw domain_error("lm_x_matrix: index out of range");
  const std::size_t d = rep.dim, n = rep.n;
  const ExactMatrix id = ExactMatrix::identity(d, rep.field);
  ExactMatrix out = ExactMatrix::identity(n * d, rep.field);
  for (std::size_t l = 1; l <= n; ++l) {
    ExactMatrix blk(d, d, rep.field);
    if (l < i)
      blk = (rep.x_mats[l - 1] - id).scaled(lambda);
    else if (l == i)
      blk = rep.x_mats[l - 1].scaled(lambda);
    else
      blk = rep.x_mats[l - 1] - id;
    out.set_block((i - 1) * d, (l - 1) * d, blk);
  }
  return out;
}

ExactMatrix lm_g_matrix(const Representation& rep, std::size_t gen_idx) {
  if (gen_idx >= rep.group.size())
    throw domain_error("lm_g_matrix: no such group generator");
  const std::size_t d = rep.dim, n = rep.n;
  const BraidWord& alpha = rep.group.generators[gen_idx].alpha;
  const ExactMatrix& g_mat = rep.g_mats[gen_idx];
  ExactMatrix out(n * d, n * d, rep.field);
  for (std::size_t j = 1; j <= n; ++j) {
    FreeWord img = artin_apply(alpha, FreeWord::generator(n, j));
    for (std::size_t i = 1; i <= n; ++i) {
      GroupRingElement delta = fox_delta(i, img, rep.field);
      if (delta.is_zero()) continue;
      out.set_block((i - 1) * d, (j - 1) * d,
                    evaluate_ring(rep, delta) * g_mat);
    }
  }
  return out;
}

LongMoodyResult long_moody(const Representation& rep, const Scalar& lambda) {
  if (lambda.is_zero()) throw domain_error("long_moody: lambda must be nonzero");
  LongMoodyResult res{Representation{}, lambda, rep.dim};
  Representation& lm = res.rep;
  lm.field = rep.field;
  lm.n = rep.n;
  lm.dim = rep.n * rep.dim;
  lm.group = rep.group;
  for (std::size_t i = 1; i <= rep.n; ++i)
    lm.x_mats.push_back(lm_x_matrix(rep, lambda, i));
  for (std::size_t g = 0; g < rep.group.size(); ++g)
    lm.g_mats.push_back(lm_g_matrix(rep, g));

  ValidationReport r = validate(lm);
  if (!r.ok())
    throw internal_error("long_moody assembled an invalid representation: " +
                         r.str());

  // rank(rho(x_1...x_n) - lambda) never exceeds the source dimension
  std::vector<int> all;
  for (std::size_t j = 1; j <= rep.n; ++j) all.push_back(static_cast<int>(j));
  ExactMatrix prod = evaluate_word(lm, FreeWord(rep.n, all));
  ExactMatrix shifted =
      prod - ExactMatrix::identity(lm.dim, lm.field).scaled(lambda);
  if (rank(shifted) > rep.dim)
    throw internal_error("long_moody: rank bound at infinity violated");
  return res;
}

ExactMatrix nabla(const Representation& rep) {
  const std::size_t d = rep.dim, n = rep.n;
  const ExactMatrix id = ExactMatrix::identity(d, rep.field);
  ExactMatrix out(d, n * d, rep.field);
  for (std::size_t i = 0; i < n; ++i)
    out.set_block(0, i * d, rep.x_mats[i] - id);
  return out;
}

}  // namespace klmkit
