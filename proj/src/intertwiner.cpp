#include "klmkit/intertwiner.hpp"

#include <cstdlib>
#include <random>

namespace klmkit {

WitnessOptions WitnessOptions::defaults() {
  WitnessOptions o;
  if (const char* env = std::getenv("KLMKIT_MAX_TRIALS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) o.max_trials = static_cast<std::size_t>(v);
  }
  return o;
}

IntertwinerResult solve_intertwiners(const std::vector<ExactMatrix>& rep_a,
                                     const std::vector<ExactMatrix>& rep_b,
                                     const WitnessOptions& opts) {
  if (rep_a.size() != rep_b.size())
    throw domain_error("solve_intertwiners: generator count mismatch");
  if (rep_a.empty())
    throw domain_error("solve_intertwiners: no generators");
  const FieldSpec f = rep_a[0].field();
  const std::size_t da = rep_a[0].rows(), db = rep_b[0].rows();
  for (const ExactMatrix& m : rep_a)
    if (m.rows() != da || m.cols() != da || m.field() != f)
      throw domain_error("solve_intertwiners: inconsistent A-side generators");
  for (const ExactMatrix& m : rep_b)
    if (m.rows() != db || m.cols() != db || m.field() != f)
      throw domain_error("solve_intertwiners: inconsistent B-side generators");

  IntertwinerResult res;
  if (da == 0 && db == 0) {
    // both zero modules: the zero map is an invertible intertwiner
    res.hom_dim = 0;
    res.witness = ExactMatrix(0, 0, f);
    return res;
  }

  // Unknown S is db x da; flatten S(u,v) -> u*da + v. The equation block for
  // generator g and position (u,w) reads sum_v S(u,v) A(v,w) - sum_t B(u,t) S(t,w).
  const std::size_t unknowns = da * db;
  ExactMatrix sys(rep_a.size() * db * da, unknowns, f);
  std::size_t row = 0;
  for (std::size_t g = 0; g < rep_a.size(); ++g) {
    const ExactMatrix& A = rep_a[g];
    const ExactMatrix& B = rep_b[g];
    for (std::size_t u = 0; u < db; ++u)
      for (std::size_t w = 0; w < da; ++w, ++row) {
        for (std::size_t v = 0; v < da; ++v)
          sys.at(row, u * da + v) = sys.at(row, u * da + v) + A.at(v, w);
        for (std::size_t t = 0; t < db; ++t)
          sys.at(row, t * da + w) = sys.at(row, t * da + w) - B.at(u, t);
      }
  }

  Subspace null = kernel(sys);
  res.hom_dim = null.dim();
  for (std::size_t j = 0; j < null.dim(); ++j) {
    std::vector<Scalar> flat = null.basis().col(j);
    ExactMatrix S(db, da, f);
    for (std::size_t u = 0; u < db; ++u)
      for (std::size_t v = 0; v < da; ++v) S.at(u, v) = flat[u * da + v];
    res.basis.push_back(std::move(S));
  }

  if (res.hom_dim == 0 || da != db) return res;

  for (const ExactMatrix& S : res.basis)
    if (is_invertible(S)) {
      res.witness = S;
      return res;
    }

  // random k-linear combinations with small sampled coefficients
  std::mt19937_64 rng(opts.seed);
  auto sample = [&]() -> Scalar {
    if (f.is_prime_field()) {
      std::uniform_int_distribution<std::int64_t> dist(0, f.p - 1);
      return Scalar::of_residue(dist(rng), f);
    }
    static const int pool[] = {0, 1, -1, 2, 3, -2, 5, 4};
    std::uniform_int_distribution<int> dist(0, 7);
    return Scalar::of_int(pool[dist(rng)], f);
  };
  for (std::size_t trial = 0; trial < opts.max_trials; ++trial) {
    ExactMatrix S(db, da, f);
    bool nonzero = false;
    for (const ExactMatrix& basis_elt : res.basis) {
      Scalar c = sample();
      if (c.is_zero()) continue;
      nonzero = true;
      S = S + basis_elt.scaled(c);
    }
    if (nonzero && is_invertible(S)) {
      res.witness = S;
      return res;
    }
  }
  return res;
}

}  // namespace klmkit
