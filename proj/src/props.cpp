#include "klmkit/props.hpp"

#include <random>

#include "klmkit/fppoly.hpp"

namespace klmkit {

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Inconclusive: return "inconclusive";
  }
  return "?";
}

PropCheck check_p1(const Representation& rep) {
  const ExactMatrix id = ExactMatrix::identity(rep.dim, rep.field);
  for (std::size_t i = 0; i < rep.n; ++i) {
    Subspace joint = Subspace::full(rep.dim, rep.field);
    for (std::size_t j = 0; j < rep.n; ++j) {
      if (j == i) continue;
      joint = subspace_intersect(joint, kernel(rep.x_mats[j] - id));
    }
    if (joint.dim() == 0) continue;
    for (const Scalar& tau : eigenvalues_in_field(rep.x_mats[i])) {
      if (tau.is_zero()) continue;
      Subspace eig = kernel(rep.x_mats[i] - id.scaled(tau));
      Subspace meet = subspace_intersect(eig, joint);
      if (meet.dim() > 0)
        return PropCheck{false,
                         PropWitness{i + 1, tau, meet.basis().col(0)}};
    }
  }
  return PropCheck{};
}

PropCheck check_p2(const Representation& rep) {
  const ExactMatrix id = ExactMatrix::identity(rep.dim, rep.field);
  for (std::size_t i = 0; i < rep.n; ++i) {
    Subspace rest = Subspace::zero(rep.dim, rep.field);
    for (std::size_t j = 0; j < rep.n; ++j) {
      if (j == i) continue;
      rest = subspace_sum(rest, image(rep.x_mats[j] - id));
    }
    if (rest.dim() == rep.dim) continue;
    for (const Scalar& tau : eigenvalues_in_field(rep.x_mats[i])) {
      if (tau.is_zero()) continue;
      Subspace total = subspace_sum(image(rep.x_mats[i] - id.scaled(tau)), rest);
      if (total.dim() < rep.dim) {
        // witness: the first standard vector outside the sum
        for (std::size_t e = 0; e < rep.dim; ++e) {
          std::vector<Scalar> unit(rep.dim, Scalar::zero(rep.field));
          unit[e] = Scalar::one(rep.field);
          if (!total.contains(unit))
            return PropCheck{false, PropWitness{i + 1, tau, unit}};
        }
      }
    }
  }
  return PropCheck{};
}

namespace {

Subspace spin(const std::vector<ExactMatrix>& gens,
              const std::vector<Scalar>& seed, const FieldSpec& f) {
  const std::size_t d = seed.size();
  std::vector<std::vector<Scalar>> basis;  // grows; reduced incrementally
  std::vector<std::size_t> pivots;
  auto reduce_insert = [&](std::vector<Scalar> v) -> bool {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Scalar c = v[pivots[b]];  // copy: the loop below zeroes the slot
      if (c.is_zero()) continue;
      for (std::size_t t = 0; t < d; ++t) v[t] = v[t] - c * basis[b][t];
    }
    std::size_t piv = d;
    for (std::size_t t = 0; t < d; ++t)
      if (!v[t].is_zero()) {
        piv = t;
        break;
      }
    if (piv == d) return false;
    Scalar inv = v[piv].inverse();
    for (std::size_t t = 0; t < d; ++t) v[t] = v[t] * inv;
    basis.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  };
  reduce_insert(seed);
  for (std::size_t head = 0; head < basis.size() && basis.size() < d; ++head) {
    std::vector<Scalar> cur = basis[head];
    for (const ExactMatrix& g : gens) {
      if (basis.size() >= d) break;
      reduce_insert(g.apply(cur));
    }
  }
  return Subspace::span(ExactMatrix::from_columns(d, f, basis));
}

ExactMatrix random_algebra_element(const Representation& rep,
                                   std::mt19937_64& rng,
                                   std::size_t max_word_length) {
  const FieldSpec f = rep.field;
  std::uniform_int_distribution<std::size_t> nterms(1, 4);
  std::uniform_int_distribution<std::size_t> wlen(1, max_word_length);
  std::uniform_int_distribution<std::size_t> gen(0, rep.n - 1);
  auto coeff = [&]() -> Scalar {
    if (f.is_prime_field()) {
      std::uniform_int_distribution<std::int64_t> dist(1, f.p - 1);
      return Scalar::of_residue(dist(rng), f);
    }
    static const int pool[] = {1, -1, 2, 3, -2, 5};
    std::uniform_int_distribution<int> dist(0, 5);
    return Scalar::of_int(pool[dist(rng)], f);
  };
  ExactMatrix acc(rep.dim, rep.dim, f);
  std::size_t terms = nterms(rng);
  for (std::size_t t = 0; t < terms; ++t) {
    ExactMatrix prod = ExactMatrix::identity(rep.dim, f);
    std::size_t len = wlen(rng);
    for (std::size_t l = 0; l < len; ++l) prod = prod * rep.x_mats[gen(rng)];
    acc = acc + prod.scaled(coeff());
  }
  return acc;
}

ExactMatrix poly_of_matrix(const fppoly::Poly& f, const ExactMatrix& m) {
  const FieldSpec fs = m.field();
  ExactMatrix acc(m.rows(), m.rows(), fs);
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * m;
    if (f[i] != 0) {
      ExactMatrix c =
          ExactMatrix::identity(m.rows(), fs).scaled(Scalar::of_residue(f[i], fs));
      acc = acc + c;
    }
  }
  return acc;
}

Subspace perp(const Subspace& dual_space) {
  return kernel(dual_space.basis().transposed());
}

struct NortonOutcome {
  bool decided = false;
  IrreducibilityResult result;
};

// Norton test for one singular element E; the candidate list must cover the
// whole nullspace up to scalars for a "yes" to be sound.
NortonOutcome norton_test(const Representation& rep, const ExactMatrix& E,
                          bool can_certify_yes, std::size_t enumeration_cap) {
  const FieldSpec f = rep.field;
  Subspace null = kernel(E);
  if (null.dim() == 0)
    throw internal_error("norton_test: element is not singular");

  std::vector<std::vector<Scalar>> candidates;
  if (null.dim() == 1) {
    candidates.push_back(null.basis().col(0));
  } else if (f.is_prime_field()) {
    // all projective points of the nullspace
    std::size_t count = 1;
    for (std::size_t k = 1; k < null.dim(); ++k) {
      if (count > enumeration_cap / static_cast<std::size_t>(f.p) + 1) {
        count = SIZE_MAX;
        break;
      }
      count = count * static_cast<std::size_t>(f.p) + 1;
    }
    if (count == SIZE_MAX || count > enumeration_cap) {
      can_certify_yes = false;
      for (std::size_t j = 0; j < null.dim(); ++j)
        candidates.push_back(null.basis().col(j));
    } else {
      std::vector<std::int64_t> coord(null.dim(), 0);
      // first nonzero coordinate equal to 1
      for (std::size_t lead = 0; lead < null.dim(); ++lead) {
        std::vector<std::int64_t> tail(null.dim() - lead - 1, 0);
        for (;;) {
          std::vector<Scalar> combo(rep.dim, Scalar::zero(f));
          auto add_mult = [&](std::size_t j, std::int64_t c) {
            if (c == 0) return;
            Scalar s = Scalar::of_residue(c, f);
            std::vector<Scalar> col = null.basis().col(j);
            for (std::size_t t = 0; t < rep.dim; ++t)
              combo[t] = combo[t] + s * col[t];
          };
          add_mult(lead, 1);
          for (std::size_t t = 0; t < tail.size(); ++t)
            add_mult(lead + 1 + t, tail[t]);
          candidates.push_back(std::move(combo));
          std::size_t c = 0;
          while (c < tail.size() && ++tail[c] == f.p) tail[c++] = 0;
          if (c == tail.size()) break;
        }
      }
    }
  } else {
    can_certify_yes = false;
    for (std::size_t j = 0; j < null.dim(); ++j)
      candidates.push_back(null.basis().col(j));
  }

  for (const auto& v : candidates) {
    Subspace orbit = spin(rep.x_mats, v, f);
    if (orbit.dim() < rep.dim)
      return {true, {Tri::No, orbit}};
  }
  if (!can_certify_yes) return {false, {}};

  std::vector<ExactMatrix> transposed;
  for (const ExactMatrix& m : rep.x_mats)
    transposed.push_back(m.transposed());
  Subspace null_t = kernel(E.transposed());
  if (null_t.dim() == 0)
    throw internal_error("norton_test: transpose lost the nullity");
  Subspace dual_orbit = spin(transposed, null_t.basis().col(0), f);
  if (dual_orbit.dim() == rep.dim) return {true, {Tri::Yes, std::nullopt}};
  return {true, {Tri::No, perp(dual_orbit)}};
}

}  // namespace

IrreducibilityResult is_fn_irreducible(const Representation& rep,
                                       const IrreducibilityOptions& opts) {
  if (rep.dim == 0) return {Tri::No, std::nullopt};  // zero module
  if (rep.dim == 1) return {Tri::Yes, std::nullopt};
  const FieldSpec f = rep.field;
  std::mt19937_64 rng(opts.seed);

  for (std::size_t attempt = 0; attempt < opts.element_budget; ++attempt) {
    ExactMatrix e = random_algebra_element(rep, rng, opts.max_word_length);
    if (f.is_prime_field()) {
      std::vector<Scalar> cp = charpoly(e);
      fppoly::Poly poly(cp.size());
      for (std::size_t i = 0; i < cp.size(); ++i) poly[i] = cp[i].residue();
      if (fppoly::is_irreducible(poly, f.p)) {
        // any nonzero vector already generates everything under e alone
        return {Tri::Yes, std::nullopt};
      }
      std::vector<std::int64_t> rts = fppoly::roots(poly, f.p, rng);
      std::vector<ExactMatrix> singulars;
      for (std::int64_t r : rts)
        singulars.push_back(
            e - ExactMatrix::identity(rep.dim, f).scaled(Scalar::of_residue(r, f)));
      if (singulars.empty()) {
        fppoly::Poly factor = fppoly::some_irreducible_factor(poly, f.p, rng);
        singulars.push_back(poly_of_matrix(factor, e));
      }
      for (const ExactMatrix& E : singulars) {
        NortonOutcome out = norton_test(rep, E, true, opts.enumeration_cap);
        if (out.decided) return out.result;
      }
    } else {
      for (const Scalar& tau : eigenvalues_in_field(e)) {
        ExactMatrix E = e - ExactMatrix::identity(rep.dim, f).scaled(tau);
        Subspace null = kernel(E);
        NortonOutcome out =
            norton_test(rep, E, null.dim() == 1, opts.enumeration_cap);
        if (out.decided) return out.result;
      }
    }
  }
  return {Tri::Inconclusive, std::nullopt};
}

IsoResult are_isomorphic(const Representation& a, const Representation& b,
                         const WitnessOptions& opts) {
  if (a.field != b.field || a.n != b.n || a.group.tag != b.group.tag ||
      a.group.size() != b.group.size())
    throw domain_error("are_isomorphic: structural mismatch");
  for (std::size_t g = 0; g < a.group.size(); ++g)
    if (a.group.generators[g].alpha != b.group.generators[g].alpha)
      throw domain_error("are_isomorphic: Artin data differs");
  IsoResult res;
  if (a.dim != b.dim) {
    res.verdict = Tri::No;
    return res;
  }
  if (a.dim == 0) {
    res.verdict = Tri::Yes;
    res.witness = ExactMatrix(0, 0, a.field);
    return res;
  }
  std::vector<ExactMatrix> ga = a.x_mats, gb = b.x_mats;
  ga.insert(ga.end(), a.g_mats.begin(), a.g_mats.end());
  gb.insert(gb.end(), b.g_mats.begin(), b.g_mats.end());
  IntertwinerResult iw = solve_intertwiners(ga, gb, opts);
  res.hom_dim = iw.hom_dim;
  if (iw.hom_dim == 0) {
    res.verdict = Tri::No;
  } else if (iw.witness) {
    res.verdict = Tri::Yes;
    res.witness = iw.witness;
  } else {
    res.verdict = Tri::Inconclusive;
  }
  return res;
}

PropertyReport check_properties(const Representation& rep) {
  PropertyReport r;
  r.p1 = check_p1(rep);
  r.p2 = check_p2(rep);
  r.irreducible = is_fn_irreducible(rep);
  r.in_nt = r.p1.pass && r.p2.pass;
  return r;
}

}  // namespace klmkit
