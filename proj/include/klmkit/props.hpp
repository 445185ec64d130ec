#pragma once

#include <optional>

#include "klmkit/eigen.hpp"
#include "klmkit/intertwiner.hpp"
#include "klmkit/rep.hpp"

namespace klmkit {

enum class Tri { Yes, No, Inconclusive };
const char* tri_name(Tri t);

struct PropWitness {
  std::size_t i = 0;  // 1-based generator index
  Scalar tau;
  std::vector<Scalar> vec;  // P1: a nonzero joint vector; P2: vector outside the sum
};

struct PropCheck {
  bool pass = true;
  std::optional<PropWitness> witness;
};

/// (P1): Ker(rho(x_i) - tau) meets the joint 1-eigenspace of the other
/// generators only in 0, for every i and tau in k^x. Only k-eigenvalues of
/// rho(x_i) can violate this, so the check quantifies over those.
PropCheck check_p1(const Representation& rep);

/// (P2): Im(rho(x_i) - tau) + sum_{j != i} Im(rho(x_j) - 1) = V, same
/// quantification.
PropCheck check_p2(const Representation& rep);

struct IrreducibilityResult {
  Tri verdict = Tri::Inconclusive;
  std::optional<Subspace> witness;  // proper nonzero invariant subspace on No
};

struct IrreducibilityOptions {
  std::uint64_t seed = 0x6e6f72746f6e2e31ULL;
  std::size_t element_budget = 64;  // random algebra elements to try
  std::size_t max_word_length = 6;
  std::size_t enumeration_cap = 20000;  // projective nullspace points (F_p)
};

/// F_n-irreducibility: no proper nonzero subspace invariant under the
/// x-matrices. Decisive over F_p at the sizes this library targets (Norton
/// pairs, with singular elements manufactured from irreducible factors of
/// random characteristic polynomials); over Q only a nullity-one Norton
/// pair certifies "yes", otherwise "inconclusive".
IrreducibilityResult is_fn_irreducible(const Representation& rep,
                                       const IrreducibilityOptions& opts = {});

struct IsoResult {
  Tri verdict = Tri::Inconclusive;
  std::size_t hom_dim = 0;
  std::optional<ExactMatrix> witness;
};

/// Constructive isomorphism test over the combined generator lists.
/// "no" is certified (dimension mismatch or zero hom space); "yes" comes
/// with an invertible intertwiner.
IsoResult are_isomorphic(const Representation& a, const Representation& b,
                         const WitnessOptions& opts =
                             WitnessOptions::defaults());

struct PropertyReport {
  PropCheck p1, p2;
  IrreducibilityResult irreducible;
  bool in_nt = false;
};

PropertyReport check_properties(const Representation& rep);

}  // namespace klmkit
