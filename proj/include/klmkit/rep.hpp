#pragma once

#include <string>
#include <vector>

#include "klmkit/matrix.hpp"
#include "klmkit/words.hpp"

namespace klmkit {

enum class GroupKindTag { Trivial, Free, Cyclic, FullBraid };

struct GroupGenerator {
  std::string name;
  BraidWord alpha;  // the braid word alpha maps this generator to
};

/// The acting group G together with its Artin data. Trivial carries no
/// generators (pure Dettweiler-Reiter setting); Cyclic exactly one
/// (solid-torus closed braid); Free any number (braid monodromy);
/// FullBraid is B_n itself with generators sigma_1..sigma_{n-1}.
struct GroupKind {
  GroupKindTag tag = GroupKindTag::Trivial;
  std::vector<GroupGenerator> generators;

  static GroupKind trivial() { return {}; }
  static GroupKind free_group(std::vector<GroupGenerator> gens);
  static GroupKind cyclic(GroupGenerator gen);
  static GroupKind full_braid(std::size_t n);

  std::size_t size() const { return generators.size(); }
  static const char* tag_name(GroupKindTag t);
};

/// Matrix representation of F_n x|_alpha G: one invertible matrix per free
/// generator and per G-generator, subject to the Artin compatibility
/// relations (checked by validate, re-checked after every construction).
struct Representation {
  FieldSpec field;
  std::size_t n = 0;    // free rank
  std::size_t dim = 0;  // module dimension
  std::vector<ExactMatrix> x_mats;
  GroupKind group;
  std::vector<ExactMatrix> g_mats;
};

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
  std::string str() const;
};

/// Checks shapes, field consistency, invertibility of every generator
/// matrix, the Artin compatibility relation
/// rho(g) rho(x_j) = rho(alpha(g)(x_j)) rho(g), and (FullBraid only)
/// the braid relations among the G-matrices. Failures are report entries.
ValidationReport validate(const Representation& rep);

/// Throws domain_error when validate fails; for load paths.
void require_valid(const Representation& rep, const std::string& what);

/// Product of x-matrices according to the letters of w (inverses for
/// negative letters); the empty word gives the identity.
ExactMatrix evaluate_word(const Representation& rep, const FreeWord& w);

/// k-linear extension of evaluate_word.
ExactMatrix evaluate_ring(const Representation& rep,
                          const GroupRingElement& e);

/// One-dimensional character of the semidirect product: nonzero values on
/// the x-generators and the G-generators, constant on the strand orbits of
/// every alpha(g).
struct Character {
  std::vector<Scalar> x_values;
  std::vector<Scalar> g_values;
};

/// Empty string when chi extends to the semidirect product; otherwise a
/// description of the violated constraint.
std::string character_compatibility_issue(const Representation& rep,
                                          const Character& chi);

/// Mul_chi: scales rho(x_j) by chi(x_j) and rho(g) by chi(g).
Representation mul_character(const Representation& rep, const Character& chi);

/// Forgets the G-action: same x-matrices, trivial group.
Representation restrict_to_fn(const Representation& rep);

}  // namespace klmkit
