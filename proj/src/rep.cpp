#include "klmkit/rep.hpp"

#include <sstream>

namespace klmkit {

GroupKind GroupKind::free_group(std::vector<GroupGenerator> gens) {
  return GroupKind{GroupKindTag::Free, std::move(gens)};
}

GroupKind GroupKind::cyclic(GroupGenerator gen) {
  return GroupKind{GroupKindTag::Cyclic, {std::move(gen)}};
}

GroupKind GroupKind::full_braid(std::size_t n) {
  GroupKind g;
  g.tag = GroupKindTag::FullBraid;
  for (std::size_t i = 1; i < n; ++i)
    g.generators.push_back(
        {"s" + std::to_string(i), BraidWord(n, {static_cast<int>(i)})});
  return g;
}

const char* GroupKind::tag_name(GroupKindTag t) {
  switch (t) {
    case GroupKindTag::Trivial: return "trivial";
    case GroupKindTag::Free: return "free";
    case GroupKindTag::Cyclic: return "cyclic";
    case GroupKindTag::FullBraid: return "full_braid";
  }
  return "?";
}

std::string ValidationReport::str() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (const auto& s : issues) os << "invalid: " << s << "\n";
  return os.str();
}

ValidationReport validate(const Representation& rep) {
  ValidationReport rport;
  auto bad = [&](const std::string& s) { rport.issues.push_back(s); };

  if (rep.n < 1) bad("free rank n must be >= 1");
  if (rep.x_mats.size() != rep.n)
    bad("expected " + std::to_string(rep.n) + " x-matrices, got " +
        std::to_string(rep.x_mats.size()));
  if (rep.g_mats.size() != rep.group.size())
    bad("expected " + std::to_string(rep.group.size()) +
        " group matrices, got " + std::to_string(rep.g_mats.size()));
  switch (rep.group.tag) {
    case GroupKindTag::Trivial:
      if (!rep.group.generators.empty())
        bad("trivial group must have no generators");
      break;
    case GroupKindTag::Cyclic:
      if (rep.group.size() != 1)
        bad("cyclic group must have exactly one generator");
      break;
    case GroupKindTag::FullBraid:
      if (rep.group.size() + 1 != rep.n)
        bad("full braid group on " + std::to_string(rep.n) +
            " strands needs " + std::to_string(rep.n - 1) + " generators");
      break;
    case GroupKindTag::Free:
      break;
  }
  for (const auto& gen : rep.group.generators)
    if (gen.alpha.strands() != rep.n)
      bad("generator " + gen.name + ": braid word on " +
          std::to_string(gen.alpha.strands()) + " strands, expected " +
          std::to_string(rep.n));
  if (!rport.ok()) return rport;

  auto check_mat = [&](const ExactMatrix& m, const std::string& name) {
    if (m.rows() != rep.dim || m.cols() != rep.dim) {
      bad(name + ": expected " + std::to_string(rep.dim) + "x" +
          std::to_string(rep.dim) + " matrix");
      return false;
    }
    if (m.field() != rep.field) {
      bad(name + ": field mismatch");
      return false;
    }
    if (!is_invertible(m)) {
      bad(name + ": matrix is not invertible");
      return false;
    }
    return true;
  };
  bool shapes_ok = true;
  for (std::size_t j = 0; j < rep.x_mats.size(); ++j)
    shapes_ok &= check_mat(rep.x_mats[j], "x" + std::to_string(j + 1));
  for (std::size_t g = 0; g < rep.g_mats.size(); ++g)
    shapes_ok &= check_mat(rep.g_mats[g], rep.group.generators[g].name);
  if (!shapes_ok) return rport;

  // Artin compatibility, written multiplicatively to avoid explicit
  // inverses: rho(g) rho(x_j) = rho(alpha(g)(x_j)) rho(g).
  for (std::size_t g = 0; g < rep.g_mats.size(); ++g) {
    const auto& gen = rep.group.generators[g];
    for (std::size_t j = 1; j <= rep.n; ++j) {
      FreeWord img = artin_apply(gen.alpha, FreeWord::generator(rep.n, j));
      ExactMatrix lhs = rep.g_mats[g] * rep.x_mats[j - 1];
      ExactMatrix rhs = evaluate_word(rep, img) * rep.g_mats[g];
      if (lhs != rhs)
        bad("Artin compatibility fails for generator " + gen.name +
            " and x" + std::to_string(j));
    }
  }

  if (rep.group.tag == GroupKindTag::FullBraid) {
    const auto& s = rep.g_mats;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] * s[i + 1] * s[i] != s[i + 1] * s[i] * s[i + 1])
        bad("braid relation fails for s" + std::to_string(i + 1) + ", s" +
            std::to_string(i + 2));
    }
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 2; j < s.size(); ++j)
        if (s[i] * s[j] != s[j] * s[i])
          bad("commutation fails for s" + std::to_string(i + 1) + ", s" +
              std::to_string(j + 1));
  }
  return rport;
}

void require_valid(const Representation& rep, const std::string& what) {
  ValidationReport r = validate(rep);
  if (!r.ok()) throw domain_error(what + ": " + r.str());
}

ExactMatrix evaluate_word(const Representation& rep, const FreeWord& w) {
  if (w.rank() != rep.n) throw domain_error("evaluate_word: rank mismatch");
  ExactMatrix acc = ExactMatrix::identity(rep.dim, rep.field);
  for (int l : w.letters()) {
    std::size_t j = static_cast<std::size_t>(l < 0 ? -l : l) - 1;
    acc = acc * (l > 0 ? rep.x_mats[j] : inverse(rep.x_mats[j]));
  }
  return acc;
}

ExactMatrix evaluate_ring(const Representation& rep,
                          const GroupRingElement& e) {
  if (e.rank() != rep.n) throw domain_error("evaluate_ring: rank mismatch");
  if (e.field() != rep.field)
    throw domain_error("evaluate_ring: field mismatch");
  ExactMatrix acc(rep.dim, rep.dim, rep.field);
  for (const auto& [w, c] : e.terms())
    acc = acc + evaluate_word(rep, w).scaled(c);
  return acc;
}

std::string character_compatibility_issue(const Representation& rep,
                                          const Character& chi) {
  if (chi.x_values.size() != rep.n)
    return "character needs " + std::to_string(rep.n) + " x-values";
  if (chi.g_values.size() != rep.group.size())
    return "character needs " + std::to_string(rep.group.size()) +
           " group values";
  for (const Scalar& v : chi.x_values) {
    if (v.field() != rep.field) return "character x-value field mismatch";
    if (v.is_zero()) return "character x-values must be nonzero";
  }
  for (const Scalar& v : chi.g_values) {
    if (v.field() != rep.field) return "character g-value field mismatch";
    if (v.is_zero()) return "character g-values must be nonzero";
  }
  // chi extends to the semidirect product iff it is constant on the strand
  // orbits of every alpha(g).
  for (const auto& gen : rep.group.generators) {
    std::vector<std::size_t> perm = braid_permutation(gen.alpha);
    for (std::size_t j = 0; j < rep.n; ++j)
      if (chi.x_values[j] != chi.x_values[perm[j]])
        return "character not constant on the strand orbit of " + gen.name +
               " through x" + std::to_string(j + 1);
  }
  return "";
}

Representation mul_character(const Representation& rep, const Character& chi) {
  std::string issue = character_compatibility_issue(rep, chi);
  if (!issue.empty()) throw domain_error("mul_character: " + issue);
  Representation out = rep;
  for (std::size_t j = 0; j < rep.n; ++j)
    out.x_mats[j] = rep.x_mats[j].scaled(chi.x_values[j]);
  for (std::size_t g = 0; g < rep.g_mats.size(); ++g)
    out.g_mats[g] = rep.g_mats[g].scaled(chi.g_values[g]);
  ValidationReport r = validate(out);
  if (!r.ok())
    throw internal_error("mul_character produced an invalid representation: " +
                         r.str());
  return out;
}

Representation restrict_to_fn(const Representation& rep) {
  Representation out = rep;
  out.group = GroupKind::trivial();
  out.g_mats.clear();
  return out;
}

}  // namespace klmkit
