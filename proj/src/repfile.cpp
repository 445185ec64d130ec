#include "klmkit/repfile.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "klmkit/klm.hpp"
#include "klmkit/props.hpp"

namespace klmkit {

using nlohmann::json;

namespace {

json field_to_json(const FieldSpec& f) {
  if (f.is_rational()) return json{{"kind", "rational"}};
  return json{{"kind", "prime"}, {"p", f.p}};
}

FieldSpec field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw parse_error("field: expected an object with a 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return FieldSpec::rational();
  if (kind == "prime") {
    if (!j.contains("p") || !j.at("p").is_number_integer())
      throw parse_error("field: prime kind needs an integer 'p'");
    return FieldSpec::prime(j.at("p").get<std::int64_t>());
  }
  throw parse_error("field: unknown kind '" + kind + "'");
}

json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMatrix matrix_from_json(const json& j, std::size_t dim,
                             const FieldSpec& f, const std::string& name) {
  if (!j.is_array() || j.size() != dim)
    throw parse_error(name + ": expected " + std::to_string(dim) + " rows");
  ExactMatrix m(dim, dim, f);
  for (std::size_t i = 0; i < dim; ++i) {
    const json& row = j.at(i);
    if (!row.is_array() || row.size() != dim)
      throw parse_error(name + ": row " + std::to_string(i) + " needs " +
                        std::to_string(dim) + " entries");
    for (std::size_t k = 0; k < dim; ++k) {
      if (!row.at(k).is_string())
        throw parse_error(name + ": entries must be scalar strings");
      m.at(i, k) = Scalar::parse(row.at(k).get<std::string>(), f);
    }
  }
  return m;
}

json rep_to_json(const Representation& rep) {
  json j;
  j["field"] = field_to_json(rep.field);
  j["n"] = rep.n;
  j["dim"] = rep.dim;
  json xs = json::array();
  for (const ExactMatrix& m : rep.x_mats) xs.push_back(matrix_to_json(m));
  j["x"] = std::move(xs);
  json group;
  group["kind"] = GroupKind::tag_name(rep.group.tag);
  json gens = json::array();
  for (std::size_t g = 0; g < rep.group.size(); ++g) {
    json gen;
    gen["name"] = rep.group.generators[g].name;
    gen["alpha"] = rep.group.generators[g].alpha.letters();
    gen["matrix"] = matrix_to_json(rep.g_mats[g]);
    gens.push_back(std::move(gen));
  }
  group["generators"] = std::move(gens);
  j["group"] = std::move(group);
  return j;
}

Representation rep_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("representation: expected an object");
  Representation rep;
  try {
    rep.field = field_from_json(j.at("field"));
    rep.n = j.at("n").get<std::size_t>();
    rep.dim = j.at("dim").get<std::size_t>();
    const json& xs = j.at("x");
    if (!xs.is_array() || xs.size() != rep.n)
      throw parse_error("x: expected " + std::to_string(rep.n) + " matrices");
    for (std::size_t i = 0; i < rep.n; ++i)
      rep.x_mats.push_back(matrix_from_json(xs.at(i), rep.dim, rep.field,
                                            "x" + std::to_string(i + 1)));
    const json& group = j.at("group");
    std::string kind = group.at("kind").get<std::string>();
    json gens = group.contains("generators") ? group.at("generators")
                                             : json::array();
    if (!gens.is_array()) throw parse_error("group.generators: expected array");
    auto parse_gen = [&](const json& g, std::size_t idx,
                         bool implicit_alpha) -> GroupGenerator {
      std::string name = g.contains("name")
                             ? g.at("name").get<std::string>()
                             : "g" + std::to_string(idx + 1);
      std::vector<int> letters;
      if (g.contains("alpha")) {
        for (const json& l : g.at("alpha")) letters.push_back(l.get<int>());
      } else if (implicit_alpha) {
        letters = {static_cast<int>(idx + 1)};
      } else {
        throw parse_error("group generator " + name + ": missing alpha");
      }
      return GroupGenerator{std::move(name), BraidWord(rep.n, letters)};
    };
    if (kind == "trivial") {
      rep.group = GroupKind::trivial();
      if (!gens.empty())
        throw parse_error("trivial group cannot have generators");
    } else if (kind == "free") {
      std::vector<GroupGenerator> gg;
      for (std::size_t i = 0; i < gens.size(); ++i)
        gg.push_back(parse_gen(gens.at(i), i, false));
      rep.group = GroupKind::free_group(std::move(gg));
    } else if (kind == "cyclic") {
      if (gens.size() != 1)
        throw parse_error("cyclic group needs exactly one generator");
      rep.group = GroupKind::cyclic(parse_gen(gens.at(0), 0, false));
    } else if (kind == "full_braid") {
      rep.group = GroupKind::full_braid(rep.n);
      if (gens.size() != rep.n - 1)
        throw parse_error("full_braid group needs " +
                          std::to_string(rep.n - 1) + " generators");
      for (std::size_t i = 0; i < gens.size(); ++i) {
        GroupGenerator parsed = parse_gen(gens.at(i), i, true);
        if (parsed.alpha.letters() !=
            std::vector<int>{static_cast<int>(i + 1)})
          throw parse_error("full_braid generator " + parsed.name +
                            ": alpha must be sigma_" + std::to_string(i + 1));
        rep.group.generators[i].name = parsed.name;
      }
    } else {
      throw parse_error("unknown group kind '" + kind + "'");
    }
    for (std::size_t g = 0; g < rep.group.size(); ++g)
      rep.g_mats.push_back(matrix_from_json(gens.at(g).at("matrix"), rep.dim,
                                            rep.field,
                                            rep.group.generators[g].name));
  } catch (const json::exception& e) {
    throw parse_error(std::string("representation file: ") + e.what());
  }
  return rep;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
  return j;
}

Character character_from_json(const json& j, const FieldSpec& f) {
  Character chi;
  if (!j.is_object() || !j.contains("x"))
    throw parse_error("chi: expected an object with 'x' values");
  for (const json& v : j.at("x"))
    chi.x_values.push_back(Scalar::parse(v.get<std::string>(), f));
  if (j.contains("g"))
    for (const json& v : j.at("g"))
      chi.g_values.push_back(Scalar::parse(v.get<std::string>(), f));
  return chi;
}

}  // namespace

Representation rep_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("representation text: ") + e.what());
  }
  Representation rep = rep_from_json(j);
  require_valid(rep, "representation");
  return rep;
}

Representation load_rep_raw(const std::string& path) {
  return rep_from_json(read_json_file(path));
}

Representation load_rep(const std::string& path) {
  Representation rep = load_rep_raw(path);
  require_valid(rep, path);
  return rep;
}

std::string rep_to_json_text(const Representation& rep) {
  return rep_to_json(rep).dump(2) + "\n";
}

void save_rep(const Representation& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write '" + path + "'");
  out << rep_to_json_text(rep);
}

Representation example_burau(std::size_t n, const Scalar& t, const Scalar& s) {
  if (n < 2) throw domain_error("burau example needs n >= 2");
  if (t.is_zero() || s.is_zero())
    throw domain_error("burau example needs nonzero t and s");
  Representation rep;
  rep.field = t.field();
  rep.n = n;
  rep.dim = 1;
  for (std::size_t j = 0; j < n; ++j) {
    ExactMatrix m(1, 1, rep.field);
    m.at(0, 0) = t;
    rep.x_mats.push_back(m);
  }
  rep.group = GroupKind::full_braid(n);
  for (std::size_t i = 1; i < n; ++i) {
    ExactMatrix m(1, 1, rep.field);
    m.at(0, 0) = s;
    rep.g_mats.push_back(m);
  }
  require_valid(rep, "burau example");
  return rep;
}

Representation example_hypergeometric(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero())
    throw domain_error("hypergeometric example needs nonzero a and b");
  Representation rep;
  rep.field = a.field();
  rep.n = 2;
  rep.dim = 1;
  ExactMatrix ma(1, 1, rep.field), mb(1, 1, rep.field);
  ma.at(0, 0) = a;
  mb.at(0, 0) = b;
  rep.x_mats = {ma, mb};
  rep.group = GroupKind::trivial();
  require_valid(rep, "hypergeometric example");
  return rep;
}

Representation example_heun(const Scalar& c) {
  if (c.is_zero()) throw domain_error("heun example needs nonzero c");
  Representation rep;
  rep.field = c.field();
  rep.n = 4;
  rep.dim = 1;
  const Scalar one = Scalar::one(rep.field);
  for (const Scalar& v : {one, c, c, one}) {
    ExactMatrix m(1, 1, rep.field);
    m.at(0, 0) = v;
    rep.x_mats.push_back(m);
  }
  std::vector<GroupGenerator> gens;
  for (int j = 1; j <= 3; ++j)
    gens.push_back(
        {"g" + std::to_string(j), BraidWord(4, {j, j})});
  rep.group = GroupKind::free_group(std::move(gens));
  for (int j = 0; j < 3; ++j)
    rep.g_mats.push_back(ExactMatrix::identity(1, rep.field));
  require_valid(rep, "heun example");
  return rep;
}

Pipeline load_pipeline(const std::string& path) {
  json j = read_json_file(path);
  Pipeline p;
  try {
    const json& input = j.at("input");
    if (input.is_string()) {
      std::filesystem::path base = std::filesystem::path(path).parent_path();
      p.input = load_rep((base / input.get<std::string>()).string());
    } else {
      Representation rep = rep_from_json(input);
      require_valid(rep, path + ": inline input");
      p.input = std::move(rep);
    }
    for (const json& step : j.at("steps")) {
      std::string op = step.at("op").get<std::string>();
      if (op == "klm") {
        Scalar lambda = Scalar::parse(step.at("lambda").get<std::string>(),
                                      p.input.field);
        if (lambda.is_zero())
          throw parse_error("pipeline: klm lambda must be nonzero");
        p.steps.push_back(StepKlm{lambda});
      } else if (op == "mul") {
        p.steps.push_back(
            StepMul{character_from_json(step.at("chi"), p.input.field)});
      } else if (op == "check") {
        p.steps.push_back(StepCheck{});
      } else if (op == "restrict") {
        p.steps.push_back(StepRestrict{});
      } else {
        throw parse_error("pipeline: unknown op '" + op + "'");
      }
    }
  } catch (const json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
  return p;
}

namespace {

std::string dims_detail(const KlmDims& d) {
  std::ostringstream os;
  os << "lm_dim=" << d.lm_dim << " fixed_i_dims=[";
  for (std::size_t i = 0; i < d.fixed_i_dims.size(); ++i)
    os << (i ? "," : "") << d.fixed_i_dims[i];
  os << "] infinity_dim=" << d.infinity_dim << " klm_dim=" << d.klm_dim;
  return os.str();
}

std::string property_detail(const PropertyReport& r) {
  std::ostringstream os;
  os << "p1=" << (r.p1.pass ? "pass" : "fail")
     << " p2=" << (r.p2.pass ? "pass" : "fail")
     << " irreducible=" << tri_name(r.irreducible.verdict)
     << " in_nt=" << (r.in_nt ? "yes" : "no");
  return os.str();
}

}  // namespace

std::vector<PipelineStepReport> run_pipeline(const Pipeline& p,
                                             Representation& final_rep) {
  std::vector<PipelineStepReport> reports;
  Representation cur = p.input;
  for (std::size_t idx = 0; idx < p.steps.size(); ++idx) {
    PipelineStepReport rep_entry;
    rep_entry.index = idx;
    try {
      if (const StepKlm* s = std::get_if<StepKlm>(&p.steps[idx])) {
        KlmResult r = klm(cur, s->lambda);
        rep_entry.description = "klm lambda=" + s->lambda.str();
        rep_entry.detail = dims_detail(r.dims);
        cur = std::move(r.rep);
      } else if (const StepMul* s = std::get_if<StepMul>(&p.steps[idx])) {
        cur = mul_character(cur, s->chi);
        rep_entry.description = "mul";
        rep_entry.detail = "character applied";
      } else if (std::get_if<StepCheck>(&p.steps[idx])) {
        rep_entry.description = "check";
        rep_entry.detail = property_detail(check_properties(cur));
      } else {
        cur = restrict_to_fn(cur);
        rep_entry.description = "restrict";
        rep_entry.detail = "group forgotten";
      }
    } catch (const internal_error&) {
      throw;
    } catch (const error& e) {
      throw domain_error("pipeline step " + std::to_string(idx) + ": " +
                         e.what());
    }
    rep_entry.dim_after = cur.dim;
    reports.push_back(std::move(rep_entry));
  }
  final_rep = std::move(cur);
  return reports;
}

}  // namespace klmkit
