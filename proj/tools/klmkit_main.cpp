#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "klmkit/klm.hpp"
#include "klmkit/props.hpp"
#include "klmkit/repfile.hpp"

namespace {

using namespace klmkit;

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitParse = 2;

FieldSpec parse_field_flag(const std::string& text) {
  if (text == "rational") return FieldSpec::rational();
  if (text.rfind("prime:", 0) == 0) {
    try {
      return FieldSpec::prime(std::stoll(text.substr(6)));
    } catch (const std::exception&) {
      throw parse_error("bad --field value '" + text + "'");
    }
  }
  throw parse_error("bad --field value '" + text +
                    "' (expected rational or prime:<p>)");
}

void emit_rep(const Representation& rep, const std::string& out_path) {
  if (out_path.empty())
    std::cout << rep_to_json_text(rep);
  else
    save_rep(rep, out_path);
}

void print_local_eigenvalues(const Representation& rep) {
  std::cout << "eigenvalues outside " << rep.field.str()
            << " not listed\n";
  for (std::size_t i = 0; i < rep.n; ++i) {
    std::cout << "x" << (i + 1) << ": eigenvalues {";
    std::vector<Scalar> ev = eigenvalues_in_field(rep.x_mats[i]);
    for (std::size_t k = 0; k < ev.size(); ++k)
      std::cout << (k ? ", " : "") << ev[k].str();
    std::cout << "}\n";
  }
}

void print_dims(const KlmDims& d) {
  std::cout << "lm_dim=" << d.lm_dim << " fixed_i_dims=[";
  for (std::size_t i = 0; i < d.fixed_i_dims.size(); ++i)
    std::cout << (i ? "," : "") << d.fixed_i_dims[i];
  std::cout << "] infinity_dim=" << d.infinity_dim
            << " klm_dim=" << d.klm_dim << "\n";
}

void print_prop_report(const PropertyReport& r) {
  auto show = [&](const char* name, const PropCheck& c) {
    std::cout << name << ": " << (c.pass ? "pass" : "fail");
    if (!c.pass && c.witness) {
      std::cout << " (i=" << c.witness->i << ", tau=" << c.witness->tau.str()
                << ", witness=[";
      for (std::size_t t = 0; t < c.witness->vec.size(); ++t)
        std::cout << (t ? "," : "") << c.witness->vec[t].str();
      std::cout << "])";
    }
    std::cout << "\n";
  };
  show("P1", r.p1);
  show("P2", r.p2);
  std::cout << "F_n-irreducible: " << tri_name(r.irreducible.verdict);
  if (r.irreducible.verdict == Tri::No && r.irreducible.witness)
    std::cout << " (invariant subspace of dimension "
              << r.irreducible.witness->dim() << ")";
  std::cout << "\n";
  std::cout << "in NT category: " << (r.in_nt ? "yes" : "no") << "\n";
}

struct Options {
  std::string command;
  std::string path_a, path_b;
  std::string lambda_text = "";
  std::string field_text = "rational";
  std::string out_path;
  std::string example_name;
  bool verify_roundtrip = false;
  std::uint64_t seed = 0;
  bool seed_set = false;
  // example parameters
  std::size_t n = 3;
  std::string t_text = "7/3", s_text = "1", a_text = "2", b_text = "3",
              c_text = "3";
};

WitnessOptions witness_options(const Options& o) {
  WitnessOptions w = WitnessOptions::defaults();
  if (o.seed_set) w.seed = o.seed;
  return w;
}

Scalar required_lambda(const Options& o, const FieldSpec& f) {
  if (o.lambda_text.empty()) throw parse_error("--lambda is required");
  Scalar l = Scalar::parse(o.lambda_text, f);
  if (l.is_zero()) throw domain_error("lambda must be nonzero");
  return l;
}

int run(const Options& o) {
  if (o.command == "validate") {
    Representation rep = load_rep_raw(o.path_a);
    ValidationReport r = validate(rep);
    std::cout << r.str() << (r.ok() ? "\n" : "");
    return r.ok() ? kExitOk : kExitSemantic;
  }

  if (o.command == "lm") {
    Representation rep = load_rep(o.path_a);
    LongMoodyResult r = long_moody(rep, required_lambda(o, rep.field));
    std::cout << "lm_dim=" << r.rep.dim << "\n";
    print_local_eigenvalues(r.rep);
    emit_rep(r.rep, o.out_path);
    return kExitOk;
  }

  if (o.command == "klm") {
    Representation rep = load_rep(o.path_a);
    if (!check_p1(rep).pass || !check_p2(rep).pass)
      std::cout << "note: input is outside the NT category; the quotient is "
                   "still computed\n";
    KlmResult r = klm(rep, required_lambda(o, rep.field));
    print_dims(r.dims);
    print_local_eigenvalues(r.rep);
    emit_rep(r.rep, o.out_path);
    return kExitOk;
  }

  if (o.command == "mc-dr") {
    Representation rep = load_rep(o.path_a);
    if (rep.group.tag != GroupKindTag::Trivial)
      throw domain_error("mc-dr requires trivial group");
    DrResult r = dr_middle_convolution(rep.x_mats,
                                       required_lambda(o, rep.field));
    print_dims(r.dims);
    Representation out;
    out.field = rep.field;
    out.n = rep.n;
    out.dim = r.dims.klm_dim;
    out.x_mats = r.x_mats;
    out.group = GroupKind::trivial();
    require_valid(out, "mc-dr output");
    print_local_eigenvalues(out);
    emit_rep(out, o.out_path);
    return kExitOk;
  }

  if (o.command == "check") {
    Representation rep = load_rep(o.path_a);
    PropertyReport r = check_properties(rep);
    print_prop_report(r);
    return r.in_nt ? kExitOk : kExitSemantic;
  }

  if (o.command == "iso") {
    Representation a = load_rep(o.path_a);
    Representation b = load_rep(o.path_b);
    IsoResult r = are_isomorphic(a, b, witness_options(o));
    std::cout << "isomorphic: " << tri_name(r.verdict)
              << " (hom dimension " << r.hom_dim << ")\n";
    return r.verdict == Tri::Yes ? kExitOk : kExitSemantic;
  }

  if (o.command == "pipeline") {
    Pipeline p = load_pipeline(o.path_a);
    Representation final_rep;
    for (const PipelineStepReport& step : run_pipeline(p, final_rep))
      std::cout << "step " << step.index << " " << step.description
                << ": dim=" << step.dim_after << " " << step.detail << "\n";
    if (o.verify_roundtrip) {
      IsoResult r = are_isomorphic(final_rep, p.input, witness_options(o));
      std::cout << "roundtrip isomorphic: " << tri_name(r.verdict) << "\n";
      if (r.verdict != Tri::Yes) return kExitSemantic;
    }
    emit_rep(final_rep, o.out_path);
    return kExitOk;
  }

  if (o.command == "example") {
    FieldSpec f = parse_field_flag(o.field_text);
    Representation rep;
    if (o.example_name == "burau")
      rep = example_burau(o.n, Scalar::parse(o.t_text, f),
                          Scalar::parse(o.s_text, f));
    else if (o.example_name == "hypergeometric")
      rep = example_hypergeometric(Scalar::parse(o.a_text, f),
                                   Scalar::parse(o.b_text, f));
    else if (o.example_name == "heun")
      rep = example_heun(Scalar::parse(o.c_text, f));
    else
      throw parse_error("unknown example '" + o.example_name +
                        "' (burau, hypergeometric, heun)");
    emit_rep(rep, o.out_path);
    return kExitOk;
  }

  throw parse_error("no command given");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"klmkit: exact Katz-Long-Moody convolution on matrix "
               "representations of F_n x| G"};
  app.require_subcommand(1);
  Options o;

  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "seed for randomized witness search")
        ->each([&](const std::string&) { o.seed_set = true; });
  };

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check a representation file");
  validate_cmd->add_option("file", o.path_a)->required();

  for (const char* name : {"lm", "klm", "mc-dr"}) {
    CLI::App* cmd = app.add_subcommand(
        name, std::string(name) + " functor applied to a representation file");
    cmd->add_option("file", o.path_a)->required();
    cmd->add_option("--lambda", o.lambda_text, "twist parameter")->required();
    cmd->add_option("--out", o.out_path, "output file (default stdout)");
  }

  CLI::App* check_cmd =
      app.add_subcommand("check", "P1/P2/irreducibility report");
  check_cmd->add_option("file", o.path_a)->required();

  CLI::App* iso_cmd =
      app.add_subcommand("iso", "constructive isomorphism test");
  iso_cmd->add_option("file_a", o.path_a)->required();
  iso_cmd->add_option("file_b", o.path_b)->required();
  add_seed(iso_cmd);

  CLI::App* pipe_cmd = app.add_subcommand("pipeline", "run a pipeline file");
  pipe_cmd->add_option("file", o.path_a)->required();
  pipe_cmd->add_flag("--verify-roundtrip", o.verify_roundtrip,
                     "check the final module against the input");
  pipe_cmd->add_option("--out", o.out_path, "output file (default stdout)");
  add_seed(pipe_cmd);

  CLI::App* ex_cmd = app.add_subcommand("example", "emit a built-in seed");
  ex_cmd->add_option("name", o.example_name, "burau | hypergeometric | heun")
      ->required();
  ex_cmd->add_option("--field", o.field_text, "rational or prime:<p>");
  ex_cmd->add_option("--n", o.n, "strand count (burau)");
  ex_cmd->add_option("--t", o.t_text, "x-value (burau)");
  ex_cmd->add_option("--s", o.s_text, "sigma-value (burau)");
  ex_cmd->add_option("--a", o.a_text, "x1-value (hypergeometric)");
  ex_cmd->add_option("--b", o.b_text, "x2-value (hypergeometric)");
  ex_cmd->add_option("--c", o.c_text, "x2,x3-value (heun)");
  ex_cmd->add_option("--out", o.out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }
  o.command = app.get_subcommands().front()->get_name();

  try {
    return run(o);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const internal_error&) {
    throw;  // implementation bug: abort loudly
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
}
