#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "klmkit/rep.hpp"

namespace klmkit {

/// Parses the canonical JSON representation file. Validation is part of
/// loading: the result always passes validate().
Representation load_rep(const std::string& path);
Representation rep_from_json_text(const std::string& text);

/// Parse only; the caller decides what to do with an invalid representation.
Representation load_rep_raw(const std::string& path);

std::string rep_to_json_text(const Representation& rep);
void save_rep(const Representation& rep, const std::string& path);

/// Built-in seed representations.
Representation example_burau(std::size_t n, const Scalar& t, const Scalar& s);
Representation example_hypergeometric(const Scalar& a, const Scalar& b);
Representation example_heun(const Scalar& c);

struct StepKlm {
  Scalar lambda;
};
struct StepMul {
  Character chi;
};
struct StepCheck {};
struct StepRestrict {};
using PipelineStep = std::variant<StepKlm, StepMul, StepCheck, StepRestrict>;

struct Pipeline {
  Representation input;
  std::vector<PipelineStep> steps;
};

/// Loads a pipeline file: input is either a path to a rep file (resolved
/// relative to the pipeline file) or an inline rep object.
Pipeline load_pipeline(const std::string& path);

struct PipelineStepReport {
  std::size_t index = 0;
  std::string description;
  std::size_t dim_after = 0;
  std::string detail;  // dims record or property report
};

/// Folds the steps left to right; throws on the first failing step with the
/// step index in the message.
std::vector<PipelineStepReport> run_pipeline(const Pipeline& p,
                                             Representation& final_rep);

}  // namespace klmkit
