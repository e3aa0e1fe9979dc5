#pragma once

// The bundled example corpus: one JSON document per worked example. A case
// names its input frame, candidate densities with expected verdicts, kernel
// dimensions and, where stated, vanishing of the lowest Rho component.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bgg/io/json_io.hpp"

namespace bgg::io {

struct DensityExpectation {
  std::string sigma;
  std::optional<std::string> verdict;  // "solution" / "non_solution"
  std::vector<std::string> zero_components;  // subset of {"11", "12", "22"}
};

struct KernelExpectation {
  int degree = 0;
  std::size_t dimension = 0;
  std::vector<std::string> contains;
};

struct ExampleCase {
  std::string name;
  std::string citation;
  json input;
  SymbolOptions symbols;
  std::vector<DensityExpectation> densities;
  std::vector<KernelExpectation> kernels;
  std::optional<bool> rho_zero;
};

ExampleCase case_from_json(const json& j);
ExampleCase load_case(const std::filesystem::path& file);
// All *.json files of dir, sorted by file name.
std::vector<ExampleCase> load_corpus(const std::filesystem::path& dir);

struct CaseResult {
  std::string name;
  bool pass = false;
  bool probabilistic = false;
  json report;
};

// Runs every expectation of the case; exceptions become a failed result.
CaseResult run_case(const ExampleCase& c, std::uint64_t seed = 0x235235);

// Runs cases concurrently; results keep the input order.
std::vector<CaseResult> run_corpus(const std::vector<ExampleCase>& cases,
                                   std::uint64_t seed = 0x235235);

}  // namespace bgg::io
