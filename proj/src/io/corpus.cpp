#include "bgg/io/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <future>

#include "bgg/sym/errors.hpp"

namespace bgg::io {

namespace {

std::vector<std::string> strings(const json& j, const char* key) {
  std::vector<std::string> out;
  if (j.contains(key))
    for (const auto& s : j.at(key)) out.push_back(s.get<std::string>());
  return out;
}

const sym::RatExpr& component(const frame::Sym2& s, const std::string& name) {
  if (name == "11") return s.a11;
  if (name == "12") return s.a12;
  if (name == "22") return s.a22;
  throw InputError("unknown Theta_0 component '" + name + "'");
}

}  // namespace

ExampleCase case_from_json(const json& j) {
  try {
    ExampleCase c;
    c.name = j.at("name").get<std::string>();
    c.citation = j.at("citation").get<std::string>();
    c.input = j.at("input");
    c.symbols.merge(j);
    if (j.contains("densities"))
      for (const auto& d : j.at("densities")) {
        DensityExpectation e;
        e.sigma = d.at("sigma").get<std::string>();
        if (d.contains("verdict")) e.verdict = d.at("verdict").get<std::string>();
        e.zero_components = strings(d, "zero_components");
        c.densities.push_back(std::move(e));
      }
    if (j.contains("kernel"))
      for (const auto& k : j.at("kernel")) {
        KernelExpectation e;
        e.degree = k.at("degree").get<int>();
        e.dimension = k.at("dimension").get<std::size_t>();
        e.contains = strings(k, "contains");
        c.kernels.push_back(std::move(e));
      }
    if (j.contains("rho_zero")) c.rho_zero = j.at("rho_zero").get<bool>();
    return c;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed example case: ") + e.what());
  }
}

ExampleCase load_case(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open " + file.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError(file.string() + ": " + e.what());
  }
  return case_from_json(j);
}

std::vector<ExampleCase> load_corpus(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<ExampleCase> out;
  for (const auto& f : files) out.push_back(load_case(f));
  return out;
}

CaseResult run_case(const ExampleCase& c, std::uint64_t seed) {
  CaseResult r;
  r.name = c.name;
  r.report = json{{"name", c.name}, {"citation", c.citation}, {"checks", json::array()}};
  json& checks = r.report["checks"];
  bool pass = true;
  auto record = [&](json check, bool ok, bool prob) {
    check["pass"] = ok;
    check["probabilistic"] = prob;
    checks.push_back(std::move(check));
    pass = pass && ok;
    r.probabilistic = r.probabilistic || prob;
  };

  try {
    frame::Frame235 f = frame_from_json(c.input, c.symbols, frame::FrameOptions{seed});
    sym::ParseOptions po = parse_options(f.chart(), [&] {
      SymbolOptions s = c.symbols;
      s.merge(c.input);
      return s;
    }());

    for (const auto& d : c.densities) {
      sym::RatExpr sigma = sym::parse_rat(d.sigma, po);
      frame::ScaleCheck sc = frame::check_scale(f, sigma);
      bool prob = sc.verdict == frame::Verdict::ProbablySolution;
      if (d.verdict) {
        bool solved = sc.verdict != frame::Verdict::NonSolution;
        bool ok = (*d.verdict == "solution") == solved;
        record(json{{"check", "verdict"}, {"sigma", d.sigma}, {"expected", *d.verdict},
                    {"got", frame::to_string(sc.verdict)}, {"theta0", to_json(sc.theta)}},
               ok, prob);
      }
      for (const auto& comp : d.zero_components) {
        sym::ZeroVerdict z = f.is_zero(component(sc.theta, comp));
        record(json{{"check", "component_zero"}, {"sigma", d.sigma}, {"component", comp},
                    {"value", to_json(component(sc.theta, comp))}},
               z.zero, z.probabilistic);
      }
    }

    for (const auto& k : c.kernels) {
      std::vector<sym::RatExpr> basis = frame::kernel_poly(f, k.degree);
      json b = json::array();
      for (const auto& e : basis) b.push_back(to_json(e));
      bool ok = basis.size() == k.dimension;
      json missing = json::array();
      for (const auto& s : k.contains)
        if (!frame::span_contains(basis, sym::parse_rat(s, po))) {
          ok = false;
          missing.push_back(s);
        }
      record(json{{"check", "kernel"}, {"degree", k.degree}, {"expected_dimension", k.dimension},
                  {"dimension", basis.size()}, {"basis", b}, {"missing", missing}},
             ok, false);
    }

    if (c.rho_zero) {
      frame::RhoResult rho = frame::rho_lowest(
          f, f.is_monge() ? frame::RhoPath::ClosedForm : frame::RhoPath::RhoT);
      bool zero = true, prob = false;
      for (const auto* e : {&rho.p.a11, &rho.p.a12, &rho.p.a22}) {
        sym::ZeroVerdict z = f.is_zero(*e);
        zero = zero && z.zero;
        prob = prob || z.probabilistic;
      }
      record(json{{"check", "rho_zero"}, {"expected", *c.rho_zero}, {"zero", zero}},
             zero == *c.rho_zero, prob);
    }
  } catch (const std::exception& e) {
    record(json{{"check", "error"}, {"detail", e.what()}}, false, false);
  }
  r.pass = pass;
  r.report["pass"] = r.pass;
  r.report["probabilistic"] = r.probabilistic;
  return r;
}

std::vector<CaseResult> run_corpus(const std::vector<ExampleCase>& cases, std::uint64_t seed) {
  std::vector<std::future<CaseResult>> jobs;
  for (const auto& c : cases)
    jobs.push_back(std::async(std::launch::async, [&c, seed] { return run_case(c, seed); }));
  std::vector<CaseResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace bgg::io
