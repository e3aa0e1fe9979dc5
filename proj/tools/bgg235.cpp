// bgg235: command-line front end for the (2,3,5) BGG library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "bgg/frame/frame235.hpp"
#include "bgg/g2/g2.hpp"
#include "bgg/io/corpus.hpp"
#include "bgg/io/json_io.hpp"
#include "bgg/sym/errors.hpp"

namespace {

using bgg::io::json;
using namespace bgg;

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2 };

struct Common {
  std::string monge;
  std::string frame_file;
  std::vector<std::string> functions;
  std::vector<std::string> fields;
  std::uint64_t seed = 0x235235;
  bool json_out = false;
  bool pretty = false;
};

io::SymbolOptions symbols(const Common& c) { return {c.functions, c.fields}; }

frame::Frame235 load_frame(const Common& c) {
  frame::FrameOptions opts{c.seed};
  if (!c.monge.empty() && !c.frame_file.empty())
    throw InputError("give either --monge or --frame, not both");
  if (!c.monge.empty()) return io::frame_from_json(json{{"monge_F", c.monge}}, symbols(c), opts);
  if (c.frame_file.empty()) throw InputError("a frame is required: use --monge F or --frame FILE");
  std::ifstream in(c.frame_file);
  if (!in) throw InputError("cannot open " + c.frame_file);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError(c.frame_file + ": " + e.what());
  }
  // Corpus case files carry the frame under "input".
  io::SymbolOptions syms = symbols(c);
  if (j.is_object() && j.contains("input")) {
    syms.merge(j);
    j = j.at("input");
  }
  return io::frame_from_json(j, syms, opts);
}

sym::ParseOptions parse_opts(const frame::Frame235& f, const Common& c) {
  return io::parse_options(f.chart(), symbols(c));
}

void pretty_print(std::ostream& os, const json& j, int indent = 0) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured()) {
        os << pad << k << ":\n";
        pretty_print(os, v, indent + 2);
      } else {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        os << pad << "-\n";
        pretty_print(os, v, indent + 2);
      } else {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

int emit(const Common& c, const std::string& command, json result, bool pass, bool probabilistic) {
  json out{{"command", command},
           {"seed", c.seed},
           {"pass", pass},
           {"probabilistic", probabilistic},
           {"result", std::move(result)}};
  if (c.pretty && !c.json_out)
    pretty_print(std::cout, out);
  else
    std::cout << out.dump(2) << "\n";
  return pass ? kPass : kCheckFailed;
}

bool any_probabilistic(const std::array<sym::ZeroVerdict, 3>& z) {
  return z[0].probabilistic || z[1].probabilistic || z[2].probabilistic;
}

json zero_report(const frame::Frame235& f, const frame::Sym2& s, bool& all_zero, bool& prob) {
  json o = json::object();
  all_zero = true;
  prob = false;
  const std::pair<const char*, const sym::RatExpr*> comps[] = {
      {"11", &s.a11}, {"12", &s.a12}, {"22", &s.a22}};
  for (const auto& [k, e] : comps) {
    sym::ZeroVerdict z = f.is_zero(*e);
    o[k] = io::to_json(z);
    all_zero = all_zero && z.zero;
    prob = prob || z.probabilistic;
  }
  return o;
}

int run_theta0(const Common& c, const std::string& sigma_text) {
  frame::Frame235 f = load_frame(c);
  sym::RatExpr sigma = sym::parse_rat(sigma_text, parse_opts(f, c));
  frame::ScaleCheck sc = frame::check_scale(f, sigma);
  json r{{"sigma", io::to_json(sigma)},
         {"theta0", io::to_json(sc.theta)},
         {"verdict", frame::to_string(sc.verdict)}};
  return emit(c, "theta0", r, true, any_probabilistic(sc.zeros));
}

int run_check_scale(const Common& c, const std::string& sigma_text) {
  frame::Frame235 f = load_frame(c);
  sym::RatExpr sigma = sym::parse_rat(sigma_text, parse_opts(f, c));
  frame::ScaleCheck sc = frame::check_scale(f, sigma);
  json zeros = json::object();
  const char* names[] = {"11", "12", "22"};
  for (int i = 0; i < 3; ++i) zeros[names[i]] = io::to_json(sc.zeros[i]);
  json r{{"sigma", io::to_json(sigma)},
         {"theta0", io::to_json(sc.theta)},
         {"zeros", zeros},
         {"verdict", frame::to_string(sc.verdict)}};
  return emit(c, "check-scale", r, sc.verdict != frame::Verdict::NonSolution,
              any_probabilistic(sc.zeros));
}

int run_rho(const Common& c, const std::string& path) {
  frame::Frame235 f = load_frame(c);
  json r = json::object();
  bool pass = true, prob = false;
  std::optional<frame::RhoResult> closed, rho_t;
  if (path == "closed_form" || path == "both") {
    if (!f.is_monge()) throw InputError("the closed-form path needs a Monge frame");
    closed = frame::rho_lowest(f, frame::RhoPath::ClosedForm);
    r["closed_form"] = io::to_json(closed->p);
  }
  if (path == "rhoT" || path == "both") {
    rho_t = frame::rho_lowest(f, frame::RhoPath::RhoT);
    r["rhoT"] = io::to_json(rho_t->p);
    r["rhoT_antisymmetric"] = io::to_json(rho_t->antisymmetric);
    // Informational: whether P_ab itself vanishes. Does not affect the exit code.
    bool vanishes = false, vp = false;
    r["rhoT_vanishes"] = zero_report(f, rho_t->p, vanishes, vp);
    sym::ZeroVerdict z = f.is_zero(rho_t->antisymmetric);
    pass = pass && z.zero;
    prob = prob || z.probabilistic;
  }
  if (closed && rho_t) {
    frame::Sym2 d{closed->p.a11 - rho_t->p.a11, closed->p.a12 - rho_t->p.a12,
                  closed->p.a22 - rho_t->p.a22};
    bool same = false, p2 = false;
    r["paths_agree"] = zero_report(f, d, same, p2);
    pass = pass && same;
    prob = prob || p2;
  }
  return emit(c, "rho", r, pass, prob);
}

int run_reeb(const Common& c, const std::string& path) {
  frame::Frame235 f = load_frame(c);
  json r = json::object();
  bool pass = true, prob = false;
  bool want_closed = path == "closed_form" || path == "both";
  bool want_general = path == "rhoT" || path == "general" || path == "both";
  if (want_closed) {
    if (!f.is_monge()) throw InputError("the closed-form path needs a Monge frame");
    r["closed_form"] = json{{"reeb", io::to_json(f.reeb())}, {"connection", io::to_json(f.connection())}};
  }
  if (want_general) {
    r["general"] = json{{"reeb", io::to_json(f.reeb_general())},
                        {"connection", io::to_json(f.connection_general())}};
  }
  if (want_closed && want_general) {
    bool same = true;
    for (std::size_t i = 0; i < f.chart().size(); ++i) {
      sym::ZeroVerdict z = f.is_zero(f.reeb()[i] - f.reeb_general()[i]);
      same = same && z.zero;
      prob = prob || z.probabilistic;
    }
    for (int d = 0; d < 2; ++d)
      for (int g = 0; g < 2; ++g)
        for (int b = 0; b < 2; ++b) {
          sym::ZeroVerdict z = f.is_zero(f.connection()(d, g, b) - f.connection_general()(d, g, b));
          same = same && z.zero;
          prob = prob || z.probabilistic;
        }
    r["paths_agree"] = same;
    pass = same;
  }
  return emit(c, "reeb", r, pass, prob);
}

int run_kernel(const Common& c, int degree, std::size_t cap) {
  frame::Frame235 f = load_frame(c);
  std::vector<sym::RatExpr> basis = frame::kernel_poly(f, degree, cap);
  json b = json::array();
  for (const auto& e : basis) b.push_back(io::to_json(e));
  return emit(c, "kernel", json{{"degree", degree}, {"dimension", basis.size()}, {"basis", b}}, true,
              false);
}

int run_iota7(const Common& c, const std::string& sigma_text) {
  frame::Frame235 f = load_frame(c);
  sym::RatExpr sigma = sym::parse_rat(sigma_text, parse_opts(f, c));
  json r{{"sigma", io::to_json(sigma)},
         {"chart", f.chart().names},
         {"iota7", io::to_json(frame::iota7(f, sigma))}};
  return emit(c, "iota7", r, true, false);
}

int run_verify_g2(const Common& c, const std::vector<int>& perturb) {
  g2::VerifyOptions opts;
  opts.seed = c.seed;
  if (!perturb.empty()) {
    if (perturb.size() != 2 || perturb[0] < 0 || perturb[0] > 6 || perturb[1] < 0 || perturb[1] > 6)
      throw InputError("--perturb takes ROW,COL in 0..6");
    opts.perturb = g2::Perturbation{perturb[0], perturb[1], sym::RatExpr(1)};
  }
  g2::Report rep = g2::verify_structure(opts);
  return emit(c, "verify-g2", io::to_json(rep), rep.all_pass(), false);
}

int run_examples(const Common& c, const std::string& dir, const std::vector<std::string>& only) {
  std::vector<io::ExampleCase> cases = io::load_corpus(dir);
  if (!only.empty()) {
    std::erase_if(cases, [&](const io::ExampleCase& e) {
      return std::find(only.begin(), only.end(), e.name) == only.end();
    });
    if (cases.empty()) throw InputError("no example case matches the given names");
  }
  std::vector<io::CaseResult> results = io::run_corpus(cases, c.seed);
  json r = json::array();
  bool pass = true, prob = false;
  for (const auto& res : results) {
    r.push_back(res.report);
    pass = pass && res.pass;
    prob = prob || res.probabilistic;
  }
  return emit(c, "examples", r, pass, prob);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl-structure data and the first BGG operator of (2,3,5) distributions"};
  app.require_subcommand(1);

  Common c;
  app.add_option("--seed", c.seed, "Seed for probabilistic zero tests")->capture_default_str();
  app.add_flag("--json", c.json_out, "Emit JSON (default)");
  app.add_flag("--pretty", c.pretty, "Emit indented text");
  app.fallthrough();

  auto frame_opts = [&](CLI::App* s) {
    s->add_option("--monge", c.monge, "Monge normal form F(x,y,p,q,z)");
    s->add_option("--frame", c.frame_file, "JSON frame document");
    s->add_option("--functions", c.functions, "Opaque one-argument function names")->delimiter(',');
    s->add_option("--fields", c.fields, "Abstract functions of the chart")->delimiter(',');
  };
  std::string sigma, path = "both", dir = BGG_CORPUS_DIR;
  int degree = 2;
  std::size_t cap = 200000;
  std::vector<int> perturb;
  std::vector<std::string> only;
  const std::vector<std::string> paths{"closed_form", "rhoT", "both"};

  auto* theta0 = app.add_subcommand("theta0", "Theta_0(sigma) components and verdict");
  frame_opts(theta0);
  theta0->add_option("--sigma", sigma, "Density in the scale of the frame")->required();

  auto* rho = app.add_subcommand("rho", "Lowest Rho component P_ab");
  frame_opts(rho);
  rho->add_option("--path", path, "closed_form, rhoT or both")
      ->check(CLI::IsMember(paths))
      ->capture_default_str();

  auto* reeb = app.add_subcommand("reeb", "Reeb field and partial connection");
  frame_opts(reeb);
  reeb->add_option("--path", path, "closed_form, rhoT (general frame path) or both")
      ->check(CLI::IsMember({"closed_form", "rhoT", "general", "both"}))
      ->capture_default_str();

  auto* check = app.add_subcommand("check-scale", "Whether sigma solves Theta_0(sigma) = 0");
  frame_opts(check);
  check->add_option("--sigma", sigma, "Candidate density")->required();

  auto* kernel = app.add_subcommand("kernel", "Polynomial solutions of Theta_0 up to a degree");
  frame_opts(kernel);
  kernel->add_option("--degree", degree, "Maximal total degree")->capture_default_str();
  kernel->add_option("--cap", cap, "Limit on distinct monomials in the linear system")
      ->capture_default_str();

  auto* iota = app.add_subcommand("iota7", "The vector field iota_7(sigma)");
  frame_opts(iota);
  iota->add_option("--sigma", sigma, "Density")->required();

  auto* g2cmd = app.add_subcommand("verify-g2", "Structure checks of the g2 matrix model");
  g2cmd->add_option("--perturb", perturb, "Add 1 to matrix entry ROW,COL")->delimiter(',');

  auto* examples = app.add_subcommand("examples", "Run the bundled example corpus");
  examples->add_option("--dir", dir, "Corpus directory")->capture_default_str();
  examples->add_option("--case", only, "Only the named cases")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (theta0->parsed()) return run_theta0(c, sigma);
    if (rho->parsed()) return run_rho(c, path);
    if (reeb->parsed()) return run_reeb(c, path);
    if (check->parsed()) return run_check_scale(c, sigma);
    if (kernel->parsed()) return run_kernel(c, degree, cap);
    if (iota->parsed()) return run_iota7(c, sigma);
    if (g2cmd->parsed()) return run_verify_g2(c, perturb);
    if (examples->parsed()) return run_examples(c, dir, only);
  } catch (const std::exception& e) {
    std::cerr << "bgg235: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
