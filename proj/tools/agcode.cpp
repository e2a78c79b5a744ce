#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "agcode/code.hpp"
#include "agcode/curve_io.hpp"
#include "agcode/experiment.hpp"
#include "agcode/gs_interpolation.hpp"
#include "agcode/list_decoder.hpp"

using namespace agcode;

namespace {

struct CodeSelector {
  std::string curve;
  std::string points;
  std::optional<std::int64_t> u;
  std::vector<std::int64_t> gamma;
  std::optional<std::int64_t> improved;
};

void add_curve_options(CLI::App* cmd, CodeSelector& sel) {
  cmd->add_option("curve", sel.curve, "Curve file (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--points", sel.points, "Evaluation points file (one point per line)")->check(CLI::ExistingFile);
}

void add_code_options(CLI::App* cmd, CodeSelector& sel) {
  add_curve_options(cmd, sel);
  auto* u = cmd->add_option("--u", sel.u, "Gamma = S cap [0, u]");
  auto* g = cmd->add_option("--gamma", sel.gamma, "Explicit Gamma (pole orders)")->delimiter(',');
  auto* d = cmd->add_option("--improved", sel.improved, "Improved code {s in S_indep : nu(s) >= delta}");
  u->excludes(g)->excludes(d);
  g->excludes(d);
}

std::shared_ptr<const CodeFamily> load_family(const CodeSelector& sel) {
  StandardForm ring(load_curve(sel.curve));
  std::vector<Point> pts = sel.points.empty() ? resolve_points(ring)
                                              : read_points(sel.points, ring.field(), ring.num_vars());
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (!ring.on_curve(pts[i])) throw InvalidCurve("point " + std::to_string(i) + " is not on the curve");
  return std::make_shared<const CodeFamily>(std::move(ring), std::move(pts));
}

std::shared_ptr<const CodeSpec> load_code(const CodeSelector& sel) {
  auto family = load_family(sel);
  if (sel.u) return std::make_shared<const CodeSpec>(CodeSpec::from_u(family, *sel.u));
  if (sel.improved) return std::make_shared<const CodeSpec>(CodeSpec::improved(family, *sel.improved));
  if (!sel.gamma.empty()) return std::make_shared<const CodeSpec>(family, sel.gamma);
  throw std::invalid_argument("select a code with --u, --gamma or --improved");
}

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string describe(const CodeSelector& sel) {
  std::ostringstream os;
  os << sel.curve;
  if (sel.u) os << " u=" << *sel.u;
  if (sel.improved) os << " improved delta=" << *sel.improved;
  if (!sel.gamma.empty()) os << " gamma=" << join(sel.gamma);
  return os.str();
}

unsigned workers_from_env() {
  const char* w = std::getenv("AGCODE_WORKERS");
  if (!w || !*w) return 1;
  const long v = std::strtol(w, nullptr, 10);
  return v > 0 ? static_cast<unsigned>(v) : 1u;
}

void print_list(const std::vector<ListEntry>& list) {
  for (const auto& e : list) {
    std::cout << "distance " << e.distance << "\n";
    std::cout << "  message  " << format_vector(e.message) << "\n";
    std::cout << "  codeword " << format_vector(e.codeword) << "\n";
  }
}

int cmd_curve_validate(const CodeSelector& sel) {
  auto family = load_family(sel);
  const StandardForm& R = family->ring();
  std::cout << "curve: " << R.spec().name << "\n";
  std::cout << "field: " << R.field().describe() << "\n";
  std::cout << "a1: " << R.a1() << "\n";
  std::cout << "genus: " << R.genus() << "\n";
  std::cout << "gaps: " << join(R.semigroup().gaps()) << "\n";
  std::vector<std::int64_t> b(R.b().begin(), R.b().end());
  std::cout << "b: " << join(b) << "\n";
  std::cout << "points: " << family->length() << "\n";
  std::cout << "valid\n";
  return 0;
}

int cmd_code_info(const CodeSelector& sel) {
  auto code = load_code(sel);
  const CodeFamily& F = code->family();
  std::cout << "n: " << code->length() << "\n";
  std::cout << "k: " << code->dimension() << "\n";
  std::cout << "gamma: " << join(code->gamma()) << "\n";
  std::cout << "gamma_indep: " << join(code->gamma_indep()) << "\n";
  std::cout << "d_AG: " << code->d_ag() << "\n";
  std::cout << "goppa_bound: " << code->goppa_bound() << "\n";
  std::cout << "eta_pole_orders: " << join(F.eta().pole_orders) << "\n";
  std::cout << "s_indep: " << join(F.s_indep()) << "\n";
  std::cout << "s nu lambda\n";
  for (auto s : F.s_indep()) std::cout << s << " " << F.nu(s) << " " << F.lambda(s) << "\n";
  return 0;
}

int cmd_encode(const CodeSelector& sel, const std::string& message_file) {
  auto code = load_code(sel);
  const Vector m = read_vector(message_file, code->family().field());
  if (m.size() != code->dimension())
    throw std::invalid_argument("message has length " + std::to_string(m.size()) + ", code dimension is " +
                                std::to_string(code->dimension()));
  std::cout << format_vector(code->encode(m)) << "\n";
  return 0;
}

Vector load_received(const CodeSpec& code, const std::string& path) {
  Vector r = read_vector(path, code.family().field());
  if (r.size() != code.length())
    throw std::invalid_argument("received word has length " + std::to_string(r.size()) + ", code length is " +
                                std::to_string(code.length()));
  return r;
}

int run_gs(const CodeSpec& code, const Vector& r, std::uint32_t m, std::uint32_t ell, std::size_t tau) {
  if (code.gamma() != code.family().nongaps_upto(code.gamma().empty() ? 0 : code.gamma().back()))
    throw std::invalid_argument("GS decoding needs a code selected with --u");
  GsInterpolator interp(code.family_ptr(), GsParams{m, ell, code.gamma().back()});
  const auto res = gs_list_decode(code, interp, r, tau);
  std::cout << "list_size: " << res.list.size() << (res.partial ? " (partial)" : "") << "\n";
  std::cout << "multiplications: " << res.stats.multiplications << " bound: " << interp.bound() << "\n";
  print_list(res.list);
  return res.list.empty() ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-point AG codes: construction, Gröbner-basis list decoding, experiments"};
  app.require_subcommand(1);

  CodeSelector sel;

  auto* curve = app.add_subcommand("curve", "Curve operations");
  curve->require_subcommand(1);
  auto* validate = curve->add_subcommand("validate", "Validate a curve file and print its standard form");
  add_curve_options(validate, sel);

  auto* code = app.add_subcommand("code", "Code operations");
  code->require_subcommand(1);
  auto* info = code->add_subcommand("info", "Print n, k, Gamma, d_AG, Goppa-type bound, nu/lambda tables");
  add_code_options(info, sel);

  std::string message_file;
  auto* encode = app.add_subcommand("encode", "Encode a message");
  add_code_options(encode, sel);
  encode->add_option("--message", message_file, "Message file")->required()->check(CLI::ExistingFile);

  std::string received_file;
  DecoderOptions dopt;
  bool no_early = false, use_gs = false;
  std::uint32_t gs_m = 1, gs_ell = 1;
  auto* decode = app.add_subcommand("decode", "List decode a received word");
  add_code_options(decode, sel);
  decode->add_option("--received", received_file, "Received word file")->required()->check(CLI::ExistingFile);
  decode->add_option("--tau", dopt.tau, "Decoding radius")->required();
  decode->add_option("--max-branches", dopt.max_branches, "Branch cap");
  decode->add_option("--max-list", dopt.max_list, "List size cap");
  decode->add_flag("--no-early-term", no_early, "Disable earlier termination");
  decode->add_flag("--check-invariants", dopt.check_invariants, "Check Gröbner invariants every iteration");
  decode->add_flag("--gs", use_gs, "Use Guruswami-Sudan decoding instead");
  decode->add_option("--m", gs_m, "GS multiplicity (with --gs)");
  decode->add_option("--ell", gs_ell, "GS z-degree bound (with --gs)");

  std::size_t gs_tau = 0;
  auto* gs = app.add_subcommand("gs-decode", "Guruswami-Sudan list decoding of C_u");
  add_curve_options(gs, sel);
  gs->add_option("--u", sel.u, "Gamma = S cap [0, u]")->required();
  gs->add_option("--received", received_file, "Received word file")->required()->check(CLI::ExistingFile);
  gs->add_option("--m", gs_m, "Multiplicity")->required();
  gs->add_option("--ell", gs_ell, "z-degree bound")->required();
  gs->add_option("--tau", gs_tau, "Decoding radius")->required();

  ExperimentConfig cfg;
  std::string model = "uniform_support", json_out;
  bool sim_no_early = false;
  auto* sim = app.add_subcommand("simulate", "Seeded Monte-Carlo decoding experiment");
  add_code_options(sim, sel);
  sim->add_option("--trials", cfg.trials, "Number of trials");
  sim->add_option("--weight", cfg.error_weight, "Error weight")->required();
  sim->add_option("--tau", cfg.tau, "Decoding radius")->required();
  sim->add_option("--seed", cfg.seed, "64-bit seed");
  sim->add_option("--model", model, "uniform_support | toward_nearest_codeword");
  sim->add_option("--max-branches", cfg.max_branches, "Branch cap");
  sim->add_option("--max-list", cfg.max_list, "List size cap");
  sim->add_flag("--no-early-term", sim_no_early, "Disable earlier termination");
  sim->add_flag("--check-invariants", cfg.check_invariants, "Check Gröbner invariants every iteration");
  sim->add_option("--json", json_out, "Write the structured report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_curve_validate(sel);
    if (info->parsed()) return cmd_code_info(sel);
    if (encode->parsed()) return cmd_encode(sel, message_file);
    if (decode->parsed()) {
      auto c = load_code(sel);
      const Vector r = load_received(*c, received_file);
      if (use_gs) return run_gs(*c, r, gs_m, std::max(gs_ell, gs_m), dopt.tau);
      dopt.earlier_termination = !no_early;
      const auto res = ListDecoder(c).decode(r, dopt);
      std::cout << "list_size: " << res.list.size() << (res.partial ? " (partial)" : "") << "\n";
      std::cout << "iterations: " << res.stats.iterations << " branches: " << res.stats.branches << "\n";
      if (dopt.check_invariants) std::cout << "invariant_violations: " << res.stats.invariant_violations << "\n";
      print_list(res.list);
      return res.list.empty() ? 2 : 0;
    }
    if (gs->parsed()) {
      auto c = load_code(sel);
      return run_gs(*c, load_received(*c, received_file), gs_m, gs_ell, gs_tau);
    }
    if (sim->parsed()) {
      cfg.model = parse_error_model(model);
      cfg.earlier_termination = !sim_no_early;
      cfg.workers = workers_from_env();
      auto c = load_code(sel);
      const auto rep = run_experiment(c, cfg, describe(sel));
      std::cout << rep.text();
      const auto j = rep.to_json();
      if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) throw std::runtime_error("cannot write " + json_out);
        out << j.dump(2) << "\n";
      }
      if (rep.contract_violations > 0) {
        std::cerr << "contract violation: sent codeword missing from the list\n";
        for (const auto& t : rep.trials) {
          if (t.error_weight > cfg.tau || t.sent_in_list) continue;
          std::cerr << "trial " << t.trial << "\n  message  " << format_vector(t.message) << "\n  received "
                    << format_vector(t.received) << "\n  list_size " << t.list_size << "\n";
          for (const auto& m : t.list_messages) std::cerr << "  listed   " << format_vector(m) << "\n";
        }
        return 3;
      }
      return 0;
    }
  } catch (const InvalidCurve& e) {
    std::cerr << "invalid curve: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
