// Command-line surface for the cross-ratio surface toolkit: special-function
// evaluation, group and tessellation verification, phase-surface reports, and
// mesh export.

#include <complex>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pentafold/betafun.hpp"
#include "pentafold/contour.hpp"
#include "pentafold/crossratio.hpp"
#include "pentafold/meshout.hpp"
#include "pentafold/tessellation.hpp"
#include "pentafold/verify.hpp"

namespace {

using json = nlohmann::json;
using cxd = std::complex<double>;

// "re", "re+imi", "re-imi"; no spaces (shell-safe).
cxd parse_complex(const std::string& s) {
  if (s.empty()) throw pentafold::DomainError("empty complex literal");
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') split = i;
  }
  auto to_d = [](const std::string& t) {
    try {
      std::size_t pos = 0;
      double v = std::stod(t, &pos);
      if (pos != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      throw pentafold::DomainError("bad numeric literal '" + t + "'");
    }
  };
  if (s.back() == 'i') {
    if (split == std::string::npos)
      throw pentafold::DomainError("complex literal '" + s + "' must look like re+imi");
    std::string re = s.substr(0, split);
    std::string im = s.substr(split, s.size() - split - 1);
    if (im == "+" || im == "-") im += "1";
    return {to_d(re), to_d(im)};
  }
  if (split != std::string::npos && s.find('i') != std::string::npos)
    throw pentafold::DomainError("complex literal '" + s + "' must end in i");
  return {to_d(s), 0.0};
}

std::vector<cxd> parse_alpha_list(const std::string& csv, std::size_t expected) {
  std::vector<cxd> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string tok =
        comma == std::string::npos ? csv.substr(start) : csv.substr(start, comma - start);
    out.push_back(parse_complex(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != expected)
    throw pentafold::DomainError("--alpha needs " + std::to_string(expected) +
                                 " comma-separated values");
  return out;
}

void print_value(const cxd& v, const std::string& method, double est_error, bool as_json) {
  if (as_json) {
    json j;
    j["est_error"] = est_error;
    j["method"] = method;
    j["value_im"] = v.imag();
    j["value_re"] = v.real();
    std::cout << j.dump() << "\n";
    return;
  }
  std::printf("%.10g", v.real());
  if (v.imag() != 0.0) std::printf("%+.10gi", v.imag());
  if (est_error >= 0)
    std::printf("    (method=%s, est_error=%.2e)\n", method.c_str(), est_error);
  else
    std::printf("    (method=%s)\n", method.c_str());
}

json report_to_json(const pentafold::verify::VerifyReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json jc;
    jc["desc"] = c.desc;
    jc["id"] = c.id;
    jc["status"] = c.pass ? "pass" : "fail";
    jc["tol"] = c.tol;
    jc["value"] = c.value;
    checks.push_back(jc);
  }
  json j;
  j["checks"] = checks;
  j["pass"] = rep.pass();
  j["suite"] = rep.suite;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"cross-ratio surfaces, their symmetry groups, and Pochhammer-style contours"};
  app.require_subcommand(1);

  // ---- eval ----------------------------------------------------------------
  auto* eval = app.add_subcommand("eval", "evaluate B4/B5 by several methods");
  eval->require_subcommand(1);
  std::string alpha_csv, method = "gamma", method5 = "quad";
  double poch_r = 1e-3, b5_tol = 1e-9;
  bool eval_json = false;

  auto* eval_b4 = eval->add_subcommand("b4", "the four-point function");
  eval_b4->add_option("--alpha", alpha_csv, "a1,a2 (complex entries as re[+im i])")->required();
  eval_b4->add_option("--method", method, "gamma | quad | pochhammer")->capture_default_str();
  eval_b4->add_option("--r", poch_r, "loop radius for the contour")->capture_default_str();
  eval_b4->add_flag("--json", eval_json, "machine-readable output");

  auto* eval_b5 = eval->add_subcommand("b5", "the five-point function");
  eval_b5->add_option("--alpha", alpha_csv, "a1,..,a5 (complex entries as re[+im i])")
      ->required();
  eval_b5->add_option("--method", method5, "quad")->capture_default_str();
  eval_b5->add_option("--tol", b5_tol, "absolute tolerance")->capture_default_str();
  eval_b5->add_flag("--json", eval_json, "machine-readable output");

  // ---- group ---------------------------------------------------------------
  auto* group = app.add_subcommand("group", "symmetry group orders, Q, and P");
  std::string dump;
  bool group_json = false, scaled = false;
  group->add_option("--dump", dump, "elements | q | p");
  group->add_flag("--scaled", scaled, "with --dump q: print 70*Q (the raw averaged sum)");
  group->add_flag("--json", group_json, "machine-readable output");

  // ---- surface ---------------------------------------------------------------
  auto* surface = app.add_subcommand("surface", "sample an embedding and write a mesh");
  std::string target = "symmetric", format = "obj", out_path;
  int grid_n = 17;
  std::vector<int> axes{1, 2, 3};
  surface->add_option("--target", target,
                      "single | double | symmetric | veronese21 | veronese18 | b4")
      ->capture_default_str();
  surface->add_option("--n", grid_n, "samples per patch side")->capture_default_str();
  surface->add_option("--project", axes, "three 1-based coordinate axes")
      ->delimiter(',')
      ->expected(3);
  surface->add_option("--format", format, "obj | ply")->capture_default_str();
  surface->add_option("--out", out_path, "output path")->required();

  // ---- contour ---------------------------------------------------------------
  auto* contour_cmd = app.add_subcommand("contour", "phase-surface topology report");
  int contour_k = 5;
  bool contour_json = false;
  contour_cmd->add_option("--k", contour_k, "number of exponents (2..5)")
      ->check(CLI::Range(2, 5))
      ->capture_default_str();
  contour_cmd->add_flag("--json", contour_json, "machine-readable output");

  // ---- verify ---------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "run a named check suite");
  std::string suite = "all";
  bool verify_json = false;
  verify_cmd->add_option("--suite", suite, "all | group | tessellation | contour | betafun | mesh")
      ->capture_default_str();
  verify_cmd->add_flag("--json", verify_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  if (eval_b4->parsed()) {
    auto a = parse_alpha_list(alpha_csv, 2);
    pentafold::betafun::Alpha2 alpha{a[0], a[1]};
    cxd value;
    double est = -1;
    if (method == "gamma") {
      value = pentafold::betafun::b4_gamma(alpha);
    } else if (method == "quad") {
      value = pentafold::betafun::b4_quadrature(alpha, {}, &est);
    } else if (method == "pochhammer") {
      value = pentafold::contour::pochhammer_b4(alpha, poch_r);
    } else {
      throw pentafold::DomainError("eval b4: method must be gamma, quad, or pochhammer");
    }
    print_value(value, method, est, eval_json);
    return 0;
  }
  if (eval_b5->parsed()) {
    if (method5 != "quad")
      throw pentafold::DomainError("eval b5: only the quad method is implemented");
    auto a = parse_alpha_list(alpha_csv, 5);
    pentafold::betafun::Alpha5 alpha{a[0], a[1], a[2], a[3], a[4]};
    pentafold::quad::QuadratureSpec spec;
    spec.abs_tol = b5_tol;
    double est = -1;
    cxd value = pentafold::betafun::b5_quadrature(alpha, spec, &est);
    print_value(value, "quad", est, eval_json);
    return 0;
  }

  if (group->parsed()) {
    using namespace pentafold::exactlin;
    auto g120 = group_closure({x5(), x2()});
    auto g240 = group_closure({x5(), x2(), -MatRat::identity(6)});
    MatRat q = invariant_form(g120, pentafold::Rational(1, 70));
    MatFloat p = factor_form(q);
    double resid = (p.transpose() * p).max_abs_diff(to_float(q));
    if (group_json) {
      json j;
      j["order_g"] = g120.size();
      j["order_g_tilde"] = g240.size();
      json qm = json::array();
      for (int i = 0; i < 6; ++i) {
        json row = json::array();
        for (int k = 0; k < 6; ++k) row.push_back(q(i, k).to_string());
        qm.push_back(row);
      }
      j["q"] = qm;
      json pm = json::array();
      for (int i = 0; i < 6; ++i) {
        json row = json::array();
        for (int k = 0; k < 6; ++k) row.push_back(p.a[i][k]);
        pm.push_back(row);
      }
      j["p"] = pm;
      j["p_residual"] = resid;
      std::cout << j.dump() << "\n";
      return 0;
    }
    std::printf("order(G)=%zu order(G~)=%zu\n", g120.size(), g240.size());
    if (dump == "q") {
      MatRat shown = scaled ? pentafold::Rational(70) * q : q;
      std::printf("%s:\n", scaled ? "70*Q" : "Q");
      for (int i = 0; i < 6; ++i) {
        for (int k = 0; k < 6; ++k) std::printf("%6s", shown(i, k).to_string().c_str());
        std::printf("\n");
      }
    } else if (dump == "p") {
      std::printf("P (upper triangular, P^t P = Q, residual %.3e):\n", resid);
      for (int i = 0; i < 6; ++i) {
        for (int k = 0; k < 6; ++k) std::printf(" %12.9f", p.a[i][k]);
        std::printf("\n");
      }
    } else if (dump == "elements") {
      for (std::size_t e = 0; e < g120.size(); ++e) {
        std::printf("element %zu:\n", e + 1);
        for (int i = 0; i < 6; ++i) {
          for (int k = 0; k < 6; ++k) std::printf("%4s", g120[e](i, k).to_string().c_str());
          std::printf("\n");
        }
      }
    } else if (!dump.empty()) {
      throw pentafold::DomainError("group: --dump must be elements, q, or p");
    }
    return 0;
  }

  if (surface->parsed()) {
    auto mesh = pentafold::meshout::sample_surface(pentafold::meshout::parse_target(target),
                                                   grid_n);
    auto proj = pentafold::meshout::project(mesh, {axes[0], axes[1], axes[2]});
    pentafold::meshout::write_mesh(proj, format, out_path);
    std::printf("target=%s vertices=%d faces=%zu polylines=%zu -> %s\n", target.c_str(),
                proj.num_vertices(), proj.faces.size(), proj.polylines.size(),
                out_path.c_str());
    return 0;
  }

  if (contour_cmd->parsed()) {
    auto rep = pentafold::contour::build_phase_surface(contour_k);
    const auto& c = rep.complex;
    bool is_surface = contour_k >= 3;
    pentafold::cell::SurfaceInvariants inv{};
    if (is_surface) inv = pentafold::cell::euler_and_genus(c);
    if (contour_json) {
      json j;
      j["k"] = contour_k;
      j["vertices"] = c.num_vertices();
      j["edges"] = c.num_edges();
      j["faces"] = c.num_faces();
      j["chi"] = c.euler_characteristic();
      j["connected"] = rep.surface.connected();
      j["corner_disks"] = rep.surface.count_corner_disks();
      if (is_surface) {
        j["orientable"] = inv.orientable;
        j["genus"] = inv.genus_or_crosscaps;
      } else {
        j["loop_segments"] = c.num_edges();
      }
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (is_surface)
      std::printf("k=%d: V=%d E=%d F=%d chi=%lld %s genus=%d %s\n", contour_k,
                  c.num_vertices(), c.num_edges(), c.num_faces(), c.euler_characteristic(),
                  inv.orientable ? "orientable" : "non-orientable", inv.genus_or_crosscaps,
                  inv.connected ? "connected" : "disconnected");
    else
      std::printf("k=2: commutator loop of %d segments, V=%d chi=%lld %s\n", c.num_edges(),
                  c.num_vertices(), c.euler_characteristic(),
                  rep.surface.connected() ? "connected" : "disconnected");
    return 0;
  }

  if (verify_cmd->parsed()) {
    auto reports = pentafold::verify::run_suites(suite);
    bool all_pass = true;
    if (verify_json) {
      json arr = json::array();
      for (const auto& rep : reports) {
        arr.push_back(report_to_json(rep));
        all_pass = all_pass && rep.pass();
      }
      std::cout << (reports.size() == 1 ? arr[0].dump() : arr.dump()) << "\n";
    } else {
      for (const auto& rep : reports) {
        std::printf("suite %s\n", rep.suite.c_str());
        for (const auto& c : rep.checks) {
          if (c.tol > 0)
            std::printf("  [%s] %-18s %s (value %.3e, tol %.0e)\n", c.pass ? "pass" : "FAIL",
                        c.id.c_str(), c.desc.c_str(), c.value, c.tol);
          else
            std::printf("  [%s] %-18s %s\n", c.pass ? "pass" : "FAIL", c.id.c_str(),
                        c.desc.c_str());
        }
        all_pass = all_pass && rep.pass();
      }
      std::printf("verify: %s\n", all_pass ? "PASS" : "FAIL");
    }
    return all_pass ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const pentafold::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
