// Command-line front end: evaluate elliptic functions, verify the catalog of
// Cayley-Klein realizations, integrate the generating flow, and dump sample
// grids as CSV.
//
// Exit codes: 0 success, 1 verification failure or runtime abort (pole hit,
// divergent series, trajectory blow-up), 2 usage errors.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ckwitt/ckwitt.hpp"

using nlohmann::json;
using namespace ckwitt;

namespace {

// distinguishes bad invocations (exit 2) from runtime failures (exit 1)
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string fmt_complex(cplx v) {
  if (v.imag() == 0.0) return fmt_real(v.real());
  std::string s = fmt_real(v.real());
  s += (v.imag() < 0.0) ? '-' : '+';
  s += fmt_real(std::abs(v.imag()));
  s += 'i';
  return s;
}

json jcplx(cplx v) { return json::array({v.real(), v.imag()}); }

std::optional<double> parse_real(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

// Accepts "0.5", "1+2i", "-0.3-0.25i", "0.2i", "i", "-i".
std::optional<cplx> parse_complex(const std::string& raw) {
  std::string t;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) return std::nullopt;
  if (t.back() != 'i') {
    const auto re = parse_real(t);
    if (!re) return std::nullopt;
    return cplx(*re, 0.0);
  }
  t.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t p = t.size(); p-- > 1;) {
    if ((t[p] == '+' || t[p] == '-') && t[p - 1] != 'e' && t[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  std::string re_part = "0", im_part = t;
  if (split != std::string::npos) {
    re_part = t.substr(0, split);
    im_part = t.substr(split);
  }
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  const auto re = parse_real(re_part), im = parse_real(im_part);
  if (!re || !im) return std::nullopt;
  return cplx(*re, *im);
}

cplx need_complex(const std::string& s, const char* what) {
  const auto v = parse_complex(s);
  if (!v) throw usage_error(std::string("cannot parse ") + what + ": " + s);
  return *v;
}

// "a:b:h" inclusive range or a single value
std::vector<double> parse_axis(const std::string& s, const char* what) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() == 1) {
    const auto v = parse_real(parts[0]);
    if (!v) throw usage_error(std::string("cannot parse ") + what + ": " + s);
    return {*v};
  }
  if (parts.size() != 3)
    throw usage_error(std::string(what) + " must be a value or lo:hi:step");
  const auto lo = parse_real(parts[0]), hi = parse_real(parts[1]),
             step = parse_real(parts[2]);
  if (!lo || !hi || !step || !(*step > 0.0) || *hi < *lo)
    throw usage_error(std::string("bad range for ") + what + ": " + s);
  const int n = static_cast<int>(std::floor((*hi - *lo) / *step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(*lo + double(i) * *step);
  return out;
}

jacobi::Fn need_fn(const std::string& s) {
  const auto f = jacobi::parse_fn(s);
  if (!f) throw usage_error("unknown function id: " + s);
  return *f;
}

CkType need_type(const std::string& s) {
  const auto t = parse_ck_type(s);
  if (!t) throw usage_error("unknown algebra type: " + s);
  return *t;
}

ck::Family need_family(const std::string& s) {
  const auto f = ck::parse_family(s);
  if (!f) throw usage_error("unknown family: " + s);
  return *f;
}

std::pair<int, int> parse_grid(const std::string& s) {
  const auto x = s.find('x');
  if (x == std::string::npos)
    throw usage_error("grid must look like WxH, e.g. 10x10");
  const auto nx = parse_real(s.substr(0, x)), ny = parse_real(s.substr(x + 1));
  if (!nx || !ny || *nx < 1 || *ny < 1 || *nx != std::floor(*nx) ||
      *ny != std::floor(*ny))
    throw usage_error("grid must look like WxH with positive integers");
  return {static_cast<int>(*nx), static_cast<int>(*ny)};
}

json report_json(const ck::VerificationReport& r) {
  json j;
  j["entry"] = {{"type", name(r.type)}, {"family", ck::name(r.family)}};
  j["modulus"] = r.modulus;
  if (r.is_matrix) {
    j["grid"] = nullptr;
    j["casimir"] = {{"matrix", {{"scalar", jcplx(r.casimir_matrix_scalar)},
                                {"deviation", r.casimir_matrix_dev}}}};
  } else {
    j["grid"] = {{"nx", r.grid_nx},
                 {"ny", r.grid_ny},
                 {"points", r.grid_points},
                 {"pole_margin", r.grid_margin}};
    j["casimir"] = {{"field", json::array({r.casimir_field[0], r.casimir_field[1]})}};
  }
  j["residuals"] = json::array({r.residuals[0], r.residuals[1], r.residuals[2]});
  j["pass"] = r.pass;
  j["seconds"] = r.seconds;
  return j;
}

void report_table_line(const ck::VerificationReport& r) {
  std::fprintf(stderr, "%-18s %-9s k=%-5g r=[%.3e %.3e %.3e] %s\n",
               name(r.type), ck::name(r.family), r.modulus, r.residuals[0],
               r.residuals[1], r.residuals[2], r.pass ? "pass" : "FAIL");
}

int run_eval(const std::string& fn, double k, const std::string& z_str,
             bool use_kprime, bool use_lambda, double pole_margin) {
  if (use_kprime && use_lambda)
    throw usage_error("--kprime and --lambda are mutually exclusive");
  const jacobi::Fn f = need_fn(fn);
  const cplx z = need_complex(z_str, "--z");
  cplx v;
  if (use_kprime)
    v = modular::kprime_value(f, z, k, pole_margin);
  else if (use_lambda)
    v = modular::lambda_value(f, z, k, pole_margin);
  else
    v = jacobi::eval(f, z, k, pole_margin);
  std::cout << fmt_complex(v) << "\n";
  return 0;
}

int run_verify(const std::string& type_str, const std::string& family_str,
               double k, double tol, bool tol_set, const std::string& grid_str,
               bool unnormalized) {
  const CkType t = need_type(type_str);
  const ck::Family fam = need_family(family_str);
  const auto [nx, ny] = parse_grid(grid_str);
  if (unnormalized) {
    if (t != CkType::elliptic || fam != ck::Family::ns_cs_ds)
      throw usage_error("--unnormalized applies to the elliptic ns_cs_ds entry");
    const double use_tol = tol_set ? tol : ck::default_vector_tol;
    const auto rep =
        ck::verify_unnormalized(k, ck::standard_grid(k, nx, ny), use_tol);
    json j;
    j["entry"] = {{"type", "elliptic"}, {"family", "ns_cs_ds"}, {"unnormalized", true}};
    j["modulus"] = rep.modulus;
    j["residuals"] = json::array({rep.residuals[0], rep.residuals[1], rep.residuals[2]});
    j["curvatures"] = {{"kappa1", jcplx(rep.kappa1)},
                       {"kappa2", jcplx(rep.kappa2)},
                       {"kappa1_measured", jcplx(rep.kappa1_measured)},
                       {"kappa2_measured", jcplx(rep.kappa2_measured)}};
    j["pass"] = rep.pass;
    j["seconds"] = rep.seconds;
    std::cout << j.dump(2) << "\n";
    std::fprintf(stderr,
                 "elliptic ns_cs_ds (un-normalized) k=%g curvature=(%s, %s) %s\n",
                 k, fmt_complex(rep.kappa1_measured).c_str(),
                 fmt_complex(rep.kappa2_measured).c_str(),
                 rep.pass ? "pass" : "FAIL");
    return rep.pass ? 0 : 1;
  }
  const auto& e = ck::entry(t, fam);  // throws out_of_range for bad pairs
  const double use_tol =
      tol_set ? tol
              : (fam == ck::Family::matrix ? ck::default_matrix_tol
                                           : ck::default_vector_tol);
  const auto rep = ck::verify_realization(e, k, use_tol, nx, ny);
  std::cout << report_json(rep).dump(2) << "\n";
  report_table_line(rep);
  return rep.pass ? 0 : 1;
}

std::string signature_text(const std::array<int, 3>& sig) {
  std::string s = "(";
  for (int i = 0; i < 3; ++i) {
    s += sig[i] > 0 ? '+' : '-';
    s += i < 2 ? "," : ")";
  }
  return s;
}

int run_verify_all(const std::vector<double>& moduli, double tol_vec,
                   double tol_mat) {
  json arr = json::array();
  bool all_pass = true;
  for (double k : moduli)
    for (const auto& e : ck::catalog()) {
      const double tol =
          (e.family == ck::Family::matrix) ? tol_mat : tol_vec;
      const auto rep = ck::verify_realization(e, k, tol, 10, 10);
      arr.push_back(report_json(rep));
      report_table_line(rep);
      all_pass = all_pass && rep.pass;
    }
  // representation-free Casimir: exhaustive signature search per algebra
  for (CkType t : all_ck_types) {
    std::string line;
    for (const auto& hit : ck::signature_search(t)) {
      if (!line.empty()) line += ", ";
      line += signature_text(hit.signature);
      line += " -> ";
      line += (hit.scalar > 0 ? "+" : "-");
      line += std::to_string(std::abs(hit.scalar));
      line += "*I";
    }
    std::fprintf(stderr, "intrinsic Casimir %s: %s\n", name(t), line.c_str());
  }
  // degenerate-modulus behavior per family, checking every permitted limit
  const auto lgrid = ck::limit_grid();
  for (ck::Family fam :
       {ck::Family::base, ck::Family::nc_sc_dc, ck::Family::ns_cs_ds,
        ck::Family::nd_cd_sd, ck::Family::kprime, ck::Family::lambda}) {
    const ck::RealizationEntry* probe = nullptr;
    for (const auto& e : ck::catalog())
      if (e.family == fam) {
        probe = &e;
        break;
      }
    if (!probe->limit_trig_allowed && !probe->limit_hyperbolic_allowed) {
      std::fprintf(stderr, "limits %s: limits prohibited\n", ck::name(fam));
      continue;
    }
    std::fprintf(stderr, "limits %s: k->0 %s, k->1 %s\n", ck::name(fam),
                 probe->limit_trig_allowed ? "allowed" : "prohibited",
                 probe->limit_hyperbolic_allowed ? "allowed" : "prohibited");
    for (const auto& e : ck::catalog()) {
      if (e.family != fam) continue;
      for (auto which : {jacobi::Limit::trig, jacobi::Limit::hyperbolic}) {
        const bool allowed = which == jacobi::Limit::trig
                                 ? e.limit_trig_allowed
                                 : e.limit_hyperbolic_allowed;
        if (!allowed) continue;
        const auto triple = ck::limit_triple(e, which);
        const auto res = witt::relation_residuals(
            triple, ck::bracket_targets(e.type, triple), lgrid);
        const double worst = std::max({res[0], res[1], res[2]});
        const bool ok = worst <= tol_vec;
        all_pass = all_pass && ok;
        std::fprintf(stderr, "limit %-18s %-9s %s r=%.3e %s\n", name(e.type),
                     ck::name(e.family),
                     which == jacobi::Limit::trig ? "k->0" : "k->1", worst,
                     ok ? "pass" : "FAIL");
      }
    }
  }
  std::cout << arr.dump(2) << "\n";
  std::fprintf(stderr, "%zu entries, %s\n", arr.size(),
               all_pass ? "all pass" : "FAILURES present");
  return all_pass ? 0 : 1;
}

int run_flow(double gamma, double z_end_mult, int steps,
             const std::string& out_path) {
  const auto l = flow::couplings_for_modulus(gamma);
  const auto qp = jacobi::quarter_periods(gamma);
  const double z_end = z_end_mult * qp.K;
  const auto s0 = flow::closed_form_state(gamma, 0.0);
  const auto tr = flow::integrate(l, s0, z_end, steps);
  double deviation = 0.0;
  for (std::size_t n = 0; n < tr.states.size(); ++n) {
    const auto ref = flow::closed_form_state(gamma, tr.z[n]);
    deviation = std::max(
        deviation, std::max({std::abs(tr.states[n].f1 - ref.f1),
                             std::abs(tr.states[n].f2 - ref.f2),
                             std::abs(tr.states[n].f3 - ref.f3)}));
  }
  const double drift = flow::integral_drift(l, tr);
  const auto ints = flow::first_integrals(l, tr.states.front());
  json j;
  j["gamma"] = gamma;
  j["couplings"] = json::array({l.l1, l.l2, l.l3});
  j["z_end"] = z_end;
  j["steps"] = steps;
  j["deviation_from_closed_form"] = deviation;
  j["integral_drift"] = drift;
  j["first_integrals"] = json::array({jcplx(ints[0]), jcplx(ints[1]), jcplx(ints[2])});
  const auto& last = tr.states.back();
  j["endpoint"] = json::array({jcplx(last.f1), jcplx(last.f2), jcplx(last.f3)});
  std::cout << j.dump(2) << "\n";
  if (!out_path.empty()) {
    std::ofstream os(out_path);
    if (!os) throw usage_error("cannot open output file: " + out_path);
    for (std::size_t n = 0; n < tr.states.size(); ++n) {
      const auto& s = tr.states[n];
      os << fmt_real(tr.z[n]) << ',' << fmt_real(s.f1.real()) << ','
         << fmt_real(s.f1.imag()) << ',' << fmt_real(s.f2.real()) << ','
         << fmt_real(s.f2.imag()) << ',' << fmt_real(s.f3.real()) << ','
         << fmt_real(s.f3.imag()) << '\n';
    }
  }
  return 0;
}

int run_sample(const std::string& fn, double k, const std::string& re_axis,
               const std::string& im_axis, bool use_kprime, double pole_margin) {
  const jacobi::Fn f = need_fn(fn);
  const auto res = parse_axis(re_axis, "--re");
  const auto ims = parse_axis(im_axis, "--im");
  for (double im : ims)
    for (double re : res) {
      std::cout << fmt_real(re) << ',' << fmt_real(im) << ',';
      try {
        const cplx z(re, im);
        const cplx v = use_kprime ? modular::kprime_value(f, z, k, pole_margin)
                                  : jacobi::eval(f, z, k, pole_margin);
        std::cout << fmt_real(v.real()) << ',' << fmt_real(v.imag()) << "\n";
      } catch (const pole_error&) {
        std::cout << ",\n";  // pole cell: keep the row, leave values empty
      }
    }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobi elliptic functions and Cayley-Klein algebra realizations"};
  app.require_subcommand(1);

  std::string fn, z_str, type_str, family_str, grid_str = "10x10";
  std::string re_axis, im_axis, out_path;
  double modulus = 0.6, tol = 0.0, gamma = 0.6, z_end_mult = 2.0;
  double pole_margin = jacobi::default_pole_margin;
  double tol_vec = ck::default_vector_tol, tol_mat = ck::default_matrix_tol;
  int steps = 2048;
  bool use_kprime = false, use_lambda = false, unnormalized = false;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate one function at one point");
  eval_cmd->add_option("--fn", fn, "function id (sn, cn, dn, ns, ...)")->required();
  eval_cmd->add_option("--modulus", modulus, "modulus k in (0,1)")->required();
  eval_cmd->add_option("--z", z_str, "complex argument, e.g. 0.5+0.2i")->required();
  eval_cmd->add_flag("--kprime", use_kprime, "evaluate at the complementary modulus");
  eval_cmd->add_flag("--lambda", use_lambda, "evaluate at the degree-two transformed modulus");
  eval_cmd->add_option("--pole-margin", pole_margin, "pole exclusion radius");

  auto* verify_cmd = app.add_subcommand("verify", "verify one catalog entry");
  verify_cmd->add_option("--type", type_str, "algebra type")->required();
  verify_cmd->add_option("--family", family_str, "realization family")->required();
  verify_cmd->add_option("--modulus", modulus, "modulus k in (0,1)")->required();
  auto* tol_opt = verify_cmd->add_option("--tol", tol, "max-abs residual tolerance");
  verify_cmd->add_option("--grid", grid_str, "sample grid size WxH");
  verify_cmd->add_flag("--unnormalized", unnormalized,
                       "verify the un-normalized triple and report curvatures");

  std::vector<double> moduli = {0.6};
  auto* all_cmd = app.add_subcommand("verify-all", "verify the whole catalog");
  all_cmd->add_option("--modulus", moduli, "one or more moduli in (0,1)")
      ->expected(-1);
  all_cmd->add_option("--tol", tol_vec, "vector-field tolerance");
  all_cmd->add_option("--matrix-tol", tol_mat, "matrix tolerance");

  auto* flow_cmd = app.add_subcommand("flow", "integrate the generating system");
  flow_cmd->add_option("--gamma", gamma, "modulus / deformation parameter")->required();
  flow_cmd->add_option("--z-end", z_end_mult, "span in units of the quarter period K");
  flow_cmd->add_option("--steps", steps, "fixed step count");
  flow_cmd->add_option("--out", out_path, "write the trajectory CSV here");

  auto* sample_cmd = app.add_subcommand("sample", "CSV samples over a grid");
  sample_cmd->add_option("--fn", fn, "function id")->required();
  sample_cmd->add_option("--modulus", modulus, "modulus k in (0,1)")->required();
  sample_cmd->add_option("--re", re_axis, "real axis: value or lo:hi:step")->required();
  sample_cmd->add_option("--im", im_axis, "imaginary axis: value or lo:hi:step")->required();
  sample_cmd->add_flag("--kprime", use_kprime, "evaluate at the complementary modulus");
  sample_cmd->add_option("--pole-margin", pole_margin, "pole exclusion radius");

  try {
    app.parse(argc, argv);
    if (*eval_cmd)
      return run_eval(fn, modulus, z_str, use_kprime, use_lambda, pole_margin);
    if (*verify_cmd)
      return run_verify(type_str, family_str, modulus, tol, tol_opt->count() > 0,
                        grid_str, unnormalized);
    if (*all_cmd) return run_verify_all(moduli, tol_vec, tol_mat);
    if (*flow_cmd) return run_flow(gamma, z_end_mult, steps, out_path);
    if (*sample_cmd)
      return run_sample(fn, modulus, re_axis, im_axis, use_kprime, pole_margin);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pole_error& e) {
    std::cerr << "error: " << e.what() << " (nearest pole "
              << fmt_complex(e.nearest_pole()) << ", distance " << e.distance()
              << ")\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
