// Command-line front end: series evaluation, connection matrices, parameter
// walks, contingency-table normalizing constants, and the cycle-integral
// cross-check, all reported as JSON on standard output.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fdhg/annihilate.hpp"
#include "fdhg/cohomology.hpp"
#include "fdhg/contiguity.hpp"
#include "fdhg/cycles.hpp"
#include "fdhg/json_io.hpp"
#include "fdhg/series.hpp"
#include "fdhg/tables.hpp"

using nlohmann::json;
using namespace fdhg;

namespace {

double scalar_to_double(const std::string& tok) {
  if (tok.find('/') != std::string::npos)
    return parse_rational(tok).convert_to<double>();
  return std::stod(tok);
}

std::vector<double> parse_float_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(scalar_to_double(item));
  if (out.empty()) throw domain_error("empty list: '" + s + "'");
  return out;
}

Params<Rational> exact_params(const std::string& a, const std::string& b,
                              const std::string& c) {
  return {parse_rational(a), parse_rational_list(b), parse_rational(c)};
}

Params<Complex> float_params(const std::string& a, const std::string& b,
                             const std::string& c) {
  std::vector<Complex> bv;
  for (double v : parse_float_list(b)) bv.emplace_back(v);
  return {Complex(scalar_to_double(a)), bv, Complex(scalar_to_double(c))};
}

XPoint<Rational> exact_x(const std::string& x) {
  return XPoint<Rational>(parse_rational_list(x));
}

XPoint<Complex> float_x(const std::string& x) {
  std::vector<Complex> xv;
  for (double v : parse_float_list(x)) xv.emplace_back(v);
  return XPoint<Complex>(std::move(xv));
}

std::vector<Step> parse_steps(const std::string& s) {
  std::vector<Step> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "a_down")
      out.push_back({Step::A_DOWN});
    else if (tok == "c_down")
      out.push_back({Step::C_DOWN});
    else if (tok == "ac_diag")
      out.push_back({Step::AC_DIAG});
    else if (tok.rfind("b_down:", 0) == 0)
      out.push_back({Step::B_DOWN, std::stoi(tok.substr(7))});
    else
      throw domain_error("unknown step '" + tok + "'");
  }
  if (out.empty()) throw domain_error("empty step list");
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

[[noreturn]] void fail(const std::string& location, const std::string& detail) {
  emit(json{{"error", "numeric/domain failure"},
            {"location", location},
            {"detail", detail}});
  std::exit(1);
}

json schema();

// ---- eval-fd / eval-fk --------------------------------------------------

struct EvalOpts {
  std::string a, b, c, x, mode = "float";
  int order = 40, k = 1;
  double rho = 0.5;
};

json run_eval(const EvalOpts& o, bool fk) {
  Truncation t;
  t.order = o.order;
  t.rho = o.rho;
  json out;
  if (o.mode == "exact") {
    auto p = exact_params(o.a, o.b, o.c);
    auto x = exact_x(o.x);
    auto r = fk ? fk_series(p, x, o.k, t) : fd_series(p, x, t);
    out["value"] = to_json(r.value);
    out["tail_estimate"] = r.tail_estimate;
    out["finite"] = r.finite;
  } else {
    auto p = float_params(o.a, o.b, o.c);
    auto x = float_x(o.x);
    auto r = fk ? fk_series(p, x, o.k, t) : fd_series(p, x, t);
    out["value"] = to_json(r.value);
    out["tail_estimate"] = r.tail_estimate;
    out["finite"] = r.finite;
  }
  return out;
}

// ---- matrices -----------------------------------------------------------

template <class S>
Mat<S> pick_matrix(const std::string& which, const Params<S>& p,
                   const XPoint<S>& x, int k) {
  auto al = alphas(p);
  if (which == "C") return c_matrix(al);
  if (which == "Qk") return q_matrix(al, x, k);
  if (which == "Da") return d_a(p, x);
  if (which == "Dc") return d_c(p, x);
  if (which == "Dk") return d_bk(p, x, k);
  if (which == "Da_fk") return d_a_fk(p, x);
  if (which == "Dc_fk") return d_c_fk(p, x);
  if (which == "Dl_fk") return d_l_fk(p, x, k);
  throw domain_error("unknown matrix '" + which +
                     "' (C, Qk, Da, Dc, Dk, Da_fk, Dc_fk, Dl_fk)");
}

// ---- z ------------------------------------------------------------------

json run_z(std::string beta, std::string gamma, std::string pflat,
           const std::string& method, const std::string& input) {
  if (!input.empty()) {
    std::ifstream in(input);
    if (!in) throw domain_error("cannot open input file '" + input + "'");
    json doc = json::parse(in);
    auto join = [](const json& arr) {
      std::string s;
      for (const auto& e : arr) {
        if (!s.empty()) s += ",";
        s += e.is_string() ? e.get<std::string>() : e.dump();
      }
      return s;
    };
    beta = join(doc.at("beta"));
    gamma = join(doc.at("gamma"));
    std::string rows;
    for (const auto& row : doc.at("p")) {
      if (!rows.empty()) rows += ",";
      rows += join(row);
    }
    pflat = rows;
  }
  auto bl = parse_int_list(beta);
  if (bl.size() != 2) throw domain_error("z: --beta needs exactly 2 entries");
  auto gl = parse_int_list(gamma);
  Marginals mg(bl[0], bl[1], gl);
  auto pr = parse_rational_list(pflat);
  if (pr.size() != 2 * gl.size())
    throw domain_error("z: --p needs 2*(m+1) entries, row-major");
  PMatrix<Rational> p;
  p.row1.assign(pr.begin(), pr.begin() + gl.size());
  p.row2.assign(pr.begin() + gl.size(), pr.end());
  for (const auto& e : pr)
    if (!(e > 0)) throw domain_error("z: p entries must be positive");

  json out;
  out["method"] = method;
  out["k_class"] = classify(mg);
  XPoint<Rational> x = x_from_p(p);
  out["x"] = json::array();
  for (const auto& xi : x.x) out["x"].push_back(to_json(xi));
  if (method == "hgm" || method == "both") {
    auto r = z_hgm(mg, p);
    out["Z"] = to_json(r.z);
    json steps = json::array();
    for (const auto& s : r.steps) steps.push_back({{"step", s.step}, {"at", s.at}});
    out["steps"] = steps;
    if (method == "both") {
      Rational zb = z_bruteforce(mg, p);
      out["Z_bruteforce"] = to_json(zb);
      out["agreement"] = (r.z == zb);
    }
  } else if (method == "brute") {
    out["Z"] = to_json(z_bruteforce(mg, p));
  } else {
    throw domain_error("z: --method must be hgm, brute, or both");
  }
  return out;
}

// ---- selftest -----------------------------------------------------------

Rational rand_rational(std::mt19937& rng, int lo = 1, int hi = 9) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, hi);
  return Rational(num(rng)) / Rational(den(rng));
}

bool selftest_determinants(std::mt19937& rng, json& rep) {
  int bad = 0, total = 0;
  for (int m = 1; m <= 3; ++m)
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Rational> b(m);
      for (auto& bi : b) bi = rand_rational(rng) + Rational(1, 100 + total);
      Params<Rational> p{rand_rational(rng), b,
                         rand_rational(rng) + Rational(7)};
      auto al = alphas(p);
      if (!is_generic(alphas(p))) continue;
      ++total;
      if (determinant<Rational>(c_matrix(al)) != det_c_closed_form(al)) ++bad;
      std::vector<Rational> xv(m);
      for (int i = 0; i < m; ++i) xv[i] = Rational(i + 2, 2 * i + 7);
      XPoint<Rational> x(xv);
      for (int k = 0; k <= m + 1; ++k)
        if (determinant<Rational>(q_matrix(al, x, k)) !=
            det_q_closed_form(al, x, k))
          ++bad;
    }
  rep = json{{"cases", total}, {"failures", bad}};
  return bad == 0 && total > 0;
}

bool selftest_example_da(std::mt19937& rng, json& rep) {
  // m = 2 closed-form comparison for the a -> a-1 connection matrix
  int bad = 0;
  for (int trial = 0; trial < 5; ++trial) {
    Params<Rational> p{rand_rational(rng), {rand_rational(rng), rand_rational(rng)},
                       rand_rational(rng) + Rational(5)};
    XPoint<Rational> x({Rational(1, 2 + trial), Rational(1, 3 + trial)});
    if (!is_generic(alphas(p))) continue;
    Mat<Rational> expect(3, 3);
    const Rational &a = p.a, &c = p.c, &b1 = p.b[0], &b2 = p.b[1];
    const Rational &x1 = x.x[0], &x2 = x.x[1];
    Rational ca = c - a;
    expect << (-b1 * x1 - b2 * x2 + c - a) / ca, b1 * x1 / ca, b2 * x2 / ca,
        (a - 1) * (1 - x1) / ca, (a - 1) * (x1 - 1) / ca, Rational(0),
        (a - 1) * (1 - x2) / ca, Rational(0), (a - 1) * (x2 - 1) / ca;
    Mat<Rational> got = d_a(p, x);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (got(i, j) != expect(i, j)) {
          ++bad;
          i = j = 3;
        }
  }
  rep = json{{"cases", 5}, {"failures", bad}};
  return bad == 0;
}

bool selftest_z_batch(std::mt19937& rng, int count, json& rep) {
  std::vector<Marginals> margs = {
      Marginals(1, 1, {1, 1}),    Marginals(3, 2, {2, 1, 2}),
      Marginals(2, 4, {3, 1, 2}), Marginals(5, 3, {2, 2, 2, 2}),
      Marginals(4, 2, {1, 2, 3})};
  int bad = 0, total = 0;
  for (int trial = 0; trial < count; ++trial) {
    const Marginals& mg = margs[trial % margs.size()];
    PMatrix<Rational> p;
    p.row1.resize(mg.gamma.size());
    p.row2.resize(mg.gamma.size());
    while (true) {
      for (auto* row : {&p.row1, &p.row2})
        for (auto& e : *row) e = rand_rational(rng);
      try {
        x_from_p(p);
        break;
      } catch (const domain_error&) {
      }
    }
    ++total;
    if (z_hgm(mg, p).z != z_bruteforce(mg, p)) ++bad;
  }
  rep = json{{"cases", total}, {"failures", bad}};
  return bad == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Lauricella F_D and Laurent-companion evaluator: series, connection "
      "matrices, parameter walks, and exact 2x(m+1) contingency-table "
      "normalizing constants"};
  app.require_subcommand(0, 1);
  bool want_schema = false;
  app.add_flag("--schema", want_schema,
               "Print a machine-readable description of all subcommands");

  EvalOpts efd, efk;
  auto* cmd_fd = app.add_subcommand("eval-fd", "Evaluate the F_D series");
  cmd_fd->add_option("--a", efd.a, "Parameter a (rational p/q or decimal)")
      ->required();
  cmd_fd->add_option("--b", efd.b, "Comma list b_1,...,b_m")->required();
  cmd_fd->add_option("--c", efd.c, "Parameter c")->required();
  cmd_fd->add_option("--x", efd.x, "Comma list x_1,...,x_m")->required();
  cmd_fd->add_option("--order", efd.order, "Truncation order N");
  cmd_fd->add_option("--rho", efd.rho, "Convergence-ratio bound");
  cmd_fd->add_option("--mode", efd.mode, "exact | float")
      ->check(CLI::IsMember({"exact", "float"}));

  auto* cmd_fk =
      app.add_subcommand("eval-fk", "Evaluate the Laurent companion f^(k)");
  cmd_fk->add_option("--a", efk.a, "Parameter a")->required();
  cmd_fk->add_option("--b", efk.b, "Comma list b_1,...,b_m")->required();
  cmd_fk->add_option("--c", efk.c, "Parameter c")->required();
  cmd_fk->add_option("--x", efk.x, "Comma list x_1,...,x_m")->required();
  cmd_fk->add_option("--k", efk.k, "Companion index k in 1..m")->required();
  cmd_fk->add_option("--order", efk.order, "Truncation order N");
  cmd_fk->add_option("--rho", efk.rho, "Convergence-ratio bound");
  cmd_fk->add_option("--mode", efk.mode, "exact | float")
      ->check(CLI::IsMember({"exact", "float"}));

  std::string m_which, m_a, m_b, m_c, m_x, m_mode = "exact";
  int m_k = 0;
  auto* cmd_mat = app.add_subcommand(
      "matrices", "Emit intersection / connection matrices as JSON");
  cmd_mat->add_option("--which", m_which,
                      "C | Qk | Da | Dc | Dk | Da_fk | Dc_fk | Dl_fk")
      ->required();
  cmd_mat->add_option("--a", m_a, "Parameter a")->required();
  cmd_mat->add_option("--b", m_b, "Comma list b_1,...,b_m")->required();
  cmd_mat->add_option("--c", m_c, "Parameter c")->required();
  cmd_mat->add_option("--x", m_x, "Comma list x_1,...,x_m (ignored for C)");
  cmd_mat->add_option("--k", m_k, "Index for Qk / Dk / Dl_fk");
  cmd_mat->add_option("--mode", m_mode, "exact | float")
      ->check(CLI::IsMember({"exact", "float"}));

  std::string w_a, w_b, w_c, w_x, w_steps, w_seed, w_variant = "f",
                                                   w_mode = "exact";
  int w_k = 1, w_order = 40;
  auto* cmd_walk = app.add_subcommand(
      "walk", "Multiply a start vector through a list of contiguity steps");
  cmd_walk->add_option("--a", w_a, "Start parameter a")->required();
  cmd_walk->add_option("--b", w_b, "Comma list b_1,...,b_m")->required();
  cmd_walk->add_option("--c", w_c, "Start parameter c")->required();
  cmd_walk->add_option("--x", w_x, "Comma list x_1,...,x_m")->required();
  cmd_walk
      ->add_option("--steps", w_steps,
                   "Comma list of a_down, c_down, b_down:i, ac_diag")
      ->required();
  cmd_walk->add_option("--variant", w_variant, "f (F_D) | fk (Laurent)")
      ->check(CLI::IsMember({"f", "fk"}));
  cmd_walk->add_option("--k", w_k, "Companion index for --variant fk");
  cmd_walk->add_option("--seed", w_seed,
                       "Start vector (comma list, length m+1); computed from "
                       "the series when omitted");
  cmd_walk->add_option("--order", w_order, "Series order for the start vector");
  cmd_walk->add_option("--mode", w_mode, "exact | float")
      ->check(CLI::IsMember({"exact", "float"}));

  std::string z_beta, z_gamma, z_p, z_method = "hgm", z_input;
  auto* cmd_z = app.add_subcommand(
      "z", "Normalizing constant of 2x(m+1) contingency tables");
  cmd_z->add_option("--beta", z_beta, "Row sums beta_1,beta_2");
  cmd_z->add_option("--gamma", z_gamma, "Column sums gamma_0,...,gamma_m");
  cmd_z->add_option("--p", z_p, "Cell parameters, row-major, rationals");
  cmd_z->add_option("--method", z_method, "hgm | brute | both")
      ->check(CLI::IsMember({"hgm", "brute", "both"}));
  cmd_z->add_option("--input", z_input,
                    "JSON file {beta:[..], gamma:[..], p:[[..],[..]]}");

  std::string v_a, v_b, v_c;
  int v_k = 1, v_order = 30, v_panels = 64, v_gl = 16;
  double v_xi = 0.05, v_eps = 0.25, v_tol = 1e-6;
  auto* cmd_vc = app.add_subcommand(
      "verify-cycle",
      "Cross-check the cycle integral against the Laurent series");
  cmd_vc->add_option("--a", v_a, "Parameter a")->required();
  cmd_vc->add_option("--b", v_b, "Comma list b_1,...,b_m")->required();
  cmd_vc->add_option("--c", v_c, "Parameter c")->required();
  cmd_vc->add_option("--k", v_k, "Companion index k in 1..m");
  cmd_vc->add_option("--xi", v_xi, "Base-point scale");
  cmd_vc->add_option("--eps", v_eps, "Circle radius");
  cmd_vc->add_option("--tol", v_tol, "Relative-error tolerance");
  cmd_vc->add_option("--order", v_order, "Series order for the reference");
  cmd_vc->add_option("--panels", v_panels, "Quadrature panels per piece");
  cmd_vc->add_option("--gl-order", v_gl, "Gauss-Legendre order per panel");

  std::uint64_t st_seed = 12345;
  int st_count = 20;
  auto* cmd_st = app.add_subcommand(
      "selftest",
      "Determinant identities, the m=2 closed-form matrix, a randomized "
      "exact-Z batch");
  cmd_st->add_option("--seed", st_seed, "Random seed");
  cmd_st->add_option("--count", st_count, "Z batch size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (want_schema) {
    emit(schema());
    return 0;
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return 2;
  }

  try {
    if (cmd_fd->parsed()) {
      emit(run_eval(efd, false));
    } else if (cmd_fk->parsed()) {
      emit(run_eval(efk, true));
    } else if (cmd_mat->parsed()) {
      json out{{"which", m_which}};
      bool needs_x = m_which != "C";
      if (needs_x && m_x.empty())
        throw domain_error("matrices: --x required for '" + m_which + "'");
      if (m_mode == "exact") {
        auto p = exact_params(m_a, m_b, m_c);
        XPoint<Rational> x = [&] {
          if (needs_x) return exact_x(m_x);
          std::vector<Rational> dummy(p.m());
          for (int i = 0; i < p.m(); ++i) dummy[i] = Rational(1, i + 2);
          return XPoint<Rational>(std::move(dummy));
        }();
        out["matrix"] = mat_to_json<Rational>(pick_matrix(m_which, p, x, m_k));
      } else {
        auto p = float_params(m_a, m_b, m_c);
        XPoint<Complex> x = [&] {
          if (needs_x) return float_x(m_x);
          std::vector<Complex> dummy(p.m());
          for (int i = 0; i < p.m(); ++i) dummy[i] = Complex(1.0 / (i + 2));
          return XPoint<Complex>(std::move(dummy));
        }();
        out["matrix"] = mat_to_json<Complex>(pick_matrix(m_which, p, x, m_k));
      }
      emit(out);
    } else if (cmd_walk->parsed()) {
      auto steps = parse_steps(w_steps);
      Variant variant = (w_variant == "fk") ? Variant::Fk : Variant::F;
      Truncation t;
      t.order = w_order;
      json out;
      std::vector<StepRecord> log;
      if (w_mode == "exact") {
        ParamPath<Rational> path{exact_params(w_a, w_b, w_c), steps};
        auto x = exact_x(w_x);
        Vec<Rational> seed;
        if (!w_seed.empty()) {
          auto sv = parse_rational_list(w_seed);
          seed = Eigen::Map<Vec<Rational>>(sv.data(), sv.size());
        } else {
          seed = f_vector<Rational>(path.start, x, t,
                                    variant == Variant::Fk ? SeriesKind::FK
                                                           : SeriesKind::FD,
                                    w_k);
        }
        Vec<Rational> fin = walk(path, seed, x, variant, &log);
        out["final"] = vec_to_json<Rational>(fin);
        out["target"] = format_point(path.target());
      } else {
        ParamPath<Complex> path{float_params(w_a, w_b, w_c), steps};
        auto x = float_x(w_x);
        Vec<Complex> seed;
        if (!w_seed.empty()) {
          auto sv = parse_float_list(w_seed);
          seed.resize(sv.size());
          for (size_t i = 0; i < sv.size(); ++i) seed[i] = Complex(sv[i]);
        } else {
          seed = f_vector<Complex>(path.start, x, t,
                                   variant == Variant::Fk ? SeriesKind::FK
                                                          : SeriesKind::FD,
                                   w_k);
        }
        Vec<Complex> fin = walk(path, seed, x, variant, &log);
        out["final"] = vec_to_json<Complex>(fin);
        out["target"] = format_point(path.target());
      }
      json jsteps = json::array();
      for (const auto& s : log)
        jsteps.push_back({{"step", s.step}, {"at", s.at}});
      out["steps"] = jsteps;
      emit(out);
    } else if (cmd_z->parsed()) {
      if (z_input.empty() && (z_beta.empty() || z_gamma.empty() || z_p.empty()))
        throw domain_error("z: need --beta/--gamma/--p or --input");
      emit(run_z(z_beta, z_gamma, z_p, z_method, z_input));
    } else if (cmd_vc->parsed()) {
      auto p = float_params(v_a, v_b, v_c);
      CycleSpec spec;
      spec.k = v_k;
      spec.xi = v_xi;
      spec.eps = v_eps;
      spec.panels = v_panels;
      spec.gl_order = v_gl;
      auto rep = verify_theorem_6_1(p, spec, v_order);
      bool pass = rep.rel_err <= v_tol && rep.monodromy_err_c0 <= 1e-8 &&
                  rep.monodromy_err_c1 <= 1e-8;
      emit(json{{"lhs", to_json(rep.lhs)},
                {"rhs", to_json(rep.rhs)},
                {"rel_err", rep.rel_err},
                {"monodromy_checks",
                 json::array({rep.monodromy_err_c0, rep.monodromy_err_c1})},
                {"tolerance", v_tol},
                {"pass", pass}});
      return pass ? 0 : 1;
    } else if (cmd_st->parsed()) {
      std::mt19937 rng(static_cast<std::uint32_t>(st_seed));
      json rdet, rex, rz;
      bool ok_det = selftest_determinants(rng, rdet);
      bool ok_ex = selftest_example_da(rng, rex);
      bool ok_z = selftest_z_batch(rng, st_count, rz);
      bool pass = ok_det && ok_ex && ok_z;
      emit(json{{"determinant_identities", rdet},
                {"m2_closed_form_matrix", rex},
                {"z_oracle_batch", rz},
                {"pass", pass}});
      return pass ? 0 : 1;
    }
  } catch (const domain_error& e) {
    fail("domain", e.what());
  } catch (const singular_matrix_error& e) {
    fail("linear-algebra", e.what());
  } catch (const internal_check_error& e) {
    fail("internal-check", e.what());
  } catch (const std::exception& e) {
    fail("unexpected", e.what());
  }
  return 0;
}

namespace {

json flag(const std::string& name, const std::string& type,
          const std::string& doc, bool required = false) {
  return json{{"flag", name}, {"type", type}, {"doc", doc}, {"required", required}};
}

json schema() {
  json cmds = json::array();
  cmds.push_back(
      {{"subcommand", "eval-fd"},
       {"output", json{{"value", "scalar"},
                       {"tail_estimate", "number"},
                       {"finite", "bool"}}},
       {"flags",
        json::array({flag("--a", "scalar", "parameter a", true),
                     flag("--b", "scalar-list", "b_1..b_m", true),
                     flag("--c", "scalar", "parameter c", true),
                     flag("--x", "scalar-list", "x_1..x_m", true),
                     flag("--order", "int", "truncation order"),
                     flag("--rho", "number", "convergence-ratio bound"),
                     flag("--mode", "exact|float", "arithmetic mode")})}});
  cmds.push_back(
      {{"subcommand", "eval-fk"},
       {"output", json{{"value", "scalar"},
                       {"tail_estimate", "number"},
                       {"finite", "bool"}}},
       {"flags",
        json::array({flag("--a", "scalar", "parameter a", true),
                     flag("--b", "scalar-list", "b_1..b_m", true),
                     flag("--c", "scalar", "parameter c", true),
                     flag("--x", "scalar-list", "x_1..x_m", true),
                     flag("--k", "int", "companion index", true),
                     flag("--order", "int", "truncation order"),
                     flag("--rho", "number", "convergence-ratio bound"),
                     flag("--mode", "exact|float", "arithmetic mode")})}});
  cmds.push_back(
      {{"subcommand", "matrices"},
       {"output", json{{"which", "string"}, {"matrix", "row-major array"}}},
       {"flags",
        json::array({flag("--which", "C|Qk|Da|Dc|Dk|Da_fk|Dc_fk|Dl_fk",
                          "matrix selector", true),
                     flag("--a", "scalar", "parameter a", true),
                     flag("--b", "scalar-list", "b_1..b_m", true),
                     flag("--c", "scalar", "parameter c", true),
                     flag("--x", "scalar-list", "x_1..x_m"),
                     flag("--k", "int", "index for Qk/Dk/Dl_fk"),
                     flag("--mode", "exact|float", "arithmetic mode")})}});
  cmds.push_back(
      {{"subcommand", "walk"},
       {"output", json{{"final", "scalar-list"},
                       {"steps", "per-step report"},
                       {"target", "string"}}},
       {"flags",
        json::array(
            {flag("--a", "scalar", "start parameter a", true),
             flag("--b", "scalar-list", "b_1..b_m", true),
             flag("--c", "scalar", "start parameter c", true),
             flag("--x", "scalar-list", "x_1..x_m", true),
             flag("--steps", "step-list", "a_down,c_down,b_down:i,ac_diag",
                  true),
             flag("--variant", "f|fk", "vector family"),
             flag("--k", "int", "companion index for fk"),
             flag("--seed", "scalar-list", "explicit start vector"),
             flag("--order", "int", "series order for the start vector"),
             flag("--mode", "exact|float", "arithmetic mode")})}});
  cmds.push_back(
      {{"subcommand", "z"},
       {"output", json{{"Z", "rational string"},
                       {"k_class", "int"},
                       {"x", "rational-list"},
                       {"method", "string"},
                       {"agreement", "bool (method=both)"}}},
       {"flags",
        json::array({flag("--beta", "int-list", "row sums", false),
                     flag("--gamma", "int-list", "column sums", false),
                     flag("--p", "rational-list", "cells, row-major", false),
                     flag("--method", "hgm|brute|both", "evaluation method"),
                     flag("--input", "path",
                          "JSON {beta, gamma, p} instead of flags")})}});
  cmds.push_back(
      {{"subcommand", "verify-cycle"},
       {"output", json{{"lhs", "complex"},
                       {"rhs", "complex"},
                       {"rel_err", "number"},
                       {"monodromy_checks", "number[2]"},
                       {"pass", "bool"}}},
       {"flags",
        json::array({flag("--a", "scalar", "parameter a", true),
                     flag("--b", "scalar-list", "b_1..b_m", true),
                     flag("--c", "scalar", "parameter c", true),
                     flag("--k", "int", "companion index"),
                     flag("--xi", "number", "base-point scale"),
                     flag("--eps", "number", "circle radius"),
                     flag("--tol", "number", "relative-error tolerance"),
                     flag("--order", "int", "series order"),
                     flag("--panels", "int", "quadrature panels"),
                     flag("--gl-order", "int", "Gauss-Legendre order")})}});
  cmds.push_back(
      {{"subcommand", "selftest"},
       {"output", json{{"pass", "bool"}}},
       {"flags", json::array({flag("--seed", "int", "random seed"),
                              flag("--count", "int", "Z batch size")})}});
  return json{
      {"tool", "fdhg"},
      {"serialization",
       json{{"rational", "decimal string \"p/q\""},
            {"complex", "[re, im]"},
            {"matrix", "row-major nested arrays"}}},
      {"exit_codes", json{{"0", "success"},
                          {"1", "numeric/domain failure (JSON error object)"},
                          {"2", "usage error"}}},
      {"subcommands", cmds}};
}

}  // namespace
