#include "eisen/cli.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "eisen/analytic.hpp"
#include "eisen/angles.hpp"
#include "eisen/core.hpp"
#include "eisen/discrepancy.hpp"
#include "eisen/error.hpp"
#include "eisen/expsum.hpp"
#include "eisen/factor.hpp"
#include "eisen/parallel.hpp"
#include "json.hpp"

namespace eisen::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::size_t kRandomArcs = 10'000;

// Doubles are reported with 15 significant digits.
ordered_json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

ordered_json cnum(std::complex<double> z) { return {{"re", num(z.real())}, {"im", num(z.imag())}}; }

ordered_json eis(EisensteinInt x) { return {{"a", x.a}, {"b", x.b}}; }

struct Record {
  ordered_json result;
  std::optional<double> error_estimate;
};

struct Output {
  std::string command;
  ordered_json params = ordered_json::object();
  std::vector<Record> rows;
};

std::string csv_cell(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  std::string s = v.dump();
  if (v.is_structured()) {
    std::string quoted = "\"";
    for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
  }
  return s;
}

void emit(const Output& o, const std::string& format, std::ostream& out) {
  if (format == "json") {
    for (const auto& r : o.rows) {
      ordered_json rec;
      rec["command"] = o.command;
      rec["params"] = o.params;
      rec["result"] = r.result;
      if (r.error_estimate) rec["error_estimate"] = num(*r.error_estimate);
      out << rec.dump() << '\n';
    }
    return;
  }
  // CSV: one header line, then one line per row.
  if (o.rows.empty()) return;
  std::vector<std::string> columns;
  const auto& first = o.rows.front().result;
  if (first.is_object()) {
    for (auto it = first.begin(); it != first.end(); ++it) columns.push_back(it.key());
  } else {
    columns.push_back("result");
  }
  const bool with_error = o.rows.front().error_estimate.has_value();
  if (with_error) columns.push_back("error_estimate");
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& r : o.rows) {
    std::vector<std::string> cells;
    if (r.result.is_object()) {
      for (auto it = r.result.begin(); it != r.result.end(); ++it) cells.push_back(csv_cell(it.value()));
    } else {
      cells.push_back(csv_cell(r.result));
    }
    if (with_error) cells.push_back(csv_cell(num(r.error_estimate.value_or(NAN))));
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  }
}

struct Globals {
  std::string format = "json";
  std::optional<double> tol;
  int threads = 0;
  std::optional<std::uint64_t> seed;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice points of Z[w] on circles, exponential sums, prime angles, discrepancy and Hecke L-functions",
               "eisen"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tol", g.tol, "Numerical tolerance");
  app.add_option("--threads", g.threads, "Worker threads (default $EISEN_THREADS or all cores)");
  app.add_option("--seed", g.seed, "Seed for random-arc checks");

  Output o;
  std::function<void()> action;

  std::uint64_t n = 0, x = 0, k = 0;
  std::int64_t A = 0;
  double xr = 0, y1 = 0, y2 = 0, gamma = 0, eps = 0, t = 0, sigma = 0, im = 0;
  std::vector<std::uint64_t> checkpoints;

  auto sub = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->fallthrough();
    return c;
  };

  auto* points = sub("points", "Lattice points with |mu|^2 = N");
  points->add_option("N", n)->required();
  points->callback([&] {
    action = [&] {
      o.params = {{"n", n}};
      for (const auto& mu : circle_points(n).points) {
        o.rows.push_back({{{"a", mu.a}, {"b", mu.b}, {"angle", num(eis_arg(mu).radians())}}, {}});
      }
    };
  });

  auto* rq = sub("rq", "Number of representations by x^2 + xy + y^2");
  rq->add_option("N", n)->required();
  rq->callback([&] {
    action = [&] {
      o.params = {{"n", n}};
      o.rows.push_back({r_q(n), {}});
    };
  });

  auto* fac = sub("factor", "Factorization over Z[w]");
  fac->add_option("N", n)->required();
  fac->callback([&] {
    action = [&] {
      o.params = {{"n", n}};
      const EisFactorization f = factor_eisenstein(n);
      ordered_json split = ordered_json::array(), inert = ordered_json::array();
      for (const auto& s : f.split_factors) {
        split.push_back({{"p", s.prime.p},
                         {"pi", eis(*s.prime.pi)},
                         {"exp_pi", s.exp_pi},
                         {"exp_conj", s.exp_conj},
                         {"theta_p", num(s.prime.theta_p)}});
      }
      for (const auto& q : f.inert_factors) inert.push_back({{"q", q.q}, {"exponent", q.exponent}});
      o.rows.push_back(
          {{{"unit_power", f.unit_power}, {"alpha3", f.alpha3}, {"split", split}, {"inert", inert}}, {}});
    };
  });

  auto* es = sub("expsum", "S(N, A) by direct summation");
  es->add_option("N", n)->required();
  es->add_option("A", A)->required();
  es->callback([&] {
    action = [&] {
      o.params = {{"n", n}, {"A", A}};
      o.rows.push_back({cnum(exp_sum(n, A).value), {}});
    };
  });

  auto* avg = sub("avg-expsum", "(1/x) sum_{n<=x} |S(n, A)| at checkpoints");
  avg->add_option("X", x)->required();
  avg->add_option("A", A)->required();
  avg->add_option("--checkpoints", checkpoints, "x-values (default: powers of ten up to X, and X)");
  avg->callback([&] {
    action = [&] {
      if (checkpoints.empty()) {
        for (std::uint64_t c = 10; c < x; c *= 10) checkpoints.push_back(c);
        checkpoints.push_back(x);
      }
      o.params = {{"x", x}, {"A", A}, {"checkpoints", checkpoints}};
      const auto rep = avg_exp_sum(x, A, checkpoints, g.threads);
      ordered_json rows = ordered_json::array();
      for (const auto& c : rep.checkpoints) rows.push_back({{"x", c.x}, {"mean", num(c.mean)}});
      o.rows.push_back({{{"checkpoints", rows},
                         {"fitted_exponent", rep.fitted_exponent ? num(*rep.fitted_exponent) : ordered_json()}},
                        {}});
    };
  });

  auto* sec = sub("sector", "Prime ideals with norm <= X and angle in [PHI1, PHI2]");
  sec->add_option("X", xr)->required();
  sec->add_option("PHI1", y1)->required();
  sec->add_option("PHI2", y2)->required();
  sec->callback([&] {
    action = [&] {
      o.params = {{"x", num(xr)}, {"phi1", num(y1)}, {"phi2", num(y2)}};
      const auto c = sector_count({xr, y1, y2}, g.threads);
      o.rows.push_back({{{"observed", c.observed}, {"expected", num(c.expected)}, {"ratio", num(c.observed / c.expected)}}, {}});
    };
  });

  auto* chi = sub("chi-sum", "sum over prime ideals of chi^{6A}");
  chi->add_option("X", xr)->required();
  chi->add_option("A", A)->required();
  chi->callback([&] {
    action = [&] {
      o.params = {{"x", num(xr)}, {"a", A}};
      const auto v = chi_prime_sum(xr, A, g.threads);
      ordered_json r = cnum(v.value);
      r["decomposed"] = num(chi_prime_sum_decomposed(xr, A, g.threads));
      o.rows.push_back({r, {}});
    };
  });

  auto* equi = sub("equi-stat", "KS distance of prime ideal angles from uniform");
  equi->add_option("X", xr)->required();
  equi->callback([&] {
    action = [&] {
      o.params = {{"x", num(xr)}};
      o.rows.push_back({num(theta_equidistribution_stat(xr, g.threads)), {}});
    };
  });

  auto* bad = sub("bad-circle", "Circle with >= K points within EPS of the six directions");
  bad->add_option("EPS", eps)->required();
  bad->add_option("K", k)->required();
  bad->callback([&] {
    action = [&] {
      o.params = {{"epsilon", num(eps)}, {"k", k}};
      const auto bc = bad_circle(eps, k);
      o.rows.push_back({{{"n", bc.n},
                         {"m", bc.m},
                         {"primes", bc.primes},
                         {"count", bc.points.count},
                         {"max_deviation", num(bc.max_deviation)}},
                        {}});
    };
  });

  auto* disc = sub("discrepancy", "Exact discrepancy Delta(N)");
  disc->add_option("N", n)->required();
  disc->callback([&] {
    action = [&] {
      o.params = {{"n", n}};
      const auto d = discrepancy_exact(n);
      ordered_json r = {{"delta", num(d.delta)},
                        {"count", d.count},
                        {"alpha", num(d.witness.alpha)},
                        {"beta", num(d.witness.beta)}};
      if (g.seed) {
        const auto pts = circle_points(n).points;
        const auto angles = positive_angles(pts);
        r["random_lower_bound"] = num(random_arc_lower_bound(angles, kRandomArcs, *g.seed));
        o.params["seed"] = *g.seed;
      }
      o.rows.push_back({r, {}});
    };
  });

  auto* surv = sub("survey", "Exceptions Delta(n) > r_Q(n)^-GAMMA over n <= X");
  surv->add_option("X", x)->required();
  surv->add_option("GAMMA", gamma)->required();
  surv->callback([&] {
    action = [&] {
      o.params = {{"x", x}, {"gamma", num(gamma)}};
      const auto r = discrepancy_survey(x, gamma, g.threads);
      o.rows.push_back({{{"b_q", r.b_q}, {"m_gamma", r.m_gamma}, {"fraction", num(r.fraction)}}, {}});
    };
  });

  auto* bq = sub("bq", "Number of representable n <= X");
  bq->add_option("X", x)->required();
  bq->callback([&] {
    action = [&] {
      o.params = {{"x", x}};
      o.rows.push_back({b_q(x), {}});
    };
  });

  auto* th = sub("theta", "theta(T, A)");
  th->add_option("T", t)->required();
  th->add_option("A", A)->required();
  th->callback([&] {
    action = [&] {
      const double tol = g.tol.value_or(1e-15);
      o.params = {{"t", num(t)}, {"a", A}, {"tol", num(tol)}};
      o.rows.push_back({cnum(theta({t, A, tol})), tol});
    };
  });

  auto* thc = sub("theta-check", "Residual of theta(t,a) = t^{-1-6a} theta(1/t,a)");
  thc->add_option("T", t)->required();
  thc->add_option("A", A)->required();
  thc->callback([&] {
    action = [&] {
      const double tol = g.tol.value_or(1e-15);
      o.params = {{"t", num(t)}, {"a", A}, {"tol", num(tol)}};
      o.rows.push_back({num(theta_transform_residual(t, A, tol)), {}});
    };
  });

  auto* lf = sub("lfunc", "L(SIGMA + iT, chi^{6A})");
  lf->add_option("SIGMA", sigma)->required();
  lf->add_option("T", t)->required();
  lf->add_option("A", A)->required();
  lf->callback([&] {
    action = [&] {
      const double tol = g.tol.value_or(1e-10);
      o.params = {{"sigma", num(sigma)}, {"t", num(t)}, {"a", A}, {"tol", num(tol)}};
      const auto l = l_dirichlet({sigma, t}, A, tol);
      o.rows.push_back({cnum(l.value), l.error_estimate});
    };
  });

  auto* xic = sub("xi-check", "xi(s) and xi(1-s) from the theta integral, s = RE + i IM");
  xic->add_option("RE", sigma)->required();
  xic->add_option("IM", im)->required();
  xic->add_option("A", A)->required();
  xic->callback([&] {
    action = [&] {
      const double tol = g.tol.value_or(1e-12);
      const Complex s{sigma, im};
      o.params = {{"re", num(sigma)}, {"im", num(im)}, {"a", A}, {"tol", num(tol)}};
      const auto lhs = xi_integral(s, A, tol);
      const auto rhs = xi_integral(1.0 - s, A, tol);
      const double residual = std::abs(lhs.value - rhs.value) / (std::abs(lhs.value) + 1e-30);
      o.rows.push_back({{{"xi", cnum(lhs.value)}, {"xi_reflected", cnum(rhs.value)}, {"residual", num(residual)}},
                        std::max(lhs.error_estimate, rhs.error_estimate)});
    };
  });

  auto* lic = sub("li", "Logarithmic integral from 2 to X");
  lic->add_option("X", xr)->required();
  lic->callback([&] {
    action = [&] {
      o.params = {{"x", num(xr)}};
      o.rows.push_back({num(li(xr)), {}});
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    err << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (g.threads < 0) throw PreconditionError("--threads must be nonnegative");
    set_default_threads(g.threads);
    o.command = app.get_subcommands().front()->get_name();
    action();
    emit(o, g.format, out);
    out.flush();
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return 2;
  } catch (const OverflowError& e) {
    err << "out of range: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace eisen::cli
