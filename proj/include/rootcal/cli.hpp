#pragma once

// Command-line front end.  Every command prints one JSON envelope
//   { "command", "payload", "schema_version", "status" }
// to stdout (or CSV where supported) and exits 0.  Bad usage or argument
// validation exits 2, evaluation failures (poles, route mismatches) exit 3,
// both with an error envelope on stdout.

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rootcal/calogero.hpp"
#include "rootcal/closed_form.hpp"
#include "rootcal/enumerate.hpp"
#include "rootcal/lattice.hpp"
#include "rootcal/numeric.hpp"
#include "rootcal/report.hpp"
#include "rootcal/spectral.hpp"
#include "rootcal/strings.hpp"
#include "rootcal/weyl.hpp"

namespace rootcal {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

namespace detail {

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

inline std::vector<double> parse_doubles(const std::string& s, std::size_t want,
                                         const std::string& what) {
  const auto parts = split_commas(s);
  if (want != 0 && parts.size() != want) {
    throw std::invalid_argument(what + ": expected " + std::to_string(want) +
                                " comma-separated numbers, got " + std::to_string(parts.size()));
  }
  std::vector<double> out;
  for (const auto& p : parts) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(p, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument(what + ": bad number '" + p + "'");
    }
    if (used != p.size()) throw std::invalid_argument(what + ": bad number '" + p + "'");
    out.push_back(v);
  }
  return out;
}

inline std::vector<std::int64_t> parse_ints(const std::string& s, std::size_t want,
                                            const std::string& what) {
  const auto parts = split_commas(s);
  if (parts.size() != want) {
    throw std::invalid_argument(what + ": expected " + std::to_string(want) +
                                " comma-separated integers, got " + std::to_string(parts.size()));
  }
  std::vector<std::int64_t> out;
  for (const auto& p : parts) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(p, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument(what + ": bad integer '" + p + "'");
    }
    if (used != p.size()) throw std::invalid_argument(what + ": bad integer '" + p + "'");
    out.push_back(v);
  }
  return out;
}

inline Coord6d to_coord6(const std::vector<double>& v) {
  Coord6d out{};
  for (std::size_t i = 0; i < 6; ++i) out[i] = v[i];
  return out;
}

inline JsonValue coeff_json(const RootVector& rv) {
  JsonValue arr = JsonValue::array();
  for (int node = kNodeMin; node <= kNodeMax; ++node) arr.push(rv.coeff(node));
  return arr;
}

inline JsonValue coord_json(const Coord6d& x) {
  JsonValue arr = JsonValue::array();
  for (double v : x) arr.push(v);
  return arr;
}

inline CoxeterKind parse_element(const std::string& s) {
  if (s == "sigma") return CoxeterKind::affine;
  if (s == "sigmahat") return CoxeterKind::hyperbolic;
  throw std::invalid_argument("element must be sigma or sigmahat, got '" + s + "'");
}

}  // namespace detail

struct CliOutcome {
  std::string command;
  JsonValue payload;
  bool has_csv = false;
  std::string csv;
};

inline std::string cli_envelope(const std::string& command, JsonValue payload) {
  JsonValue env = JsonValue::object();
  env.set("command", command);
  env.set("payload", std::move(payload));
  env.set("schema_version", kSchemaVersion);
  env.set("status", "ok");
  return env.dump();
}

inline std::string cli_error_envelope(const std::string& command, const std::string& message) {
  JsonValue env = JsonValue::object();
  env.set("command", command.empty() ? "cli" : command);
  env.set("error", message);
  env.set("schema_version", kSchemaVersion);
  env.set("status", "error");
  return env.dump();
}

namespace detail {

inline CliOutcome do_roots_enum(std::int64_t bound, bool affine_only, bool want_csv) {
  const auto roots = enumerate_real_roots(bound, affine_only);
  CliOutcome oc;
  oc.command = "roots enum";
  JsonValue payload = JsonValue::object();
  payload.set("affine_only", affine_only);
  payload.set("bound", bound);
  payload.set("count", static_cast<long>(roots.size()));
  JsonValue arr = JsonValue::array();
  for (const auto& rv : roots) arr.push(coeff_json(rv));
  payload.set("roots", std::move(arr));
  oc.payload = std::move(payload);
  if (want_csv) {
    oc.has_csv = true;
    oc.csv = csv_line({"q", "r", "l", "m", "n"});
    for (const auto& rv : roots) {
      std::vector<std::string> row;
      for (int node = kNodeMin; node <= kNodeMax; ++node) row.push_back(rv.coeff(node).str());
      oc.csv += csv_line(row);
    }
  }
  return oc;
}

inline CliOutcome do_orbit(const std::string& element, std::int64_t k, const std::string& alpha,
                           const std::string& method) {
  const CoxeterKind kind = parse_element(element);
  const auto a = parse_ints(alpha, 5, "--alpha");
  const RootVector rv{Int(a[0]), Int(a[1]), Int(a[2]), Int(a[3]), Int(a[4])};
  if (method != "closed" && method != "matrix" && method != "both") {
    throw std::invalid_argument("method must be closed, matrix, or both, got '" + method + "'");
  }

  CliOutcome oc;
  oc.command = "orbit";
  JsonValue payload = JsonValue::object();
  payload.set("alpha", coeff_json(rv));
  payload.set("element", element);
  payload.set("k", Int(k));
  payload.set("method", method);

  bool have_closed = false, have_matrix = false;
  RootVector via_closed, via_matrix;
  if (method == "closed" || method == "both") {
    via_closed = kind == CoxeterKind::affine ? eval_affine_closed_form(Int(k), rv)
                                             : eval_hyperbolic_closed_form(Int(k), rv);
    have_closed = true;
    payload.set("result_closed", coeff_json(via_closed));
  }
  if (method == "matrix" || method == "both") {
    via_matrix = matrix_power(coxeter_matrix(kind), Int(k)).apply(rv);
    have_matrix = true;
    payload.set("result_matrix", coeff_json(via_matrix));
  }
  if (have_closed && have_matrix) {
    payload.set("agree", via_closed == via_matrix);
    if (!(via_closed == via_matrix)) {
      throw residual_error("orbit: closed form gives " + via_closed.str() +
                           " but matrix power gives " + via_matrix.str() + " at k=" +
                           std::to_string(k));
    }
  }
  oc.payload = std::move(payload);
  return oc;
}

inline CliOutcome do_strings_check(std::int64_t kmin, std::int64_t kmax) {
  if (kmin > kmax) throw std::invalid_argument("--kmin must not exceed --kmax");
  const ClosureReport rep = closure_check(Int(kmin), Int(kmax));
  CliOutcome oc;
  oc.command = "strings check";
  JsonValue payload = JsonValue::object();
  payload.set("cases", rep.cases);
  payload.set("kmax", kmax);
  payload.set("kmin", kmin);
  payload.set("ok", rep.ok());
  JsonValue fails = JsonValue::array();
  for (const auto& f : rep.failures) {
    JsonValue row = JsonValue::object();
    row.set("detail", f.detail);
    row.set("k", f.k);
    row.set("node", f.node);
    row.set("string", f.string_index);
    fails.push(std::move(row));
  }
  payload.set("failures", std::move(fails));
  oc.payload = std::move(payload);
  return oc;
}

inline CliOutcome do_coverage(std::int64_t bound) {
  const CoverageReport rep = coverage_report(bound);
  CliOutcome oc;
  oc.command = "coverage";
  JsonValue payload = JsonValue::object();
  payload.set("bound", rep.bound);
  payload.set("covered_multi", rep.covered_multi);
  payload.set("covered_once", rep.covered_once);
  payload.set("exact_cover", rep.exact_cover());
  payload.set("total", rep.total);
  payload.set("uncovered", rep.uncovered);
  JsonValue unc = JsonValue::array();
  for (const auto& rv : rep.uncovered_list) unc.push(coeff_json(rv));
  payload.set("uncovered_roots", std::move(unc));
  JsonValue multi = JsonValue::array();
  for (const auto& [rv, hits] : rep.multi_list) {
    JsonValue row = JsonValue::object();
    row.set("hits", hits);
    row.set("root", coeff_json(rv));
    multi.push(std::move(row));
  }
  payload.set("multi_covered_roots", std::move(multi));
  oc.payload = std::move(payload);
  return oc;
}

inline CliOutcome do_potential_eval(const std::string& qs, double g, std::int64_t trunc,
                                    const std::string& mode, bool both_signs,
                                    std::int64_t bound) {
  if (mode != "direct" && mode != "closed" && mode != "enumerated" && mode != "all") {
    throw std::invalid_argument("mode must be direct, closed, enumerated, or all, got '" + mode +
                                "'");
  }
  const Coord6d x = to_coord6(parse_doubles(qs, 6, "--q"));
  const PotentialParams params{g, both_signs};

  CliOutcome oc;
  oc.command = "potential eval";
  JsonValue payload = JsonValue::object();
  payload.set("both_signs", both_signs);
  payload.set("g", g);
  payload.set("mode", mode);
  payload.set("q", coord_json(x));

  double closed = 0.0;
  bool have_closed = false;
  if (mode == "closed" || mode == "all") {
    closed = potential_closed(x, params);
    have_closed = true;
    payload.set("value_closed", closed);
  }
  if (mode == "direct" || mode == "all") {
    const double direct = potential_direct(x, params, trunc);
    payload.set("trunc", trunc);
    payload.set("value_direct", direct);
    if (have_closed) payload.set("gap_direct", std::abs(direct - closed));
  }
  if (mode == "enumerated" || mode == "all") {
    const double enumerated = potential_enumerated(x, params, bound);
    payload.set("bound", bound);
    payload.set("value_enumerated", enumerated);
    if (have_closed) payload.set("gap_enumerated", std::abs(enumerated - closed));
  }
  oc.payload = std::move(payload);
  return oc;
}

inline CliOutcome do_potential_invariance(const std::string& qs, const std::string& ps, double g,
                                          bool both_signs) {
  const Coord6d x = to_coord6(parse_doubles(qs, 6, "--q"));
  const Coord6d p = to_coord6(parse_doubles(ps, 6, "--p"));
  const PotentialParams params{g, both_signs};
  const InvarianceReport rep = invariance_report(x, p, params);

  CliOutcome oc;
  oc.command = "potential invariance";
  JsonValue payload = JsonValue::object();
  payload.set("kinetic", rep.kinetic);
  payload.set("potential", rep.potential);
  JsonValue rows = JsonValue::array();
  for (const auto& r : rep.rows) {
    JsonValue row = JsonValue::object();
    row.set("kinetic_residual", r.kinetic_residual);
    row.set("name", r.name);
    row.set("potential_residual", r.potential_residual);
    rows.push(std::move(row));
  }
  payload.set("rows", std::move(rows));

  JsonValue perms = JsonValue::object();
  for (int node = 0; node <= 3; ++node) {
    perms.set("sigma" + std::to_string(node),
              term_permutation_residual(x, coordinate_reflection(node, x), term_permutation(node)));
  }
  perms.set("coxeter", term_permutation_residual(x, coordinate_coxeter(x), coxeter_term_permutation()));
  perms.set("sigma3_printed",
            term_permutation_residual(x, coordinate_reflection(3, x),
                                      transcribed_node3_term_permutation()));
  payload.set("term_permutation_residuals", std::move(perms));
  oc.payload = std::move(payload);
  return oc;
}

inline CliOutcome do_potential_limit(const std::string& qs, const std::string& q6s, double g,
                                     bool both_signs, bool want_csv) {
  const Coord6d x = to_coord6(parse_doubles(qs, 6, "--q"));
  const auto q6v = parse_doubles(q6s, 0, "--q6");
  if (q6v.empty()) throw std::invalid_argument("--q6: needs at least one value");
  const PotentialParams params{g, both_signs};
  const auto samples = limit_scan(x, params, q6v);

  CliOutcome oc;
  oc.command = "potential limit";
  JsonValue payload = JsonValue::object();
  payload.set("both_signs", both_signs);
  payload.set("g", g);
  payload.set("q", coord_json(x));
  JsonValue rows = JsonValue::array();
  for (const auto& s : samples) {
    JsonValue row = JsonValue::object();
    row.set("limit", s.limit);
    row.set("q6", s.q6);
    row.set("ratio", s.ratio);
    row.set("value", s.value);
    rows.push(std::move(row));
  }
  payload.set("rows", std::move(rows));
  oc.payload = std::move(payload);
  if (want_csv) {
    oc.has_csv = true;
    oc.csv = csv_line({"q6", "value", "limit", "ratio"});
    for (const auto& s : samples) {
      oc.csv += csv_line({format_double(s.q6), format_double(s.value), format_double(s.limit),
                          format_double(s.ratio)});
    }
  }
  return oc;
}

inline CliOutcome do_charpoly(const std::string& element) {
  const CoxeterKind kind = parse_element(element);
  const auto coeffs = characteristic_polynomial(coxeter_matrix(kind));
  CliOutcome oc;
  oc.command = "charpoly";
  JsonValue payload = JsonValue::object();
  payload.set("element", element);
  JsonValue arr = JsonValue::array();
  for (const Int& c : coeffs) arr.push(c);
  payload.set("coefficients_descending", std::move(arr));
  oc.payload = std::move(payload);
  return oc;
}

}  // namespace detail

// Builds and runs the app; returns the process exit code.  All output goes
// to `out` (the envelope) or `err` (nothing at present; reserved).
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  (void)err;
  CLI::App app{"Exact root strings and the extended Calogero potential"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CliOutcome outcome;
  bool ran = false;
  std::string command_hint;

  // roots enum
  auto* roots = app.add_subcommand("roots", "Real-root enumeration");
  roots->fallthrough();
  roots->require_subcommand(1);
  auto* roots_enum = roots->add_subcommand("enum", "List real roots in a coefficient box");
  roots_enum->fallthrough();
  std::int64_t enum_bound = 2;
  bool enum_affine = false;
  roots_enum->add_option("--bound", enum_bound, "Coefficient box half-width")->required();
  roots_enum->add_flag("--affine-only", enum_affine, "Restrict to the affine slice (q = 0)");
  roots_enum->callback([&] {
    command_hint = "roots enum";
    outcome = detail::do_roots_enum(enum_bound, enum_affine, format == "csv");
    ran = true;
  });

  // orbit
  auto* orbit = app.add_subcommand("orbit", "Coxeter orbit of a coefficient vector");
  orbit->fallthrough();
  std::string orbit_element = "sigma";
  std::int64_t orbit_k = 0;
  std::string orbit_alpha;
  std::string orbit_method = "both";
  orbit->add_option("--element", orbit_element, "sigma (affine) or sigmahat (hyperbolic)")
      ->required();
  orbit->add_option("--k", orbit_k, "Orbit step count (may be negative)")->required();
  orbit->add_option("--alpha", orbit_alpha, "Start coefficients q,r,l,m,n")->required();
  orbit->add_option("--method", orbit_method, "closed, matrix, or both");
  orbit->callback([&] {
    command_hint = "orbit";
    outcome = detail::do_orbit(orbit_element, orbit_k, orbit_alpha, orbit_method);
    ran = true;
  });

  // strings check
  auto* strings_cmd = app.add_subcommand("strings", "Root-string closure table");
  strings_cmd->fallthrough();
  strings_cmd->require_subcommand(1);
  auto* strings_check = strings_cmd->add_subcommand("check", "Verify the reflection closure table");
  strings_check->fallthrough();
  std::int64_t str_kmin = -20;
  std::int64_t str_kmax = 21;
  strings_check->add_option("--kmin", str_kmin, "Smallest string argument");
  strings_check->add_option("--kmax", str_kmax, "Largest string argument");
  strings_check->callback([&] {
    command_hint = "strings check";
    outcome = detail::do_strings_check(str_kmin, str_kmax);
    ran = true;
  });

  // coverage
  auto* coverage = app.add_subcommand("coverage", "String coverage of affine real roots");
  coverage->fallthrough();
  std::int64_t cov_bound = 8;
  coverage->add_option("--bound", cov_bound, "Coefficient box half-width")->required();
  coverage->callback([&] {
    command_hint = "coverage";
    outcome = detail::do_coverage(cov_bound);
    ran = true;
  });

  // potential eval | invariance | limit
  auto* potential = app.add_subcommand("potential", "Extended Calogero potential");
  potential->fallthrough();
  potential->require_subcommand(1);

  auto* pot_eval = potential->add_subcommand("eval", "Evaluate the potential");
  pot_eval->fallthrough();
  std::string pe_q;
  double pe_g = 1.0;
  std::int64_t pe_trunc = 1000;
  std::string pe_mode = "all";
  bool pe_both = false;
  std::int64_t pe_bound = 24;
  pot_eval->add_option("--q", pe_q, "Coordinates q1,...,q6")->required();
  pot_eval->add_option("--g", pe_g, "Coupling");
  pot_eval->add_option("--trunc", pe_trunc, "Series truncation |n| <= N for mode direct");
  pot_eval->add_option("--mode", pe_mode, "direct, closed, enumerated, or all");
  pot_eval->add_flag("--both-signs", pe_both, "Sum over +-root pairs");
  pot_eval->add_option("--bound", pe_bound, "Enumeration box for mode enumerated");
  pot_eval->callback([&] {
    command_hint = "potential eval";
    outcome = detail::do_potential_eval(pe_q, pe_g, pe_trunc, pe_mode, pe_both, pe_bound);
    ran = true;
  });

  auto* pot_inv = potential->add_subcommand("invariance", "Residuals under the Weyl action");
  pot_inv->fallthrough();
  std::string pi_q, pi_p;
  double pi_g = 1.0;
  bool pi_both = false;
  pot_inv->add_option("--q", pi_q, "Coordinates q1,...,q6")->required();
  pot_inv->add_option("--p", pi_p, "Momenta p1,...,p6")->required();
  pot_inv->add_option("--g", pi_g, "Coupling");
  pot_inv->add_flag("--both-signs", pi_both, "Sum over +-root pairs");
  pot_inv->callback([&] {
    command_hint = "potential invariance";
    outcome = detail::do_potential_invariance(pi_q, pi_p, pi_g, pi_both);
    ran = true;
  });

  auto* pot_limit = potential->add_subcommand("limit", "Decoupling limit sweep over q6");
  pot_limit->fallthrough();
  std::string pl_q, pl_q6;
  double pl_g = 1.0;
  bool pl_both = false;
  pot_limit->add_option("--q", pl_q, "Coordinates q1,...,q6 (q6 slot is overridden)")->required();
  pot_limit->add_option("--q6", pl_q6, "Comma-separated q6 sweep values")->required();
  pot_limit->add_option("--g", pl_g, "Coupling");
  pot_limit->add_flag("--both-signs", pl_both, "Sum over +-root pairs");
  pot_limit->callback([&] {
    command_hint = "potential limit";
    outcome = detail::do_potential_limit(pl_q, pl_q6, pl_g, pl_both, format == "csv");
    ran = true;
  });

  // charpoly
  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of a Coxeter element");
  charpoly->fallthrough();
  std::string cp_element = "sigma";
  charpoly->add_option("--element", cp_element, "sigma (affine) or sigmahat (hyperbolic)")
      ->required();
  charpoly->callback([&] {
    command_hint = "charpoly";
    outcome = detail::do_charpoly(cp_element);
    ran = true;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    out << cli_error_envelope(command_hint, std::string("usage: ") + e.what());
    return kExitUsage;
  } catch (const singularity_error& e) {
    out << cli_error_envelope(command_hint, e.what());
    return kExitRuntime;
  } catch (const residual_error& e) {
    out << cli_error_envelope(command_hint, e.what());
    return kExitRuntime;
  } catch (const std::invalid_argument& e) {
    out << cli_error_envelope(command_hint, e.what());
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    out << cli_error_envelope(command_hint, e.what());
    return kExitUsage;
  } catch (const std::domain_error& e) {
    out << cli_error_envelope(command_hint, e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    out << cli_error_envelope(command_hint, e.what());
    return kExitRuntime;
  }

  if (!ran) {
    out << cli_error_envelope(command_hint, "no command executed");
    return kExitUsage;
  }
  if (format == "csv" && !outcome.has_csv) {
    out << cli_error_envelope(outcome.command,
                              "csv output is only available for: roots enum, potential limit");
    return kExitUsage;
  }
  if (format == "csv") {
    out << outcome.csv;
  } else {
    out << cli_envelope(outcome.command, std::move(outcome.payload));
  }
  return kExitOk;
}

}  // namespace rootcal
