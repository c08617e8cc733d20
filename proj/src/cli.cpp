#include "moment/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "moment/bounds.hpp"
#include "moment/extension.hpp"
#include "moment/syzygy.hpp"
#include "moment/verify.hpp"
#include "moment/vinogradov.hpp"

namespace moment {

namespace {

using json = nlohmann::ordered_json;

struct Common {
  unsigned threads = 1;
  std::string output;
  std::string format;  // empty: csv for bounds, json otherwise
  std::uint64_t seed = 7;
};

struct SyzygyArgs {
  std::string field = "padic";
  std::uint64_t p = 5;
  unsigned n = 2;
  unsigned s = 1;
  std::uint64_t R = 8;
  std::vector<std::uint64_t> tuple;
  bool all = false;
  std::string epsilon;
  std::string grid_step;
  std::uint64_t max_insertions = EnumerationOptions{}.max_insertions;
};

struct VinoArgs {
  unsigned n = 2;
  std::uint64_t N = 10;
  std::string method = "hashjoin";
  std::vector<std::uint64_t> asymptotic;
  bool timing = false;
};

struct BoundsArgs {
  std::string table = "theorem1";
  std::string field = "real";
  std::uint64_t p = 5;
  unsigned n_min = 2;
  unsigned n_max = 6;
};

struct RatioArgs {
  std::string field = "padic";
  std::uint64_t p = 5;
  unsigned n = 2;
  unsigned s = 1;
  unsigned precision = 0;
  std::uint64_t R = 4;
  std::uint64_t pieces = 0;
  unsigned functions = 100;
  std::vector<std::uint64_t> comb;
  std::string grid_step = "1/4";
  bool lemma = true;
};

struct VerifyArgs {
  std::string suite = "all";
};

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string fixed(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

FieldSpec parse_field(const std::string& name, std::uint64_t p) {
  if (name == "padic") return FieldSpec::padic(p);
  if (name == "real") return FieldSpec::real();
  if (name == "complex") return FieldSpec::complex();
  throw InputError("unknown field '" + name + "' (padic, real, complex)");
}

json tuple_json(const std::vector<std::uint64_t>& idx) {
  json a = json::array();
  for (auto i : idx) a.push_back(i);
  return a;
}

// A document is either JSON or a CSV table.
struct Document {
  json body;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool tabular = false;
};

std::string render(const Document& doc, const std::string& format) {
  if (format == "json") {
    if (!doc.tabular) return doc.body.dump(2) + "\n";
    json out = doc.body;
    json rows = json::array();
    for (const auto& r : doc.rows) {
      json row = json::object();
      for (std::size_t c = 0; c < doc.columns.size(); ++c) row[doc.columns[c]] = r[c];
      rows.push_back(row);
    }
    out["rows"] = rows;
    return out.dump(2) + "\n";
  }
  if (format == "csv") {
    if (!doc.tabular) throw InputError("this command has no CSV form; use --format json");
    std::ostringstream os;
    for (std::size_t c = 0; c < doc.columns.size(); ++c) os << (c ? "," : "") << doc.columns[c];
    os << "\n";
    for (const auto& r : doc.rows) {
      for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << r[c];
      os << "\n";
    }
    return os.str();
  }
  throw InputError("unknown format '" + format + "' (json, csv)");
}

json header(const std::string& command) {
  json j;
  j["schema"] = "1";
  j["command"] = command;
  return j;
}

// ---------------------------------------------------------------------------

Document cmd_syzygy(const SyzygyArgs& a, const Common& common) {
  EnumerationOptions opts;
  opts.threads = common.threads;
  opts.max_insertions = a.max_insertions;
  const Curve curve = Curve::moment(a.n);
  const FieldSpec field = parse_field(a.field, a.p);
  if (field.kind == FieldKind::Complex) throw InputError("syzygy enumeration supports padic and real fields");
  json j = header("syzygy");
  j["field"] = field.name();
  if (field.kind == FieldKind::PAdic) j["p"] = a.p;
  j["n"] = a.n;
  const BigInt bound = theorem1_power(field, a.n);

  if (field.kind == FieldKind::PAdic) {
    const Scale scale = Scale::padic(field, a.s);
    j["s"] = a.s;
    j["epsilon"] = to_string(pow(scale.delta, a.n));
    if (a.all) {
      const auto survey = survey_scale_nonarch(field, a.n, a.s, opts);
      j["base_multisets"] = survey.base_multisets;
      j["max_cardinality"] = survey.max_cardinality;
      j["argmax"] = tuple_json(survey.argmax);
      j["oracle_agreements"] = survey.oracle_agreements;
      j["strong_diagonal"] = survey.oracle_agreements == survey.base_multisets;
      j["first_disagreement"] = survey.first_disagreement ? tuple_json(*survey.first_disagreement) : json(nullptr);
      j["bound"] = to_string(bound);
      j["within_bound"] = BigInt(survey.max_cardinality) <= bound;
      return Document{j, {}, {}, false};
    }
    if (a.tuple.size() != a.n) throw InputError("--tuple needs exactly n cell indices");
    const auto I = CellTuple::of(field, scale, a.tuple);
    const auto r = syzygy_set_nonarch(curve, I, opts);
    j["base"] = tuple_json(a.tuple);
    json members = json::array();
    for (const auto& m : r.members) members.push_back(tuple_json(m.indices()));
    j["members"] = members;
    j["cardinality"] = r.cardinality;
    j["method"] = to_string(r.method);
    j["bound"] = to_string(bound);
    j["within_bound"] = BigInt(r.cardinality) <= bound;
    return Document{j, {}, {}, false};
  }

  const Scale scale = Scale::archimedean(a.R);
  const Rational eps = a.epsilon.empty() ? pow(scale.delta, a.n) : parse_rational(a.epsilon);
  const Rational step = a.grid_step.empty() ? scale.delta / 8 : parse_rational(a.grid_step);
  j["R"] = a.R;
  j["delta"] = to_string(scale.delta);
  j["epsilon"] = to_string(eps);
  j["grid_step"] = to_string(step);
  const BigInt bezout = bezout_syzygy_bound(curve, field);
  if (a.all) {
    const auto best = max_cardinality_real(curve, a.R, step, opts);
    j["max_cardinality"] = best;
    j["bound"] = to_string(bound);
    j["bezout_bound"] = to_string(bezout);
    j["within_bound"] = BigInt(best) <= bezout;
    return Document{j, {}, {}, false};
  }
  if (a.tuple.size() != a.n) throw InputError("--tuple needs exactly n cell indices");
  const auto I = CellTuple::of(field, scale, a.tuple);
  const auto r = syzygy_set_real(curve, I, eps, step, opts);
  j["base"] = tuple_json(a.tuple);
  json members = json::array();
  json witnesses = json::array();
  for (std::size_t k = 0; k < r.members.size(); ++k) {
    members.push_back(tuple_json(r.members[k].indices()));
    json w;
    w["s"] = json::array();
    w["t"] = json::array();
    for (const auto& x : r.witnesses[k].s) w["s"].push_back(to_string(x));
    for (const auto& x : r.witnesses[k].t) w["t"].push_back(to_string(x));
    witnesses.push_back(w);
  }
  j["members"] = members;
  j["witnesses"] = witnesses;
  j["cardinality"] = r.cardinality;
  j["method"] = to_string(r.method);
  j["bound"] = to_string(bound);
  j["bezout_bound"] = to_string(bezout);
  j["within_bound"] = BigInt(r.cardinality) <= bezout;
  return Document{j, {}, {}, false};
}

// ---------------------------------------------------------------------------

CountMethod parse_method(const std::string& m) {
  if (m == "hashjoin") return CountMethod::HashJoin;
  if (m == "bruteforce") return CountMethod::BruteForce;
  if (m == "formula") return CountMethod::PermutationFormula;
  throw InputError("unknown method '" + m + "' (hashjoin, bruteforce, formula)");
}

Document cmd_vino(const VinoArgs& a, const Common& common) {
  CountOptions opts;
  opts.threads = common.threads;
  if (a.n < 2) throw InputError("n must be at least 2");
  const Curve curve = Curve::moment(a.n);
  Document doc;
  doc.body = header("vino");
  doc.body["n"] = a.n;
  if (!a.asymptotic.empty()) {
    doc.tabular = true;
    doc.columns = {"N", "count", "main_term", "residual", "residual_over_N^(n-1)"};
    for (const auto& row : asymptotic_report(curve, a.asymptotic, opts)) {
      doc.rows.push_back({std::to_string(row.N), to_string(row.count), to_string(row.main_term), to_string(row.residual),
                          fixed(row.scaled_residual)});
    }
    return doc;
  }
  const auto r = count_solutions(curve, a.N, parse_method(a.method), opts);
  const BigInt perm = permutation_count(a.n, a.N);
  doc.body["N"] = a.N;
  doc.body["count"] = to_string(r.count);
  doc.body["method"] = to_string(r.method);
  doc.body["permutation_count"] = to_string(perm);
  doc.body["diagonal_count"] = to_string(diagonal_count(a.n, a.N));
  doc.body["main_term"] = to_string(factorial(a.n) * pow(BigInt(a.N), a.n));
  doc.body["matches_permutation_count"] = r.count == perm;
  if (a.timing) doc.body["elapsed_seconds"] = r.elapsed;
  return doc;
}

// ---------------------------------------------------------------------------

Document cmd_bounds(const BoundsArgs& a) {
  if (a.n_min < 2 || a.n_max < a.n_min) throw InputError("need 2 <= n-min <= n-max");
  if (a.n_max > 64) throw InputError("n-max is limited to 64");
  const FieldSpec field = parse_field(a.field, a.p);
  Document doc;
  doc.tabular = true;
  doc.body = header("bounds");
  doc.body["table"] = a.table;
  doc.body["field"] = field.name();
  const auto need_archimedean = [&] {
    if (field.kind == FieldKind::PAdic) throw InputError("table '" + a.table + "' is defined over real or complex");
  };
  if (a.table == "theorem1") {
    doc.columns = {"field", "n", "C", "constant", "constant^(2n)"};
  } else if (a.table == "field") {
    doc.columns = {"field", "n", "C"};
  } else if (a.table == "bezout") {
    need_archimedean();
    doc.columns = {"field", "n", "lipschitz", "constant", "syzygy_bound"};
  } else if (a.table == "fewnomial") {
    doc.columns = {"n", "M", "lipschitz", "constant"};
  } else if (a.table == "refined") {
    doc.columns = {"n", "n!", "n^n", "max_falling_power", "refined", "stirling_variant"};
  } else if (a.table == "wronskian") {
    doc.columns = {"n", "wronskian", "nondegenerate"};
  } else if (a.table == "lipschitz") {
    doc.columns = {"n", "value", "exact"};
  } else if (a.table == "factorial") {
    need_archimedean();
    doc.columns = {"field", "n", "5^(eta n) n!"};
  } else {
    throw InputError("unknown table '" + a.table +
                     "' (theorem1, field, bezout, fewnomial, refined, wronskian, lipschitz, factorial)");
  }
  for (unsigned n = a.n_min; n <= a.n_max; ++n) {
    const Curve curve = Curve::moment(n);
    if (a.table == "theorem1") {
      doc.rows.push_back({field.name(), std::to_string(n), to_string(field_constant(field, n)),
                          fixed(theorem1_constant(field, n)), to_string(theorem1_power(field, n))});
    } else if (a.table == "field") {
      doc.rows.push_back({field.name(), std::to_string(n), to_string(field_constant(field, n))});
    } else if (a.table == "bezout") {
      doc.rows.push_back({field.name(), std::to_string(n), to_string(lipschitz_norm(curve, field).value),
                          fixed(bezout_constant(curve, field)), to_string(bezout_syzygy_bound(curve, field))});
    } else if (a.table == "fewnomial") {
      doc.rows.push_back({std::to_string(n), std::to_string(curve.monomial_count()),
                          to_string(lipschitz_norm(curve).value), fixed(fewnomial_constant(curve))});
    } else if (a.table == "refined") {
      doc.rows.push_back({std::to_string(n), to_string(factorial(n)), to_string(pow(BigInt(n), n)),
                          to_string(max_falling_power_bound(n)), to_string(refined_diagonal_bound(n)),
                          to_string(stirling_variant(n))});
    } else if (a.table == "wronskian") {
      std::ostringstream w;
      w << wronskian(curve);
      doc.rows.push_back({std::to_string(n), w.str(), nondegenerate(curve) ? "true" : "false"});
    } else if (a.table == "lipschitz") {
      const auto l = lipschitz_norm(curve, field.kind == FieldKind::PAdic ? FieldSpec::real() : field);
      doc.rows.push_back({std::to_string(n), to_string(l.value), l.exact ? "true" : "false"});
    } else {
      doc.rows.push_back({field.name(), std::to_string(n), to_string(archimedean_factorial_bound(field, n))});
    }
  }
  return doc;
}

// ---------------------------------------------------------------------------

Document cmd_ratio(const RatioArgs& a, const Common& common) {
  QuadratureSpec quad;
  quad.threads = common.threads;
  quad.grid_step = parse_rational(a.grid_step);
  if (a.n < 2) throw InputError("n must be at least 2");
  json j = header("ratio");
  j["n"] = a.n;
  if (!a.comb.empty()) {
    j["mode"] = "comb";
    j["field"] = "R";
    j["grid_step"] = to_string(quad.grid_step);
    const double limit = std::pow(to_double(factorial(a.n)), 1.0 / (2 * a.n));
    j["limit"] = limit;
    json rows = json::array();
    for (auto N : a.comb) {
      const auto r = comb_ratio(a.n, N, quad);
      json row;
      row["N"] = N;
      row["ratio"] = r.ratio;
      row["lhs"] = r.lhs;
      row["rhs"] = r.rhs;
      row["relative_gap"] = std::abs(r.ratio - limit) / limit;
      rows.push_back(row);
    }
    j["rows"] = rows;
    return Document{j, {}, {}, false};
  }

  const FieldSpec field = parse_field(a.field, a.p);
  if (field.kind == FieldKind::Complex) throw InputError("norm experiments run over padic and real fields");
  std::mt19937_64 rng(common.seed);
  j["mode"] = "random";
  j["field"] = field.name();
  j["seed"] = std::to_string(common.seed);
  j["functions"] = a.functions;
  EnumerationOptions eopts;
  eopts.threads = common.threads;
  std::vector<double> ratios;
  std::optional<std::size_t> syzygy_max;
  if (field.kind == FieldKind::PAdic) {
    const Scale scale = Scale::padic(field, a.s);
    const unsigned precision = a.precision ? a.precision : a.n * a.s;
    j["p"] = a.p;
    j["s"] = a.s;
    j["precision"] = precision;
    for (unsigned i = 0; i < a.functions; ++i) {
      ratios.push_back(weighted_norms(a.n, random_padic_function(field, precision, rng), scale,
                                      WeightSpec::for_field(field), quad)
                           .ratio);
    }
    if (a.lemma) syzygy_max = survey_scale_nonarch(field, a.n, a.s, eopts).max_cardinality;
  } else {
    const Scale scale = Scale::archimedean(a.R);
    const std::uint64_t pieces = a.pieces ? a.pieces : 2 * a.R;
    j["R"] = a.R;
    j["delta"] = to_string(scale.delta);
    j["pieces"] = pieces;
    j["grid_step"] = to_string(quad.grid_step);
    for (unsigned i = 0; i < a.functions; ++i) {
      ratios.push_back(
          weighted_norms(a.n, random_real_function(pieces, rng), scale, WeightSpec::for_field(field), quad).ratio);
    }
    // the sampled set is a valid lemma input when every atom lies on the sampling grid
    const Rational step = scale.delta / 8;
    if (a.lemma && denominator(Rational(1, pieces) / step) == 1) {
      syzygy_max = max_cardinality_real(Curve::moment(a.n), a.R, step, eopts);
    }
  }
  const double worst = ratios.empty() ? 0 : *std::max_element(ratios.begin(), ratios.end());
  const double bound = theorem1_constant(field, a.n);
  j["ratios"] = ratios;
  j["max_ratio"] = worst;
  j["theorem1_bound"] = bound;
  j["within_theorem1"] = worst <= bound * (1 + 1e-9);
  if (syzygy_max) {
    const double lemma = std::pow(static_cast<double>(*syzygy_max), 1.0 / (2 * a.n));
    j["syzygy_max"] = *syzygy_max;
    j["lemma_bound"] = lemma;
    j["within_lemma"] = worst <= lemma * (1 + 1e-9);
  }
  return Document{j, {}, {}, false};
}

// ---------------------------------------------------------------------------

Document cmd_verify(const VerifyArgs& a, const Common& common) {
  const auto summary = run_verify(a.suite, common.seed, common.threads);
  json j = header("verify");
  j["suite"] = summary.suite;
  j["seed"] = std::to_string(summary.seed);
  j["passed"] = summary.passed();
  json checks = json::array();
  for (const auto& c : summary.checks) {
    json e;
    e["module"] = c.module;
    e["name"] = c.name;
    e["passed"] = c.passed;
    if (c.informational) e["informational"] = true;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  j["checks"] = checks;
  return Document{j, {}, {}, false};
}

std::vector<std::uint64_t> split_indices(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("expected a comma-separated list of nonnegative integers, got '" + text + "'");
    }
    out.push_back(std::stoull(item));
  }
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Syzygy enumeration, Vinogradov counts, square-function norms and constants for the moment curve",
               "moment"};
  app.set_config("--config", "", "TOML file of option values, one [section] per subcommand; flags win");
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", common.threads, "worker thread cap")->check(CLI::Range(1u, 1024u));
    sub->add_option("--output", common.output, "write the document to this path instead of stdout");
    sub->add_option("--format", common.format, "json or csv (default csv for bounds, json otherwise)");
    sub->add_option("--seed", common.seed, "seed for random test functions");
  };

  SyzygyArgs sa;
  std::string tuple_text;
  auto* syz = app.add_subcommand("syzygy", "enumerate S(delta, I; delta^n)");
  syz->add_option("--field", sa.field, "padic or real");
  syz->add_option("--p", sa.p, "prime for Q_p");
  syz->add_option("--n", sa.n, "curve dimension")->check(CLI::Range(2u, 12u));
  syz->add_option("--s", sa.s, "scale exponent, delta = p^-s");
  syz->add_option("--R", sa.R, "cells per axis over R, delta = 1/R")->check(CLI::PositiveNumber);
  syz->add_option("--tuple", tuple_text, "base tuple I as comma-separated cell indices");
  syz->add_flag("--all", sa.all, "survey every base tuple at this scale");
  syz->add_option("--epsilon", sa.epsilon, "threshold over R (default delta^n)");
  syz->add_option("--grid-step", sa.grid_step, "sampling step over R (default delta/8)");
  syz->add_option("--max-insertions", sa.max_insertions, "hash budget of the exact Q_p path");
  add_common(syz);

  VinoArgs va;
  std::string asymptotic_text;
  auto* vino = app.add_subcommand("vino", "count Vinogradov solutions J(N)");
  vino->add_option("--n", va.n, "number of equations")->check(CLI::Range(2u, 8u));
  vino->add_option("--N", va.N, "range [1, N]")->check(CLI::PositiveNumber);
  vino->add_option("--method", va.method, "hashjoin, bruteforce or formula");
  vino->add_option("--asymptotic", asymptotic_text, "comma-separated N values for the n! N^n comparison");
  vino->add_flag("--timing", va.timing, "include elapsed seconds (output is then not reproducible)");
  add_common(vino);

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "tabulate constants");
  bounds->add_option("--table", ba.table,
                     "theorem1, field, bezout, fewnomial, refined, wronskian, lipschitz or factorial");
  bounds->add_option("--field", ba.field, "padic, real or complex");
  bounds->add_option("--p", ba.p, "prime for Q_p");
  bounds->add_option("--n-min", ba.n_min, "first n");
  bounds->add_option("--n-max", ba.n_max, "last n");
  add_common(bounds);

  RatioArgs ra;
  std::string comb_text;
  auto* ratio = app.add_subcommand("ratio", "measure ||E f|| / ||S f|| in weighted L^2n");
  ratio->add_option("--field", ra.field, "padic or real");
  ratio->add_option("--p", ra.p, "prime for Q_p");
  ratio->add_option("--n", ra.n, "curve dimension")->check(CLI::Range(2u, 6u));
  ratio->add_option("--s", ra.s, "scale exponent over Q_p");
  ratio->add_option("--precision", ra.precision, "precision of random Q_p functions (default ns)");
  ratio->add_option("--R", ra.R, "cells per axis over R")->check(CLI::PositiveNumber);
  ratio->add_option("--pieces", ra.pieces, "pieces of random R functions (default 2R)");
  ratio->add_option("--functions", ra.functions, "number of random functions");
  ratio->add_option("--comb", comb_text, "comma-separated N values for the comb sum of N atoms");
  ratio->add_option("--grid-step", ra.grid_step, "midpoint step 1/H over R");
  ratio->add_flag("!--no-lemma", ra.lemma, "skip the syzygy-count bound");
  add_common(ratio);

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--suite", vf.suite, "all, local_field, symmetric, syzygy, vinogradov, extension or bounds");
  add_common(verify);

  // --config is accepted anywhere on the line; CLI11 reads it only before the subcommand
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      std::rotate(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + 2));
    } else if (args[i].rfind("--config=", 0) == 0) {
      std::rotate(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + 1));
    }
  }
  std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    Document doc;
    if (syz->parsed()) {
      if (!tuple_text.empty()) sa.tuple = split_indices(tuple_text);
      doc = cmd_syzygy(sa, common);
    } else if (vino->parsed()) {
      if (!asymptotic_text.empty()) va.asymptotic = split_indices(asymptotic_text);
      doc = cmd_vino(va, common);
    } else if (bounds->parsed()) {
      doc = cmd_bounds(ba);
    } else if (ratio->parsed()) {
      if (!comb_text.empty()) ra.comb = split_indices(comb_text);
      doc = cmd_ratio(ra, common);
    } else {
      doc = cmd_verify(vf, common);
    }
    if (common.format.empty()) common.format = bounds->parsed() ? "csv" : "json";
    const std::string text = render(doc, common.format);
    if (common.output.empty()) {
      out << text;
    } else {
      std::ofstream file(common.output, std::ios::binary);
      if (!file) throw InputError("cannot open output file '" + common.output + "'");
      file << text;
    }
    if (verify->parsed() && !doc.body.value("passed", false)) {
      err << "invariant failure: see the checks with \"passed\": false\n";
      return kInvariantFailure;
    }
    return kSuccess;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    err << "invariant failure: " << e.what() << "\n";
    return kInvariantFailure;
  }
}

}  // namespace moment
