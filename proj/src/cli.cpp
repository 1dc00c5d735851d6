#include "wrlab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include "wrlab/deform.hpp"
#include "wrlab/serialize.hpp"
#include "wrlab/tame.hpp"
#include "wrlab/verify.hpp"

namespace wrlab {

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  Json report;
  std::optional<Table> table;
  // Replaces the generic rendering for --output pretty.
  std::optional<std::string> pretty;
  int exit_code = kExitOk;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
  out << "\n";
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "";
  return j.dump();
}

void flatten(const Json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else {
    out.emplace_back(prefix, j.is_array() ? j.dump() : scalar_text(j));
  }
}

// Human display only: drops a zero radical part.
std::string plain(std::string s) {
  static const std::regex zero_radical(R"(\+0\*sqrt\(\d+\))");
  return std::regex_replace(s, zero_radical, "");
}

bool is_matrix_json(const Json& v) {
  return v.is_object() && v.contains("entries") && v.contains("rows") && v.contains("cols");
}

void print_matrix(const Json& m, std::ostream& out, const std::string& pad) {
  const auto cols = m.at("cols").get<std::size_t>();
  const std::string k = m.at("radicand").get<std::string>();
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (const auto& e : m.at("entries")) {
    const std::string x = e.at(0).get<std::string>(), y = e.at(1).get<std::string>();
    std::string c = y == "0" ? x : (x == "0" ? "" : x + "+") + y + "*sqrt(" + k + ")";
    width = std::max(width, c.size());
    cells.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i % cols == 0) out << pad << "  ";
    out << std::setw(static_cast<int>(width) + 1) << cells[i];
    if (i % cols + 1 == cols) out << "\n";
  }
}

void print_pretty(const Json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [k, v] : j.items()) {
    if (is_matrix_json(v)) {
      out << pad << k << ":\n";
      print_matrix(v, out, pad);
      continue;
    }
    const bool short_array = v.is_array() && v.dump().size() <= 72;
    if (v.is_object() || (v.is_array() && !short_array)) {
      out << pad << k << ":\n";
      if (v.is_object()) {
        print_pretty(v, out, indent + 2);
      } else {
        for (const auto& e : v)
          out << pad << "  - " << plain(e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
      }
    } else {
      out << pad << k << ": " << plain(short_array ? v.dump() : scalar_text(v)) << "\n";
    }
  }
}

void emit(const Output& o, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << o.report.dump(2) << "\n";
  } else if (format == "csv") {
    if (o.table) {
      write_csv_row(out, o.table->header);
      for (const auto& r : o.table->rows) write_csv_row(out, r);
    } else {
      std::vector<std::pair<std::string, std::string>> flat;
      flatten(o.report, "", flat);
      std::vector<std::string> keys, values;
      for (auto& [k, v] : flat) {
        keys.push_back(k);
        values.push_back(v);
      }
      write_csv_row(out, keys);
      write_csv_row(out, values);
    }
  } else if (o.pretty) {
    out << *o.pretty;
  } else {
    print_pretty(o.report, out, 0);
  }
}

Rational rational_arg(const std::string& text, const std::string& name) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw DomainError(name + " must be an integer or p/q, got '" + text + "'");
  }
}

std::string sig(const BigFloat& v, int digits = 6) { return format_significant(v, digits); }

template <class T>
std::string float_text(const T& v, int digits = 40) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

Json root_json(const RootValue& v) {
  return {{"square", v.square.to_string()},
          {"exact", v.exact ? Json(v.exact->to_string()) : Json(nullptr)},
          {"float", sig(v.approx, 20)},
          {"float_fallback", v.float_fallback()}};
}

TameParams tame_args(int n, const std::string& a_text) {
  if (n < 2) throw DomainError("--n must be at least 2");
  const Rational a = rational_arg(a_text, "--a");
  if (!(a > Rational(1) / n)) throw DomainError("--a must exceed 1/n");
  return TameParams::from_a(n, a);
}

Output cmd_tame(int n, const std::string& a_text, bool with_dual) {
  const TameParams p = tame_args(n, a_text);
  const ExactMatrix g = tame_gram(p);
  Output o;
  o.report = {{"n", n},
              {"a", rational_to_string(p.a)},
              {"h", rational_to_string(p.h)},
              {"gram", matrix_to_json(g)},
              {"det", exact_json(det_exact(g))},
              {"volume", root_json(volume(Lattice::from_gram(g)))}};
  if (with_dual) {
    const TameParams d = tame_dual(p);
    o.report["dual"] = {{"a", rational_to_string(d.a)},
                        {"h", rational_to_string(d.h)},
                        {"gram", matrix_to_json(tame_gram(d))}};
  }
  return o;
}

Output cmd_sublattice(int n, const std::string& a_text, long r, long s, bool classify,
                      bool density, bool with_dual) {
  const TameParams p = tame_args(n, a_text);
  if (r == 0) throw DomainError("--r must be nonzero");
  if (std::labs(r) >= n) throw DomainError("--r must satisfy |r| < n");
  const WrClassification c = classify_wr(p, r, s);
  const bool inside = c.tag != WrTag::OutsideWindow;
  Output o;
  Json& rep = o.report;
  rep = {{"n", n},
         {"a", rational_to_string(p.a)},
         {"h", rational_to_string(p.h)},
         {"r", r},
         {"s", s},
         {"m", r + s * n},
         {"window",
          {rational_to_string(c.lower), rational_to_string(c.middle), rational_to_string(c.upper)}},
         {"ratio_sq", rational_to_string(c.ratio_sq)},
         {"tag", to_string(c.tag)},
         {"lambda1_sq", exact_json(QuadScalar(predicted_min(p, r, s)))},
         {"index", predicted_index(p, r, s).str()}};
  if (inside) {
    const RootValue d = sublattice_center_density(p, r, s);
    rep["delta_sq"] = d.square.to_string();
    rep["delta_float"] = sig(d.approx, 20);
  } else {
    rep["delta_sq"] = nullptr;
    rep["delta_float"] = nullptr;
  }
  const ExactMatrix g = phi_sublattice_gram(p, r, s);
  if (classify) {
    const SvpReport sv = svp_report(g);
    Json check = svp_report_to_json(sv);
    check["minimum_matches"] = sv.lambda1_sq == QuadScalar(predicted_min(p, r, s));
    const QuadScalar scale(predicted_scale(p, r));
    if (c.tag == WrTag::GwrInterior || c.tag == WrTag::ZnPoint)
      check["expected_kissing"] = 2 * n;
    if (c.tag == WrTag::AnBoundary) {
      check["expected_kissing"] = n * (n + 1);
      const auto an = recognize_scaled_An(g);
      check["scaled_An"] = an ? Json(an->to_string()) : Json(nullptr);
    }
    if (c.tag == WrTag::ZnPoint) {
      const auto id = recognize_scaled_identity(g);
      check["scaled_identity"] = id ? Json(id->to_string()) : Json(nullptr);
    }
    if (inside) check["predicted_scale"] = scale.to_string();
    rep["enumeration"] = check;
  }
  if (density) {
    Json dj = {{"lower_bound", rational_to_string(rational_pow(Rational(4), -n))},
               {"upper_bound", rational_to_string(rational_pow(Rational(2), -n) / (n + 1))}};
    if (inside) dj["delta"] = root_json(sublattice_center_density(p, r, s));
    const WindowExtremes w = density_window_extremes(n, p.a);
    dj["f_window"] = {{"lower", rational_to_string(w.f_lower)},
                      {"middle", rational_to_string(w.f_middle)},
                      {"upper", rational_to_string(w.f_upper)}};
    rep["density"] = dj;
  }
  if (with_dual) {
    Json dj = {{"gram", matrix_to_json(dual(Lattice::from_gram(g)).gram())}};
    if (p.h * r == Rational(s) && denominator(p.h * r) == 1)
      dj["scaled_ambient_pairs_to_identity"] = dual_of_sublattice_pairs_to_identity(p, r);
    rep["dual"] = dj;
  }
  return o;
}

bool exact_alpha_syntax(const std::string& text) {
  static const std::regex rational(R"(^\s*[+-]?\d+(\s*/\s*\d+)?\s*$)");
  return std::regex_match(text, rational) || text.find("sqrt") != std::string::npos;
}

Float128 float_arg(const std::string& text) {
  try {
    return Float128(text);
  } catch (const std::exception&) {
    throw DomainError("--alpha must be p/q, x+y*sqrt(k) or a decimal, got '" + text + "'");
  }
}

Output cmd_hex_sweep(int points) {
  const auto rows = hex_sweep(points);
  Output o;
  Table t{{"alpha", "delta"}, {}};
  const BigFloat z2 = hex_center_density(QuadScalar(0)).approx;
  const BigFloat hex = hex_center_density(QuadScalar(Rational(1, 2))).approx;
  Json arr = Json::array();
  for (const auto& r : rows) {
    t.rows.push_back({sig(qs_to_float(QuadScalar(r.alpha), 128), 10), sig(r.delta, 12)});
    arr.push_back({{"alpha", rational_to_string(r.alpha)},
                   {"delta_sq", rational_to_string(r.delta_sq)},
                   {"delta", sig(r.delta, 20)}});
  }
  o.report = {{"family", "hex"},
              {"reference", {{"delta_z2", sig(z2, 20)}, {"delta_hexagonal", sig(hex, 20)}}},
              {"rows", arr}};
  o.table = t;
  return o;
}

Output cmd_deform(const std::string& family_text, int n, const std::string& alpha_text,
                  bool integral, int sweep) {
  const Family f = parse_family(family_text);
  if (f == Family::Dn && n < 3) throw DomainError("--n must be at least 3 for dn");
  if (sweep != 0) {
    if (f != Family::Hex) throw DomainError("--sweep applies to the hex family");
    if (sweep < 2) throw DomainError("--sweep needs at least 2 points");
    return cmd_hex_sweep(sweep);
  }
  if (alpha_text.empty()) throw DomainError("--alpha is required");
  Output o;
  Json& rep = o.report;
  rep["family"] = to_string(f);
  rep["n"] = deform_shape(f, n).n;
  if (exact_alpha_syntax(alpha_text)) {
    const QuadScalar alpha = QuadScalar::parse(alpha_text);
    const DeformParam p = DeformParam::exact(f, n, alpha);
    const ExactMatrix gen = deform_generator(p);
    const ExactMatrix gram = gram_of(gen);
    const RootValue delta = deform_center_density(p);
    rep["alpha"] = {{"input", alpha_text}, {"path", "exact"}, {"value", exact_json(alpha)}};
    rep["alphabar"] = exact_json(p.alphabar);
    rep["generator"] = matrix_to_json(gen);
    rep["volume"] = exact_json(deform_volume(p));
    rep["delta"] = root_json(delta);
    rep["svp"] = svp_report_to_json(svp_report(gram));
    if (integral) {
      const QuadScalar bar = p.alphabar;
      if (f == Family::Hex || !alpha.is_rational() || !bar.is_rational())
        throw DomainError("--integral needs dn or e8 with alpha = p/q and 2q^2 - p^2 a square");
      const Rational a = alpha.rational_part();
      const long q = denominator(a).convert_to<long>();
      const Rational dq = bar.rational_part() * q;
      const PellTriple t{numerator(a).convert_to<long>(), q,
                         numerator(dq).convert_to<long>()};
      if (!is_pell_triple(t))
        throw DomainError("--integral needs a coprime Pell triple with q < p, got " +
                          alpha_text);
      const Lattice l = integral_scaled(f, t, p.n);
      const SvpReport sr = svp_report(l.gram());
      const Rational d2 = rational_pow(sr.lambda1_sq.rational_part(), p.n) /
                          (rational_pow(Rational(4), p.n) * det_exact(l.gram()).rational_part());
      rep["integral"] = {{"scale", f == Family::E8 ? 2 * q : q},
                         {"triple", {t.p, t.q, t.d}},
                         {"generator", matrix_to_json(l.generator())},
                         {"lambda1_sq", sr.lambda1_sq.to_string()},
                         {"delta", root_json(root_of(QuadScalar(d2)))}};
    }
    return o;
  }
  if (integral) throw DomainError("--integral needs an exact alpha p/q");
  const Float128 alpha = float_arg(alpha_text);
  const FloatDeform<Float128> d = make_float_deform(f, n, alpha);
  const Matrix<Float128> gen = float_generator(d);
  Json gj = Json::array();
  for (Eigen::Index i = 0; i < gen.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < gen.cols(); ++j) row.push_back(float_text(gen(i, j)));
    gj.push_back(row);
  }
  const FloatSvpReport sr = deform_svp_float(f, n, alpha);
  Json minimal = Json::array();
  for (const Coeffs& c : sr.minimal_coeffs) minimal.push_back(c);
  rep["alpha"] = {{"input", alpha_text}, {"path", "float"}, {"value", float_text(alpha)}};
  rep["alphabar"] = float_text(d.alphabar);
  rep["generator"] = gj;
  rep["volume"] = float_text(float_volume(d));
  rep["delta"] = {{"float", float_text(float_center_density(d))}};
  rep["svp"] = {{"lambda1_sq", float_text(sr.lambda1_sq, 60)},
                {"kissing", sr.kissing},
                {"is_wr", sr.is_wr},
                {"is_gwr", sr.is_gwr},
                {"minimal_vectors", minimal}};
  return o;
}

Output cmd_pell(long qmax, const std::string& family_text, int n, bool table) {
  if (qmax < 1) throw DomainError("--qmax must be positive");
  const auto triples = pell_search(qmax);
  Output o;
  if (!table) {
    Table t{{"p", "q", "d"}, {}};
    Json arr = Json::array();
    for (const auto& tr : triples) {
      t.rows.push_back({std::to_string(tr.p), std::to_string(tr.q), std::to_string(tr.d)});
      arr.push_back({tr.p, tr.q, tr.d});
    }
    o.report = {{"q_max", qmax}, {"count", triples.size()}, {"triples", arr}};
    o.table = t;
    return o;
  }
  const Family f = parse_family(family_text);
  if (f == Family::Hex) throw DomainError("--family must be dn or e8 for --table");
  if (f == Family::Dn && n < 3) throw DomainError("--n must be at least 3 for dn");
  const int dim = f == Family::E8 ? 8 : n;
  const auto rows = table_rows(f, triples, dim);
  Table t{{"p", "q", "d", "alpha", "delta", "lambda1sq_normalized"}, {}};
  Json arr = Json::array();
  for (const auto& r : rows) {
    const std::string alpha = sig(qs_to_float(QuadScalar(r.alpha), 128));
    t.rows.push_back({std::to_string(r.triple.p), std::to_string(r.triple.q),
                      std::to_string(r.triple.d), alpha, sig(r.delta),
                      sig(r.lambda1_sq_normalized)});
    arr.push_back({{"p", r.triple.p},
                   {"q", r.triple.q},
                   {"d", r.triple.d},
                   {"alpha", {{"exact", rational_to_string(r.alpha)}, {"float", alpha}}},
                   {"delta", {{"square", rational_to_string(r.delta_sq)}, {"float", sig(r.delta, 20)}}},
                   {"lambda1sq_normalized", sig(r.lambda1_sq_normalized, 20)}});
  }
  o.report = {{"q_max", qmax}, {"family", to_string(f)}, {"n", dim}, {"rows", arr}};
  o.table = t;
  return o;
}

Output cmd_svp(const std::string& path, const std::string& bound) {
  const Lattice l = Lattice::from_gram(read_matrix_file(path));
  Output o;
  o.report = svp_report_to_json(svp_report(l.gram()));
  o.report["dim"] = l.dim();
  if (!bound.empty()) {
    const QuadScalar b = QuadScalar::parse(bound);
    if (b.sign() <= 0) throw DomainError("--bound must be positive");
    Json arr = Json::array();
    for (const Coeffs& c : enumerate_below(l.gram(), b)) arr.push_back(c);
    o.report["bound"] = b.to_string();
    o.report["vectors_below_bound"] = arr;
  }
  return o;
}

Output cmd_theta(const std::string& path, const std::vector<std::string>& qs,
                 const std::vector<std::string>& sigmas, const std::string& radius_text) {
  if (qs.empty() == sigmas.empty()) throw DomainError("give exactly one of --q and --sigma");
  const QuadScalar radius = QuadScalar::parse(radius_text);
  if (radius.sign() <= 0) throw DomainError("--radius must be positive");
  const ExactMatrix g = read_matrix_file(path);
  const Lattice l = Lattice::from_gram(g);
  const bool by_q = !qs.empty();
  Table t{{by_q ? "q" : "sigma", "value", "tail_bound"}, {}};
  Json arr = Json::array();
  for (const std::string& text : by_q ? qs : sigmas) {
    long double v = 0;
    try {
      v = std::stold(text);
    } catch (const std::exception&) {
      throw DomainError("not a number: '" + text + "'");
    }
    long double value = 0, tail = 0;
    std::size_t count = 0;
    if (by_q) {
      if (!(v > 0 && v < 1)) throw DomainError("--q must lie in (0, 1)");
      const ThetaResult r = theta_truncated(l.gram(), v, radius);
      value = r.value;
      tail = r.tail_bound;
      count = r.vectors;
    } else {
      if (!(v > 0)) throw DomainError("--sigma must be positive");
      const FlatnessResult r = flatness_factor(l, v, radius);
      value = r.epsilon;
      tail = r.tail_bound;
      count = r.vectors;
    }
    t.rows.push_back({text, float_text(value, 21), float_text(tail, 6)});
    arr.push_back({{by_q ? "q" : "sigma", text},
                   {"value", float_text(value, 21)},
                   {"tail_bound", float_text(tail, 6)},
                   {"vectors", count}});
  }
  Output o;
  o.report = {{"radius_sq", radius.to_string()},
              {"kind", by_q ? "theta" : "flatness"},
              {"rows", arr}};
  o.table = t;
  return o;
}

Output cmd_verify(const std::string& level_text) {
  const VerifyLevel level = parse_level(level_text);
  const auto results = run_acceptance(level, default_oracles());
  Output o;
  Table t{{"id", "key", "passed", "seconds", "detail"}, {}};
  Json arr = Json::array();
  std::string pretty;
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    pretty += format_result(r) + "\n";
    t.rows.push_back({std::to_string(r.id), r.key, r.passed ? "true" : "false",
                      float_text(r.seconds, 4), r.detail});
    arr.push_back({{"id", r.id},
                   {"key", r.key},
                   {"passed", r.passed},
                   {"seconds", r.seconds},
                   {"detail", r.detail}});
  }
  o.report = {{"level", level_text}, {"all_passed", all}, {"results", arr}};
  o.table = t;
  o.pretty = pretty;
  o.exit_code = all ? kExitOk : kExitChecksFailed;
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Well-rounded lattice constructions, enumeration and verification", "wrlab"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format;
  app.add_option("--output", format, "json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));

  int n = 0;
  std::string a_text;
  long r = 0, s = 0;
  bool flag_dual = false, flag_classify = false, flag_density = false;

  auto* tame = app.add_subcommand("tame", "tame lattice Gram and its dual");
  tame->add_option("--n", n, "dimension")->required();
  tame->add_option("--a", a_text, "diagonal entry a (p/q)")->required();
  tame->add_flag("--dual", flag_dual, "include the dual parameters");

  auto* sub = app.add_subcommand("sublattice", "sublattice x -> r x + s <x, v1> v1 of a tame lattice");
  sub->add_option("--n", n, "dimension")->required();
  sub->add_option("--a", a_text, "diagonal entry a (p/q)")->required();
  sub->add_option("--r", r)->required();
  sub->add_option("--s", s)->required();
  sub->add_flag("--classify", flag_classify, "cross-check the classification by enumeration");
  sub->add_flag("--density", flag_density, "density and its bounds");
  sub->add_flag("--dual", flag_dual, "dual Gram");

  std::string family = "e8", alpha_text;
  bool flag_integral = false, flag_table = false;
  int sweep = 0;
  auto* deform = app.add_subcommand("deform", "deformed hex, D_n and E8 lattices");
  deform->add_option("--family", family, "hex, dn or e8")->required();
  deform->add_option("--n", n, "dimension for dn");
  deform->add_option("--alpha", alpha_text, "p/q or x+y*sqrt(k) (exact) or a decimal (float)");
  deform->add_flag("--integral", flag_integral, "scale a Pell member into Z^n");
  deform->add_option("--sweep", sweep, "hex only: density at this many alpha in [0, 1/2]");

  long qmax = 0;
  int pell_n = 4;
  auto* pell = app.add_subcommand("pell", "Pell triples 2q^2 - p^2 = d^2");
  pell->add_option("--qmax", qmax)->required();
  pell->add_option("--family", family, "dn or e8 for --table");
  pell->add_option("--n", pell_n, "dimension for dn tables");
  pell->add_flag("--table", flag_table, "density rows for each triple");

  std::string gram_path, bound;
  auto* svp = app.add_subcommand("svp", "shortest vectors of a Gram matrix");
  svp->add_option("--gram", gram_path, "matrix JSON file")->required();
  svp->add_option("--bound", bound, "also list every vector with norm <= bound");

  std::vector<std::string> qs, sigmas;
  std::string radius;
  auto* theta = app.add_subcommand("theta", "truncated theta series or flatness factor");
  theta->add_option("--gram", gram_path, "matrix JSON file")->required();
  auto* q_opt = theta->add_option("--q", qs, "theta at these q (comma separated)")->delimiter(',');
  auto* sigma_opt =
      theta->add_option("--sigma", sigmas, "flatness factor at these sigma")->delimiter(',');
  q_opt->excludes(sigma_opt);
  theta->add_option("--radius", radius, "squared-norm cutoff")->required();

  std::string level = "fast";
  auto* verify = app.add_subcommand("verify-all", "run the acceptance checks");
  verify->add_option("--level", level)->check(CLI::IsMember({"fast", "full"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    Output o;
    std::string fallback = "pretty";
    if (tame->parsed()) {
      o = cmd_tame(n, a_text, flag_dual);
    } else if (sub->parsed()) {
      o = cmd_sublattice(n, a_text, r, s, flag_classify, flag_density, flag_dual);
    } else if (deform->parsed()) {
      o = cmd_deform(family, n, alpha_text, flag_integral, sweep);
      if (sweep) fallback = "csv";
    } else if (pell->parsed()) {
      o = cmd_pell(qmax, family, pell_n, flag_table);
      fallback = "csv";
    } else if (svp->parsed()) {
      o = cmd_svp(gram_path, bound);
    } else if (theta->parsed()) {
      o = cmd_theta(gram_path, qs, sigmas, radius);
      fallback = "csv";
    } else {
      o = cmd_verify(level);
    }
    emit(o, format.empty() ? fallback : format, out);
    return o.exit_code;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ArithmeticError& e) {
    err << "arithmetic error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace wrlab
