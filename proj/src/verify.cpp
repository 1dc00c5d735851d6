#include "wrlab/verify.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include "wrlab/deform.hpp"
#include "wrlab/reference_data.hpp"
#include "wrlab/tame.hpp"

namespace wrlab {

namespace {

// Rows with q above this are skipped by the fast level of the enumeration check.
constexpr long kFastQLimit = 10000;

struct Tally {
  long checked = 0;
  long failed = 0;
  std::vector<std::string> first;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++failed;
    if (first.size() < 5) first.push_back(what);
  }
  bool ok() const { return failed == 0 && checked > 0; }
  std::string summary(const std::string& noun) const {
    std::ostringstream os;
    os << (checked - failed) << "/" << checked << " " << noun;
    if (!first.empty()) {
      os << "; failing:";
      for (const auto& f : first) os << " [" << f << "]";
    }
    return os.str();
  }
};

std::string triple_str(const PellTriple& t) {
  return "(" + std::to_string(t.p) + "," + std::to_string(t.q) + "," + std::to_string(t.d) +
         ")";
}

QuadScalar frac(long p, long q) { return QuadScalar(Rational(p) / q); }

std::vector<PellTriple> all_reference_triples() {
  std::set<std::pair<long, long>> seen;
  std::vector<PellTriple> out;
  auto add = [&](const PellTriple& t) {
    if (seen.insert({t.q, t.p}).second) out.push_back(t);
  };
  for (const auto& r : dn_reference_rows()) add(r.triple);
  for (const auto& r : e8_reference_rows()) add(r.triple);
  std::sort(out.begin(), out.end(), [](const PellTriple& a, const PellTriple& b) {
    return a.q != b.q ? a.q < b.q : a.p < b.p;
  });
  return out;
}

struct SweepCase {
  TameParams params;
  long r;
  long s;
  WrClassification cls;
};

std::vector<SweepCase> tame_sweep() {
  std::vector<SweepCase> out;
  for (int n = 2; n <= 8; ++n) {
    std::set<Rational> as{Rational(1), Rational(2), Rational(n)};
    for (const Rational& a : as) {
      const TameParams p = TameParams::from_a(n, a);
      for (long r = 1 - n; r < n; ++r) {
        if (r == 0) continue;
        for (long s = -3; s <= 3; ++s) {
          const WrClassification c = classify_wr(p, r, s);
          if (c.tag != WrTag::OutsideWindow) out.push_back({p, r, s, c});
        }
      }
    }
  }
  return out;
}

std::string case_str(const SweepCase& c) {
  return "n=" + std::to_string(c.params.n) + " a=" + rational_to_string(c.params.a) +
         " r=" + std::to_string(c.r) + " s=" + std::to_string(c.s) + " " + to_string(c.cls.tag);
}

CriterionResult e8_table(VerifyLevel) {
  std::vector<PellTriple> triples;
  for (const auto& r : e8_reference_rows()) triples.push_back(r.triple);
  const auto rows = table_rows(Family::E8, triples, 8);
  Tally t;
  std::size_t i = 0;
  for (const auto& ref : e8_reference_rows()) {
    const TableRow& row = rows[i++];
    t.record(matches_printed(row.delta, ref.delta),
             triple_str(ref.triple) + " delta " + format_significant(row.delta, 6) + " vs " +
                 ref.delta);
    t.record(matches_printed(row.lambda1_sq_normalized, ref.lambda1_sq_normalized),
             triple_str(ref.triple) + " lambda " +
                 format_significant(row.lambda1_sq_normalized, 6) + " vs " +
                 ref.lambda1_sq_normalized);
  }
  return {1, "e8-table", t.ok(), t.summary("printed cells reproduced"), 0};
}

CriterionResult dn_table(VerifyLevel) {
  Tally t;
  for (const auto& ref : dn_reference_rows()) {
    const auto& tr = ref.triple;
    for (int n = 3; n <= 5; ++n) {
      const Rational computed =
          dn_center_density(n, frac(tr.p, tr.q)).square.rational_part();
      const Rational printed = rational_pow(Rational(2), -n - 2 * ref.two_exponent) *
                               rational_pow(Rational(tr.q), 2 * n) *
                               rational_pow(Rational(tr.p), 6 - 2 * n) /
                               (Rational(ref.denominator) * ref.denominator);
      t.record(computed == printed, triple_str(tr) + " n=" + std::to_string(n) +
                                        " closed form differs from the volume formula");
    }
  }
  return {2, "dn-closed-forms", t.ok(), t.summary("exact delta^2 equalities"), 0};
}

CriterionResult gwr_enumeration(VerifyLevel level) {
  Tally t;
  long skipped = 0;
  for (const PellTriple& tr : all_reference_triples()) {
    if (level == VerifyLevel::Fast && tr.q > kFastQLimit) {
      ++skipped;
      continue;
    }
    for (int n : {3, 4, 5, 6, 8}) {
      const Family f = n == 8 ? Family::E8 : Family::Dn;
      const SvpReport r = svp_report(gram_of(deform_generator(pell_param(f, n, tr))));
      const bool ok = r.lambda1_sq == QuadScalar(2) && r.kissing == 2 * n &&
                      minimal_set_is_basis(r.minimal_coeffs, n);
      t.record(ok, triple_str(tr) + " " + to_string(f) + std::to_string(n) + " kissing " +
                       std::to_string(r.kissing));
    }
  }
  std::string detail = t.summary("lattices certified generic well-rounded");
  if (skipped) detail += "; " + std::to_string(skipped) + " rows above q=10000 left to --level full";
  return {3, "gwr-enumeration", t.ok(), detail, 0};
}

CriterionResult tame_law(VerifyLevel) {
  Tally t;
  long at_lower = 0;
  for (const SweepCase& c : tame_sweep()) {
    const ExactMatrix g = phi_sublattice_gram(c.params, c.r, c.s);
    const SvpReport rep = svp_report(g);
    const int n = c.params.n;
    const QuadScalar scale(predicted_scale(c.params, c.r));
    std::string why;
    if (rep.lambda1_sq != QuadScalar(predicted_min(c.params, c.r, c.s))) why = "minimum";
    switch (c.cls.tag) {
      case WrTag::GwrInterior:
        if (rep.kissing != 2 * n) why += " kissing " + std::to_string(rep.kissing);
        break;
      case WrTag::AnBoundary: {
        if (rep.kissing != n * (n + 1)) why += " kissing " + std::to_string(rep.kissing);
        const auto c_an = recognize_scaled_An(g);
        if (!c_an || *c_an != scale) why += " not a scaled A_n";
        break;
      }
      case WrTag::ZnPoint: {
        const auto c_id = recognize_scaled_identity(g);
        if (!c_id || *c_id != scale) why += " not a scaled identity";
        break;
      }
      case WrTag::OutsideWindow:
        break;
    }
    t.record(why.empty(), case_str(c) + ":" + why);
    if (!why.empty() && c.cls.ratio_sq == c.cls.lower) ++at_lower;
  }
  std::string detail = t.summary("in-window sublattices");
  if (t.failed)
    detail += "; " + std::to_string(at_lower) + " of the failures sit at (m/r)^2 = lower end";
  return {4, "tame-sublattice-law", t.ok(), detail, 0};
}

CriterionResult density_bounds(VerifyLevel) {
  Tally t;
  for (const SweepCase& c : tame_sweep()) {
    const int n = c.params.n;
    const Rational lo = rational_pow(Rational(4), -n);
    const Rational hi = rational_pow(Rational(2), -n) / (n + 1);
    const Rational d = sublattice_center_density(c.params, c.r, c.s).square.rational_part();
    bool ok = lo <= d && d <= hi;
    if (c.cls.tag == WrTag::ZnPoint) ok = ok && d == lo;
    if (c.cls.tag == WrTag::AnBoundary) ok = ok && d == hi;
    t.record(ok, case_str(c) + " delta^2=" + rational_to_string(d));
  }
  return {5, "density-bounds", t.ok(), t.summary("densities within the bounds"), 0};
}

CriterionResult named_constructions(VerifyLevel) {
  Tally t;
  const Lattice z8 = Lattice::from_generator(identity_matrix<QuadScalar>(8));
  const Lattice g8 = construct_2Gamma8();
  t.record(lattices_equal(g8, reference_2Gamma8()), "2Gamma8 differs from the reference");
  t.record(det_exact(g8.gram()) == QuadScalar(65536), "2Gamma8 determinant");
  t.record(index_of(g8, z8) == QuadScalar(256), "2Gamma8 index");
  const Lattice l9 = construct_dim9_densest();
  const SvpReport r9 = svp_report(l9.gram());
  const QuadScalar det9 = det_exact(l9.gram());
  t.record(r9.lambda1_sq == QuadScalar(8), "dim9 minimum");
  t.record(volume(l9).exact == QuadScalar(512), "dim9 volume");
  const Rational d9 = rational_pow(r9.lambda1_sq.rational_part(), 9) /
                      (rational_pow(Rational(4), 9) * det9.rational_part());
  t.record(d9 == Rational(1, 512), "dim9 density");
  t.record(recognize_scaled_An(construct_An_from_Zn(8).gram()) == QuadScalar(16),
           "A_8 from Z^8");
  for (int n = 2; n <= 8; ++n) {
    const TameParams p = TameParams::from_a(n, n);
    for (long r = 1 - n; r < n; ++r) {
      if (r == 0) continue;
      const auto c = recognize_scaled_An(construct_An_general(n, r).gram());
      t.record(c == QuadScalar(predicted_scale(p, r)),
               "A_n general n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
  }
  return {6, "named-constructions", t.ok(), t.summary("construction checks"), 0};
}

CriterionResult duality(VerifyLevel) {
  std::mt19937_64 rng(20240601);
  Tally tame;
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Rational a = Rational(static_cast<long>(rng() % 60) + 1) / (static_cast<long>(rng() % 9) + 1);
    if (!(a > Rational(1, n))) a += 1;
    const TameParams p = TameParams::from_a(n, a);
    tame.record(matrices_equal(ExactMatrix(tame_gram(p) * tame_gram(tame_dual(p))),
                               identity_matrix<QuadScalar>(n)),
                "tame n=" + std::to_string(n) + " a=" + rational_to_string(a));
  }
  Tally pairing;
  for (int n = 2; n <= 8; ++n) {
    for (const Rational& a : {Rational(n), Rational(2 * n - 1)}) {
      for (long r = 1; r < n; ++r)
        pairing.record(dual_of_sublattice_pairs_to_identity(TameParams::from_a(n, a), r),
                       "n=" + std::to_string(n) + " a=" + rational_to_string(a));
    }
  }
  Tally literal;
  long rescaled_ok = 0;
  long specs = 0;
  while (specs < 20) {
    const int n = 2 + static_cast<int>(rng() % 5);
    SublatticeSpec spec;
    for (int i = 0; i < n; ++i) {
      spec.functional.push_back(static_cast<long>(rng() % 7) - 3);
      spec.pivot.push_back(static_cast<long>(rng() % 7) - 3);
    }
    const long tv = spec.t_of_pivot();
    if (std::labs(tv) < 2) continue;
    spec.r = 1 + static_cast<long>(rng() % (std::labs(tv) - 1));
    if (rng() % 2) spec.r = -spec.r;
    spec.s = static_cast<long>(rng() % 5) - 2;
    if (spec.m() == 0) continue;
    ++specs;
    const Lattice zn = Lattice::from_generator(identity_matrix<QuadScalar>(n));
    const Lattice dual_image = dual(Lattice::from_generator(phi_image_generator(zn.generator(), spec)));
    const Lattice dz = dual(zn);
    const Lattice swapped =
        Lattice::from_generator(phi_image_generator(dz.generator(), dual_spec(spec, zn)));
    literal.record(lattices_equal(dual_image, swapped),
                   "n=" + std::to_string(n) + " T(v1)=" + std::to_string(tv) +
                       " r=" + std::to_string(spec.r) + " s=" + std::to_string(spec.s));
    const QuadScalar c(Rational(1) / (spec.r * spec.m()));
    const Lattice rescaled = Lattice::from_generator(
        ExactMatrix(phi_image_generator(dz.generator(), dual_rescaled_spec(spec)) * c));
    if (lattices_equal(dual_image, rescaled)) ++rescaled_ok;
  }
  std::ostringstream os;
  os << "tame dual " << tame.summary("identities") << "; sublattice dual "
     << pairing.summary("pairings") << "; swapped data with the same (r, s) "
     << literal.summary("equal") << "; with (m, -s) and scale 1/(r m) " << rescaled_ok << "/"
     << specs << " equal";
  return {7, "duality", tame.ok() && pairing.ok() && literal.ok(), os.str(), 0};
}

CriterionResult monotonicity(VerifyLevel) {
  Tally t;
  std::vector<QuadScalar> grid = {QuadScalar(1)};
  for (const PellTriple& tr : pell_search(1000)) {
    if (grid.size() == 49) break;
    grid.push_back(frac(tr.p, tr.q));
  }
  grid.push_back(QuadScalar::sqrt_of(2));
  std::sort(grid.begin(), grid.end());
  for (int n = 3; n <= 6; ++n) {
    for (std::size_t i = 1; i < grid.size(); ++i)
      t.record(dn_center_density(n, grid[i]).square < dn_center_density(n, grid[i - 1]).square,
               "D_" + std::to_string(n) + " at " + grid[i].to_string());
  }
  const auto hex = hex_sweep(50);
  for (std::size_t i = 1; i < hex.size(); ++i)
    t.record(hex[i].delta_sq > hex[i - 1].delta_sq, "hex at " + rational_to_string(hex[i].alpha));
  for (int n = 2; n <= 12; ++n) {
    std::set<Rational> as{Rational(1), Rational(2), Rational(n)};
    for (const Rational& a : as) {
      bool ok = true;
      try {
        const WindowExtremes w = density_window_extremes(n, a);
        ok = w.f_middle < w.f_lower && w.f_lower <= w.f_upper;
      } catch (const ArithmeticError&) {
        ok = false;
      }
      t.record(ok, "window extremes n=" + std::to_string(n) + " a=" + rational_to_string(a));
    }
  }
  return {8, "monotonicity", t.ok(),
          t.summary("ordered pairs (" + std::to_string(grid.size()) + "-point D_n grid)"), 0};
}

CriterionResult enumeration_oracle(VerifyLevel, const VerifyOracles& oracles) {
  std::mt19937_64 rng(77);
  Tally t;
  int made = 0;
  while (made < 100) {
    const int n = 1 + static_cast<int>(rng() % 4);
    Matrix<long> g(n, n);
    for (int i = 0; i < n; ++i) {
      g(i, i) = 1 + static_cast<long>(rng() % 6);
      for (int j = 0; j < i; ++j) g(i, j) = g(j, i) = static_cast<long>(rng() % 13) - 6;
    }
    ExactMatrix ge(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ge(i, j) = QuadScalar(g(i, j));
    if (!is_positive_definite(ge)) continue;
    ++made;
    const long bound = 1 + static_cast<long>(rng() % (3 * g.diagonal().maxCoeff()));
    const auto got = enumerate_below(ge, QuadScalar(bound));
    const auto expect = oracles.brute_force(g, bound);
    t.record(got == expect, "n=" + std::to_string(n) + " bound " + std::to_string(bound) + ": " +
                                std::to_string(got.size()) + " vs " +
                                std::to_string(expect.size()));
  }
  return {9, "enumeration-oracle", t.ok(), t.summary("random Grams agree with brute force"), 0};
}

CriterionResult theta_flatness(VerifyLevel, const VerifyOracles& oracles) {
  Tally t;
  const ExactMatrix z1 = identity_matrix<QuadScalar>(1);
  const ThetaResult th = theta_truncated(z1, 0.5L, QuadScalar(4));
  t.record(th.value == 2.125L, "theta_Z(0.5) radius 4");
  double worst = 0;
  for (int n : {2, 4, 8}) {
    const Lattice zn = Lattice::from_generator(identity_matrix<QuadScalar>(n));
    for (long double sigma : {0.5L, 1.0L, 2.0L}) {
      const long double q = std::exp(-2 * std::numbers::pi_v<long double> * sigma * sigma);
      const long double expect = oracles.zn_theta_minus_one(q, n);
      // Grow the radius until the certified tail is negligible.
      FlatnessResult f;
      for (long radius = 2;; radius += 1) {
        f = flatness_factor(zn, sigma, QuadScalar(radius));
        if (f.tail_bound <= 1e-13L * f.epsilon) break;
      }
      const double rel = static_cast<double>(std::fabs(f.epsilon - expect) / expect);
      worst = std::max(worst, rel);
      std::ostringstream what;
      what << "n=" << n << " sigma=" << static_cast<double>(sigma) << " rel " << rel;
      t.record(rel <= 1e-10, what.str());
    }
  }
  std::ostringstream os;
  os << t.summary("theta values") << "; worst relative error " << worst;
  return {10, "theta-flatness", t.ok(), os.str(), 0};
}

}  // namespace

VerifyLevel parse_level(const std::string& text) {
  if (text == "fast") return VerifyLevel::Fast;
  if (text == "full") return VerifyLevel::Full;
  throw DomainError("unknown level '" + text + "' (fast, full)");
}

VerifyOracles default_oracles() {
  VerifyOracles o;
  o.brute_force = [](const Matrix<long>& g, long bound) {
    const Eigen::Index n = g.rows();
    RationalMatrix gr(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) gr(i, j) = g(i, j);
    const RationalMatrix gi = inverse_exact(gr);
    std::vector<long> width(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const Rational w2 = gi(i, i) * bound;
      width[i] = isqrt(Integer(numerator(w2) / denominator(w2))).convert_to<long>() + 1;
    }
    std::vector<Coeffs> out;
    Coeffs u(n);
    for (Eigen::Index i = 0; i < n; ++i) u[i] = -width[i];
    while (true) {
      long norm = 0;
      bool nonzero = false;
      for (Eigen::Index i = 0; i < n; ++i) {
        nonzero = nonzero || u[i] != 0;
        for (Eigen::Index j = 0; j < n; ++j) norm += u[i] * g(i, j) * u[j];
      }
      if (nonzero && norm <= bound) out.push_back(u);
      Eigen::Index k = 0;
      while (k < n && u[k] == width[k]) {
        u[k] = -width[k];
        ++k;
      }
      if (k == n) break;
      ++u[k];
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  o.zn_theta_minus_one = [](long double t, int n) {
    long double s = 0;
    for (long m = 1;; ++m) {
      const long double term = std::pow(t, static_cast<long double>(m * m));
      s += 2 * term;
      if (term < 1e-30L * s) break;
    }
    return std::expm1(n * std::log1p(s));
  };
  return o;
}

bool matches_printed(const BigFloat& computed, const std::string& printed) {
  BigFloat ref;
  mpfr_set_prec(ref.backend().data(), 128);
  if (mpfr_set_str(ref.backend().data(), printed.c_str(), 10, MPFR_RNDN) != 0)
    throw DomainError("bad decimal '" + printed + "'");
  const double lead = std::floor(std::log10(std::fabs(ref.convert_to<double>())));
  BigFloat tol;
  mpfr_set_prec(tol.backend().data(), 128);
  mpfr_set_d(tol.backend().data(), 10.0, MPFR_RNDN);
  mpfr_pow_si(tol.backend().data(), tol.backend().data(), static_cast<long>(lead) - 5,
              MPFR_RNDN);
  mpfr_div_ui(tol.backend().data(), tol.backend().data(), 2, MPFR_RNDN);
  BigFloat diff;
  mpfr_set_prec(diff.backend().data(), 192);
  mpfr_sub(diff.backend().data(), computed.backend().data(), ref.backend().data(), MPFR_RNDN);
  mpfr_abs(diff.backend().data(), diff.backend().data(), MPFR_RNDN);
  return mpfr_cmp(diff.backend().data(), tol.backend().data()) <= 0;
}

CriterionResult run_criterion(int id, VerifyLevel level, const VerifyOracles& oracles) {
  if (id < 1 || id > kCriterionCount) throw DomainError("no criterion " + std::to_string(id));
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    switch (id) {
      case 1: r = e8_table(level); break;
      case 2: r = dn_table(level); break;
      case 3: r = gwr_enumeration(level); break;
      case 4: r = tame_law(level); break;
      case 5: r = density_bounds(level); break;
      case 6: r = named_constructions(level); break;
      case 7: r = duality(level); break;
      case 8: r = monotonicity(level); break;
      case 9: r = enumeration_oracle(level, oracles); break;
      default: r = theta_flatness(level, oracles); break;
    }
  } catch (const std::exception& e) {
    r = {id, "error", false, std::string("exception: ") + e.what(), 0};
  }
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(
    VerifyLevel level, const VerifyOracles& oracles,
    const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<std::future<CriterionResult>> jobs;
  for (int id = 1; id <= kCriterionCount; ++id)
    jobs.push_back(std::async(std::launch::async, run_criterion, id, level, std::cref(oracles)));
  std::vector<CriterionResult> out;
  for (auto& j : jobs) {
    out.push_back(j.get());
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " " << (r.id < 10 ? " " : "") << r.id << " " << r.key
     << " (" << std::fixed;
  os.precision(1);
  os << r.seconds << " s) " << r.detail;
  return os.str();
}

}  // namespace wrlab
