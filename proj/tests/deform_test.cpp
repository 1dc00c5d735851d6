#include "wrlab/deform.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wrlab/svp.hpp"
#include "wrlab/tame.hpp"

using namespace wrlab;

namespace {

QuadScalar frac(long p, long q) { return QuadScalar(Rational(p) / q); }

Matrix<long> to_long(const ExactMatrix& m) {
  Matrix<long> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(i, j) = m(i, j).rational_part().convert_to<long>();
  return out;
}

std::vector<PellTriple> small_triples() {
  std::vector<PellTriple> out;
  for (const auto& [p, q, d] : oracle::pell_scan(200)) out.push_back({p, q, d});
  return out;
}

}  // namespace

TEST(Shape, GeneratorExamples) {
  const ExactMatrix m = dn_generator(4, frac(7, 5)) * QuadScalar(5);
  const long expect[4][4] = {{7, 0, 1, 0}, {1, 7, 0, 0}, {0, 1, 7, 1}, {0, 0, 0, -7}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(m(i, j), QuadScalar(expect[i][j]));
  const ExactMatrix h = hex_generator(frac(3, 10));
  EXPECT_EQ(h(0, 1), frac(3, 10));
  EXPECT_EQ(h(1, 1) * h(1, 1), frac(91, 100));
  EXPECT_EQ(h(1, 0), QuadScalar(0));
}

TEST(Shape, ColumnNormsAreFixed) {
  for (Family f : {Family::Hex, Family::Dn, Family::E8}) {
    for (int n : {3, 5, 8}) {
      const QuadScalar alpha = f == Family::Hex ? frac(1, 3) : frac(17, 13);
      const DeformParam p = DeformParam::exact(f, n, alpha);
      const ExactMatrix g = gram_of(deform_generator(p));
      for (Eigen::Index i = 0; i < g.rows(); ++i) EXPECT_EQ(g(i, i), QuadScalar(column_norm(f)));
      const DeformShape s = deform_shape(f, n);
      EXPECT_TRUE(matrices_equal(g, s.gram(p.alpha, p.alphabar, QuadScalar(p.alpha * p.alpha),
                                           QuadScalar(p.alphabar * p.alphabar))));
    }
  }
}

TEST(Shape, RangeChecks) {
  EXPECT_THROW(dn_generator(4, frac(99, 100)), DomainError);
  EXPECT_THROW(dn_generator(4, frac(3, 2)), DomainError);
  EXPECT_THROW(dn_generator(2, QuadScalar(1)), DomainError);
  EXPECT_THROW(hex_generator(frac(3, 5)), DomainError);
  EXPECT_THROW(hex_generator(frac(-1, 5)), DomainError);
  EXPECT_THROW(parse_family("a2"), DomainError);
  EXPECT_NO_THROW(e8_generator(QuadScalar::sqrt_of(2)));
  // alphabar^2 = 2 - (3 + 2 sqrt 2)/4 is not a square in Q(sqrt 2).
  EXPECT_THROW(dn_generator(3, QuadScalar(Rational(1, 2), Rational(1, 2), Integer(2))),
               DomainError);
  EXPECT_THROW(make_float_deform(Family::Dn, 3, Float128(0.99)), DomainError);
}

TEST(Shape, Endpoints) {
  for (int n = 3; n <= 6; ++n) {
    // D_n: integer vectors with even coordinate sum.
    IntegerMatrix dn = IntegerMatrix::Zero(n, n + 1);
    for (int i = 0; i + 1 < n; ++i) {
      dn(i, i) = 1;
      dn(i + 1, i) = -1;
    }
    dn(n - 1, n - 1) = 2;
    dn(0, n) = 2;
    const Lattice ref = Lattice::from_generator(to_exact(hnf(dn)));
    EXPECT_TRUE(lattices_equal(Lattice::from_generator(dn_generator(n, QuadScalar(1))), ref));
    const ExactMatrix top = dn_generator(n, QuadScalar::sqrt_of(2));
    const Lattice sqrt2 = Lattice::from_generator(
        ExactMatrix(identity_matrix<QuadScalar>(n) * QuadScalar::sqrt_of(2)));
    EXPECT_TRUE(lattices_equal(Lattice::from_generator(top), sqrt2));
  }
  EXPECT_TRUE(lattices_equal(
      Lattice::from_generator(ExactMatrix(e8_generator(QuadScalar(1)) * QuadScalar(2))),
      reference_2Gamma8()));
  EXPECT_TRUE(matrices_equal(hex_generator(QuadScalar(0)), identity_matrix<QuadScalar>(2)));
}

TEST(Volume, ClosedFormsMatchDeterminants) {
  std::vector<QuadScalar> alphas = {QuadScalar(1), QuadScalar::sqrt_of(2)};
  for (const PellTriple& t : small_triples()) alphas.push_back(frac(t.p, t.q));
  for (const QuadScalar& a : alphas) {
    for (int n = 3; n <= 7; ++n) {
      const QuadScalar v = dn_volume(n, a);
      EXPECT_EQ(det_exact(gram_of(dn_generator(n, a))), v * v);
      EXPECT_EQ(oracle::det_cofactor(dn_generator(n, a)).abs(), v);
    }
    const QuadScalar v8 = e8_volume(a);
    EXPECT_EQ(oracle::det_cofactor(e8_generator(a)).abs(), v8);
  }
  EXPECT_EQ(dn_volume(4, QuadScalar(1)), QuadScalar(2));
  EXPECT_EQ(dn_volume(4, frac(7, 5)), frac(7 * 344, 625));
  EXPECT_EQ(dn_volume(6, QuadScalar::sqrt_of(2)), QuadScalar(8));
  EXPECT_EQ(e8_volume(QuadScalar(1)), QuadScalar(1));
  EXPECT_EQ(e8_volume(QuadScalar::sqrt_of(2)), QuadScalar::sqrt_of(32));
}

TEST(Volume, FloatPathMatchesDeterminant) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(1.0, 1.41);
  for (int t = 0; t < 20; ++t) {
    const Float128 alpha(u(rng));
    for (Family f : {Family::Dn, Family::E8}) {
      const int n = f == Family::Dn ? 3 + t % 4 : 8;
      const FloatDeform<Float128> d = make_float_deform(f, n, alpha);
      const Float128 det = abs(det_bareiss(float_generator(d)));
      const Float128 vol = float_volume(d);
      EXPECT_LT(abs(det - vol) / vol, Float128(1e-25));
    }
  }
}

TEST(Density, Examples) {
  for (int n = 3; n <= 8; ++n) {
    EXPECT_EQ(dn_center_density(n, QuadScalar(1)).square,
              QuadScalar(rational_pow(Rational(2), -n - 2)));
    EXPECT_EQ(dn_center_density(n, QuadScalar::sqrt_of(2)).square,
              QuadScalar(rational_pow(Rational(2), -2 * n)));
  }
  EXPECT_EQ(format_significant(dn_center_density(4, frac(7, 5)).approx, 6), "0.0648879");
  EXPECT_EQ(e8_center_density(QuadScalar(1)).exact, QuadScalar(Rational(1, 16)));
  EXPECT_EQ(format_significant(e8_center_density(frac(7, 5)).approx, 6), "0.0102162");
  EXPECT_EQ(format_significant(e8_center_density(frac(301087, 300313)).approx, 6),
            "0.0610791");
  EXPECT_EQ(hex_center_density(QuadScalar(0)).exact, QuadScalar(Rational(1, 4)));
  EXPECT_EQ(hex_center_density(frac(1, 2)).square, QuadScalar(Rational(1, 12)));
}

TEST(Density, EnumerationAgrees) {
  for (const PellTriple& t : small_triples()) {
    for (int n : {3, 4, 8}) {
      const Family f = n == 8 ? Family::E8 : Family::Dn;
      const DeformParam p = pell_param(f, n, t);
      const ExactMatrix g = gram_of(deform_generator(p));
      const SvpReport r = svp_report(g);
      const QuadScalar direct = QuadScalar(rational_pow(r.lambda1_sq.rational_part(), n) /
                                           rational_pow(Rational(4), n)) /
                                det_exact(g);
      EXPECT_EQ(deform_center_density(p).square, direct);
    }
  }
}

TEST(Density, FloatPathAgreesWithExact) {
  for (const PellTriple& t : small_triples()) {
    const Float128 alpha = Float128(t.p) / t.q;
    const Float128 df = float_center_density(make_float_deform(Family::E8, 8, alpha));
    const BigFloat de = e8_center_density(frac(t.p, t.q)).approx;
    const Float128 dexact(de.str(40));
    EXPECT_LT(abs(df - dexact) / dexact, Float128(1e-30));
  }
}

TEST(Monotonicity, ExactGrids) {
  std::vector<QuadScalar> grid = {QuadScalar(1)};
  for (const PellTriple& t : pell_search(700)) grid.push_back(frac(t.p, t.q));
  grid.push_back(QuadScalar::sqrt_of(2));
  std::sort(grid.begin(), grid.end());
  ASSERT_GE(grid.size(), 50u);
  for (int n = 3; n <= 6; ++n) {
    for (std::size_t i = 1; i < grid.size(); ++i) {
      ASSERT_LT(dn_center_density(n, grid[i]).square, dn_center_density(n, grid[i - 1]).square);
      ASSERT_GT(dn_volume(n, grid[i]), dn_volume(n, grid[i - 1]));
    }
  }
  // E8 is not monotone: delta dips below its sqrt(2) value near alpha = 7/5.
  EXPECT_LT(e8_center_density(frac(7, 5)).square,
            e8_center_density(QuadScalar::sqrt_of(2)).square);
  // Irrational alphabar: each alpha = 1 + i/120 has its own field.
  std::vector<QuadScalar> irr;
  for (int i = 0; i <= 49; ++i) irr.push_back(QuadScalar(1 + Rational(i) / 120));
  for (int n = 3; n <= 6; ++n)
    for (std::size_t i = 1; i < irr.size(); ++i)
      ASSERT_GT(dn_volume(n, irr[i]), dn_volume(n, irr[i - 1]));
  const auto hex = hex_sweep(50);
  for (std::size_t i = 1; i < hex.size(); ++i) ASSERT_GT(hex[i].delta_sq, hex[i - 1].delta_sq);
  EXPECT_EQ(hex.front().delta_sq, Rational(1, 16));
  EXPECT_EQ(hex.back().delta_sq, Rational(1, 12));
}

TEST(Pell, MatchesDirectScan) {
  for (long qmax : {1L, 5L, 50L, 400L, 1500L}) {
    std::vector<PellTriple> expect;
    for (const auto& [p, q, d] : oracle::pell_scan(qmax)) expect.push_back({p, q, d});
    EXPECT_EQ(pell_search(qmax), expect) << qmax;
  }
  EXPECT_THROW(pell_search(0), DomainError);
}

TEST(Pell, ContainsKnownTriples) {
  const auto five = pell_search(5);
  ASSERT_EQ(five.size(), 1u);
  EXPECT_EQ(five[0], (PellTriple{7, 5, 1}));
  const auto all = pell_search(300313);
  for (const PellTriple& t : all) ASSERT_TRUE(is_pell_triple(t));
  for (const PellTriple& t : std::vector<PellTriple>{{17, 13, 7}, {161, 145, 127},
                                                       {301087, 300313, 299537}})
    EXPECT_NE(std::find(all.begin(), all.end(), t), all.end());
}

TEST(Integral, ScaledGeneratorsLieInZn) {
  for (const PellTriple& t : small_triples()) {
    for (int n : {3, 4, 6}) {
      const Lattice l = integral_scaled(Family::Dn, t, n);
      const Matrix<long> m = to_long(l.generator());
      const Rational vol = dn_volume(n, frac(t.p, t.q)).rational_part();
      EXPECT_EQ(Rational(std::labs(oracle::det_cofactor(m))), vol * rational_pow(Rational(t.q), n));
    }
    const Lattice e = integral_scaled(Family::E8, t, 8);
    const Lattice z8 = Lattice::from_generator(identity_matrix<QuadScalar>(8));
    EXPECT_NO_THROW(index_of(e, z8));
  }
  EXPECT_EQ(format_significant(
                deform_center_density(pell_param(Family::E8, 8, {7, 5, 1})).approx, 6),
            "0.0102162");
}

TEST(Table, RowsAndNormalizedMinimum) {
  const auto rows = table_rows(Family::E8, {{17, 13, 7}, {6727, 6613, 6497}}, 8);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(format_significant(rows[0].delta, 6), "0.0124829");
  EXPECT_EQ(format_significant(rows[0].lambda1_sq_normalized, 6), "1.33702");
  EXPECT_EQ(format_significant(rows[1].delta, 6), "0.0539629");
  EXPECT_EQ(format_significant(rows[1].lambda1_sq_normalized, 5), "1.9279");
  // Normalized minimum = lambda1^2 / vol^(2/n) on the integral lattice.
  const Lattice l = integral_scaled(Family::E8, {17, 13, 7}, 8);
  const double lam = svp_report(l.gram()).lambda1_sq.to_double();
  const double vol = std::sqrt(det_exact(l.gram()).to_double());
  EXPECT_NEAR(lam / std::pow(vol, 0.25), rows[0].lambda1_sq_normalized.convert_to<double>(),
              1e-12);
}

TEST(Certification, GwrAtPellAlphas) {
  for (const PellTriple& t : pell_search(150)) {
    for (int n = 3; n <= 6; ++n) {
      const SvpReport r = svp_report(gram_of(deform_generator(pell_param(Family::Dn, n, t))));
      EXPECT_EQ(r.lambda1_sq, QuadScalar(2));
      EXPECT_EQ(r.kissing, 2 * n);
      EXPECT_TRUE(minimal_set_is_basis(r.minimal_coeffs, n));
    }
    const SvpReport r8 = svp_report(gram_of(deform_generator(pell_param(Family::E8, 8, t))));
    EXPECT_EQ(r8.kissing, 16);
    EXPECT_TRUE(r8.is_gwr);
  }
}

TEST(Certification, Endpoints) {
  for (int n = 3; n <= 6; ++n)
    EXPECT_EQ(svp_report(gram_of(dn_generator(n, QuadScalar(1)))).kissing, 2 * n * (n - 1));
  EXPECT_EQ(svp_report(gram_of(e8_generator(QuadScalar(1)))).kissing, 240);
  const SvpReport top = svp_report(gram_of(dn_generator(4, QuadScalar::sqrt_of(2))));
  EXPECT_EQ(top.kissing, 8);
  EXPECT_EQ(top.lambda1_sq, QuadScalar(2));
  EXPECT_EQ(svp_report(gram_of(hex_generator(frac(1, 2)))).kissing, 6);
  EXPECT_EQ(svp_report(gram_of(hex_generator(frac(2, 5)))).kissing, 4);
}

TEST(Certification, FloatAlpha) {
  for (double a : {1.05, 1.2345678901, 1.4}) {
    const FloatSvpReport r = deform_svp_float(Family::Dn, 5, Float128(a));
    EXPECT_EQ(r.lambda1_sq, Float256(2));
    EXPECT_EQ(r.kissing, 10);
    EXPECT_TRUE(r.is_gwr);
    EXPECT_TRUE(minimal_set_is_basis(r.minimal_coeffs, 5));
    const FloatSvpReport e = deform_svp_float(Family::E8, 8, Float128(a));
    EXPECT_EQ(e.kissing, 16);
  }
  EXPECT_EQ(deform_svp_float(Family::E8, 8, Float128(1)).kissing, 240);
}
