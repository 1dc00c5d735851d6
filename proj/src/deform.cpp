#include "wrlab/deform.hpp"

#include <algorithm>
#include <numeric>

namespace wrlab {

namespace {

constexpr unsigned kTableBits = 128;

QuadScalar qpow(const QuadScalar& b, int e) {
  QuadScalar out(1);
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

BigFloat with_precision(unsigned bits) {
  BigFloat v;
  mpfr_set_prec(v.backend().data(), bits);
  return v;
}

BigFloat rational_float(const Rational& r, unsigned bits) {
  return qs_to_float(QuadScalar(r), bits);
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::Hex: return "hex";
    case Family::Dn: return "dn";
    case Family::E8: return "e8";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "hex") return Family::Hex;
  if (text == "dn") return Family::Dn;
  if (text == "e8") return Family::E8;
  throw DomainError("unknown family '" + std::string(text) + "' (hex, dn, e8)");
}

int norm_sum(Family f) { return f == Family::Hex ? 1 : 2; }
int column_norm(Family f) { return f == Family::Hex ? 1 : 2; }

DeformShape deform_shape(Family f, int n) {
  DeformShape s;
  s.family = f;
  switch (f) {
    case Family::Hex:
      s.n = 2;
      break;
    case Family::Dn:
      if (n < 3) throw DomainError("D_n deformation needs n >= 3");
      s.n = n;
      break;
    case Family::E8:
      s.n = 8;
      break;
  }
  const int d = s.n;
  s.c0 = s.c1 = s.c2 = Matrix<long>::Zero(d, d);
  switch (f) {
    case Family::Hex:
      s.c0(0, 0) = 1;
      s.c1(0, 1) = 1;
      s.c2(1, 1) = 1;
      break;
    case Family::Dn:
      s.c1(0, 0) = 1;
      s.c2(0, 2) = 1;
      s.c2(1, 0) = 1;
      s.c1(1, 1) = 1;
      s.c2(2, 1) = 1;
      s.c1(2, 2) = 1;
      if (d > 3) s.c2(2, 3) = 1;
      for (int i = 3; i < d; ++i) {
        s.c1(i, i) = -1;
        if (i + 1 < d) s.c2(i, i + 1) = 1;
      }
      break;
    case Family::E8:
      s.den = 2;
      for (int i = 0; i < 8; ++i) s.c0(i, 0) = i == 6 ? -1 : 1;
      for (int j = 1; j < 8; ++j) {
        s.c1(j - 1, j) = 2;
        s.c2(j, j) = 2;
      }
      break;
  }
  return s;
}

DeformParam DeformParam::exact(Family f, int n, const QuadScalar& alpha) {
  const DeformShape shape = deform_shape(f, n);
  const QuadScalar alpha_sq = alpha * alpha;
  if (f == Family::Hex) {
    if (alpha.sign() < 0 || alpha * QuadScalar(2) > QuadScalar(1))
      throw DomainError("hex deformation needs 0 <= alpha <= 1/2");
  } else if (alpha < QuadScalar(1) || alpha_sq > QuadScalar(2)) {
    throw DomainError("deformation needs 1 <= alpha <= sqrt(2)");
  }
  const QuadScalar bar_sq = QuadScalar(norm_sum(f)) - alpha_sq;
  QuadScalar bar;
  if (alpha.is_rational()) {
    bar = QuadScalar::sqrt_of(bar_sq.rational_part());
  } else if (auto r = bar_sq.exact_sqrt()) {
    bar = *r;
  } else {
    throw DomainError("alphabar = sqrt(" + bar_sq.to_string() +
                      ") is not in the field of alpha; pass alpha as a float");
  }
  return {f, shape.n, alpha, bar};
}

ExactMatrix deform_generator(const DeformParam& p) {
  return deform_shape(p.family, p.n).generator(p.alpha, p.alphabar);
}

ExactMatrix hex_generator(const QuadScalar& alpha) {
  return deform_generator(DeformParam::exact(Family::Hex, 2, alpha));
}

ExactMatrix dn_generator(int n, const QuadScalar& alpha) {
  return deform_generator(DeformParam::exact(Family::Dn, n, alpha));
}

ExactMatrix e8_generator(const QuadScalar& alpha) {
  return deform_generator(DeformParam::exact(Family::E8, 8, alpha));
}

QuadScalar deform_volume(const DeformParam& p) {
  const QuadScalar& a = p.alpha;
  const QuadScalar& b = p.alphabar;
  switch (p.family) {
    case Family::Hex:
      return b;
    case Family::Dn:
      return qpow(a, p.n - 3) * (a * a * a + b * b * b);
    case Family::E8: {
      const QuadScalar a2 = a * a, b2 = b * b;
      return (b2 * (a - b) * (a2 * a2 + a2 * b2 + b2 * b2) + a2 * a2 * a2 * (a + b)) /
             QuadScalar(2);
    }
  }
  return QuadScalar(0);
}

QuadScalar dn_volume(int n, const QuadScalar& alpha) {
  return deform_volume(DeformParam::exact(Family::Dn, n, alpha));
}

QuadScalar e8_volume(const QuadScalar& alpha) {
  return deform_volume(DeformParam::exact(Family::E8, 8, alpha));
}

RootValue deform_center_density(const DeformParam& p) {
  const QuadScalar v = deform_volume(p);
  const Rational num = rational_pow(Rational(column_norm(p.family)), p.n);
  const Rational den = rational_pow(Rational(4), p.n);
  return root_of(QuadScalar(num / den) / (v * v));
}

RootValue dn_center_density(int n, const QuadScalar& alpha) {
  return deform_center_density(DeformParam::exact(Family::Dn, n, alpha));
}

RootValue e8_center_density(const QuadScalar& alpha) {
  return deform_center_density(DeformParam::exact(Family::E8, 8, alpha));
}

RootValue hex_center_density(const QuadScalar& alpha) {
  return deform_center_density(DeformParam::exact(Family::Hex, 2, alpha));
}

FloatSvpReport deform_svp_float(Family f, int n, const Float128& alpha,
                                const EnumOptions& opts) {
  const FloatDeform<Float128> d128 = make_float_deform(f, n, alpha);
  const FloatDeform<Float256> d256 = make_float_deform(f, n, Float256(alpha));
  return svp_report_float(float_gram(d128), float_gram(d256), opts);
}

bool is_pell_triple(const PellTriple& t) {
  if (t.p <= 0 || t.q <= 0 || t.d <= 0) return false;
  if (std::gcd(t.p, t.q) != 1) return false;
  if (!(t.p > t.q)) return false;
  const Integer p(t.p), q(t.q), d(t.d);
  // p < sqrt(2) q follows from d > 0.
  return 2 * q * q - p * p == d * d;
}

std::vector<PellTriple> pell_search(long q_max) {
  if (q_max < 1) throw DomainError("q_max must be positive");
  std::vector<PellTriple> out;
  for (long m = 2; m * m < q_max; ++m) {
    for (long k = 1; k < m && m * m + k * k <= q_max; ++k) {
      if ((m - k) % 2 == 0 || std::gcd(m, k) != 1) continue;
      const long a = m * m - k * k, b = 2 * m * k;
      const PellTriple t{a + b, m * m + k * k, std::labs(a - b)};
      if (!is_pell_triple(t)) throw ArithmeticError("Pell parametrization failed");
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end(), [](const PellTriple& x, const PellTriple& y) {
    return x.q != y.q ? x.q < y.q : x.p < y.p;
  });
  return out;
}

DeformParam pell_param(Family f, int n, const PellTriple& t) {
  if (f == Family::Hex) throw DomainError("Pell triples parametrize D_n and E8 only");
  if (!is_pell_triple(t)) throw DomainError("not a Pell triple");
  DeformParam p = DeformParam::exact(f, n, QuadScalar(Rational(t.p) / t.q));
  if (p.alphabar != QuadScalar(Rational(t.d) / t.q))
    throw ArithmeticError("alphabar differs from d/q");
  return p;
}

Lattice integral_scaled(Family f, const PellTriple& t, int n) {
  const DeformParam p = pell_param(f, n, t);
  const long c = f == Family::E8 ? 2 * t.q : t.q;
  const ExactMatrix m = deform_generator(p) * QuadScalar(c);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_integer())
        throw ArithmeticError("scaled generator has a non-integer entry " +
                              m(i, j).to_string());
  return Lattice::from_generator(m);
}

std::vector<TableRow> table_rows(Family f, const std::vector<PellTriple>& triples,
                                 int n) {
  std::vector<TableRow> rows;
  rows.reserve(triples.size());
  for (const PellTriple& t : triples) {
    const DeformParam p = pell_param(f, n, t);
    const RootValue delta = deform_center_density(p);
    TableRow row{t, p.alpha.rational_part(), delta.square.rational_part(), delta.approx,
                 with_precision(kTableBits)};
    const BigFloat sq = rational_float(row.delta_sq, kTableBits + 64);
    BigFloat power = with_precision(kTableBits + 64);
    BigFloat inv_n = with_precision(kTableBits + 64);
    mpfr_set_ui(inv_n.backend().data(), 1, MPFR_RNDN);
    mpfr_div_ui(inv_n.backend().data(), inv_n.backend().data(), p.n, MPFR_RNDN);
    mpfr_pow(power.backend().data(), sq.backend().data(), inv_n.backend().data(), MPFR_RNDN);
    mpfr_mul_ui(row.lambda1_sq_normalized.backend().data(), power.backend().data(), 4,
                MPFR_RNDN);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<HexSweepRow> hex_sweep(int points) {
  if (points < 2) throw DomainError("hex sweep needs at least two points");
  std::vector<HexSweepRow> rows;
  for (int i = 0; i < points; ++i) {
    const Rational a = Rational(i) / (2 * (points - 1));
    const RootValue d = hex_center_density(QuadScalar(a));
    rows.push_back({a, d.square.rational_part(), d.approx});
  }
  return rows;
}

}  // namespace wrlab
