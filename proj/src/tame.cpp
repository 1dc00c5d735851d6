#include "wrlab/tame.hpp"

#include <cstdlib>

namespace wrlab {

namespace {

Integer ipow(const Integer& b, long e) {
  Integer out = 1;
  for (long i = 0; i < e; ++i) out *= b;
  return out;
}

void check_r(const TameParams& p, long r) {
  if (r == 0) throw DegeneracyError("r must be nonzero");
  if (std::labs(r) >= p.n)
    throw DomainError("|r| must be smaller than T(v1) = n = " + std::to_string(p.n));
}

ExactMatrix from_integer(const IntegerMatrix& m) { return to_exact(m); }

}  // namespace

TameParams TameParams::from_a(int n, const Rational& a) {
  if (n < 2) throw DomainError("tame lattices need n >= 2");
  TameParams p{n, a, (a - 1) / (n - 1)};
  p.validate();
  return p;
}

void TameParams::validate() const {
  if (n < 2) throw DomainError("tame lattices need n >= 2");
  if (a - h * (n - 1) != 1) throw DomainError("tame parameters need a - h(n-1) = 1");
  if (!(a > Rational(1, n))) throw DomainError("tame parameters need a > 1/n");
  if (!(h > Rational(-1, n))) throw DomainError("tame parameters need h > -1/n");
}

ExactMatrix tame_gram(const TameParams& p) {
  p.validate();
  ExactMatrix g(p.n, p.n);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) g(i, j) = i == j ? QuadScalar(p.a) : QuadScalar(-p.h);
  return g;
}

TameParams tame_dual(const TameParams& p) {
  p.validate();
  const Rational s = p.a + p.h;
  TameParams d{p.n, (1 + p.h) / s, -p.h / s};
  d.validate();
  return d;
}

long SublatticeSpec::t_of_pivot() const {
  if (functional.size() != pivot.size())
    throw DomainError("functional and pivot have different lengths");
  long t = 0;
  for (std::size_t i = 0; i < pivot.size(); ++i) t += functional[i] * pivot[i];
  return t;
}

void SublatticeSpec::validate() const {
  const long t = t_of_pivot();
  if (t == 0) throw DomainError("pivot lies in the kernel of the functional");
  if (r == 0) throw DegeneracyError("r must be nonzero");
  if (std::labs(r) >= std::labs(t))
    throw DomainError("|r| must be smaller than |T(v1)| = " + std::to_string(std::labs(t)));
}

SublatticeSpec inner_product_spec(int n, long r, long s) {
  return {std::vector<long>(n, 1), std::vector<long>(n, 1), r, s};
}

IntegerMatrix phi_matrix(const SublatticeSpec& spec) {
  const auto n = static_cast<Eigen::Index>(spec.pivot.size());
  if (static_cast<Eigen::Index>(spec.functional.size()) != n)
    throw DomainError("functional and pivot have different lengths");
  if (spec.r == 0) throw DegeneracyError("r must be nonzero");
  if (spec.m() == 0) throw DegeneracyError("m = r + s T(v1) must be nonzero");
  IntegerMatrix phi(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      phi(i, j) = Integer(spec.s) * spec.pivot[i] * spec.functional[j] +
                  (i == j ? Integer(spec.r) : Integer(0));
  return phi;
}

ExactMatrix phi_image_generator(const ExactMatrix& m, const SublatticeSpec& spec) {
  if (static_cast<std::size_t>(m.cols()) != spec.pivot.size())
    throw DomainError("spec dimension does not match the generator");
  return m * from_integer(phi_matrix(spec));
}

ExactMatrix phi_sublattice_gram(const TameParams& p, long r, long s) {
  p.validate();
  check_r(p, r);
  const Rational m(r + s * p.n);
  const Rational shift = (m * m - r * r) / p.n;
  const Rational diag = p.a * r * r + shift;
  const Rational off = -p.h * r * r + shift;
  ExactMatrix g(p.n, p.n);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) g(i, j) = QuadScalar(i == j ? diag : off);
  return g;
}

std::string to_string(WrTag t) {
  switch (t) {
    case WrTag::OutsideWindow: return "OutsideWindow";
    case WrTag::GwrInterior: return "GwrInterior";
    case WrTag::AnBoundary: return "AnBoundary";
    case WrTag::ZnPoint: return "ZnPoint";
  }
  return "?";
}

WrClassification classify_wr(const TameParams& p, long r, long s) {
  p.validate();
  check_r(p, r);
  const Rational k = p.n * p.a - 1;
  WrClassification c;
  c.lower = k / (p.n * p.n - 1);
  c.middle = k / (p.n - 1);
  c.upper = k * (p.n + 1) / (p.n - 1);
  const Rational ratio = Rational(r + s * p.n) / r;
  c.ratio_sq = ratio * ratio;
  if (c.ratio_sq < c.lower || c.ratio_sq > c.upper) {
    c.tag = WrTag::OutsideWindow;
  } else if (c.ratio_sq == c.middle) {
    c.tag = WrTag::ZnPoint;
  } else if (c.ratio_sq == c.upper) {
    c.tag = WrTag::AnBoundary;
  } else {
    c.tag = WrTag::GwrInterior;
  }
  return c;
}

Rational predicted_min(const TameParams& p, long r, long s) {
  const Rational m(r + s * p.n);
  return p.a * r * r + (m * m - r * r) / p.n;
}

Rational predicted_scale(const TameParams& p, long r) {
  return (p.n * p.a - 1) * r * r / (p.n - 1);
}

Integer predicted_index(const TameParams& p, long r, long s) {
  const Integer v = Integer(r + s * p.n) * ipow(Integer(r), p.n - 1);
  return v < 0 ? Integer(-v) : v;
}

RootValue sublattice_center_density(const TameParams& p, long r, long s) {
  if (classify_wr(p, r, s).tag == WrTag::OutsideWindow)
    throw DomainError("(m/r)^2 lies outside the well-rounded window");
  const Rational m(r + s * p.n);
  const Rational num = rational_pow((p.n * p.a - 1) * r * r + m * m, p.n);
  const Rational mr = m * rational_pow(Rational(r), p.n - 1);
  const Rational den = rational_pow(Rational(4 * p.n), p.n) *
                       rational_pow(p.a + p.h, p.n - 1) * mr * mr;
  return root_of(QuadScalar(num / den));
}

WindowExtremes density_window_extremes(int n, const Rational& a) {
  if (n < 2) throw DomainError("need n >= 2");
  if (!(a > Rational(1, n))) throw DomainError("need a > 1/n");
  const Rational k = n * a - 1;
  const Rational nn = rational_pow(Rational(n), n);
  const Rational kk = rational_pow(k, n - 1);
  WindowExtremes w;
  w.f_lower = nn * nn * kk * rational_pow(Rational(n * n - 1), 1 - n);
  w.f_upper = rational_pow(Rational(2), n) * nn * kk * rational_pow(Rational(n - 1), 1 - n) /
              (n + 1);
  w.f_middle = nn * kk * rational_pow(Rational(n - 1), 1 - n);
  if (!(w.f_middle < w.f_lower && w.f_lower <= w.f_upper))
    throw ArithmeticError("window extremes out of order");
  return w;
}

Lattice dual_of_sublattice(const TameParams& p, long r) {
  p.validate();
  check_r(p, r);
  const Rational s = p.h * r;
  if (denominator(s) != 1) throw DomainError("s = r h must be an integer");
  const Rational c = Rational(1) / (r * (p.a + p.h));
  return Lattice::from_gram(tame_gram(p) * QuadScalar(c * c));
}

bool dual_of_sublattice_pairs_to_identity(const TameParams& p, long r) {
  const Lattice claim = dual_of_sublattice(p, r);
  const long s = static_cast<long>(numerator(p.h * r).convert_to<long>());
  const ExactMatrix phi = from_integer(phi_matrix(inner_product_spec(p.n, r, s)));
  const ExactMatrix g = tame_gram(p);
  const QuadScalar c(Rational(1) / (r * (p.a + p.h)));
  const ExactMatrix id = identity_matrix<QuadScalar>(p.n);
  const bool pairing = matrices_equal(ExactMatrix(phi.transpose() * g * c), id);
  const ExactMatrix sub = phi_sublattice_gram(p, r, s);
  const bool grams = matrices_equal(ExactMatrix(sub * claim.gram()), id);
  return pairing && grams;
}

SublatticeSpec dual_spec(const SublatticeSpec& spec, const Lattice& ambient) {
  if (static_cast<Eigen::Index>(spec.pivot.size()) != ambient.dim())
    throw DomainError("spec dimension does not match the ambient lattice");
  spec.validate();
  SublatticeSpec d{spec.pivot, spec.functional, spec.r, spec.s};
  if (d.t_of_pivot() != spec.t_of_pivot())
    throw ArithmeticError("dual functional does not preserve T(v1)");
  return d;
}

SublatticeSpec dual_rescaled_spec(const SublatticeSpec& spec) {
  return {spec.pivot, spec.functional, spec.m(), -spec.s};
}

ExactMatrix an_lagrangian_generator(int n) {
  if (n < 2) throw DomainError("need n >= 2");
  const QuadScalar root = QuadScalar::sqrt_of(Rational(n + 1));
  const QuadScalar shift = (QuadScalar(1) - root) / QuadScalar(n);
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = i == j ? shift + root : shift;
  return m;
}

Lattice construct_An_from_Zn(int n) {
  const Integer d = isqrt(Integer(n + 1));
  if (n < 2 || d * d != n + 1) throw DomainError("n + 1 must be a perfect square");
  if (d <= 2) throw DomainError("need n + 1 = d^2 with d > 2");
  const long dl = d.convert_to<long>();
  return Lattice::from_generator(
      phi_image_generator(identity_matrix<QuadScalar>(n), inner_product_spec(n, dl + 1, 1)));
}

Lattice construct_An_general(int n, long r) {
  if (n < 2) throw DomainError("need n >= 2");
  if (r == 0 || std::labs(r) >= n) throw DomainError("need 0 < |r| < n");
  return Lattice::from_generator(
      phi_image_generator(an_lagrangian_generator(n), inner_product_spec(n, r, r)));
}

SublatticeSpec two_gamma8_spec() {
  return {{1, -1, 1, -1, 1, -1, 1, -1}, {-1, 1, -1, 1, 1, 1, 1, 1}, 2, 1};
}

Lattice construct_2Gamma8() {
  const SublatticeSpec spec = two_gamma8_spec();
  spec.validate();
  return Lattice::from_generator(phi_image_generator(identity_matrix<QuadScalar>(8), spec));
}

Lattice reference_2Gamma8() {
  IntegerMatrix g = IntegerMatrix::Constant(8, 9, Integer(0));
  for (int i = 0; i < 7; ++i) {
    g(i, i) = -2;
    g(i + 1, i) = 2;
  }
  g(0, 7) = 4;
  for (int i = 0; i < 8; ++i) g(i, 8) = i == 7 ? -1 : 1;
  return Lattice::from_generator(to_exact(hnf(g)));
}

SublatticeSpec dim9_spec() {
  return {{1, -1, 1, -1, 1, -1, 1, -1, 1}, {-1, -1, -1, -1, -1, -1, -2, 1, -1}, 2, 1};
}

Lattice construct_dim9_densest() {
  const SublatticeSpec spec = dim9_spec();
  spec.validate();
  return Lattice::from_generator(phi_image_generator(identity_matrix<QuadScalar>(9), spec));
}

}  // namespace wrlab
