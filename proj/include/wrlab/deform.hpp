#pragma once

// One-parameter deformations of the hexagonal lattice, D_n and E8: generators
// in alpha and alphabar (alpha^2 + alphabar^2 = 1 for Hex, 2 otherwise),
// closed-form volumes and densities, and the Pell triples that make a scaled
// member integral.

#include <string>
#include <string_view>
#include <vector>

#include "wrlab/lattice.hpp"
#include "wrlab/svp.hpp"

namespace wrlab {

enum class Family { Hex, Dn, E8 };
std::string to_string(Family f);
// "hex", "dn" or "e8"; DomainError otherwise.
Family parse_family(std::string_view text);

// alpha^2 + alphabar^2 for the family.
int norm_sum(Family f);
// Minimum squared norm of every member (the columns).
int column_norm(Family f);

// Generator (c0 + alpha c1 + alphabar c2) / den with integer coefficients.
struct DeformShape {
  Family family = Family::Dn;
  int n = 0;
  Matrix<long> c0, c1, c2;
  long den = 1;

  template <class S>
  Matrix<S> generator(const S& alpha, const S& alphabar) const {
    Matrix<S> m(n, n);
    const S d(den);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m(i, j) = (S(c0(i, j)) + alpha * S(c1(i, j)) + alphabar * S(c2(i, j))) / d;
    return m;
  }

  // Gram with alpha^2 and alphabar^2 supplied separately, so the norm identity
  // holds exactly in floating point too.
  template <class S>
  Matrix<S> gram(const S& alpha, const S& alphabar, const S& alpha_sq,
                 const S& alphabar_sq) const {
    const Matrix<long> g00 = c0.transpose() * c0;
    const Matrix<long> g01 = c0.transpose() * c1 + c1.transpose() * c0;
    const Matrix<long> g02 = c0.transpose() * c2 + c2.transpose() * c0;
    const Matrix<long> g11 = c1.transpose() * c1;
    const Matrix<long> g22 = c2.transpose() * c2;
    const Matrix<long> g12 = c1.transpose() * c2 + c2.transpose() * c1;
    const S cross = alpha * alphabar;
    const S d2(den * den);
    Matrix<S> g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        g(i, j) = (S(g00(i, j)) + alpha * S(g01(i, j)) + alphabar * S(g02(i, j)) +
                   alpha_sq * S(g11(i, j)) + alphabar_sq * S(g22(i, j)) +
                   cross * S(g12(i, j))) /
                  d2;
    return g;
  }
};

// n is ignored for Hex (2) and E8 (8); Dn needs n >= 3.
DeformShape deform_shape(Family f, int n);

struct DeformParam {
  Family family = Family::Dn;
  int n = 0;
  QuadScalar alpha;
  QuadScalar alphabar;

  // Checks the range (Hex: 0 <= alpha <= 1/2; Dn, E8: 1 <= alpha <= sqrt 2)
  // and takes alphabar as the exact root in the field of alpha. A rational
  // alpha always works; otherwise DomainError if the root leaves the field.
  static DeformParam exact(Family f, int n, const QuadScalar& alpha);
};

ExactMatrix deform_generator(const DeformParam& p);
ExactMatrix hex_generator(const QuadScalar& alpha);
ExactMatrix dn_generator(int n, const QuadScalar& alpha);
ExactMatrix e8_generator(const QuadScalar& alpha);

// Closed forms: alphabar; alpha^(n-3)(alpha^3 + alphabar^3); and
// (alphabar^2 (alpha - alphabar)(alpha^4 + alpha^2 alphabar^2 + alphabar^4)
//  + alpha^6 (alpha + alphabar)) / 2.
QuadScalar deform_volume(const DeformParam& p);
QuadScalar dn_volume(int n, const QuadScalar& alpha);
QuadScalar e8_volume(const QuadScalar& alpha);

// delta^2 = column_norm^n / (4^n vol^2), exact; the root goes through root_of.
RootValue deform_center_density(const DeformParam& p);
RootValue dn_center_density(int n, const QuadScalar& alpha);
RootValue e8_center_density(const QuadScalar& alpha);
RootValue hex_center_density(const QuadScalar& alpha);

// Float path: alpha_sq = alpha^2 once, alphabar_sq = norm_sum - alpha_sq.
template <class T>
struct FloatDeform {
  Family family = Family::Dn;
  int n = 0;
  T alpha, alphabar, alpha_sq, alphabar_sq;
};

template <class T>
FloatDeform<T> make_float_deform(Family f, int n, const T& alpha) {
  const DeformShape shape = deform_shape(f, n);
  FloatDeform<T> d{f, shape.n, alpha, T(0), alpha * alpha, T(0)};
  const T lo = f == Family::Hex ? T(0) : T(1);
  if (alpha < lo || (f == Family::Hex ? alpha * 2 > 1 : d.alpha_sq > 2))
    throw DomainError("alpha outside the family range");
  d.alphabar_sq = T(norm_sum(f)) - d.alpha_sq;
  d.alphabar = sqrt(d.alphabar_sq);
  return d;
}

template <class T>
Matrix<T> float_generator(const FloatDeform<T>& d) {
  return deform_shape(d.family, d.n).generator(d.alpha, d.alphabar);
}

template <class T>
Matrix<T> float_gram(const FloatDeform<T>& d) {
  return deform_shape(d.family, d.n).gram(d.alpha, d.alphabar, d.alpha_sq, d.alphabar_sq);
}

template <class T>
T float_volume(const FloatDeform<T>& d) {
  const T& a = d.alpha;
  const T& b = d.alphabar;
  switch (d.family) {
    case Family::Hex:
      return b;
    case Family::Dn:
      return pow(a, d.n - 3) * (a * d.alpha_sq + b * d.alphabar_sq);
    case Family::E8: {
      const T a2 = d.alpha_sq, b2 = d.alphabar_sq;
      return (b2 * (a - b) * (a2 * a2 + a2 * b2 + b2 * b2) + a2 * a2 * a2 * (a + b)) / 2;
    }
  }
  return T(0);
}

template <class T>
T float_center_density(const FloatDeform<T>& d) {
  const T lambda = sqrt(T(column_norm(d.family)));
  return pow(lambda / 2, d.n) / float_volume(d);
}

// Builds the 128- and 256-bit Grams of one lattice: alpha is rounded to 128
// bits first and that exact value is reused at 256 bits.
FloatSvpReport deform_svp_float(Family f, int n, const Float128& alpha,
                                const EnumOptions& opts = {});

struct PellTriple {
  long p = 0;
  long q = 0;
  long d = 0;
  bool operator==(const PellTriple&) const = default;
};

// 2q^2 - p^2 = d^2, gcd(p, q) = 1, q < p < sqrt(2) q, d > 0.
bool is_pell_triple(const PellTriple& t);

// All triples with q <= q_max sorted by (q, p). Enumerates the primitive
// Pythagorean pairs (m, k), which give p = m^2 - k^2 + 2mk, q = m^2 + k^2 and
// d = |m^2 - k^2 - 2mk|; every triple is re-checked with is_pell_triple.
std::vector<PellTriple> pell_search(long q_max);

// alpha = p/q, alphabar = d/q.
DeformParam pell_param(Family f, int n, const PellTriple& t);

// q D_n^(p/q) or 2q E8^(p/q) with its integer generator; ArithmeticError if
// an entry is not an integer.
Lattice integral_scaled(Family f, const PellTriple& t, int n);

struct TableRow {
  PellTriple triple;
  Rational alpha;
  Rational delta_sq;
  BigFloat delta;
  // Minimum of the volume-one rescaling: 4 delta^(2/n).
  BigFloat lambda1_sq_normalized;
};

std::vector<TableRow> table_rows(Family f, const std::vector<PellTriple>& triples,
                                 int n);

struct HexSweepRow {
  Rational alpha;
  Rational delta_sq;
  BigFloat delta;
};

// points >= 2 values alpha = i / (2 (points - 1)).
std::vector<HexSweepRow> hex_sweep(int points);

}  // namespace wrlab
