#pragma once

// Tame lattices (Gram a on the diagonal, -h elsewhere, a - h(n-1) = 1) and
// their sublattices x -> r x + s T(x) v1.

#include <string>
#include <vector>

#include "wrlab/lattice.hpp"

namespace wrlab {

struct TameParams {
  int n = 0;
  Rational a;
  Rational h;

  // h is determined by a - h(n-1) = 1.
  static TameParams from_a(int n, const Rational& a);
  // Throws DomainError if (n, a, h) is not a valid tame triple.
  void validate() const;
  bool operator==(const TameParams&) const = default;
};

ExactMatrix tame_gram(const TameParams& p);
// Parameters of the dual: a' = (1+h)/(a+h), h' = -h/(a+h).
TameParams tame_dual(const TameParams& p);

// T(x) = c^T x and the pivot v1, both in coordinates of the ambient basis.
struct SublatticeSpec {
  std::vector<long> functional;
  std::vector<long> pivot;
  long r = 1;
  long s = 0;

  long t_of_pivot() const;
  long m() const { return r + s * t_of_pivot(); }
  // 0 < |r| < |T(v1)|; throws DomainError (DegeneracyError for r = 0).
  void validate() const;
};

// T = <., v1> with v1 the sum of the tame basis vectors: c = G*1 = 1.
SublatticeSpec inner_product_spec(int n, long r, long s);

// Coordinates of the map in the ambient basis: r I + s v1 c^T.
IntegerMatrix phi_matrix(const SublatticeSpec& spec);
// Columns r b_i + s T(b_i) v1 for the columns b_i of m.
ExactMatrix phi_image_generator(const ExactMatrix& m, const SublatticeSpec& spec);

// Gram of the image of a tame lattice under (r, s) with T = <., v1>, in the
// basis r e_i + s v1.
ExactMatrix phi_sublattice_gram(const TameParams& p, long r, long s);

enum class WrTag { OutsideWindow, GwrInterior, AnBoundary, ZnPoint };
std::string to_string(WrTag t);

struct WrClassification {
  WrTag tag = WrTag::OutsideWindow;
  Rational lower;   // (na-1)/(n^2-1)
  Rational middle;  // (na-1)/(n-1)
  Rational upper;   // (na-1)(n+1)/(n-1)
  Rational ratio_sq;  // (m/r)^2
};

WrClassification classify_wr(const TameParams& p, long r, long s);

// Predicted minimum a r^2 + (m^2 - r^2)/n.
Rational predicted_min(const TameParams& p, long r, long s);
// (na-1) r^2 / (n-1), the scale at the Z^n point and the A_n endpoint.
Rational predicted_scale(const TameParams& p, long r);
// |m r^(n-1)|.
Integer predicted_index(const TameParams& p, long r, long s);

// Center density from the closed form; `square` is exact and rational.
// Throws DomainError outside the window.
RootValue sublattice_center_density(const TameParams& p, long r, long s);

struct WindowExtremes {
  Rational f_lower;
  Rational f_middle;
  Rational f_upper;
};
// f(x) = (na-1+x)^n / x at the window points, from the closed forms. Throws
// ArithmeticError if f(x0) < f(l) <= f(u) fails.
WindowExtremes density_window_extremes(int n, const Rational& a);

// For s = r h: the claimed dual (1/(r(a+h))) L as a Gram lattice.
Lattice dual_of_sublattice(const TameParams& p, long r);
// Pairing check: (basis of the sublattice) against (basis of the claimed dual)
// gives the identity, i.e. Phi^T G / (r(a+h)) = I.
bool dual_of_sublattice_pairs_to_identity(const TameParams& p, long r);

// Dual data acting on the dual ambient lattice: T~ is given by the old pivot
// and v1~ by the old functional, both in dual-basis coordinates; (r, s) kept.
SublatticeSpec dual_spec(const SublatticeSpec& spec, const Lattice& ambient);
// The exact identity for the image of a generator M:
// dual(Phi_(r,s)(M)) = 1/(r m) * Phi~_(m,-s)(dual(M)).
SublatticeSpec dual_rescaled_spec(const SublatticeSpec& spec);

Lattice construct_An_from_Zn(int n);
Lattice construct_An_general(int n, long r);
// Generator of the e'_i basis, Gram tame_gram(n, n, 1).
ExactMatrix an_lagrangian_generator(int n);
SublatticeSpec two_gamma8_spec();
Lattice construct_2Gamma8();
// Doubled odd unimodular E8 form from its standard generating set, as HNF.
Lattice reference_2Gamma8();
SublatticeSpec dim9_spec();
Lattice construct_dim9_densest();

}  // namespace wrlab
