#pragma once

// Lattices presented by a generator (columns are basis vectors) and/or a Gram
// matrix, with exact volume, duality, Hermite normal forms and the scaled
// identity / A_n recognizers.

#include <optional>
#include <string>

#include "wrlab/matrix.hpp"

namespace wrlab {

// A square root that may leave the working field. `exact` is set when the root
// is expressible as a QuadScalar; `approx` always holds a 128-bit value.
struct RootValue {
  QuadScalar square;
  std::optional<QuadScalar> exact;
  BigFloat approx;

  bool float_fallback() const { return !exact.has_value(); }
  std::string exact_string() const;
};

RootValue root_of(const QuadScalar& square);

class Lattice {
 public:
  // Throws DegeneracyError if the columns are dependent.
  static Lattice from_generator(ExactMatrix generator);
  // Throws DomainError unless the matrix is symmetric positive definite.
  static Lattice from_gram(ExactMatrix gram);

  Eigen::Index dim() const { return gram_.rows(); }
  bool has_generator() const { return generator_.has_value(); }
  // Throws DomainError for a Gram-only lattice.
  const ExactMatrix& generator() const;
  const ExactMatrix& gram() const { return gram_; }

  Lattice scaled(const QuadScalar& c) const;

 private:
  Lattice() = default;
  std::optional<ExactMatrix> generator_;
  ExactMatrix gram_;
};

ExactMatrix gram_of(const ExactMatrix& m);
QuadScalar det_exact(const ExactMatrix& g);
// Leading principal minors all positive.
bool is_positive_definite(const ExactMatrix& g);

RootValue volume(const Lattice& l);
// Generator M becomes M*G^-1 (the inverse transpose when square); a Gram-only
// lattice becomes the inverse Gram.
Lattice dual(const Lattice& l);

// Column-style Hermite normal form of the column span: lower trapezoidal with
// positive pivots, entries left of a pivot reduced into [0, pivot). Zero
// columns are dropped, so generating sets are accepted.
IntegerMatrix hnf(const IntegerMatrix& m);
// Same, for an ExactMatrix whose entries must all be rational integers.
IntegerMatrix hnf(const ExactMatrix& m);

// Column spans equal over Z. Both lattices need generators; irrational
// entries are split over the basis {1, sqrt(k)} of a common field.
bool lattices_equal(const Lattice& a, const Lattice& b);

// [sup : sub] after checking that every basis vector of sub has integer
// coordinates in sup.
QuadScalar index_of(const Lattice& sub, const Lattice& sup);

// G = c*I.
std::optional<QuadScalar> recognize_scaled_identity(const ExactMatrix& g);
// Standard A_n Gram: 2 on the diagonal, -1 on the first off-diagonals.
ExactMatrix an_standard_gram(Eigen::Index n);
// Lower bidiagonal unimodular matrix with 1 on the diagonal and -1 below it;
// it carries the all-ones-off-diagonal form 2I + (J - I) to the standard one.
IntegerMatrix an_transform(Eigen::Index n);
// Returns c if G = c*Std, or U*G*U^T = c*Std for U = an_transform(n).
std::optional<QuadScalar> recognize_scaled_An(const ExactMatrix& g);

}  // namespace wrlab
