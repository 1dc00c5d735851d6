#include "wrlab/lattice.hpp"

#include <mpfr.h>

namespace wrlab {

namespace {

constexpr unsigned kApproxBits = 128;

void check_generator_shape(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw DomainError("empty generator");
  if (m.rows() < m.cols())
    throw DegeneracyError("generator has more columns than rows");
  if (rank_exact(m) != m.cols())
    throw DegeneracyError("generator columns are linearly dependent");
}

ExactMatrix require_generator(const Lattice& l, const char* what) {
  if (!l.has_generator())
    throw DomainError(std::string(what) + " needs a generator presentation");
  return l.generator();
}

Integer lcm_denominators(const RationalMatrix& m, Integer acc) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      acc = boost::multiprecision::lcm(acc, denominator(m(i, j)));
  return acc;
}

// Rows x-parts then y-parts over the basis {1, sqrt(k)}.
RationalMatrix split_over_field(const ExactMatrix& m, bool with_radical) {
  RationalMatrix out(with_radical ? 2 * m.rows() : m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out(i, j) = m(i, j).rational_part();
      if (with_radical) out(m.rows() + i, j) = m(i, j).radical_coeff();
    }
  }
  return out;
}

IntegerMatrix scale_to_integer(const RationalMatrix& m, const Integer& d) {
  IntegerMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(i, j) = numerator(m(i, j) * Rational(d));
  return out;
}

}  // namespace

std::string RootValue::exact_string() const {
  if (exact) return exact->to_string();
  return "sqrt(" + square.to_string() + ")";
}

RootValue root_of(const QuadScalar& square) {
  if (square.sign() < 0) throw DomainError("square root of a negative value");
  RootValue out{square, square.exact_sqrt(), BigFloat()};
  const BigFloat wide = qs_to_float(square, kApproxBits + 64);
  mpfr_set_prec(out.approx.backend().data(), kApproxBits);
  mpfr_sqrt(out.approx.backend().data(), wide.backend().data(), MPFR_RNDN);
  return out;
}

Lattice Lattice::from_generator(ExactMatrix generator) {
  check_generator_shape(generator);
  Lattice l;
  l.gram_ = generator.transpose() * generator;
  l.generator_ = std::move(generator);
  return l;
}

Lattice Lattice::from_gram(ExactMatrix gram) {
  if (!is_symmetric(gram)) throw DomainError("Gram matrix is not symmetric");
  if (!is_positive_definite(gram))
    throw DomainError("Gram matrix is not positive definite");
  Lattice l;
  l.gram_ = std::move(gram);
  return l;
}

const ExactMatrix& Lattice::generator() const {
  if (!generator_) throw DomainError("lattice has no generator presentation");
  return *generator_;
}

Lattice Lattice::scaled(const QuadScalar& c) const {
  if (c.is_zero()) throw DegeneracyError("zero scaling of a lattice");
  Lattice l;
  if (generator_) l.generator_ = ExactMatrix(*generator_ * c);
  l.gram_ = gram_ * (c * c);
  return l;
}

ExactMatrix gram_of(const ExactMatrix& m) {
  check_generator_shape(m);
  return m.transpose() * m;
}

QuadScalar det_exact(const ExactMatrix& g) {
  if (auto r = rational_entries(g)) return det_bareiss(*r);
  return det_bareiss(g);
}

bool is_positive_definite(const ExactMatrix& g) {
  if (g.rows() != g.cols() || g.rows() == 0) return false;
  for (Eigen::Index k = 1; k <= g.rows(); ++k) {
    if (det_exact(g.topLeftCorner(k, k)).sign() <= 0) return false;
  }
  return true;
}

RootValue volume(const Lattice& l) { return root_of(det_exact(l.gram())); }

Lattice dual(const Lattice& l) {
  ExactMatrix gi;
  if (auto r = rational_entries(l.gram())) {
    gi = to_exact(RationalMatrix(inverse_exact(*r)));
  } else {
    gi = inverse_exact(l.gram());
  }
  if (l.has_generator()) return Lattice::from_generator(l.generator() * gi);
  return Lattice::from_gram(gi);
}

IntegerMatrix hnf(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index pc = 0;
  for (Eigen::Index i = 0; i < rows && pc < cols; ++i) {
    for (Eigen::Index j = pc + 1; j < cols; ++j) {
      if (a(i, j) == 0) continue;
      if (a(i, pc) == 0) {
        a.col(pc).swap(a.col(j));
        continue;
      }
      Integer g, x, y;
      mpz_gcdext(g.backend().data(), x.backend().data(), y.backend().data(),
                 a(i, pc).backend().data(), a(i, j).backend().data());
      const Integer u = a(i, pc) / g;
      const Integer v = a(i, j) / g;
      for (Eigen::Index r = 0; r < rows; ++r) {
        const Integer p = a(r, pc);
        const Integer q = a(r, j);
        a(r, pc) = x * p + y * q;
        a(r, j) = u * q - v * p;
      }
    }
    if (a(i, pc) == 0) continue;
    if (a(i, pc) < 0) {
      for (Eigen::Index r = 0; r < rows; ++r) a(r, pc) = -a(r, pc);
    }
    for (Eigen::Index l = 0; l < pc; ++l) {
      Integer q;
      mpz_fdiv_q(q.backend().data(), a(i, l).backend().data(),
                 a(i, pc).backend().data());
      if (q == 0) continue;
      for (Eigen::Index r = 0; r < rows; ++r) a(r, l) -= q * a(r, pc);
    }
    ++pc;
  }
  return a.leftCols(pc);
}

IntegerMatrix hnf(const ExactMatrix& m) {
  auto ints = integer_entries(m);
  if (!ints) throw DomainError("Hermite normal form needs integer entries");
  return hnf(*ints);
}

bool lattices_equal(const Lattice& a, const Lattice& b) {
  const ExactMatrix ma = require_generator(a, "lattice comparison");
  const ExactMatrix mb = require_generator(b, "lattice comparison");
  if (ma.rows() != mb.rows() || ma.cols() != mb.cols()) return false;
  const Integer ka = matrix_radicand(ma);
  const Integer kb = matrix_radicand(mb);
  if (ka != 0 && kb != 0 && ka != kb)
    throw UndecidableError("generators live in different quadratic fields");
  const bool radical = ka != 0 || kb != 0;
  const RationalMatrix ra = split_over_field(ma, radical);
  const RationalMatrix rb = split_over_field(mb, radical);
  const Integer d = lcm_denominators(rb, lcm_denominators(ra, Integer(1)));
  return matrices_equal(hnf(scale_to_integer(ra, d)),
                        hnf(scale_to_integer(rb, d)));
}

QuadScalar index_of(const Lattice& sub, const Lattice& sup) {
  const ExactMatrix ms = require_generator(sub, "index computation");
  const ExactMatrix mp = require_generator(sup, "index computation");
  if (ms.rows() != mp.rows() || ms.cols() != mp.cols())
    throw DomainError("index needs lattices of equal rank in one space");
  std::optional<ExactMatrix> x;
  auto rs = rational_entries(ms);
  auto rp = rational_entries(mp);
  if (rs && rp) {
    auto rx = solve_exact(*rp, *rs);
    if (rx) x = to_exact(*rx);
  } else {
    x = solve_exact(mp, ms);
  }
  if (!x) throw DomainError("sublattice is not contained in the superlattice span");
  if (!integer_entries(*x))
    throw DomainError("sublattice basis has non-integer coordinates");
  return det_exact(*x).abs();
}

std::optional<QuadScalar> recognize_scaled_identity(const ExactMatrix& g) {
  if (g.rows() != g.cols() || g.rows() == 0) return std::nullopt;
  const QuadScalar c = g(0, 0);
  if (c.is_zero()) return std::nullopt;
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      if (!(g(i, j) == (i == j ? c : QuadScalar(0)))) return std::nullopt;
  return c;
}

ExactMatrix an_standard_gram(Eigen::Index n) {
  ExactMatrix s = ExactMatrix::Constant(n, n, QuadScalar(0));
  for (Eigen::Index i = 0; i < n; ++i) {
    s(i, i) = 2;
    if (i + 1 < n) s(i, i + 1) = s(i + 1, i) = -1;
  }
  return s;
}

IntegerMatrix an_transform(Eigen::Index n) {
  IntegerMatrix u = IntegerMatrix::Constant(n, n, Integer(0));
  for (Eigen::Index i = 0; i < n; ++i) {
    u(i, i) = 1;
    if (i > 0) u(i, i - 1) = -1;
  }
  return u;
}

namespace {

std::optional<QuadScalar> scale_of_standard(const ExactMatrix& g) {
  const QuadScalar c = g(0, 0) / QuadScalar(2);
  if (c.is_zero()) return std::nullopt;
  if (!matrices_equal(g, ExactMatrix(an_standard_gram(g.rows()) * c)))
    return std::nullopt;
  return c;
}

}  // namespace

std::optional<QuadScalar> recognize_scaled_An(const ExactMatrix& g) {
  if (g.rows() != g.cols() || g.rows() == 0 || !is_symmetric(g))
    return std::nullopt;
  if (auto c = scale_of_standard(g)) return c;
  const ExactMatrix u = to_exact(an_transform(g.rows()));
  return scale_of_standard(u * g * u.transpose());
}

}  // namespace wrlab
