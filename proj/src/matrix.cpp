#include "wrlab/matrix.hpp"

namespace wrlab {

std::optional<RationalMatrix> rational_entries(const ExactMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_rational()) return std::nullopt;
      out(i, j) = m(i, j).rational_part();
    }
  }
  return out;
}

std::optional<IntegerMatrix> integer_entries(const ExactMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_integer()) return std::nullopt;
      out(i, j) = numerator(m(i, j).rational_part());
    }
  }
  return out;
}

Integer matrix_radicand(const ExactMatrix& m) {
  Integer k = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const QuadScalar& v = m(i, j);
      if (v.is_rational()) continue;
      if (k == 0) {
        k = v.radicand();
      } else if (k != v.radicand()) {
        throw UndecidableError("matrix mixes radicands " + k.str() + " and " +
                               v.radicand().str());
      }
    }
  }
  return k;
}

RationalMatrix as_rational(const IntegerMatrix& m) {
  return cast_matrix<Rational>(m);
}

}  // namespace wrlab
