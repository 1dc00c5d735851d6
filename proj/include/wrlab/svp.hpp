#pragma once

// Shortest vectors, kissing numbers and theta sums by Fincke-Pohst
// enumeration over a Gram matrix. The exact path compares every candidate with
// rational or quadratic-surd arithmetic; the float path works at 128 bits and
// re-checks near ties at 256 bits.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "wrlab/lattice.hpp"

namespace wrlab {

using Float128 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;
using Float256 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

using Coeffs = std::vector<long>;

// 10^9 unless WRLAB_NODE_CAP holds a positive integer.
std::uint64_t default_node_cap();

struct EnumOptions {
  std::uint64_t node_cap = default_node_cap();
};

// Every nonzero u with u^T G u <= bound_sq, both signs, sorted.
std::vector<Coeffs> enumerate_below(const ExactMatrix& g, const QuadScalar& bound_sq,
                                    const EnumOptions& opts = {});

// Of u and -u, the lexicographically smaller one.
Coeffs sign_representative(Coeffs u);

struct SvpReport {
  QuadScalar lambda1_sq;
  // One entry per +- pair, see sign_representative; sorted.
  std::vector<Coeffs> minimal_coeffs;
  long kissing = 0;
  bool is_wr = false;
  bool is_gwr = false;
};

SvpReport svp_report(const ExactMatrix& g, const EnumOptions& opts = {});

// True iff the minimal vectors are exactly the +- basis vectors.
bool minimal_set_is_basis(const std::vector<Coeffs>& minimal, Eigen::Index n);

struct FloatSvpReport {
  Float256 lambda1_sq;
  std::vector<Coeffs> minimal_coeffs;
  long kissing = 0;
  bool is_wr = false;
  bool is_gwr = false;
};

// Candidates are collected at 128 bits with relative slack 1e-20 on the bound,
// then their norms are recomputed from g256. Norms within relative 1e-60 of
// the minimum count as ties.
FloatSvpReport svp_report_float(const Matrix<Float128>& g128,
                                const Matrix<Float256>& g256,
                                const EnumOptions& opts = {});

struct ThetaResult {
  // 1 + nonzero_sum.
  long double value = 1;
  // Sum of q^|x|^2 over the enumerated nonzero vectors, kept separately so
  // that tiny sums do not cancel against the leading 1.
  long double nonzero_sum = 0;
  // Upper bound on the omitted mass: min over beta of
  // q^(beta R) * theta_Z(q^((1-beta) mu))^n with mu a certified lower bound
  // on the smallest Gram eigenvalue.
  long double tail_bound = 0;
  std::size_t vectors = 0;
};

ThetaResult theta_truncated(const ExactMatrix& g, long double q,
                            const QuadScalar& radius_sq, const EnumOptions& opts = {});

struct FlatnessResult {
  long double epsilon = 0;
  long double tail_bound = 0;
  std::size_t vectors = 0;
};

// Dual theta at e^(-2 pi sigma^2), minus one.
FlatnessResult flatness_factor(const Lattice& l, long double sigma,
                               const QuadScalar& radius_sq,
                               const EnumOptions& opts = {});

// Rational mu <= smallest eigenvalue of g, certified by positive
// definiteness of g - mu I.
Rational eigenvalue_lower_bound(const ExactMatrix& g);

}  // namespace wrlab
