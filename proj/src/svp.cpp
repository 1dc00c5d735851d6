#include "wrlab/svp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

namespace wrlab {

namespace {

double approx(const Rational& v) { return v.convert_to<double>(); }
double approx(const QuadScalar& v) { return v.to_double(); }
double approx(const Float128& v) { return v.convert_to<double>(); }

// G = U^T D U with U unit upper triangular, so that
// u^T G u = sum_i D_i (u_i + sum_{j>i} U_ij u_j)^2.
template <class S>
struct Ldl {
  std::vector<S> d;
  Matrix<S> u;
};

template <class S>
Ldl<S> ldl(const Matrix<S>& g) {
  const Eigen::Index n = g.rows();
  Ldl<S> f{std::vector<S>(n), Matrix<S>::Constant(n, n, S(0))};
  for (Eigen::Index i = 0; i < n; ++i) {
    S di = g(i, i);
    for (Eigen::Index k = 0; k < i; ++k) di -= f.d[k] * f.u(k, i) * f.u(k, i);
    if (sign_of(di) <= 0) throw DomainError("Gram matrix is not positive definite");
    f.d[i] = di;
    f.u(i, i) = S(1);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      S v = g(i, j);
      for (Eigen::Index k = 0; k < i; ++k) v -= f.d[k] * f.u(k, i) * f.u(k, j);
      f.u(i, j) = v / di;
    }
  }
  return f;
}

// Depth-first enumeration of the half space whose last nonzero coordinate is
// positive. `visit(x, norm)` sees each nonzero vector with norm <= bound.
template <class S, class Visit>
class Enumerator {
 public:
  Enumerator(const Matrix<S>& g, S bound, std::uint64_t cap, Visit visit)
      : f_(ldl(g)), bound_(std::move(bound)), cap_(cap), visit_(std::move(visit)),
        x_(g.rows(), 0) {}

  void run() {
    if (x_.empty()) return;
    level(static_cast<Eigen::Index>(x_.size()) - 1, S(0), true);
  }

 private:
  void level(Eigen::Index i, const S& used, bool zero_above) {
    S c(0);
    for (Eigen::Index j = i + 1; j < static_cast<Eigen::Index>(x_.size()); ++j) {
      if (x_[j] != 0) c -= f_.u(i, j) * S(x_[j]);
    }
    const S t = (bound_ - used) / f_.d[i];
    if (sign_of(t) < 0) return;
    auto ok = [&](long v) {
      const S delta = S(v) - c;
      return !(delta * delta > t);
    };
    const double cd = approx(c);
    const double rd = std::sqrt(std::max(0.0, approx(t)));
    // The nearest integer to c is admissible iff any integer is; it lies
    // among these three despite rounding in cd.
    const long near = std::lround(cd);
    long seed = 0;
    bool found = false;
    for (long cand : {near, near - 1, near + 1}) {
      if (ok(cand)) {
        seed = cand;
        found = true;
        break;
      }
    }
    if (!found) return;
    long lo = std::min(seed, static_cast<long>(std::floor(cd - rd)));
    long hi = std::max(seed, static_cast<long>(std::ceil(cd + rd)));
    while (!ok(lo)) ++lo;
    while (ok(lo - 1)) --lo;
    while (!ok(hi)) --hi;
    while (ok(hi + 1)) ++hi;
    if (zero_above) lo = std::max(lo, 0L);
    for (long v = lo; v <= hi; ++v) {
      if (++nodes_ > cap_)
        throw ResourceError("enumeration exceeded the node cap of " +
                            std::to_string(cap_));
      x_[i] = v;
      const S delta = S(v) - c;
      const S next = used + f_.d[i] * delta * delta;
      const bool still_zero = zero_above && v == 0;
      if (i == 0) {
        if (!still_zero) visit_(x_, next);
      } else {
        level(i - 1, next, still_zero);
      }
    }
    x_[i] = 0;
  }

  Ldl<S> f_;
  S bound_;
  std::uint64_t cap_;
  Visit visit_;
  std::vector<long> x_;
  std::uint64_t nodes_ = 0;
};

template <class S, class Visit>
void enumerate_half(const Matrix<S>& g, const S& bound, std::uint64_t cap,
                    Visit visit) {
  Enumerator<S, Visit> e(g, bound, cap, std::move(visit));
  e.run();
}

Coeffs negated(Coeffs u) {
  for (long& v : u) v = -v;
  return u;
}

bool spans_space(const std::vector<Coeffs>& vs, Eigen::Index n) {
  if (static_cast<Eigen::Index>(vs.size()) < n) return false;
  RationalMatrix m(n, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (Eigen::Index i = 0; i < n; ++i) m(i, j) = Rational(vs[j][i]);
  return rank_exact(m) == n;
}

template <class S>
struct Shortest {
  S min;
  std::vector<Coeffs> vectors;
};

// Exact minimum and its half-space vectors among norms <= bound.
template <class S>
Shortest<S> shortest_half(const Matrix<S>& g, const S& bound, std::uint64_t cap) {
  Shortest<S> out{bound, {}};
  enumerate_half(g, bound, cap, [&](const std::vector<long>& x, const S& norm) {
    if (norm < out.min) {
      out.min = norm;
      out.vectors.clear();
    }
    if (norm == out.min) out.vectors.push_back(x);
  });
  return out;
}

template <class S>
S min_diagonal(const Matrix<S>& g) {
  S m = g(0, 0);
  for (Eigen::Index i = 1; i < g.rows(); ++i)
    if (g(i, i) < m) m = g(i, i);
  return m;
}

void check_square(const ExactMatrix& g) {
  if (g.rows() == 0 || g.rows() != g.cols())
    throw DomainError("Gram matrix must be square and nonempty");
}

template <class S, class Emit>
void collect_norms(const ExactMatrix& g, const QuadScalar& bound, std::uint64_t cap,
                   Emit emit) {
  if (auto r = rational_entries(g); r && bound.is_rational()) {
    enumerate_half<Rational>(*r, bound.rational_part(), cap,
                             [&](const std::vector<long>& x, const Rational& n) {
                               emit(x, QuadScalar(n));
                             });
  } else {
    enumerate_half<QuadScalar>(g, bound, cap, emit);
  }
}

long double theta_z(long double t) {
  long double s = 1;
  for (long m = 1; m < 100000; ++m) {
    const long double term = std::pow(t, static_cast<long double>(m) * m);
    s += 2 * term;
    if (term < 1e-40L * s) break;
  }
  return s;
}

}  // namespace

std::uint64_t default_node_cap() {
  if (const char* env = std::getenv("WRLAB_NODE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1'000'000'000ULL;
}

Coeffs sign_representative(Coeffs u) {
  Coeffs neg = negated(u);
  return std::min(u, neg);
}

std::vector<Coeffs> enumerate_below(const ExactMatrix& g, const QuadScalar& bound_sq,
                                    const EnumOptions& opts) {
  check_square(g);
  if (bound_sq.sign() <= 0) throw DomainError("enumeration bound must be positive");
  std::vector<Coeffs> out;
  collect_norms<QuadScalar>(g, bound_sq, opts.node_cap,
                            [&](const std::vector<long>& x, const QuadScalar&) {
                              out.push_back(x);
                              out.push_back(negated(x));
                            });
  std::sort(out.begin(), out.end());
  return out;
}

SvpReport svp_report(const ExactMatrix& g, const EnumOptions& opts) {
  check_square(g);
  const Eigen::Index n = g.rows();
  SvpReport rep;
  std::vector<Coeffs> half;
  if (auto r = rational_entries(g)) {
    auto s = shortest_half<Rational>(*r, min_diagonal(*r), opts.node_cap);
    rep.lambda1_sq = QuadScalar(s.min);
    half = std::move(s.vectors);
  } else {
    auto s = shortest_half<QuadScalar>(g, min_diagonal(g), opts.node_cap);
    rep.lambda1_sq = s.min;
    half = std::move(s.vectors);
  }
  for (Coeffs& u : half) u = sign_representative(std::move(u));
  std::sort(half.begin(), half.end());
  rep.minimal_coeffs = std::move(half);
  rep.kissing = 2 * static_cast<long>(rep.minimal_coeffs.size());
  rep.is_wr = spans_space(rep.minimal_coeffs, n);
  rep.is_gwr = rep.is_wr && rep.kissing == 2 * n;
  return rep;
}

bool minimal_set_is_basis(const std::vector<Coeffs>& minimal, Eigen::Index n) {
  if (static_cast<Eigen::Index>(minimal.size()) != n) return false;
  std::vector<Coeffs> expect;
  for (Eigen::Index i = 0; i < n; ++i) {
    Coeffs e(n, 0);
    e[i] = -1;
    expect.push_back(e);
  }
  std::sort(expect.begin(), expect.end());
  return expect == minimal;
}

FloatSvpReport svp_report_float(const Matrix<Float128>& g128,
                                const Matrix<Float256>& g256,
                                const EnumOptions& opts) {
  if (g128.rows() == 0 || g128.rows() != g128.cols() || g256.rows() != g128.rows() ||
      g256.cols() != g128.cols())
    throw DomainError("float Gram matrices must be square and of equal size");
  const Eigen::Index n = g128.rows();
  const Float128 bound = min_diagonal(g128) * (1 + Float128(1e-20));
  std::vector<Coeffs> cands;
  enumerate_half<Float128>(g128, bound, opts.node_cap,
                           [&](const std::vector<long>& x, const Float128&) {
                             cands.push_back(x);
                           });
  std::vector<Float256> norms;
  norms.reserve(cands.size());
  for (const Coeffs& u : cands) {
    Float256 s = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) s += Float256(u[i]) * g256(i, j) * Float256(u[j]);
    norms.push_back(s);
  }
  FloatSvpReport rep;
  if (cands.empty()) throw ArithmeticError("float enumeration lost the basis vectors");
  rep.lambda1_sq = *std::min_element(norms.begin(), norms.end());
  const Float256 tol = rep.lambda1_sq * Float256(1e-60);
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (norms[i] - rep.lambda1_sq <= tol)
      rep.minimal_coeffs.push_back(sign_representative(cands[i]));
  }
  std::sort(rep.minimal_coeffs.begin(), rep.minimal_coeffs.end());
  rep.kissing = 2 * static_cast<long>(rep.minimal_coeffs.size());
  rep.is_wr = spans_space(rep.minimal_coeffs, n);
  rep.is_gwr = rep.is_wr && rep.kissing == 2 * n;
  return rep;
}

Rational eigenvalue_lower_bound(const ExactMatrix& g) {
  check_square(g);
  const Eigen::Index n = g.rows();
  Eigen::MatrixXd gd(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) gd(i, j) = g(i, j).to_double();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gd, Eigen::EigenvaluesOnly);
  double start = es.eigenvalues().minCoeff() * (1 - 1e-6);
  if (!(start > 0)) start = 1e-6;
  Rational mu(start);
  for (int attempt = 0; attempt < 200; ++attempt) {
    ExactMatrix shifted = g;
    for (Eigen::Index i = 0; i < n; ++i) shifted(i, i) -= QuadScalar(mu);
    if (is_positive_definite(shifted)) return mu;
    mu /= 2;
  }
  throw ArithmeticError("could not certify an eigenvalue lower bound");
}

ThetaResult theta_truncated(const ExactMatrix& g, long double q,
                            const QuadScalar& radius_sq, const EnumOptions& opts) {
  check_square(g);
  if (!(q > 0 && q < 1)) throw DomainError("theta argument q must lie in (0, 1)");
  if (radius_sq.sign() <= 0) throw DomainError("theta radius must be positive");
  ThetaResult res;
  collect_norms<QuadScalar>(g, radius_sq, opts.node_cap,
                            [&](const std::vector<long>&, const QuadScalar& norm) {
                              res.nonzero_sum +=
                                  2 * std::pow(q, static_cast<long double>(norm.to_double()));
                              res.vectors += 2;
                            });
  res.value = 1 + res.nonzero_sum;
  const long double mu = approx(eigenvalue_lower_bound(g));
  const long double r = radius_sq.to_double();
  const long double n = static_cast<long double>(g.rows());
  long double best = INFINITY;
  for (long double beta : {0.5L, 0.75L, 0.9L}) {
    const long double t = std::pow(q, (1 - beta) * mu);
    best = std::min(best, std::pow(q, beta * r) * std::pow(theta_z(t), n));
  }
  res.tail_bound = best;
  return res;
}

FlatnessResult flatness_factor(const Lattice& l, long double sigma,
                               const QuadScalar& radius_sq, const EnumOptions& opts) {
  if (!(sigma > 0)) throw DomainError("sigma must be positive");
  const long double q = std::exp(-2 * std::numbers::pi_v<long double> * sigma * sigma);
  const ThetaResult t = theta_truncated(dual(l).gram(), q, radius_sq, opts);
  return {t.nonzero_sum, t.tail_bound, t.vectors};
}

}  // namespace wrlab
