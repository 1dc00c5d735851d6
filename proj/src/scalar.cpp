#include "wrlab/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

#include <mpfr.h>

namespace wrlab {

namespace {

constexpr unsigned long kTrialBound = 1'000'000;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::size_t start = (!s.empty() && s.front() == '-') ? 1 : 0;
  if (s.size() == start) throw DomainError("empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw DomainError("malformed integer literal '" + std::string(s) + "'");
  }
  return Integer(std::string(s));
}

void set_from_rational(mpfr_t out, const Rational& r) {
  mpfr_set_q(out, r.backend().data(), MPFR_RNDN);
}

}  // namespace

std::pair<Integer, Integer> squarefree_split(const Integer& k) {
  if (k < 0) throw DomainError("negative radicand");
  Integer rest = k;
  Integer root = 1;
  if (rest < 4) return {rest, root};
  // Scans a cofactor copy so that odd leftover powers stay in `rest`.
  Integer scan = k;
  auto pull_pairs = [&](unsigned long p) {
    unsigned long count = 0;
    while (mpz_divisible_ui_p(scan.backend().data(), p)) {
      scan /= p;
      ++count;
    }
    for (unsigned long i = 0; i + 1 < count; i += 2) {
      rest /= Integer(p) * p;
      root *= p;
    }
  };
  pull_pairs(2);
  for (unsigned long p = 3; p <= kTrialBound; p += 2) {
    if (mpz_cmp_ui(scan.backend().data(), p * p) < 0) break;
    if (mpz_divisible_ui_p(scan.backend().data(), p)) pull_pairs(p);
  }
  if (is_perfect_square(rest)) {
    root *= isqrt(rest);
    rest = 1;
  }
  return {rest, root};
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("isqrt of negative integer");
  Integer r;
  mpz_sqrt(r.backend().data(), n.backend().data());
  return r;
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.backend().data()) != 0;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  const Integer num = numerator(r);
  const Integer den = denominator(r);
  if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
  return Rational(isqrt(num), isqrt(den));
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw ArithmeticError("zero to a negative power");
    return rational_pow(Rational(1) / base, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

std::string rational_to_string(const Rational& r) {
  const Integer den = denominator(r);
  if (den == 1) return numerator(r).str();
  return numerator(r).str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ArithmeticError("zero denominator in '" +
                                      std::string(text) + "'");
  return Rational(num) / Rational(den);
}

QuadScalar::QuadScalar(Rational x, Rational y, Integer k)
    : x_(std::move(x)), y_(std::move(y)) {
  if (k < 0) throw DomainError("negative radicand");
  if (y_ == 0 || k == 0) {
    y_ = 0;
    return;
  }
  auto [rest, root] = squarefree_split(k);
  y_ *= root;
  if (rest == 1) {
    x_ += y_;
    y_ = 0;
    return;
  }
  k_ = std::move(rest);
}

QuadScalar QuadScalar::sqrt_of(const Rational& r) {
  if (r < 0) throw DomainError("sqrt of a negative rational");
  if (r == 0) return {};
  if (auto root = rational_sqrt(r)) return QuadScalar(*root);
  // sqrt(p/q) = sqrt(p*q)/q.
  const Integer den = denominator(r);
  return QuadScalar(Rational(0), Rational(Integer(1), den), numerator(r) * den);
}

QuadScalar QuadScalar::parse(std::string_view text) {
  text = trim(text);
  const auto sq = text.find("sqrt(");
  if (sq == std::string_view::npos) return QuadScalar(parse_rational(text));
  const auto malformed = [&] {
    return DomainError("malformed quadratic scalar '" + std::string(text) + "'");
  };
  if (text.back() != ')') throw malformed();
  // [x (+|-)] [y *] sqrt(k); a missing y is 1.
  std::string body(text.substr(0, sq));
  std::erase_if(body, [](unsigned char c) { return std::isspace(c); });
  if (!body.empty() && body.back() == '*') {
    body.pop_back();
  } else if (body.empty() || body.back() == '+' || body.back() == '-') {
    body += '1';
  } else {
    throw malformed();
  }
  std::size_t sep = std::string::npos;
  for (std::size_t i = 1; i < body.size(); ++i) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '+' && body[i - 1] != '-') {
      sep = i;
      break;
    }
  }
  Rational x(0);
  std::string_view y_text = body;
  if (sep != std::string::npos) {
    x = parse_rational(std::string_view(body).substr(0, sep));
    y_text = std::string_view(body).substr(body[sep] == '+' ? sep + 1 : sep);
  }
  const Rational y = parse_rational(y_text);
  const std::string_view k_text = text.substr(sq + 5, text.size() - sq - 6);
  return QuadScalar(x, y, parse_integer(k_text));
}

bool QuadScalar::is_integer() const {
  return y_ == 0 && denominator(x_) == 1;
}

QuadScalar QuadScalar::conjugate() const { return {Raw{}, x_, -y_, k_}; }

Rational QuadScalar::norm() const { return x_ * x_ - Rational(k_) * y_ * y_; }

int QuadScalar::sign() const {
  const int sx = x_.sign();
  const int sy = y_.sign();
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // Opposite signs: compare x^2 against k*y^2.
  const Rational lhs = x_ * x_;
  const Rational rhs = Rational(k_) * y_ * y_;
  if (lhs > rhs) return sx;
  if (lhs < rhs) return sy;
  return 0;
}

std::optional<QuadScalar> QuadScalar::exact_sqrt() const {
  const int s = sign();
  if (s < 0) return std::nullopt;
  if (s == 0) return QuadScalar{};
  if (y_ == 0) return sqrt_of(x_);
  // (u + v sqrt(k))^2 = x + y sqrt(k)  <=>  u^2 + k v^2 = x, 2uv = y.
  const auto t = rational_sqrt(norm());
  if (!t) return std::nullopt;
  for (const Rational& u2 : {(x_ + *t) / 2, (x_ - *t) / 2}) {
    const auto u = rational_sqrt(u2);
    if (!u || *u == 0) continue;
    QuadScalar root(Raw{}, *u, y_ / (2 * *u), k_);
    if (root.sign() < 0) root = -root;
    if (root * root == *this) return root;
  }
  return std::nullopt;
}

const Integer& QuadScalar::common_radicand(const QuadScalar& a,
                                           const QuadScalar& b) {
  if (a.y_ == 0) return b.k_;
  if (b.y_ == 0 || a.k_ == b.k_) return a.k_;
  throw DomainError("incompatible radicands sqrt(" + a.k_.str() + ") and sqrt(" +
                    b.k_.str() + ")");
}

QuadScalar QuadScalar::operator-() const { return {Raw{}, -x_, -y_, k_}; }

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
  if (o.y_ == 0) {
    x_ += o.x_;
    return *this;
  }
  k_ = common_radicand(*this, o);
  x_ += o.x_;
  y_ += o.y_;
  if (y_ == 0) k_ = 0;
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
  if (o.y_ == 0) {
    x_ -= o.x_;
    return *this;
  }
  k_ = common_radicand(*this, o);
  x_ -= o.x_;
  y_ -= o.y_;
  if (y_ == 0) k_ = 0;
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
  if (o.y_ == 0) {
    x_ *= o.x_;
    y_ *= o.x_;
    if (y_ == 0) k_ = 0;
    return *this;
  }
  if (y_ == 0) {
    y_ = x_ * o.y_;
    x_ *= o.x_;
    k_ = y_ == 0 ? Integer(0) : o.k_;
    return *this;
  }
  const Integer k = common_radicand(*this, o);
  Rational x = x_ * o.x_ + Rational(k) * y_ * o.y_;
  Rational y = x_ * o.y_ + y_ * o.x_;
  x_ = std::move(x);
  y_ = std::move(y);
  k_ = y_ == 0 ? Integer(0) : k;
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  if (o.y_ == 0) {
    x_ /= o.x_;
    y_ /= o.x_;
    return *this;
  }
  common_radicand(*this, o);
  const Rational n = o.norm();
  *this *= o.conjugate();
  x_ /= n;
  y_ /= n;
  return *this;
}

bool operator==(const QuadScalar& a, const QuadScalar& b) {
  return a.x_ == b.x_ && a.y_ == b.y_ && (a.y_ == 0 || a.k_ == b.k_);
}

std::strong_ordering operator<=>(const QuadScalar& a, const QuadScalar& b) {
  int s = 0;
  if (a.y_ != 0 && b.y_ != 0 && a.k_ != b.k_) {
    // u + v with u = a - b.x in Q(sqrt(ka)) and v = -b.y sqrt(kb); when the
    // signs differ, compare u^2 with the rational v^2.
    const QuadScalar u(QuadScalar::Raw{}, a.x_ - b.x_, a.y_, a.k_);
    const int su = u.sign();
    const int sv = -b.y_.sign();
    if (su == sv || su == 0) {
      s = sv;
    } else {
      s = su * (u * u - QuadScalar(b.y_ * b.y_ * Rational(b.k_))).sign();
    }
  } else {
    s = (a - b).sign();
  }
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string QuadScalar::to_string() const {
  return rational_to_string(x_) + "+" + rational_to_string(y_) + "*sqrt(" +
         k_.str() + ")";
}

double QuadScalar::to_double() const {
  if (y_ == 0) return x_.convert_to<double>();
  return qs_to_float(*this, 64).convert_to<double>();
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& q) {
  return os << q.to_string();
}

int qs_sign(const QuadScalar& a) { return a.sign(); }

BigFloat qs_to_float(const QuadScalar& a, unsigned precision_bits) {
  if (precision_bits < 53) throw DomainError("precision below 53 bits");
  const mpfr_prec_t work = precision_bits + 64;
  mpfr_t x, t, d;
  mpfr_inits2(work, x, t, d, static_cast<mpfr_ptr>(nullptr));
  set_from_rational(x, a.rational_part());
  const int sx = a.rational_part().sign();
  const int sy = a.radical_coeff().sign();
  if (sy != 0) {
    // t = y*sqrt(k)
    mpfr_set_z(t, a.radicand().backend().data(), MPFR_RNDN);
    mpfr_sqrt(t, t, MPFR_RNDN);
    mpfr_t yv;
    mpfr_init2(yv, work);
    set_from_rational(yv, a.radical_coeff());
    mpfr_mul(t, t, yv, MPFR_RNDN);
    mpfr_clear(yv);
    if (sx == 0 || sx == sy) {
      mpfr_add(x, x, t, MPFR_RNDN);
    } else {
      // x + y sqrt(k) = (x^2 - k y^2) / (x - y sqrt(k)) avoids cancellation.
      mpfr_sub(d, x, t, MPFR_RNDN);
      set_from_rational(x, a.norm());
      mpfr_div(x, x, d, MPFR_RNDN);
    }
  }
  BigFloat out;
  mpfr_set_prec(out.backend().data(), precision_bits);
  mpfr_set(out.backend().data(), x, MPFR_RNDN);
  mpfr_clears(x, t, d, static_cast<mpfr_ptr>(nullptr));
  return out;
}

std::string format_significant(const BigFloat& v, int digits) {
  if (mpfr_zero_p(v.backend().data())) return "0";
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v.backend().data());
  return std::string(buf.data());
}

}  // namespace wrlab
