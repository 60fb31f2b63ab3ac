#include "g1lp/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "g1lp/errors.hpp"

namespace g1lp {

namespace {

mpfr_prec_t join_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.prec(), b.prec());
}

}  // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double x, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, x, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::parse(std::string_view text, mpfr_prec_t prec) {
  std::string buf(text);
  BigFloat out(prec);
  char* end = nullptr;
  int rc = mpfr_strtofr(out.v_, buf.c_str(), &end, 10, MPFR_RNDN);
  (void)rc;
  if (end == buf.c_str() || *end != '\0') {
    throw DomainError("not a decimal number: '" + buf + "'");
  }
  return out;
}

mpfr_prec_t BigFloat::prec() const { return mpfr_get_prec(v_); }

double BigFloat::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string BigFloat::to_string(int digits) const {
  if (!is_finite()) {
    if (mpfr_nan_p(v_)) return "nan";
    return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  }
  int d = digits > 0 ? digits
                     : static_cast<int>(std::ceil(static_cast<double>(prec()) * 0.30103)) + 2;
  std::vector<char> buf(static_cast<std::size_t>(d) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", d, v_);
  return buf.data();
}

bool BigFloat::is_finite() const { return mpfr_number_p(v_) != 0; }
bool BigFloat::is_nan() const { return mpfr_nan_p(v_) != 0; }
int BigFloat::sgn() const { return mpfr_sgn(v_); }

BigFloat BigFloat::eps() const {
  BigFloat out(prec());
  mpfr_set_ui_2exp(out.v_, 1, 1 - prec(), MPFR_RNDN);
  return out;
}

#define G1LP_BF_BINOP(op, fn)                                   \
  BigFloat operator op(const BigFloat& a, const BigFloat& b) {  \
    BigFloat out(join_prec(a, b));                              \
    fn(out.raw(), a.raw(), b.raw(), MPFR_RNDN);                 \
    return out;                                                 \
  }

G1LP_BF_BINOP(+, mpfr_add)
G1LP_BF_BINOP(-, mpfr_sub)
G1LP_BF_BINOP(*, mpfr_mul)
G1LP_BF_BINOP(/, mpfr_div)
#undef G1LP_BF_BINOP

BigFloat operator-(const BigFloat& a) {
  BigFloat out(a.prec());
  mpfr_neg(out.raw(), a.raw(), MPFR_RNDN);
  return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& b) { return *this = *this + b; }
BigFloat& BigFloat::operator-=(const BigFloat& b) { return *this = *this - b; }
BigFloat& BigFloat::operator*=(const BigFloat& b) { return *this = *this * b; }
BigFloat& BigFloat::operator/=(const BigFloat& b) { return *this = *this / b; }

bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
bool operator>=(const BigFloat& a, const BigFloat& b) {
  return mpfr_greaterequal_p(a.v_, b.v_) != 0;
}
bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }

#define G1LP_BF_UNFN(name, fn)              \
  BigFloat name(const BigFloat& a) {        \
    BigFloat out(a.prec());                 \
    fn(out.raw(), a.raw(), MPFR_RNDN);      \
    return out;                             \
  }

G1LP_BF_UNFN(abs, mpfr_abs)
G1LP_BF_UNFN(sqr, mpfr_sqr)
G1LP_BF_UNFN(sqrt, mpfr_sqrt)
G1LP_BF_UNFN(exp, mpfr_exp)
G1LP_BF_UNFN(log, mpfr_log)
G1LP_BF_UNFN(sin, mpfr_sin)
G1LP_BF_UNFN(cos, mpfr_cos)
G1LP_BF_UNFN(sinh, mpfr_sinh)
G1LP_BF_UNFN(cosh, mpfr_cosh)
#undef G1LP_BF_UNFN

BigFloat hypot(const BigFloat& a, const BigFloat& b) {
  BigFloat out(join_prec(a, b));
  mpfr_hypot(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

BigFloat fma(const BigFloat& a, const BigFloat& b, const BigFloat& c) {
  BigFloat out(std::max(join_prec(a, b), c.prec()));
  mpfr_fma(out.raw(), a.raw(), b.raw(), c.raw(), MPFR_RNDN);
  return out;
}

BigFloat operator+(const BigFloat& a, double b) { return a + BigFloat(b, a.prec()); }
BigFloat operator-(const BigFloat& a, double b) { return a - BigFloat(b, a.prec()); }
BigFloat operator*(const BigFloat& a, double b) { return a * BigFloat(b, a.prec()); }
BigFloat operator/(const BigFloat& a, double b) { return a / BigFloat(b, a.prec()); }
BigFloat operator+(double a, const BigFloat& b) { return BigFloat(a, b.prec()) + b; }
BigFloat operator-(double a, const BigFloat& b) { return BigFloat(a, b.prec()) - b; }
BigFloat operator*(double a, const BigFloat& b) { return BigFloat(a, b.prec()) * b; }
BigFloat operator/(double a, const BigFloat& b) { return BigFloat(a, b.prec()) / b; }
bool operator<(const BigFloat& a, double b) { return mpfr_cmp_d(a.raw(), b) < 0; }
bool operator>(const BigFloat& a, double b) { return mpfr_cmp_d(a.raw(), b) > 0; }
bool operator<=(const BigFloat& a, double b) { return mpfr_cmp_d(a.raw(), b) <= 0; }
bool operator>=(const BigFloat& a, double b) { return mpfr_cmp_d(a.raw(), b) >= 0; }

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re + b.re, a.im + b.im);
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re - b.re, a.im - b.im);
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return BigComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

BigComplex operator*(const BigComplex& a, const BigFloat& s) {
  return BigComplex(a.re * s, a.im * s);
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigFloat n = b.norm();
  BigComplex num = a * b.conj();
  return BigComplex(num.re / n, num.im / n);
}

BigComplex operator/(const BigFloat& a, const BigComplex& b) {
  BigFloat n = b.norm();
  return BigComplex(a * b.re / n, -(a * b.im / n));
}

}  // namespace g1lp
