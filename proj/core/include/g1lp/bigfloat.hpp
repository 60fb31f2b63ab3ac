#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

namespace g1lp {

// Value-semantics arbitrary-precision float on top of mpfr.  Binary
// operations round to the larger of the two operand precisions.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kDefaultPrec = 128;

  explicit BigFloat(mpfr_prec_t prec = kDefaultPrec);
  BigFloat(double x, mpfr_prec_t prec);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  // Parses a decimal string at the given precision; throws ParseError-free
  // DomainError on malformed input (callers attach line context).
  static BigFloat parse(std::string_view text, mpfr_prec_t prec = kDefaultPrec);

  mpfr_prec_t prec() const;
  double to_double() const;
  // Round-trippable decimal with enough digits for the precision, or a fixed
  // significant-digit count when digits > 0.
  std::string to_string(int digits = 0) const;

  bool is_finite() const;
  bool is_nan() const;
  int sgn() const;  // -1, 0, +1

  // Unit round-off at this value's precision, as a BigFloat of the same
  // precision: 2^(1-prec).
  BigFloat eps() const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);

  BigFloat& operator+=(const BigFloat& b);
  BigFloat& operator-=(const BigFloat& b);
  BigFloat& operator*=(const BigFloat& b);
  BigFloat& operator/=(const BigFloat& b);

  friend bool operator<(const BigFloat& a, const BigFloat& b);
  friend bool operator<=(const BigFloat& a, const BigFloat& b);
  friend bool operator>(const BigFloat& a, const BigFloat& b);
  friend bool operator>=(const BigFloat& a, const BigFloat& b);
  friend bool operator==(const BigFloat& a, const BigFloat& b);
  friend bool operator!=(const BigFloat& a, const BigFloat& b);

  friend BigFloat abs(const BigFloat& a);
  friend BigFloat sqr(const BigFloat& a);
  friend BigFloat sqrt(const BigFloat& a);
  friend BigFloat exp(const BigFloat& a);
  friend BigFloat log(const BigFloat& a);
  friend BigFloat sin(const BigFloat& a);
  friend BigFloat cos(const BigFloat& a);
  friend BigFloat sinh(const BigFloat& a);
  friend BigFloat cosh(const BigFloat& a);
  friend BigFloat hypot(const BigFloat& a, const BigFloat& b);
  friend BigFloat fma(const BigFloat& a, const BigFloat& b, const BigFloat& c);

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

BigFloat operator+(const BigFloat& a, double b);
BigFloat operator-(const BigFloat& a, double b);
BigFloat operator*(const BigFloat& a, double b);
BigFloat operator/(const BigFloat& a, double b);
BigFloat operator+(double a, const BigFloat& b);
BigFloat operator-(double a, const BigFloat& b);
BigFloat operator*(double a, const BigFloat& b);
BigFloat operator/(double a, const BigFloat& b);
bool operator<(const BigFloat& a, double b);
bool operator>(const BigFloat& a, double b);
bool operator<=(const BigFloat& a, double b);
bool operator>=(const BigFloat& a, double b);

struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(mpfr_prec_t prec = BigFloat::kDefaultPrec) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  BigComplex(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}

  BigComplex conj() const { return BigComplex(re, -im); }
  BigFloat norm() const { return sqr(re) + sqr(im); }  // |z|^2
  BigFloat abs() const { return hypot(re, im); }
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigFloat& s);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigFloat& a, const BigComplex& b);

}  // namespace g1lp
