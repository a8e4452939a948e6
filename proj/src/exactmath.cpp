#include "exactmath.hpp"

namespace soclelab {

std::string rational_to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

Rational falling_factorial(const Rational& alpha, unsigned k) {
  Rational out(1);
  for (unsigned i = 0; i < k; ++i) out *= alpha - Rational(i);
  return out;
}

namespace {
// Gamma poles sit at the nonpositive integers.
bool gamma_pole(long t2) { return t2 <= 0 && t2 % 2 == 0; }

Rational half(long t2) {
  Rational r(t2, 2);
  r.canonicalize();
  return r;
}
}  // namespace

Rational gamma_ratio(long x2, long y2) {
  if ((x2 - y2) % 2 != 0)
    throw std::invalid_argument("gamma_ratio needs integral argument gap");
  bool px = gamma_pole(x2), py = gamma_pole(y2);
  if (px && py) {
    // Limit along constant x - y: (-1)^(x-y) Gamma(1-y)/Gamma(1-x).
    long k = (x2 - y2) / 2;
    Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    return sign * gamma_ratio(2 - y2, 2 - x2);
  }
  if (px) throw PoleError("Gamma pole in numerator at " +
                          rational_to_string(half(x2)));
  if (py) return Rational(0);
  if (x2 >= y2) {
    Rational out(1);
    for (long t2 = y2; t2 < x2; t2 += 2) out *= half(t2);
    return out;
  }
  return Rational(1) / gamma_ratio(y2, x2);
}

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  Rational out(1);
  for (long i = 0; i < k; ++i) {
    Rational f(n - i, i + 1);
    f.canonicalize();
    out *= f;
  }
  return out;
}

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return rational_to_string(z.re);
  std::string s;
  if (z.re != 0) s = rational_to_string(z.re) + (z.im > 0 ? "+" : "");
  if (z.im == 1)
    s += "i";
  else if (z.im == -1)
    s += "-i";
  else
    s += rational_to_string(z.im) + "i";
  return s;
}

}  // namespace soclelab
