#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qq/errors.hpp"
#include "qq/gf.hpp"

namespace qq {

class LaurentPoly;

// Extended gcd data: u*f + v*g = d with d associate-canonical.
struct Bezout;

// Element of F_p[t, t^-1] in canonical form: value is t^shift * sum c[i] t^i
// with c.front() and c.back() nonzero (zero polynomial: empty c, shift 0).
// Units are c * t^k; the associate-canonical form is monic with shift 0.
class LaurentPoly {
 public:
  static constexpr size_t kDegreeCap = 10000;

  LaurentPoly() : p_(2) {}
  explicit LaurentPoly(uint32_t p) : p_(p) {}
  LaurentPoly(uint32_t p, int shift, std::vector<uint32_t> coeffs);

  static LaurentPoly zero(uint32_t p) { return LaurentPoly(p); }
  static LaurentPoly constant(uint32_t p, uint32_t c) { return {p, 0, {c % p}}; }
  static LaurentPoly t_power(uint32_t p, int k, uint32_t c = 1) { return {p, k, {c % p}}; }
  // h = t^2 + kappa*t + 1, the defining polynomial of the field.
  static LaurentPoly h_poly(const QuadField& f) { return {f.p(), 0, {1, f.kappa(), 1}}; }
  // nabla = t - 2 + t^-1.
  static LaurentPoly nabla(uint32_t p);
  // t^n - 1 (n >= 1).
  static LaurentPoly tn_minus_1(uint32_t p, unsigned n);
  // Integer Laurent polynomial reduced mod p.
  static LaurentPoly from_int(uint32_t p, int shift, const std::vector<long long>& coeffs);

  uint32_t p() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  int lo() const { return shift_; }
  int hi() const { return shift_ + static_cast<int>(c_.size()) - 1; }
  // Degree of the shift-0 normalization; -1 for zero.
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  uint32_t coeff(int e) const;
  const std::vector<uint32_t>& coeffs() const { return c_; }
  uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }

  bool is_unit() const { return c_.size() == 1; }
  // Monic, shift 0.
  LaurentPoly canonical_associate() const;
  LaurentPoly shifted(int k) const;  // * t^k
  LaurentPoly scaled(uint32_t c) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return shift_ == o.shift_ && c_ == o.c_; }

  // f = q*g + r with deg r < deg g after normalizing both to shift 0.
  static std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& f, const LaurentPoly& g);
  static bool divides(const LaurentPoly& g, const LaurentPoly& f);
  // Associate-canonical generator of (f, g).
  static LaurentPoly gcd(const LaurentPoly& f, const LaurentPoly& g);
  // (d, u, v) with u*f + v*g = d, d associate-canonical.
  static Bezout gcd_ext(const LaurentPoly& f, const LaurentPoly& g);

  bool is_irreducible() const;
  // Largest e with g^e | f; g irreducible non-unit, f nonzero.
  static unsigned valuation(const LaurentPoly& f, const LaurentPoly& g);

  // Evaluation t -> theta (ring homomorphism with kernel (h)).
  FqElt eval_at_theta(const QuadField& f) const;

  std::string str() const;
  static LaurentPoly parse(uint32_t p, std::string_view text);

 private:
  void normalize();
  uint32_t p_;
  int shift_ = 0;
  std::vector<uint32_t> c_;
};

struct Bezout {
  LaurentPoly d, u, v;
};

// v_h(t^n - 1) by the closed form: 0 if q does not divide n, else p^{v_p(n)}.
unsigned cyclotomic_valuation(unsigned n, const QuadField& field);

using LaurentMat = std::vector<std::vector<LaurentPoly>>;

}  // namespace qq
