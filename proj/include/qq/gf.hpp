#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qq/errors.hpp"

namespace qq {

// Element a + b*theta of F_{p^2} on the basis {1, theta}.
struct FqElt {
  uint32_t a = 0;
  uint32_t b = 0;
  bool operator==(const FqElt&) const = default;
};

// The quadratic quandle F_{p^2} = F_p[t]/(t^2 + kappa*t + 1) with t acting as
// theta, a norm-1 generator.  Also carries the fixed epsilon used by the
// cocycle and q, the multiplicative order of theta.
class QuadField {
 public:
  // Rejects composite p and reducible t^2 + kappa*t + 1.
  QuadField(uint32_t p, uint32_t kappa);

  // All kappa in [0, p) for which t^2 + kappa*t + 1 is irreducible mod p.
  static std::vector<uint32_t> irreducible_kappas(uint32_t p);

  uint32_t p() const { return p_; }
  uint32_t kappa() const { return kappa_; }
  uint32_t q() const { return q_; }
  FqElt theta() const { return {0, 1}; }
  FqElt epsilon() const { return eps_; }

  // F_p scalar arithmetic.
  uint32_t fp_add(uint32_t x, uint32_t y) const { return (x + y) % p_; }
  uint32_t fp_sub(uint32_t x, uint32_t y) const { return (x + p_ - y) % p_; }
  uint32_t fp_mul(uint32_t x, uint32_t y) const {
    return static_cast<uint32_t>(uint64_t(x) * y % p_);
  }
  uint32_t fp_neg(uint32_t x) const { return x == 0 ? 0 : p_ - x; }
  uint32_t fp_inv(uint32_t x) const;
  uint32_t fp_reduce(long long x) const {
    long long r = x % static_cast<long long>(p_);
    return static_cast<uint32_t>(r < 0 ? r + p_ : r);
  }

  // F_{p^2} arithmetic; reduction through theta^2 = -kappa*theta - 1.
  FqElt zero() const { return {0, 0}; }
  FqElt one() const { return {1, 0}; }
  FqElt from_fp(uint32_t c) const { return {c % p_, 0}; }
  FqElt make(uint32_t a, uint32_t b) const { return {a % p_, b % p_}; }
  bool is_zero(const FqElt& x) const { return x.a == 0 && x.b == 0; }
  FqElt add(const FqElt& x, const FqElt& y) const { return {fp_add(x.a, y.a), fp_add(x.b, y.b)}; }
  FqElt sub(const FqElt& x, const FqElt& y) const { return {fp_sub(x.a, y.a), fp_sub(x.b, y.b)}; }
  FqElt neg(const FqElt& x) const { return {fp_neg(x.a), fp_neg(x.b)}; }
  FqElt mul(const FqElt& x, const FqElt& y) const;
  FqElt scale(uint32_t c, const FqElt& x) const { return {fp_mul(c, x.a), fp_mul(c, x.b)}; }
  FqElt inv(const FqElt& x) const;
  FqElt pow(FqElt x, uint64_t e) const;

  // Frobenius x -> x^p; the nontrivial involution fixing F_p.
  FqElt conj(const FqElt& x) const { return {fp_sub(x.a, fp_mul(kappa_, x.b)), fp_neg(x.b)}; }
  // x * conj(x), always in F_p.
  uint32_t norm(const FqElt& x) const;

  // Quandle operation a^b = theta*a + (1-theta)*b.
  FqElt quandle_op(const FqElt& a, const FqElt& b) const;
  // The cocycle phi(x,y) = epsilon*(x*conj(y) - conj(x)*y), valued in F_p.
  uint32_t cocycle(const FqElt& x, const FqElt& y) const;

  // Enumeration of all p^2 elements, index = a + p*b.
  size_t order() const { return size_t(p_) * p_; }
  FqElt element(size_t i) const {
    return {static_cast<uint32_t>(i % p_), static_cast<uint32_t>(i / p_)};
  }

  std::string str(const FqElt& x) const;

  bool operator==(const QuadField& o) const { return p_ == o.p_ && kappa_ == o.kappa_; }

 private:
  uint32_t p_, kappa_, q_;
  FqElt eps_;
};

bool is_prime(uint32_t n);

}  // namespace qq
