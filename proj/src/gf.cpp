#include "qq/gf.hpp"

namespace qq {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Legendre symbol test; p odd prime.
bool is_quadratic_residue(uint32_t x, uint32_t p) {
  x %= p;
  if (x == 0) return true;
  uint64_t r = 1, b = x, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1;
}

bool h_irreducible(uint32_t p, uint32_t kappa) {
  if (p == 2) return kappa == 1;
  // Irreducible iff the discriminant kappa^2 - 4 is a non-residue.
  uint32_t disc = static_cast<uint32_t>((uint64_t(kappa) * kappa + 2 * uint64_t(p) - 4) % p);
  return !is_quadratic_residue(disc, p);
}

}  // namespace

QuadField::QuadField(uint32_t p, uint32_t kappa) : p_(p), kappa_(kappa) {
  if (!is_prime(p)) fail(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (kappa >= p) fail(Errc::BadParams, "kappa out of range [0, p)");
  if (!h_irreducible(p, kappa))
    fail(Errc::ReducibleH, "t^2 + " + std::to_string(kappa) + "t + 1 is reducible mod " +
                               std::to_string(p) + "; not a quadratic quandle");
  // epsilon: the canonical solution of conj(eps) = -eps.
  eps_ = (p == 2) ? FqElt{1, 0} : FqElt{kappa_, 2 % p_};  // theta - conj(theta) = 2*theta + kappa
  // q = order of theta; divides p+1 since N(theta) = 1.
  FqElt x = theta();
  q_ = 1;
  while (!(x == one())) {
    x = mul(x, theta());
    ++q_;
    check_internal(q_ <= p_ + 1, "theta order exceeds p+1");
  }
  check_internal(q_ > 2 && (p_ + 1) % q_ == 0, "theta order");
}

std::vector<uint32_t> QuadField::irreducible_kappas(uint32_t p) {
  if (!is_prime(p)) fail(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
  std::vector<uint32_t> out;
  for (uint32_t k = 0; k < p; ++k)
    if (h_irreducible(p, k)) out.push_back(k);
  return out;
}

uint32_t QuadField::fp_inv(uint32_t x) const {
  x %= p_;
  if (x == 0) fail(Errc::DivisionByZero, "inverse of 0 in F_p");
  uint64_t r = 1, b = x, e = p_ - 2;
  while (e) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

FqElt QuadField::mul(const FqElt& x, const FqElt& y) const {
  // (a + b*th)(c + d*th) = ac + (ad + bc)th + bd*th^2, th^2 = -kappa*th - 1.
  uint64_t ac = uint64_t(x.a) * y.a % p_;
  uint64_t ad_bc = (uint64_t(x.a) * y.b + uint64_t(x.b) * y.a) % p_;
  uint64_t bd = uint64_t(x.b) * y.b % p_;
  uint32_t a = static_cast<uint32_t>((ac + p_ - bd % p_) % p_);
  uint32_t b = static_cast<uint32_t>((ad_bc + uint64_t(p_) * p_ - bd * kappa_ % p_) % p_);
  return {a, b};
}

uint32_t QuadField::norm(const FqElt& x) const {
  FqElt n = mul(x, conj(x));
  check_internal(n.b == 0, "norm not in F_p");
  return n.a;
}

FqElt QuadField::inv(const FqElt& x) const {
  if (is_zero(x)) fail(Errc::DivisionByZero, "inverse of 0 in F_{p^2}");
  // x^{-1} = conj(x) / N(x).
  return scale(fp_inv(norm(x)), conj(x));
}

FqElt QuadField::pow(FqElt x, uint64_t e) const {
  FqElt r = one();
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

FqElt QuadField::quandle_op(const FqElt& a, const FqElt& b) const {
  FqElt one_minus_theta = sub(one(), theta());
  return add(mul(theta(), a), mul(one_minus_theta, b));
}

uint32_t QuadField::cocycle(const FqElt& x, const FqElt& y) const {
  FqElt z = sub(mul(x, conj(y)), mul(conj(x), y));
  FqElt w = mul(eps_, z);
  check_internal(w.b == 0, "cocycle value not in F_p");
  return w.a;
}

std::string QuadField::str(const FqElt& x) const {
  if (is_zero(x)) return "0";
  std::string s;
  if (x.a != 0) s = std::to_string(x.a);
  if (x.b != 0) {
    if (!s.empty()) s += "+";
    if (x.b != 1) s += std::to_string(x.b) + "*";
    s += "w";
  }
  return s;
}

}  // namespace qq
