#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qq/gf.hpp"
#include "qq/invariant.hpp"
#include "qq/laurent.hpp"

namespace qq {

using boost::multiprecision::cpp_int;

// Integer Laurent polynomial, for the symbolic matrix identities.
class IntLaurent {
 public:
  IntLaurent() = default;
  IntLaurent(int shift, std::vector<long long> coeffs);
  static IntLaurent constant(long long c) { return {0, {c}}; }
  static IntLaurent t_power(int k, long long c = 1) { return {k, {c}}; }
  static IntLaurent nabla() { return {-1, {1, -2, 1}}; }

  bool is_zero() const { return c_.empty(); }
  int lo() const { return shift_; }
  long long coeff(int e) const;
  IntLaurent operator+(const IntLaurent& o) const;
  IntLaurent operator-(const IntLaurent& o) const;
  IntLaurent operator-() const;
  IntLaurent operator*(const IntLaurent& o) const;
  bool operator==(const IntLaurent& o) const { return shift_ == o.shift_ && c_ == o.c_; }
  LaurentPoly mod_p(uint32_t p) const;
  std::string str() const;

 private:
  void normalize();
  int shift_ = 0;
  std::vector<long long> c_;
};

using Mat2 = std::array<std::array<IntLaurent, 2>, 2>;

Mat2 mat2_mul(const Mat2& a, const Mat2& b);
Mat2 mat2_identity();
// The twist transfer matrices M_+ (entries in t) and M_- (entries in t^-1).
Mat2 m_plus();
Mat2 m_minus();
// Closed form M_pm^n = n*M_pm - (n-1)*I, any integer n.
Mat2 mn_power(long long n, bool plus);

// Even continued fraction data for a two-bridge knot.
struct TwistSeq {
  std::vector<std::pair<long, long>> pairs;
};

// P odd, 0 < Q < P coprime; odd Q is first replaced by P - Q (mirror).
// Returns pairs (m_i, n_i), all n_i nonzero, reconstructing P/Q exactly as
// 2m_1 - 1/(2n_1 - 1/(2m_2 - ... - 1/(2n_k))).
TwistSeq cf_expand(long P, long Q);
// Exact rational reconstruction (numerator, denominator), for round trips.
std::pair<cpp_int, cpp_int> cf_value(const TwistSeq& seq);

// Integer polynomials in x.
using ZPoly = std::vector<cpp_int>;
ZPoly zpoly_add(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_sub(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_scale(const cpp_int& c, const ZPoly& a);
ZPoly zpoly_deriv(const ZPoly& a);
bool zpoly_eq(const ZPoly& a, const ZPoly& b);
uint32_t zpoly_eval_mod(const ZPoly& a, uint32_t x, uint32_t p);
// Substitute x -> nabla = t - 2 + t^-1 and reduce mod p.
LaurentPoly zpoly_at_nabla(const ZPoly& a, uint32_t p);

struct TwistPolys {
  std::vector<ZPoly> alpha, beta, gamma, delta;  // indices 0..k
  ZPoly epsilon_k;                               // sum_i m_i alpha_{i-1}^2
};

TwistPolys twist_polys(const TwistSeq& seq);

struct TwoBridgeReport {
  long P = 0, Q = 0;  // normalized (Q even)
  TwistSeq seq;
  unsigned exponent = 0;  // h-exponent of alpha_k(nabla)
  unsigned nuh = 0, nuh_prime = 0, r = 0, s = 0;
  GroupRingElt phi;
};

TwoBridgeReport twobridge_invariant(long P, long Q, const QuadField& field);

struct TorusNu {
  unsigned nuh = 0, nuh_prime = 0;
  bool excluded = false;  // the case the torus theorem leaves open
};

TorusNu torus_nu(long m, long n, const QuadField& field);
// Multiset of h-exponents of the torus-link Alexander module.
std::vector<unsigned> torus_htorsion(long m, long n, const QuadField& field);

// Coloring transfer matrix of the basic torus braid, acting on the left.
FqMat torus_matrix(uint32_t m, const QuadField& field);
// V_{m,n}: fixed space of M_m^n, as RREF basis rows.
FqMat v_space(uint32_t m, uint32_t n, const QuadField& field);
FqMat fq_mat_mul(const QuadField& f, const FqMat& a, const FqMat& b);
FqMat fq_mat_pow(const QuadField& f, FqMat a, uint64_t e);

// Multivariate integer polynomials in x, y_1..y_k, z_1..z_k.
struct MultiPoly {
  unsigned k = 0;
  std::map<std::vector<uint8_t>, cpp_int> terms;  // exponents [x, y_1.., z_1..]

  static MultiPoly zero(unsigned k) { return {k, {}}; }
  static MultiPoly constant(unsigned k, const cpp_int& c);
  static MultiPoly var_x(unsigned k);
  static MultiPoly var_y(unsigned k, unsigned i);
  static MultiPoly var_z(unsigned k, unsigned i);
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly deriv_x() const;
  bool operator==(const MultiPoly& o) const { return terms == o.terms; }
};

// The appendix identity f'_k f_{k-1} - f_k f'_{k-1} = z_k sum y_i f_{i-1}^2,
// plus the monomial expansion of f_k; exact symbolic computation.
bool poly_identity_check(unsigned k);
// Specialized identity alpha'_k alpha_{k-1} - alpha_k alpha'_{k-1} = n_k eps_k.
bool twist_identity_check(const TwistSeq& seq);

long ord_mod(long base, long modulus);  // multiplicative order, gcd = 1

}  // namespace qq
