#include "qq/families.hpp"

#include <algorithm>
#include <numeric>

namespace qq {

IntLaurent::IntLaurent(int shift, std::vector<long long> coeffs)
    : shift_(shift), c_(std::move(coeffs)) {
  normalize();
}

void IntLaurent::normalize() {
  size_t lo = 0;
  while (lo < c_.size() && c_[lo] == 0) ++lo;
  if (lo == c_.size()) {
    c_.clear();
    shift_ = 0;
    return;
  }
  size_t hi = c_.size();
  while (c_[hi - 1] == 0) --hi;
  if (lo > 0 || hi < c_.size()) {
    c_ = std::vector<long long>(c_.begin() + lo, c_.begin() + hi);
    shift_ += static_cast<int>(lo);
  }
}

long long IntLaurent::coeff(int e) const {
  int i = e - shift_;
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

IntLaurent IntLaurent::operator+(const IntLaurent& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo_ = std::min(shift_, o.shift_);
  int hi_ = std::max(shift_ + static_cast<int>(c_.size()), o.shift_ + static_cast<int>(o.c_.size()));
  std::vector<long long> c(hi_ - lo_, 0);
  for (size_t i = 0; i < c_.size(); ++i) c[shift_ - lo_ + i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[o.shift_ - lo_ + i] += o.c_[i];
  return {lo_, std::move(c)};
}

IntLaurent IntLaurent::operator-() const {
  IntLaurent r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

IntLaurent IntLaurent::operator-(const IntLaurent& o) const { return *this + (-o); }

IntLaurent IntLaurent::operator*(const IntLaurent& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<long long> c(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return {shift_ + o.shift_, std::move(c)};
}

LaurentPoly IntLaurent::mod_p(uint32_t p) const { return LaurentPoly::from_int(p, shift_, c_); }

std::string IntLaurent::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int e = shift_ + static_cast<int>(c_.size()) - 1; e >= shift_; --e) {
    long long c = coeff(e);
    if (c == 0) continue;
    if (!s.empty() && c > 0) s += "+";
    if (e == 0) {
      s += std::to_string(c);
    } else {
      if (c == -1)
        s += "-";
      else if (c != 1)
        s += std::to_string(c) + "*";
      s += "t";
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

Mat2 mat2_identity() {
  Mat2 m;
  m[0][0] = IntLaurent::constant(1);
  m[1][1] = IntLaurent::constant(1);
  return m;
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

namespace {

Mat2 m_pm(int e) {
  // [[t^e, 1-t^e], [t^e - 1, 2 - t^e]]
  Mat2 m;
  m[0][0] = IntLaurent::t_power(e);
  m[0][1] = IntLaurent::constant(1) - IntLaurent::t_power(e);
  m[1][0] = IntLaurent::t_power(e) - IntLaurent::constant(1);
  m[1][1] = IntLaurent::constant(2) - IntLaurent::t_power(e);
  return m;
}

}  // namespace

Mat2 m_plus() { return m_pm(1); }
Mat2 m_minus() { return m_pm(-1); }

Mat2 mn_power(long long n, bool plus) {
  int e = plus ? 1 : -1;
  IntLaurent te1 = IntLaurent::t_power(e) - IntLaurent::constant(1);  // t^e - 1
  Mat2 m;
  m[0][0] = IntLaurent::constant(n) * te1 + IntLaurent::constant(1);
  m[0][1] = -(IntLaurent::constant(n) * te1);
  m[1][0] = IntLaurent::constant(n) * te1;
  m[1][1] = -(IntLaurent::constant(n) * te1) + IntLaurent::constant(1);
  return m;
}

TwistSeq cf_expand(long P, long Q) {
  if (P < 1 || P % 2 == 0 || Q < 1 || Q >= P) fail(Errc::BadRange, "need P odd, 0 < Q < P");
  if (std::gcd(P, Q) != 1) fail(Errc::NotCoprime, "P and Q must be coprime");
  if (Q % 2 != 0) Q = P - Q;  // mirror image; makes Q even
  TwistSeq seq;
  long num = P, den = Q;
  // Alternate m- and n-steps: pick the integer nearest to the quotient (no
  // ties can occur with gcd 1); remainder magnitudes strictly decrease and
  // the even one reaches 0, always at an n-step.
  auto iround = [](long a, long b) {  // nearest integer to a/b
    if (b < 0) {
      a = -a;
      b = -b;
    }
    long nn = 2 * a + b, dd = 2 * b;
    long q = nn / dd;
    if (nn % dd != 0 && nn < 0) --q;
    return q;
  };
  while (true) {
    if (den < 0) {
      den = -den;
      num = -num;
    }
    long m = iround(num, 2 * den);
    long num2 = 2 * m * den - num;  // odd, |num2| < den
    check_internal(num2 != 0 && std::abs(num2) < den, "m-step remainder");
    long n = iround(den, 2 * num2);
    long den2 = 2 * n * num2 - den;  // even, |den2| < |num2|
    check_internal(std::abs(den2) < std::abs(num2), "n-step remainder");
    seq.pairs.emplace_back(m, n);
    if (den2 == 0) break;
    num = num2;
    den = den2;
  }
  return seq;
}

std::pair<cpp_int, cpp_int> cf_value(const TwistSeq& seq) {
  // Fold from the innermost term: value = 2m_1 - 1/(2n_1 - 1/(...)).
  cpp_int num = 0, den = 1;  // running value num/den, innermost outward
  bool have = false;
  for (size_t i = seq.pairs.size(); i-- > 0;) {
    auto [m, n] = seq.pairs[i];
    // x -> 2n - 1/x, then x -> 2m - 1/x
    for (long long v : {static_cast<long long>(n), static_cast<long long>(m)}) {
      if (!have) {
        num = 2 * cpp_int(v);
        den = 1;
        have = true;
        continue;
      }
      cpp_int nn = 2 * cpp_int(v) * num - den;
      den = num;
      num = nn;
    }
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  cpp_int g = boost::multiprecision::gcd(boost::multiprecision::abs(num), den);
  if (g != 0) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

namespace {

void zpoly_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

ZPoly zpoly_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zpoly_trim(r);
  return r;
}

ZPoly zpoly_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zpoly_trim(r);
  return r;
}

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  zpoly_trim(r);
  return r;
}

ZPoly zpoly_scale(const cpp_int& c, const ZPoly& a) {
  ZPoly r = a;
  for (auto& x : r) x *= c;
  zpoly_trim(r);
  return r;
}

ZPoly zpoly_deriv(const ZPoly& a) {
  ZPoly r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<long>(i));
  zpoly_trim(r);
  return r;
}

bool zpoly_eq(const ZPoly& a, const ZPoly& b) {
  ZPoly x = a, y = b;
  zpoly_trim(x);
  zpoly_trim(y);
  return x == y;
}

uint32_t zpoly_eval_mod(const ZPoly& a, uint32_t x, uint32_t p) {
  uint64_t acc = 0;
  for (size_t i = a.size(); i-- > 0;) {
    cpp_int c = a[i] % p;
    if (c < 0) c += p;
    acc = (acc * x + static_cast<uint64_t>(c)) % p;
  }
  return static_cast<uint32_t>(acc);
}

LaurentPoly zpoly_at_nabla(const ZPoly& a, uint32_t p) {
  LaurentPoly nabla = LaurentPoly::nabla(p);
  LaurentPoly acc = LaurentPoly::zero(p);
  for (size_t i = a.size(); i-- > 0;) {
    cpp_int c = a[i] % p;
    if (c < 0) c += p;
    acc = acc * nabla + LaurentPoly::constant(p, static_cast<uint32_t>(c));
  }
  return acc;
}

TwistPolys twist_polys(const TwistSeq& seq) {
  TwistPolys tp;
  size_t k = seq.pairs.size();
  tp.alpha.assign(k + 1, {});
  tp.beta.assign(k + 1, {});
  tp.gamma.assign(k + 1, {});
  tp.delta.assign(k + 1, {});
  tp.alpha[0] = {1};
  tp.delta[0] = {1};
  tp.epsilon_k = {};
  for (size_t i = 1; i <= k; ++i) {
    cpp_int m = seq.pairs[i - 1].first, n = seq.pairs[i - 1].second;
    ZPoly mnx = {0, m * n};  // m*n*x
    ZPoly nx = {0, n};
    ZPoly mx = {0, m};
    ZPoly one = {1};
    tp.alpha[i] = zpoly_add(zpoly_mul(zpoly_add(one, mnx), tp.alpha[i - 1]),
                            zpoly_mul(nx, tp.gamma[i - 1]));
    tp.beta[i] = zpoly_add(zpoly_mul(zpoly_add(one, mnx), tp.beta[i - 1]),
                           zpoly_scale(n, tp.delta[i - 1]));
    tp.gamma[i] = zpoly_add(zpoly_scale(m, tp.alpha[i - 1]), tp.gamma[i - 1]);
    tp.delta[i] = zpoly_add(zpoly_mul(mx, tp.beta[i - 1]), tp.delta[i - 1]);
    tp.epsilon_k = zpoly_add(tp.epsilon_k, zpoly_scale(m, zpoly_mul(tp.alpha[i - 1], tp.alpha[i - 1])));
    // Determinant identity alpha*delta - x*beta*gamma = 1 at every stage.
    ZPoly det = zpoly_sub(zpoly_mul(tp.alpha[i], tp.delta[i]),
                          zpoly_mul({0, 1}, zpoly_mul(tp.beta[i], tp.gamma[i])));
    check_internal(zpoly_eq(det, {1}), "twist polynomial determinant identity");
  }
  return tp;
}

TwoBridgeReport twobridge_invariant(long P, long Q, const QuadField& field) {
  TwoBridgeReport rep;
  rep.seq = cf_expand(P, Q);
  rep.P = P;
  rep.Q = (Q % 2 != 0) ? P - Q : Q;
  TwistPolys tp = twist_polys(rep.seq);
  uint32_t p = field.p();
  LaurentPoly alpha_nabla = zpoly_at_nabla(tp.alpha.back(), p);
  check_internal(!alpha_nabla.is_zero(), "alpha_k(nabla) has constant term 1");
  LaurentPoly h = LaurentPoly::h_poly(field);
  rep.exponent = LaurentPoly::valuation(alpha_nabla, h);
  rep.nuh = rep.exponent >= 1 ? 1 : 0;
  rep.nuh_prime = rep.exponent == 1 ? 1 : 0;
  uint32_t lambda = field.fp_reduce(-static_cast<long long>(field.kappa()) - 2);
  uint32_t eps_val = zpoly_eval_mod(tp.epsilon_k, lambda, p);
  rep.r = (rep.nuh >= 1 && eps_val != 0) ? 1 : 0;
  rep.s = rep.nuh + 1 - rep.r;
  rep.phi = phi_closed_form(rep.r, rep.s, p);
  return rep;
}

long ord_mod(long base, long modulus) {
  check_internal(modulus >= 1, "order modulus");
  if (modulus == 1) return 1;
  check_internal(std::gcd(base, modulus) == 1, "order needs coprime base");
  long x = base % modulus, cur = 1, ord = 0;
  do {
    cur = (cur * x) % modulus;
    ++ord;
  } while (cur != 1);
  return ord;
}

TorusNu torus_nu(long m, long n, const QuadField& field) {
  if (m < 1 || n < 1) fail(Errc::BadParams, "torus parameters must be positive");
  TorusNu out;
  if (m == 1 || n == 1) return out;  // unknot
  long p = field.p(), q = field.q();
  long c = std::gcd(m, n);
  long mn_over_c = m * (n / c);
  if (mn_over_c % q != 0) return out;  // case 0
  out.excluded = (m % p != 0 && n % p != 0) && (ord_mod(p, c) % 4 == 0);
  if (c % p == 0) {
    // case 1 (swap so that p does not divide m/c; it cannot divide both)
    if ((m / c) % p == 0) std::swap(m, n);
    check_internal((m / c) % p != 0, "case 1 normalization");
    bool q_div_m = m % q == 0, q_div_n = n % q == 0, p_div_nc = (n / c) % p == 0;
    unsigned nuh;
    if (!q_div_n && (!q_div_m || p_div_nc))
      nuh = static_cast<unsigned>(c);
    else if (q_div_m && q_div_n && !p_div_nc)
      nuh = static_cast<unsigned>(c - 2);
    else
      nuh = static_cast<unsigned>(c - 1);
    out.nuh = nuh;
    out.nuh_prime = 0;
  } else if (m % p == 0 || n % p == 0) {
    // case 2 (swap so that p | m; then p does not divide n)
    if (n % p == 0) std::swap(m, n);
    out.nuh = static_cast<unsigned>(m % q != 0 ? c : c - 1);
    out.nuh_prime = (p == 2 && n % 3 == 0 && m % 4 == 2) ? 1 : 0;
  } else {
    // case 3
    bool q_div_m = m % q == 0, q_div_n = n % q == 0;
    unsigned nuh;
    if (!q_div_m && !q_div_n)
      nuh = static_cast<unsigned>(c);
    else if (q_div_m && q_div_n)
      nuh = static_cast<unsigned>(c - 2);
    else
      nuh = static_cast<unsigned>(c - 1);
    out.nuh = nuh;
    out.nuh_prime = nuh;
  }
  return out;
}

std::vector<unsigned> torus_htorsion(long m, long n, const QuadField& field) {
  if (m < 1 || n < 1) fail(Errc::BadParams, "torus parameters must be positive");
  std::vector<unsigned> exps;
  if (m == 1 || n == 1) return exps;
  long c = std::gcd(m, n);
  auto v = [&](long k) { return static_cast<long>(cyclotomic_valuation(static_cast<unsigned>(k), field)); };
  if (c == 1) {
    long e = v(m * n) - v(m) - v(n);
    check_internal(e >= 0, "negative torus h-exponent");
    if (e > 0) exps.push_back(static_cast<unsigned>(e));
  } else {
    long vm = v(m * (n / c));
    long e1 = vm - v(m), e2 = vm - v(n);
    check_internal(e1 >= 0 && e2 >= 0, "negative torus h-exponent");
    if (e1 > 0) exps.push_back(static_cast<unsigned>(e1));
    if (e2 > 0) exps.push_back(static_cast<unsigned>(e2));
    for (long i = 3; i <= c; ++i)
      if (vm > 0) exps.push_back(static_cast<unsigned>(vm));
  }
  std::sort(exps.begin(), exps.end());
  return exps;
}

FqMat torus_matrix(uint32_t m, const QuadField& field) {
  if (m < 2) fail(Errc::BadParams, "torus matrix needs m >= 2");
  FqMat mat(m, FqVec(m, FqElt{0, 0}));
  FqElt theta = field.theta();
  FqElt one_minus_theta = field.sub(field.one(), theta);
  mat[0][m - 1] = field.one();
  for (uint32_t i = 1; i < m; ++i) {
    mat[i][i - 1] = theta;
    mat[i][m - 1] = field.add(mat[i][m - 1], one_minus_theta);
  }
  return mat;
}

FqMat fq_mat_mul(const QuadField& f, const FqMat& a, const FqMat& b) {
  size_t r = a.size(), k = b.size(), c = k ? b[0].size() : 0;
  FqMat out(r, FqVec(c, FqElt{0, 0}));
  for (size_t i = 0; i < r; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (f.is_zero(a[i][l])) continue;
      for (size_t j = 0; j < c; ++j)
        out[i][j] = f.add(out[i][j], f.mul(a[i][l], b[l][j]));
    }
  return out;
}

FqMat fq_mat_pow(const QuadField& f, FqMat a, uint64_t e) {
  size_t n = a.size();
  FqMat r(n, FqVec(n, FqElt{0, 0}));
  for (size_t i = 0; i < n; ++i) r[i][i] = f.one();
  while (e) {
    if (e & 1) r = fq_mat_mul(f, r, a);
    a = fq_mat_mul(f, a, a);
    e >>= 1;
  }
  return r;
}

FqMat v_space(uint32_t m, uint32_t n, const QuadField& field) {
  if (m < 2 || n < 1) fail(Errc::BadParams, "v_space needs m >= 2, n >= 1");
  FqMat mn = fq_mat_pow(field, torus_matrix(m, field), n);
  for (uint32_t i = 0; i < m; ++i) mn[i][i] = field.sub(mn[i][i], field.one());
  return nullspace(field, mn);
}

MultiPoly MultiPoly::constant(unsigned k, const cpp_int& c) {
  MultiPoly p = zero(k);
  if (c != 0) p.terms[std::vector<uint8_t>(1 + 2 * k, 0)] = c;
  return p;
}

MultiPoly MultiPoly::var_x(unsigned k) {
  MultiPoly p = zero(k);
  std::vector<uint8_t> e(1 + 2 * k, 0);
  e[0] = 1;
  p.terms[e] = 1;
  return p;
}

MultiPoly MultiPoly::var_y(unsigned k, unsigned i) {
  MultiPoly p = zero(k);
  std::vector<uint8_t> e(1 + 2 * k, 0);
  e[i] = 1;  // positions 1..k are y_1..y_k
  p.terms[e] = 1;
  return p;
}

MultiPoly MultiPoly::var_z(unsigned k, unsigned i) {
  MultiPoly p = zero(k);
  std::vector<uint8_t> e(1 + 2 * k, 0);
  e[k + i] = 1;  // positions k+1..2k are z_1..z_k
  p.terms[e] = 1;
  return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms) {
    auto it = r.terms.find(e);
    if (it == r.terms.end())
      r.terms[e] = c;
    else {
      it->second += c;
      if (it->second == 0) r.terms.erase(it);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly neg = o;
  for (auto& [e, c] : neg.terms) c = -c;
  return *this + neg;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r = zero(k);
  for (const auto& [e1, c1] : terms)
    for (const auto& [e2, c2] : o.terms) {
      std::vector<uint8_t> e(e1.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = static_cast<uint8_t>(e1[i] + e2[i]);
      auto it = r.terms.find(e);
      if (it == r.terms.end())
        r.terms[e] = c1 * c2;
      else {
        it->second += c1 * c2;
        if (it->second == 0) r.terms.erase(it);
      }
    }
  return r;
}

MultiPoly MultiPoly::deriv_x() const {
  MultiPoly r = zero(k);
  for (const auto& [e, c] : terms) {
    if (e[0] == 0) continue;
    std::vector<uint8_t> e2 = e;
    e2[0] -= 1;
    r.terms[e2] = c * e[0];
  }
  return r;
}

namespace {

// Monomials y_{i1} z_{j1} ... y_{il} z_{jl}, 1 <= i1 <= j1 < i2 <= ... <= jl <= maxj,
// each weighted by x^l.
void gen_monomials(unsigned k, unsigned maxj, unsigned min_i, const MultiPoly& prefix,
                   MultiPoly& acc) {
  acc = acc + prefix;
  for (unsigned i = min_i; i <= maxj; ++i)
    for (unsigned j = i; j <= maxj; ++j) {
      MultiPoly next = prefix * MultiPoly::var_x(k) * MultiPoly::var_y(k, i) * MultiPoly::var_z(k, j);
      gen_monomials(k, maxj, j + 1, next, acc);
    }
}

}  // namespace

bool poly_identity_check(unsigned k) {
  if (k < 1 || k > 5) fail(Errc::KTooLarge, "identity check supports 1 <= k <= 5");
  std::vector<MultiPoly> f(k + 1, MultiPoly::zero(k));
  f[0] = MultiPoly::constant(k, 1);
  for (unsigned i = 1; i <= k; ++i) {
    MultiPoly sum = MultiPoly::zero(k);
    for (unsigned j = 1; j <= i; ++j) sum = sum + MultiPoly::var_y(k, j) * f[j - 1];
    f[i] = f[i - 1] + MultiPoly::var_x(k) * MultiPoly::var_z(k, i) * sum;
  }
  MultiPoly lhs = f[k].deriv_x() * f[k - 1] - f[k] * f[k - 1].deriv_x();
  MultiPoly rhs = MultiPoly::zero(k);
  for (unsigned i = 1; i <= k; ++i) rhs = rhs + MultiPoly::var_y(k, i) * (f[i - 1] * f[i - 1]);
  rhs = MultiPoly::var_z(k, k) * rhs;
  if (!(lhs == rhs)) return false;
  // Monomial expansion of f_k over monomials of height at most k.
  MultiPoly expansion = MultiPoly::zero(k);
  gen_monomials(k, k, 1, MultiPoly::constant(k, 1), expansion);
  return f[k] == expansion;
}

bool twist_identity_check(const TwistSeq& seq) {
  if (seq.pairs.empty()) fail(Errc::EmptyTwists, "empty twist sequence");
  TwistPolys tp = twist_polys(seq);
  size_t k = seq.pairs.size();
  ZPoly lhs = zpoly_sub(zpoly_mul(zpoly_deriv(tp.alpha[k]), tp.alpha[k - 1]),
                        zpoly_mul(tp.alpha[k], zpoly_deriv(tp.alpha[k - 1])));
  ZPoly rhs = zpoly_scale(seq.pairs.back().second, tp.epsilon_k);
  return zpoly_eq(lhs, rhs);
}

}  // namespace qq
