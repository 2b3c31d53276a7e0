#include "qq/laurent.hpp"

#include <algorithm>
#include <cctype>

namespace qq {

namespace {

uint32_t mod_inv(uint32_t x, uint32_t p) {
  uint64_t r = 1, b = x % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

}  // namespace

LaurentPoly::LaurentPoly(uint32_t p, int shift, std::vector<uint32_t> coeffs)
    : p_(p), shift_(shift), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= p_;
  normalize();
}

void LaurentPoly::normalize() {
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
    c_ = std::vector<uint32_t>(c_.begin() + lo, c_.begin() + hi);
    shift_ += static_cast<int>(lo);
  }
  if (c_.size() > kDegreeCap)
    fail(Errc::DegreeCapExceeded, "polynomial degree exceeds cap " + std::to_string(kDegreeCap));
}

LaurentPoly LaurentPoly::nabla(uint32_t p) { return LaurentPoly(p, -1, {1, p - 2, 1}); }

LaurentPoly LaurentPoly::tn_minus_1(uint32_t p, unsigned n) {
  std::vector<uint32_t> c(n + 1, 0);
  c[0] = p - 1;
  c[n] = 1;
  return {p, 0, std::move(c)};
}

LaurentPoly LaurentPoly::from_int(uint32_t p, int shift, const std::vector<long long>& coeffs) {
  std::vector<uint32_t> c(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    long long r = coeffs[i] % static_cast<long long>(p);
    c[i] = static_cast<uint32_t>(r < 0 ? r + p : r);
  }
  return {p, shift, std::move(c)};
}

uint32_t LaurentPoly::coeff(int e) const {
  if (e < shift_ || e > hi()) return 0;
  return c_[e - shift_];
}

LaurentPoly LaurentPoly::canonical_associate() const {
  if (is_zero()) return *this;
  LaurentPoly r = *this;
  r.shift_ = 0;
  if (r.lead() != 1) r = r.scaled(mod_inv(r.lead(), p_));
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  if (is_zero()) return *this;
  LaurentPoly r = *this;
  r.shift_ += k;
  return r;
}

LaurentPoly LaurentPoly::scaled(uint32_t c) const {
  c %= p_;
  LaurentPoly r(p_);
  if (c == 0 || is_zero()) return r;
  r.shift_ = shift_;
  r.c_.resize(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = static_cast<uint32_t>(uint64_t(c_[i]) * c % p_);
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_internal(p_ == o.p_, "mixed moduli");
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo_ = std::min(shift_, o.shift_), hi_ = std::max(hi(), o.hi());
  LaurentPoly r(p_);
  r.shift_ = lo_;
  r.c_.assign(hi_ - lo_ + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[shift_ - lo_ + i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i)
    r.c_[o.shift_ - lo_ + i] = (r.c_[o.shift_ - lo_ + i] + o.c_[i]) % p_;
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = x == 0 ? 0 : p_ - x;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_internal(p_ == o.p_, "mixed moduli");
  LaurentPoly r(p_);
  if (is_zero() || o.is_zero()) return r;
  if (c_.size() + o.c_.size() > kDegreeCap)
    fail(Errc::DegreeCapExceeded, "product degree exceeds cap");
  r.shift_ = shift_ + o.shift_;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = static_cast<uint32_t>((r.c_[i + j] + uint64_t(c_[i]) * o.c_[j]) % p_);
  }
  r.normalize();
  return r;
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::divmod(const LaurentPoly& f,
                                                        const LaurentPoly& g) {
  check_internal(f.p_ == g.p_, "mixed moduli");
  if (g.is_zero()) fail(Errc::DivisionByZero, "division by zero polynomial");
  uint32_t p = f.p_;
  if (f.is_zero()) return {LaurentPoly(p), LaurentPoly(p)};
  // Work in F_p[t] on shift-0 copies, restore t-powers afterwards.
  std::vector<uint32_t> rem = f.c_;
  const std::vector<uint32_t>& d = g.c_;
  uint32_t dinv = mod_inv(g.lead(), p);
  std::vector<uint32_t> quot(rem.size() >= d.size() ? rem.size() - d.size() + 1 : 0, 0);
  for (int i = static_cast<int>(rem.size()) - static_cast<int>(d.size()); i >= 0; --i) {
    uint32_t c = static_cast<uint32_t>(uint64_t(rem[i + d.size() - 1]) * dinv % p);
    if (c == 0) continue;
    quot[i] = c;
    for (size_t j = 0; j < d.size(); ++j) {
      uint64_t sub = uint64_t(c) * d[j] % p;
      rem[i + j] = static_cast<uint32_t>((rem[i + j] + p - sub) % p);
    }
  }
  LaurentPoly q(p, f.shift_ - g.shift_, std::move(quot));
  LaurentPoly r(p, f.shift_, std::move(rem));
  return {q, r};
}

bool LaurentPoly::divides(const LaurentPoly& g, const LaurentPoly& f) {
  return divmod(f, g).second.is_zero();
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() && g.is_zero()) fail(Errc::BothZero, "gcd(0, 0)");
  LaurentPoly a = f, b = g;
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = b;
    b = r;
  }
  return a.canonical_associate();
}

Bezout LaurentPoly::gcd_ext(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() && g.is_zero()) fail(Errc::BothZero, "gcd(0, 0)");
  uint32_t p = f.p_;
  LaurentPoly a = f, b = g;
  LaurentPoly ua = constant(p, 1), va = zero(p);
  LaurentPoly ub = zero(p), vb = constant(p, 1);
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    LaurentPoly ur = ua - q * ub, vr = va - q * vb;
    a = b;
    ua = ub;
    va = vb;
    b = r;
    ub = ur;
    vb = vr;
  }
  // Normalize to the canonical associate: divide by the unit lead * t^shift.
  uint32_t cinv = mod_inv(a.lead(), p);
  int sh = -a.lo();
  LaurentPoly d = a.scaled(cinv).shifted(sh);
  check_internal(d == a.canonical_associate(), "gcd_ext normalization");
  return {d, ua.scaled(cinv).shifted(sh), va.scaled(cinv).shifted(sh)};
}

bool LaurentPoly::is_irreducible() const {
  if (is_zero() || is_unit()) return false;
  unsigned n = static_cast<unsigned>(deg());
  if (n == 1) return true;
  // Rabin's test on the shift-0 part in F_p[t]: t^{p^n} = t mod f, and
  // gcd(t^{p^{n/l}} - t, f) = 1 for every prime l dividing n.  Plain dense
  // vectors here; Laurent divmod normalizes shifts away and is not a
  // polynomial reduction.
  uint32_t p = p_;
  std::vector<uint32_t> f = c_;
  {
    uint32_t linv = mod_inv(f.back(), p);
    for (auto& x : f) x = static_cast<uint32_t>(uint64_t(x) * linv % p);
  }
  auto mulmod = [&](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; j < b.size(); ++j)
        r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t(a[i]) * b[j]) % p);
    }
    // long division by monic f of degree n
    for (size_t i = r.size(); i-- > n;) {
      uint32_t c = r[i];
      if (c == 0) continue;
      r[i] = 0;
      for (size_t j = 0; j < n; ++j)
        r[i - n + j] = static_cast<uint32_t>((r[i - n + j] + uint64_t(p - c) * f[j]) % p);
    }
    r.resize(std::min(r.size(), static_cast<size_t>(n)));
    return r;
  };
  auto frobenius_iterate = [&](unsigned steps) {
    std::vector<uint32_t> x = {0, 1};  // t
    for (unsigned s = 0; s < steps; ++s) {
      std::vector<uint32_t> r = {1}, base = x;
      uint64_t e = p;
      while (e) {
        if (e & 1) r = mulmod(r, base);
        base = mulmod(base, base);
        e >>= 1;
      }
      x = r;
    }
    x.resize(n, 0);
    return x;
  };
  std::vector<uint32_t> tvec(n, 0);
  if (n > 1) tvec[1] = 1;
  if (frobenius_iterate(n) != tvec) return false;
  std::vector<unsigned> prime_factors;
  unsigned m = n;
  for (unsigned l = 2; l * l <= m; ++l)
    if (m % l == 0) {
      prime_factors.push_back(l);
      while (m % l == 0) m /= l;
    }
  if (m > 1) prime_factors.push_back(m);
  for (unsigned l : prime_factors) {
    std::vector<uint32_t> g = frobenius_iterate(n / l);
    g[1] = (g[1] + p - 1) % p;  // subtract t
    LaurentPoly gp(p, 0, g);
    if (gp.is_zero() || !gcd(gp, *this).is_unit()) return false;
  }
  return true;
}

unsigned LaurentPoly::valuation(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero()) fail(Errc::ZeroArgument, "valuation of 0");
  if (!g.is_irreducible()) fail(Errc::ReducibleModulus, "valuation modulus not irreducible");
  unsigned e = 0;
  LaurentPoly r = f;
  while (true) {
    auto [q, rem] = divmod(r, g);
    if (!rem.is_zero()) return e;
    r = q;
    ++e;
  }
}

FqElt LaurentPoly::eval_at_theta(const QuadField& f) const {
  check_internal(f.p() == p_, "field/poly modulus mismatch");
  FqElt acc = f.zero();
  // Horner on the shift-0 part, then multiply by theta^shift.
  for (size_t i = c_.size(); i-- > 0;) {
    acc = f.add(f.mul(acc, f.theta()), f.from_fp(c_[i]));
  }
  if (shift_ != 0) {
    FqElt th = shift_ > 0 ? f.theta() : f.conj(f.theta());  // theta^{-1} = conj(theta)
    FqElt mul_pow = f.pow(th, static_cast<uint64_t>(shift_ > 0 ? shift_ : -shift_));
    acc = f.mul(acc, mul_pow);
  }
  return acc;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int e = hi(); e >= lo(); --e) {
    uint32_t c = coeff(e);
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (e == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += "t";
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

LaurentPoly LaurentPoly::parse(uint32_t p, std::string_view text) {
  // Grammar: term (('+'|'-') term)*, term = int | [int '*'] 't' ['^' int].
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_int = [&]() -> long long {
    skip_ws();
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail(Errc::SyntaxError, "expected integer in polynomial");
    long long v = std::stoll(std::string(text.substr(start, i - start)));
    return neg ? -v : v;
  };
  LaurentPoly acc(p);
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    long long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      fail(Errc::SyntaxError, "expected '+' or '-' between terms");
    }
    first = false;
    long long coeff = 1;
    bool have_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = parse_int();
      have_coeff = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    int exp = 0;
    if (i < text.size() && text[i] == 't') {
      ++i;
      exp = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        exp = static_cast<int>(parse_int());
      }
    } else if (!have_coeff) {
      fail(Errc::SyntaxError, "expected term");
    }
    acc = acc + from_int(p, exp, {sign * coeff});
  }
  if (first) fail(Errc::SyntaxError, "empty polynomial");
  return acc;
}

unsigned cyclotomic_valuation(unsigned n, const QuadField& field) {
  if (n == 0) fail(Errc::BadParams, "n must be positive");
  if (n % field.q() != 0) return 0;
  unsigned e = 1;
  while (n % field.p() == 0) {
    n /= field.p();
    e *= field.p();
  }
  return e;
}

}  // namespace qq
