#include "qq/alexander.hpp"

#include <algorithm>

namespace qq {

LaurentMat mat_identity(uint32_t p, size_t n) {
  LaurentMat m(n, std::vector<LaurentPoly>(n, LaurentPoly::zero(p)));
  for (size_t i = 0; i < n; ++i) m[i][i] = LaurentPoly::constant(p, 1);
  return m;
}

LaurentMat mat_mul(const LaurentMat& a, const LaurentMat& b) {
  size_t r = a.size(), k = b.size(), c = k ? b[0].size() : 0;
  check_internal(!a.empty() && a[0].size() == k, "matrix shape mismatch");
  uint32_t p = a[0][0].p();
  LaurentMat out(r, std::vector<LaurentPoly>(c, LaurentPoly::zero(p)));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) {
      LaurentPoly s = LaurentPoly::zero(p);
      for (size_t l = 0; l < k; ++l)
        if (!a[i][l].is_zero() && !b[l][j].is_zero()) s = s + a[i][l] * b[l][j];
      out[i][j] = s;
    }
  return out;
}

LaurentPoly mat_det(const LaurentMat& a) {
  size_t n = a.size();
  check_internal(n > 0 && a[0].size() == n, "det needs square matrix");
  uint32_t p = a[0][0].p();
  if (n == 1) return a[0][0];
  LaurentPoly det = LaurentPoly::zero(p);
  // Laplace expansion; fine for the small matrices we test with.
  for (size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    LaurentMat minor(n - 1, std::vector<LaurentPoly>(n - 1, LaurentPoly::zero(p)));
    for (size_t i = 1; i < n; ++i) {
      size_t cc = 0;
      for (size_t jj = 0; jj < n; ++jj) {
        if (jj == j) continue;
        minor[i - 1][cc++] = a[i][jj];
      }
    }
    LaurentPoly term = a[0][j] * mat_det(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

namespace {

struct SnfWorker {
  uint32_t p;
  size_t R, C;
  LaurentMat D, U, V, Uinv, Vinv;

  explicit SnfWorker(const LaurentMat& m)
      : p(m.empty() || m[0].empty() ? 2 : m[0][0].p()),
        R(m.size()),
        C(m.empty() ? 0 : m[0].size()),
        D(m),
        U(mat_identity(p, R)),
        V(mat_identity(p, C)),
        Uinv(mat_identity(p, R)),
        Vinv(mat_identity(p, C)) {}

  // Row ops update U (left factor) and Uinv; column ops V and Vinv.
  void row_swap(size_t i, size_t j) {
    if (i == j) return;
    std::swap(D[i], D[j]);
    std::swap(U[i], U[j]);
    for (size_t k = 0; k < R; ++k) std::swap(Uinv[k][i], Uinv[k][j]);
  }
  void col_swap(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < R; ++k) std::swap(D[k][i], D[k][j]);
    for (size_t k = 0; k < C; ++k) std::swap(V[k][i], V[k][j]);
    std::swap(Vinv[i], Vinv[j]);
  }
  // row i += f * row j
  void row_addmul(size_t i, size_t j, const LaurentPoly& f) {
    if (f.is_zero()) return;
    for (size_t k = 0; k < C; ++k)
      if (!D[j][k].is_zero()) D[i][k] = D[i][k] + f * D[j][k];
    for (size_t k = 0; k < R; ++k)
      if (!U[j][k].is_zero()) U[i][k] = U[i][k] + f * U[j][k];
    // inverse op on Uinv: column j -= f * column i
    for (size_t k = 0; k < R; ++k)
      if (!Uinv[k][i].is_zero()) Uinv[k][j] = Uinv[k][j] - f * Uinv[k][i];
  }
  // col i += f * col j
  void col_addmul(size_t i, size_t j, const LaurentPoly& f) {
    if (f.is_zero()) return;
    for (size_t k = 0; k < R; ++k)
      if (!D[k][j].is_zero()) D[k][i] = D[k][i] + D[k][j] * f;
    for (size_t k = 0; k < C; ++k)
      if (!V[k][j].is_zero()) V[k][i] = V[k][i] + V[k][j] * f;
    for (size_t k = 0; k < C; ++k)
      if (!Vinv[i][k].is_zero()) Vinv[j][k] = Vinv[j][k] - f * Vinv[i][k];
  }
  uint32_t fp_inv(uint32_t c) const {
    uint64_t r = 1, b = c % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<uint32_t>(r);
  }

  // Multiply row i by the unit c*t^sh (and Uinv column by the inverse unit).
  void row_scale_unit(size_t i, uint32_t c, int sh) {
    LaurentPoly u = LaurentPoly::t_power(p, sh, c);
    for (size_t k = 0; k < C; ++k) D[i][k] = D[i][k] * u;
    for (size_t k = 0; k < R; ++k) U[i][k] = U[i][k] * u;
    LaurentPoly uinv = LaurentPoly::t_power(p, -sh, fp_inv(c));
    for (size_t k = 0; k < R; ++k) Uinv[k][i] = Uinv[k][i] * uinv;
  }

  // Smallest-degree nonzero entry in the trailing submatrix, ties by (row, col).
  bool find_pivot(size_t k, size_t& pi, size_t& pj) const {
    bool found = false;
    int best = 0;
    for (size_t i = k; i < R; ++i)
      for (size_t j = k; j < C; ++j) {
        if (D[i][j].is_zero()) continue;
        int deg = D[i][j].deg();
        if (!found || deg < best) {
          found = true;
          best = deg;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  void run() {
    size_t n = std::min(R, C);
    for (size_t k = 0; k < n; ++k) {
      size_t pi, pj;
      if (!find_pivot(k, pi, pj)) break;
      row_swap(k, pi);
      col_swap(k, pj);
      while (true) {
        // Reduce column k below the pivot.
        bool clean = true;
        for (size_t i = k + 1; i < R; ++i) {
          if (D[i][k].is_zero()) continue;
          auto [q, r] = LaurentPoly::divmod(D[i][k], D[k][k]);
          row_addmul(i, k, -q);
          if (!D[i][k].is_zero()) {  // remainder has smaller degree: new pivot
            row_swap(k, i);
            clean = false;
            break;
          }
        }
        if (!clean) continue;
        for (size_t j = k + 1; j < C; ++j) {
          if (D[k][j].is_zero()) continue;
          auto [q, r] = LaurentPoly::divmod(D[k][j], D[k][k]);
          col_addmul(j, k, -q);
          if (!D[k][j].is_zero()) {
            col_swap(k, j);
            clean = false;
            break;
          }
        }
        if (!clean) continue;
        // Divisibility fix-up: pivot must divide the trailing submatrix.
        bool fixed = false;
        for (size_t i = k + 1; i < R && !fixed; ++i)
          for (size_t j = k + 1; j < C && !fixed; ++j) {
            if (D[i][j].is_zero()) continue;
            if (!LaurentPoly::divides(D[k][k], D[i][j])) {
              row_addmul(k, i, LaurentPoly::constant(p, 1));
              fixed = true;
            }
          }
        if (!fixed) break;
      }
      // Normalize the pivot to its canonical associate.
      const LaurentPoly& d = D[k][k];
      if (!d.is_zero() && !(d.lead() == 1 && d.lo() == 0))
        row_scale_unit(k, fp_inv(d.lead()), -d.lo());
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const LaurentMat& m, size_t cols_hint, uint32_t p_hint) {
  SmithForm sf;
  sf.rows = m.size();
  sf.cols = m.empty() ? cols_hint : m[0].size();
  if (sf.rows == 0 || sf.cols == 0) {
    uint32_t p = p_hint;
    if (!m.empty() && !m[0].empty()) p = m[0][0].p();
    sf.D = m;
    sf.U = mat_identity(p, sf.rows);
    sf.Uinv = sf.U;
    sf.V = mat_identity(p, sf.cols);
    sf.Vinv = sf.V;
    return sf;
  }
  SnfWorker w(m);
  w.run();
  sf.D = std::move(w.D);
  sf.U = std::move(w.U);
  sf.V = std::move(w.V);
  sf.Uinv = std::move(w.Uinv);
  sf.Vinv = std::move(w.Vinv);
#ifndef NDEBUG
  check_internal(snf_verify(m, sf), "SNF recomposition");
#endif
  return sf;
}

std::vector<LaurentPoly> SmithForm::diagonal() const {
  std::vector<LaurentPoly> d;
  size_t n = std::min(rows, cols);
  d.reserve(n);
  for (size_t i = 0; i < n; ++i) d.push_back(D[i][i]);
  return d;
}

bool snf_verify(const LaurentMat& m, const SmithForm& sf) {
  if (m.empty() || m[0].empty()) return true;
  LaurentMat umv = mat_mul(mat_mul(sf.U, m), sf.V);
  if (umv != sf.D) return false;
  LaurentMat back = mat_mul(mat_mul(sf.Uinv, sf.D), sf.Vinv);
  if (back != m) return false;
  // Off-diagonal of D must vanish and the diagonal divisibility chain hold.
  for (size_t i = 0; i < sf.rows; ++i)
    for (size_t j = 0; j < sf.cols; ++j)
      if (i != j && !sf.D[i][j].is_zero()) return false;
  auto d = sf.diagonal();
  for (size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i].is_zero() && !d[i + 1].is_zero()) return false;
    if (!d[i].is_zero() && !d[i + 1].is_zero() && !LaurentPoly::divides(d[i], d[i + 1]))
      return false;
  }
  for (const auto& di : d)
    if (!di.is_zero() && !(di == di.canonical_associate())) return false;
  return true;
}

ModuleInvariants module_invariants(const SmithForm& sf, const QuadField& field) {
  ModuleInvariants mi;
  LaurentPoly h = LaurentPoly::h_poly(field);
  auto d = sf.diagonal();
  unsigned nonzero = 0;
  for (const auto& di : d) {
    if (di.is_zero()) continue;
    ++nonzero;
    unsigned e = LaurentPoly::valuation(di, h);
    if (e > 0) mi.exponents.push_back(e);
  }
  std::sort(mi.exponents.begin(), mi.exponents.end());
  mi.nu0 = static_cast<unsigned>(sf.cols) - nonzero;
  mi.nuh = static_cast<unsigned>(mi.exponents.size());
  mi.nuh_prime = static_cast<unsigned>(std::count(mi.exponents.begin(), mi.exponents.end(), 1u));
  return mi;
}

std::vector<size_t> rep_prime_indices(const SmithForm& sf, const QuadField& field) {
  std::vector<size_t> idx;
  LaurentPoly h = LaurentPoly::h_poly(field);
  auto d = sf.diagonal();
  for (size_t i = 0; i < d.size(); ++i)
    if (!d[i].is_zero() && LaurentPoly::valuation(d[i], h) == 1) idx.push_back(i);
  return idx;
}

bool in_row_space(const std::vector<LaurentPoly>& v, const SmithForm& sf) {
  check_internal(v.size() == sf.cols, "row-space membership: size mismatch");
  if (sf.cols == 0) return true;
  uint32_t p = v.empty() ? 2 : v[0].p();
  // v in rowspace(M) iff v*V lies in rowspace(D): coordinate j divisible by d_j.
  for (size_t j = 0; j < sf.cols; ++j) {
    LaurentPoly s = LaurentPoly::zero(p);
    for (size_t i = 0; i < sf.cols; ++i)
      if (!v[i].is_zero() && !sf.V[i][j].is_zero()) s = s + v[i] * sf.V[i][j];
    LaurentPoly dj = j < std::min(sf.rows, sf.cols) ? sf.D[j][j] : LaurentPoly::zero(p);
    if (dj.is_zero()) {
      if (!s.is_zero()) return false;
    } else if (!LaurentPoly::divides(dj, s)) {
      return false;
    }
  }
  return true;
}

bool check_relation_lemma(const Diagram& d, uint32_t p) {
  LaurentMat m = relation_matrix(d, p);
  SmithForm sf = smith_normal_form(m, d.arcs, p);
  std::vector<LaurentPoly> v(d.arcs, LaurentPoly::zero(p));
  LaurentPoly one = LaurentPoly::constant(p, 1);
  for (const auto& c : d.crossings) {
    LaurentPoly s = c.sign > 0 ? one : -one;
    v[c.rho] = v[c.rho] + s;
    v[c.omega] = v[c.omega] - s;
  }
  LaurentPoly one_minus_t = one - LaurentPoly::t_power(p, 1);
  for (auto& x : v) x = x * one_minus_t;
  return in_row_space(v, sf);
}

}  // namespace qq
