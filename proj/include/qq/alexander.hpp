#pragma once

#include <cstdint>
#include <vector>

#include "qq/diagram.hpp"
#include "qq/gf.hpp"
#include "qq/laurent.hpp"

namespace qq {

// U*M*V = D with U, V of unit determinant, D diagonal with an
// associate-canonical divisibility chain d1 | d2 | ... (zeros last).
struct SmithForm {
  size_t rows = 0, cols = 0;
  LaurentMat D, U, V, Uinv, Vinv;
  std::vector<LaurentPoly> diagonal() const;
};

// cols_hint/p_hint matter only for matrices with no rows (crossing-free
// diagrams still present a free module on their arcs).
SmithForm smith_normal_form(const LaurentMat& m, size_t cols_hint = 0, uint32_t p_hint = 2);

// Exact recomposition checks; used by tests and debug paths.
bool snf_verify(const LaurentMat& m, const SmithForm& sf);

struct ModuleInvariants {
  unsigned nu0 = 0;        // free rank of the presented module
  unsigned nuh = 0;        // number of h-power torsion factors
  unsigned nuh_prime = 0;  // number of factors exactly Lambda_p/(h)
  std::vector<unsigned> exponents;  // sorted h-exponents of the torsion factors
};

ModuleInvariants module_invariants(const SmithForm& sf, const QuadField& field);

// Diagonal generator indices with h-exponent exactly 1; annihilating these
// cuts out the subspace rep' of the coloring space.
std::vector<size_t> rep_prime_indices(const SmithForm& sf, const QuadField& field);

// (1-t) * sum_c sign(c) (rho(c) - omega(c)) vanishes in the Alexander module.
bool check_relation_lemma(const Diagram& d, uint32_t p);

// Is the row vector v in the row space of M (given M's Smith form)?
bool in_row_space(const std::vector<LaurentPoly>& v, const SmithForm& sf);

LaurentMat mat_mul(const LaurentMat& a, const LaurentMat& b);
LaurentMat mat_identity(uint32_t p, size_t n);
LaurentPoly mat_det(const LaurentMat& a);

}  // namespace qq
