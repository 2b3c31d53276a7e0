#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qq/alexander.hpp"
#include "qq/diagram.hpp"
#include "qq/gf.hpp"

namespace qq {

using FqVec = std::vector<FqElt>;
using FqMat = std::vector<FqVec>;

// Solution space of the crossing relations at t = theta, as a deterministic
// reduced-echelon basis of arc-indexed vectors.
struct ColoringSpace {
  QuadField field;
  Diagram diagram;
  std::vector<FqVec> basis;
  size_t dim() const { return basis.size(); }
};

ColoringSpace coloring_space(const Diagram& d, const QuadField& field);

// Hermitian form eta(f,g) = sum_c sign(c) eps (f_rho conj(g_omega) - f_omega conj(g_rho)).
FqElt eta(const ColoringSpace& s, const FqVec& f, const FqVec& g);
// Crossing sum of cocycle values; equals eta(f, f) and lies in F_p.
uint32_t boltzmann(const ColoringSpace& s, const FqVec& f);

struct EtaRank {
  unsigned r;  // rank of eta
  unsigned s;  // nullity; always >= 1
};

// Rank over F_p of the symmetrization eta' on the basis {f_i, theta f_i}
// (rank eta' = 2 rank eta), cross-checked against Hermitian elimination.
EtaRank eta_rank(const ColoringSpace& s);

// Element of Z[C_p]: coefficient i belongs to u^i.
struct GroupRingElt {
  uint32_t p = 2;
  std::vector<long long> c;  // size p

  static GroupRingElt zero(uint32_t p) { return {p, std::vector<long long>(p, 0)}; }
  static GroupRingElt scalar(uint32_t p, long long v);
  GroupRingElt operator+(const GroupRingElt& o) const;
  GroupRingElt operator*(const GroupRingElt& o) const;
  GroupRingElt times(long long v) const;
  GroupRingElt pow(unsigned e) const;
  bool operator==(const GroupRingElt&) const = default;
  long long eval_at_one() const;
  std::string str() const;
};

// Gamma_p = 1 + (p+1) sum_{i=1}^{p-1} u^i; evaluates to p^2 at u = 1.
GroupRingElt gamma_p(uint32_t p);
// Gamma_p^r * p^{2s}; requires s >= 1.
GroupRingElt phi_closed_form(unsigned r, unsigned s, uint32_t p);
// Exact state sum over all colorings.
GroupRingElt phi_brute_force(const ColoringSpace& s, uint64_t state_cap = 10000000);
uint64_t brute_force_states(const ColoringSpace& s);

// rad eta as a subspace of the coloring space, in basis coordinates (RREF).
FqMat radical(const ColoringSpace& s);
// rep' in basis coordinates (RREF), via the Smith-form change of basis.
FqMat rep_prime_subspace(const ColoringSpace& s, const SmithForm& sf);

struct ConjectureReport {
  bool c1 = false;  // rank eta == nu'_h
  bool c2 = false;  // rad eta == rep'
  unsigned r = 0, s = 0;
  ModuleInvariants mod;
  unsigned dim_rep = 0, dim_rad = 0, dim_rep_prime = 0;
};

ConjectureReport conjecture_check(const Diagram& d, const QuadField& field, const SmithForm& sf);

// Full per-knot record.
struct KnotReport {
  std::string name;
  uint32_t p = 2, kappa = 0;
  unsigned nu0 = 0, nuh = 0, nuh_prime = 0;
  std::vector<unsigned> exponents;
  unsigned r = 0, s = 0;
  GroupRingElt phi;
  std::string phi_factored;
  bool c1 = false, c2 = false;
  std::optional<bool> brute_agrees;  // set when the state sum was enumerated
  std::string to_json() const;
};

struct AnalyzeOptions {
  bool brute_check = false;
  uint64_t state_cap = 10000000;
};

KnotReport analyze(const std::string& name, const Diagram& d, const QuadField& field,
                   const AnalyzeOptions& opts = {});

// F_{p^2} linear algebra helpers (deterministic echelon forms).
FqMat rref(const QuadField& f, FqMat m);
FqMat nullspace(const QuadField& f, const FqMat& m);  // basis rows, RREF'd
size_t rank(const QuadField& f, FqMat m);
std::string phi_factored_str(unsigned r, unsigned s, uint32_t p);

}  // namespace qq
