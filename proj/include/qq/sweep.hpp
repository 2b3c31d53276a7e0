#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "qq/diagram.hpp"
#include "qq/invariant.hpp"

namespace qq {

struct SweepOptions {
  std::vector<uint32_t> primes{2, 3};
  bool all_kappa = false;
  std::vector<uint32_t> kappas;  // used when all_kappa is false; empty = canonical (smallest)
  unsigned jobs = 1;
  uint64_t state_cap = 10000000;
  unsigned max_dim = 0;     // when nonzero, enumerate only up to this dimension
  bool brute_check = true;  // cross-check Phi by enumeration when under the cap
};

struct SweepResult {
  std::vector<KnotReport> records;  // stable order: table order, then (p, kappa)
  std::vector<std::string> counterexamples;
  // Classification in the style of the census tables: key is the exponent
  // multiset plus the eta rank.
  struct ClassCount {
    std::vector<unsigned> exponents;
    unsigned r = 0;
    size_t count = 0;
  };
  std::vector<ClassCount> summary;
};

SweepResult run_sweep(const std::vector<TableEntry>& table, const SweepOptions& opts);

void write_jsonl(const SweepResult& res, std::ostream& os);
std::string summary_text(const SweepResult& res);

// QF_JOBS env var, default 1.
unsigned default_jobs();

}  // namespace qq
