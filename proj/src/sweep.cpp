#include "qq/sweep.hpp"

#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

namespace qq {

unsigned default_jobs() {
  if (const char* env = std::getenv("QF_JOBS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
  }
  return 1;
}

SweepResult run_sweep(const std::vector<TableEntry>& table, const SweepOptions& opts) {
  // Expand the work list up front so output order is fixed by input order.
  struct Task {
    size_t index;
    const TableEntry* entry;
    uint32_t p, kappa;
  };
  std::vector<Task> tasks;
  for (const auto& e : table) {
    for (uint32_t p : opts.primes) {
      std::vector<uint32_t> ks;
      if (opts.all_kappa)
        ks = QuadField::irreducible_kappas(p);
      else if (!opts.kappas.empty())
        ks = opts.kappas;
      else
        ks = {QuadField::irreducible_kappas(p).front()};
      for (uint32_t k : ks) tasks.push_back({tasks.size(), &e, p, k});
    }
  }
  std::vector<KnotReport> records(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& t = tasks[i];
      try {
        QuadField field(t.p, t.kappa);
        Diagram d = pd_to_diagram(t.entry->pd);
        AnalyzeOptions ao;
        ao.brute_check = opts.brute_check;
        ao.state_cap = opts.state_cap;
        if (opts.max_dim > 0) {
          uint64_t cap = 1, q = uint64_t(t.p) * t.p;
          for (unsigned j = 0; j < opts.max_dim && cap < (1ull << 62) / q; ++j) cap *= q;
          ao.state_cap = cap;
        }
        records[i] = analyze(t.entry->name, d, field, ao);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (size_t i = 0; i < tasks.size(); ++i)
    if (!errors[i].empty())
      fail(Errc::Internal, "sweep task " + tasks[i].entry->name + ": " + errors[i]);

  SweepResult res;
  res.records = std::move(records);
  std::map<std::pair<std::vector<unsigned>, unsigned>, size_t> classes;
  for (const auto& rec : res.records) {
    ++classes[{rec.exponents, rec.r}];
    if (!rec.c1 || !rec.c2)
      res.counterexamples.push_back(rec.name + " p=" + std::to_string(rec.p) +
                                    " kappa=" + std::to_string(rec.kappa));
    if (rec.brute_agrees.has_value() && !*rec.brute_agrees)
      res.counterexamples.push_back(rec.name + " p=" + std::to_string(rec.p) +
                                    " kappa=" + std::to_string(rec.kappa) + " (state sum)");
  }
  for (const auto& [key, count] : classes) res.summary.push_back({key.first, key.second, count});
  return res;
}

void write_jsonl(const SweepResult& res, std::ostream& os) {
  for (const auto& rec : res.records) os << rec.to_json() << "\n";
}

std::string summary_text(const SweepResult& res) {
  std::ostringstream os;
  os << "records: " << res.records.size() << "\n";
  os << "classes by (h-exponents, rank eta):\n";
  for (const auto& c : res.summary) {
    os << "  (";
    for (size_t i = 0; i < c.exponents.size(); ++i) {
      if (i) os << ",";
      os << c.exponents[i];
    }
    os << ") r=" << c.r << ": " << c.count << "\n";
  }
  if (res.counterexamples.empty()) {
    os << "conjecture counterexamples: none\n";
  } else {
    os << "conjecture counterexamples:\n";
    for (const auto& s : res.counterexamples) os << "  " << s << "\n";
  }
  return os.str();
}

}  // namespace qq
