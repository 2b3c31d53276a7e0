#include <cstdint>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qq/alexander.hpp"
#include "qq/diagram.hpp"
#include "qq/families.hpp"
#include "qq/gf.hpp"
#include "qq/invariant.hpp"
#include "qq/sweep.hpp"

namespace {

using nlohmann::json;

std::vector<uint32_t> parse_list(const std::string& s) {
  std::vector<uint32_t> out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!tok.empty()) out.push_back(static_cast<uint32_t>(std::stoul(tok)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

json torus_report_json(long m, long n, const qq::QuadField& field) {
  qq::TorusNu tn = qq::torus_nu(m, n, field);
  auto exps = qq::torus_htorsion(m, n, field);
  unsigned r = tn.nuh_prime;  // rank eta equals nu'_h wherever the theorem applies
  unsigned s = tn.nuh + 1 - r;
  qq::GroupRingElt phi = qq::phi_closed_form(r, s, field.p());
  json j;
  j["m"] = m;
  j["n"] = n;
  j["p"] = field.p();
  j["kappa"] = field.kappa();
  j["c"] = std::gcd(m, n);
  j["nuh"] = tn.nuh;
  j["nuh_prime"] = tn.nuh_prime;
  j["exponents"] = exps;
  j["excluded"] = tn.excluded;
  j["r"] = r;
  j["s"] = s;
  j["phi"] = phi.c;
  j["phi_str"] = phi.str();
  j["phi_factored"] = qq::phi_factored_str(r, s, field.p());
  return j;
}

json twobridge_report_json(const qq::TwoBridgeReport& rep, const qq::QuadField& field) {
  json j;
  j["P"] = rep.P;
  j["Q"] = rep.Q;
  json seq = json::array();
  for (auto [m, n] : rep.seq.pairs) seq.push_back({m, n});
  j["twists"] = seq;
  j["p"] = field.p();
  j["kappa"] = field.kappa();
  j["nuh"] = rep.nuh;
  j["nuh_prime"] = rep.nuh_prime;
  j["exponent"] = rep.exponent;
  j["r"] = rep.r;
  j["s"] = rep.s;
  j["phi"] = rep.phi.c;
  j["phi_str"] = rep.phi.str();
  j["phi_factored"] = qq::phi_factored_str(rep.r, rep.s, field.p());
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quandle cocycle state-sum invariants for quadratic quandles"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "invariant of a single diagram");
  uint32_t p = 2, kappa_in = UINT32_MAX;
  std::string pd_text, braid_text;
  bool brute_check = false;
  compute->add_option("--p", p, "prime")->required();
  compute->add_option("--kappa", kappa_in, "coefficient of h = t^2+kappa*t+1");
  compute->add_option("--pd", pd_text, "PD code, e.g. [[1,4,2,5],[3,6,4,1],[5,2,6,3]]");
  compute->add_option("--braid", braid_text, "braid word m:w1,w2,...");
  compute->add_flag("--brute-check", brute_check, "also run the state sum and compare");

  // torus
  auto* torus = app.add_subcommand("torus", "closed-form torus link invariant");
  long tm = 2, tn = 3;
  bool verify = false;
  torus->add_option("--m", tm, "strands")->required();
  torus->add_option("--n", tn, "twists")->required();
  torus->add_option("--p", p, "prime")->required();
  torus->add_option("--kappa", kappa_in, "kappa");
  torus->add_flag("--verify", verify, "cross-check against the braid-closure pipeline");

  // twobridge
  auto* twob = app.add_subcommand("twobridge", "closed-form two-bridge knot invariant");
  long P = 3, Q = 2;
  twob->add_option("--P", P, "P (odd)")->required();
  twob->add_option("--Q", Q, "Q (0 < Q < P, coprime)")->required();
  twob->add_option("--p", p, "prime")->required();
  twob->add_option("--kappa", kappa_in, "kappa");
  twob->add_flag("--verify", verify, "cross-check against the plat-diagram pipeline");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "analyze a knot table with conjecture checks");
  std::string table_path, primes_list = "2,3", kappa_list;
  bool all_kappa = false;
  unsigned jobs = qq::default_jobs();
  unsigned max_dim = 0;
  sweep->add_option("--table", table_path, "JSON-lines knot table")->required();
  sweep->add_option("--p", primes_list, "comma-separated primes (default 2,3)");
  sweep->add_flag("--all-kappa", all_kappa, "all irreducible kappa per prime");
  sweep->add_option("--kappa", kappa_list, "comma-separated kappas");
  sweep->add_option("--jobs", jobs, "worker threads (env QF_JOBS)");
  sweep->add_option("--max-dim", max_dim, "state-sum cross-check only up to this dimension");

  // identity
  auto* identity = app.add_subcommand("identity", "symbolic polynomial identity checks");
  unsigned kk = 3;
  identity->add_option("--k", kk, "number of twist-box pairs, 1..5")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) {
      if (pd_text.empty() == braid_text.empty()) {
        std::cerr << "exactly one of --pd / --braid is required\n";
        return 1;
      }
      uint32_t kappa = kappa_in == UINT32_MAX ? qq::QuadField::irreducible_kappas(p).front()
                                              : kappa_in;
      qq::QuadField field(p, kappa);
      qq::Diagram d = pd_text.empty() ? qq::braid_to_diagram(qq::parse_braid(braid_text))
                                      : qq::pd_to_diagram(qq::parse_pd(pd_text));
      qq::AnalyzeOptions opts;
      opts.brute_check = brute_check;
      qq::KnotReport rep = qq::analyze("input", d, field, opts);
      std::cout << rep.to_json() << "\n";
      if (brute_check && rep.brute_agrees.has_value() && !*rep.brute_agrees) {
        std::cerr << "state sum disagrees with the closed form\n";
        return 2;
      }
      return 0;
    }
    if (*torus) {
      uint32_t kappa = kappa_in == UINT32_MAX ? qq::QuadField::irreducible_kappas(p).front()
                                              : kappa_in;
      qq::QuadField field(p, kappa);
      json j = torus_report_json(tm, tn, field);
      if (verify) {
        qq::Diagram d = qq::braid_to_diagram(qq::torus_braid(
            static_cast<uint32_t>(tm), static_cast<uint32_t>(tn)));
        qq::KnotReport rep = qq::analyze("torus", d, field, {});
        j["verify"] = json::parse(rep.to_json());
        bool nu_ok = rep.nuh == j["nuh"] && rep.exponents == j["exponents"].get<std::vector<unsigned>>();
        bool r_ok = j["excluded"].get<bool>() || rep.r == j["r"].get<unsigned>();
        j["verify_agrees"] = nu_ok && r_ok;
        std::cout << j.dump() << "\n";
        if (!(nu_ok && r_ok)) {
          std::cerr << "closed form and pipeline disagree\n";
          return 2;
        }
        return 0;
      }
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (*twob) {
      uint32_t kappa = kappa_in == UINT32_MAX ? qq::QuadField::irreducible_kappas(p).front()
                                              : kappa_in;
      qq::QuadField field(p, kappa);
      qq::TwoBridgeReport rep = qq::twobridge_invariant(P, Q, field);
      json j = twobridge_report_json(rep, field);
      if (verify) {
        qq::Diagram d = qq::twobridge_diagram(rep.seq.pairs);
        qq::KnotReport krep = qq::analyze("twobridge", d, field, {});
        j["verify"] = json::parse(krep.to_json());
        bool ok = krep.nuh == rep.nuh && krep.nuh_prime == rep.nuh_prime && krep.r == rep.r &&
                  krep.phi == rep.phi && krep.c2;
        j["verify_agrees"] = ok;
        std::cout << j.dump() << "\n";
        if (!ok) {
          std::cerr << "closed form and pipeline disagree\n";
          return 2;
        }
        return 0;
      }
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (*sweep) {
      qq::SweepOptions opts;
      opts.primes = parse_list(primes_list);
      opts.all_kappa = all_kappa;
      if (!kappa_list.empty()) opts.kappas = parse_list(kappa_list);
      opts.jobs = jobs;
      opts.max_dim = max_dim;
      auto table = qq::load_table(table_path);
      qq::SweepResult res = qq::run_sweep(table, opts);
      qq::write_jsonl(res, std::cout);
      std::cerr << qq::summary_text(res);
      return res.counterexamples.empty() ? 0 : 2;
    }
    if (*identity) {
      if (kk < 1 || kk > 5) {
        std::cerr << "--k must be in 1..5\n";
        return 1;
      }
      bool ok = qq::poly_identity_check(kk);
      std::mt19937_64 rng(20020711);
      for (int trial = 0; trial < 200 && ok; ++trial) {
        qq::TwistSeq seq;
        size_t len = 1 + rng() % kk;
        for (size_t i = 0; i < len; ++i) {
          long m = static_cast<long>(rng() % 11) - 5;
          long n = static_cast<long>(rng() % 11) - 5;
          seq.pairs.emplace_back(m, n);
        }
        ok = qq::twist_identity_check(seq);
      }
      std::cout << (ok ? "pass" : "fail") << "\n";
      return ok ? 0 : 2;
    }
  } catch (const qq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
