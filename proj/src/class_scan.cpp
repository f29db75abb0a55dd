#include "graphrel/class_scan.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "graphrel/canonical.hpp"
#include "graphrel/graph_io.hpp"
#include "graphrel/order.hpp"
#include "graphrel/tutte.hpp"
#include "parallel.hpp"

namespace graphrel {

namespace {

std::string fnv_digest(const NTable& t) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](const std::string& s) {
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    h ^= ',';
    h *= 1099511628211ULL;
  };
  for (int i = 0; i <= t.edges(); ++i) {
    for (int j = 1; j <= t.vertices(); ++j) mix(t.at(i, j).get_str());
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool lambda_less(const std::optional<int>& a, const std::optional<int>& b) {
  if (!b) return a.has_value();
  return a && *a < *b;
}

}  // namespace

std::vector<SimpleGraph> enumerate_graphs(int n, int e) {
  if (n < 0 || n > kMaxScanVertices) {
    throw BudgetError("class enumeration supports n <= " + std::to_string(kMaxScanVertices) + ", got n=" +
                      std::to_string(n));
  }
  if (e < 0 || e > n * (n - 1) / 2) return {};
  std::map<CanonicalForm, SimpleGraph> level;
  const SimpleGraph empty(n);
  level.emplace(canonical_form(empty), empty);
  for (int step = 0; step < e; ++step) {
    std::map<CanonicalForm, SimpleGraph> next;
    for (const auto& [form, g] : level) {
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          const SimpleGraph h = g.with_edge(u, v);
          auto lab = canonical_labeling(h);
          if (next.find(lab.form) == next.end()) next.emplace(std::move(lab.form), h.relabeled(lab.label));
        }
      }
    }
    level = std::move(next);
  }
  std::vector<SimpleGraph> out;
  out.reserve(level.size());
  for (auto& [form, g] : level) out.push_back(std::move(g));
  return out;
}

std::vector<SimpleGraph> enumerate_class(ClassSpec spec) {
  if (spec.n > kMaxScanVertices) {
    throw BudgetError("class enumeration supports n <= " + std::to_string(kMaxScanVertices) + ", got n=" +
                      std::to_string(spec.n));
  }
  if (!spec.nonempty()) {
    throw std::invalid_argument("C_{" + std::to_string(spec.n) + "," + std::to_string(spec.m) +
                                "} is empty: need n >= 1 and n-1 <= m <= n(n-1)/2");
  }
  const int total = spec.n * (spec.n - 1) / 2;
  const bool via_complement = 2 * spec.m > total;
  std::vector<std::pair<CanonicalForm, SimpleGraph>> keyed;
  for (const auto& g : enumerate_graphs(spec.n, via_complement ? total - spec.m : spec.m)) {
    const SimpleGraph h = via_complement ? g.complement() : g;
    if (!is_connected(h)) continue;
    auto lab = canonical_labeling(h);
    keyed.emplace_back(std::move(lab.form), h.relabeled(lab.label));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SimpleGraph> out;
  out.reserve(keyed.size());
  for (auto& [form, g] : keyed) out.push_back(std::move(g));
  return out;
}

ClassReport scan(ClassSpec spec, const ScanConfig& config) {
  auto members = enumerate_class(spec);
  bool complete = true;
  if (config.limit && *config.limit < members.size()) {
    members.resize(*config.limit);
    complete = false;
  }
  ClassReport report = scan_members(spec, std::move(members), config);
  report.complete = complete;
  return report;
}

ClassReport scan_members(ClassSpec spec, std::vector<SimpleGraph> graphs, const ScanConfig& config) {
  for (const auto& g : graphs) {
    if (g.order() != spec.n || g.size() != spec.m) throw DimensionError("member outside the scanned class");
    if (!is_connected(g)) throw std::invalid_argument("class members must be connected");
  }
  ClassReport report;
  report.spec = spec;
  const int n = spec.n;
  const int m = spec.m;
  const std::size_t count = graphs.size();
  report.members.resize(count);

  TutteMemo memo(config.memo_entries);
  detail::parallel_for(count, config.workers, [&](std::size_t idx) {
    ClassMember& mem = report.members[idx];
    mem.graph = graphs[idx];
    mem.graph6 = to_graph6(mem.graph);
    mem.tutte = tutte_dc(mem.graph, memo);
    mem.whitney = mem.tutte.shifted(1, 1);
    mem.table = ntable_from_whitney(mem.whitney, n, m);
    mem.mu = mu_vector(mem.table);
    for (int k = 1; k <= n; ++k) {
      mem.t.push_back(t_k(mem.table, k));
      mem.lambda.push_back(lambda_k(mem.table, k));
    }
    mem.digest = fnv_digest(mem.table);
  });

  // Classwise maxima of N_i^(k), t_1 and the lex-least mu.
  std::vector<std::vector<mpz_class>> best(m + 1, std::vector<mpz_class>(n + 1, 0));
  mpz_class best_t1 = 0;
  for (const auto& mem : report.members) {
    for (int i = 0; i <= m; ++i) {
      for (int k = 1; k <= n; ++k) best[i][k] = std::max(best[i][k], mem.table.n_leq(i, k));
    }
    best_t1 = std::max(best_t1, mem.t[0]);
  }
  const std::vector<mpz_class>* least_mu = nullptr;
  for (const auto& mem : report.members) {
    if (!least_mu || mu_lex_compare(mem.mu, *least_mu) < 0) least_mu = &mem.mu;
  }

  for (auto& mem : report.members) {
    auto& f = mem.flags;
    f.k_umrg_by_domination.assign(n, true);
    for (int k = 1; k <= n; ++k) {
      for (int i = 0; i <= m; ++i) {
        if (mem.table.n_leq(i, k) != best[i][k]) {
          f.k_umrg_by_domination[k - 1] = false;
          break;
        }
      }
    }
    f.strong = std::all_of(f.k_umrg_by_domination.begin(), f.k_umrg_by_domination.end(), [](bool b) { return b; });
    f.zero_element = f.k_umrg_by_domination[0];
    f.mu_lex_min = mu_lex_compare(mem.mu, *least_mu) == 0;
    f.t_optimal = mem.t[0] == best_t1;
  }

  // Opponents most likely to defeat a candidate come first, so that
  // non-maximal members exit after one or two divisions.
  std::vector<std::size_t> opponents(count);
  std::iota(opponents.begin(), opponents.end(), 0);
  std::stable_sort(opponents.begin(), opponents.end(), [&](std::size_t a, std::size_t b) {
    const auto& ma = report.members[a];
    const auto& mb = report.members[b];
    const auto c = mu_lex_compare(ma.mu, mb.mu);
    if (c != 0) return c < 0;
    return ma.t[0] > mb.t[0];
  });

  detail::parallel_for(count, config.workers, [&](std::size_t idx) {
    ClassMember& mem = report.members[idx];
    if (config.prefilter && !mem.flags.strong) {
      mem.flags.whitney_max = false;
      mem.flags.tutte_max = false;
      return;
    }
    std::size_t whitney_failures = 0;
    std::size_t tutte_failures = 0;
    for (std::size_t other : opponents) {
      if (other == idx) continue;
      const auto& opp = report.members[other];
      if (!whitney_compare_polys(mem.whitney, opp.whitney).holds()) {
        ++whitney_failures;
        if (!config.full) break;
      }
    }
    for (std::size_t other : opponents) {
      if (other == idx) continue;
      const auto& opp = report.members[other];
      if (!tutte_compare_polys(mem.tutte, opp.tutte).holds()) {
        ++tutte_failures;
        if (!config.full) break;
      }
    }
    mem.flags.whitney_max = whitney_failures == 0;
    mem.flags.tutte_max = tutte_failures == 0;
    if (config.full) {
      mem.whitney_failures = whitney_failures;
      mem.tutte_failures = tutte_failures;
    }
  });

  auto& s = report.summary;
  s.members = count;
  s.k_umrg_by_domination.assign(n, 0);
  report.theorem2_check = true;
  for (const auto& mem : report.members) {
    const auto& f = mem.flags;
    s.strong += f.strong;
    s.zero_element += f.zero_element;
    s.mu_lex_min += f.mu_lex_min;
    s.whitney_max += f.whitney_max;
    s.tutte_max += f.tutte_max;
    s.t_optimal += f.t_optimal;
    for (int k = 0; k < n; ++k) s.k_umrg_by_domination[k] += f.k_umrg_by_domination[k];
    if (f.strong != f.whitney_max) report.theorem2_check = false;
  }
  return report;
}

Section4Result verify_section4(const ClassReport& report) {
  Section4Result out;
  const auto& members = report.members;
  const int n = report.spec.n;
  auto fail = [&](const std::string& why) {
    out.passed = false;
    out.failures.push_back(why);
  };

  for (const auto& mem : members) {
    if (mem.flags.tutte_max && !mem.flags.whitney_max) {
      fail(mem.graph6 + ": Tutte-maximum but not Whitney-maximum");
    }
  }

  const bool any = std::any_of(members.begin(), members.end(), [](const auto& m) { return m.flags.whitney_max; });
  if (!any) {
    out.vacuous = true;
    return out;
  }

  for (int k = 1; k <= n; ++k) {
    std::optional<int> best_lambda;
    mpz_class best_t = 0;
    bool first = true;
    for (const auto& mem : members) {
      if (first || lambda_less(best_lambda, mem.lambda[k - 1])) best_lambda = mem.lambda[k - 1];
      best_t = std::max(best_t, mem.t[k - 1]);
      first = false;
    }
    for (const auto& mem : members) {
      if (!mem.flags.whitney_max) continue;
      if (mem.lambda[k - 1] != best_lambda) {
        fail(mem.graph6 + ": lambda^(" + std::to_string(k) + ") below the class maximum");
      }
      if (mem.t[k - 1] != best_t) fail(mem.graph6 + ": t_" + std::to_string(k) + " below the class maximum");
    }
  }

  for (const auto& w : members) {
    if (!w.flags.whitney_max) continue;
    if (!w.flags.zero_element) fail(w.graph6 + ": Whitney-maximum but not a 0-element");
    if (!w.flags.mu_lex_min) fail(w.graph6 + ": Whitney-maximum but not a mu-lex minimum");
    for (int k = 0; k < n; ++k) {
      if (!w.flags.k_umrg_by_domination[k]) {
        fail(w.graph6 + ": Whitney-maximum without N^(" + std::to_string(k + 1) + ") domination");
      }
    }
    for (const auto& h : members) {
      bool same_row = true;
      for (int i = 0; i <= report.spec.m && same_row; ++i) same_row = h.table.n_leq(i, 1) == w.table.n_leq(i, 1);
      if (same_row && !h.flags.zero_element) {
        fail(h.graph6 + ": shares the N^(1) row of a Whitney-maximum graph but is not a 0-element");
      }
    }
  }
  return out;
}

std::string to_csv(const ClassReport& report) {
  std::ostringstream out;
  out << "graph6,strong,zero_element,whitney_max,tutte_max,t_optimal,t1,lambda1\n";
  for (const auto& mem : report.members) {
    const auto& f = mem.flags;
    out << mem.graph6 << ',' << f.strong << ',' << f.zero_element << ',' << f.whitney_max << ','
        << f.tutte_max << ',' << f.t_optimal << ',' << mem.t[0].get_str() << ',';
    if (mem.lambda[0]) out << *mem.lambda[0];
    out << '\n';
  }
  return out.str();
}

}  // namespace graphrel
