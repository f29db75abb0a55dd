#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "graphrel/bivar_poly.hpp"
#include "graphrel/counts.hpp"
#include "graphrel/graph.hpp"

namespace graphrel {

inline constexpr int kMaxScanVertices = 9;

// C_{n,m}: connected simple graphs with n vertices and m edges.
struct ClassSpec {
  int n = 0;
  int m = 0;

  bool nonempty() const { return n >= 1 && m >= n - 1 && m <= n * (n - 1) / 2; }
};

// Every isomorphism class of simple graphs with n vertices and e edges, as
// canonically relabeled representatives sorted by canonical form. Built
// edge by edge with deduplication on canonical forms.
std::vector<SimpleGraph> enumerate_graphs(int n, int e);

// One representative per isomorphism class of C_{n,m}, sorted by canonical
// form. Dense classes are generated through their complements. Throws
// BudgetError for n > kMaxScanVertices and std::invalid_argument for an
// empty class.
std::vector<SimpleGraph> enumerate_class(ClassSpec spec);

struct ScanConfig {
  int workers = 1;
  // Compare every pair without early exit and record failure counts.
  bool full = false;
  // Only certify members that are strong by N-table domination.
  bool prefilter = false;
  // Scan only the first `limit` members of the class.
  std::optional<std::size_t> limit;
  std::size_t memo_entries = 1'000'000;
};

struct MemberFlags {
  bool strong = false;
  bool zero_element = false;  // N_i^(1) maximal for every i
  bool mu_lex_min = false;
  bool whitney_max = false;
  bool tutte_max = false;
  bool t_optimal = false;
  // Index k-1: N_i^(k) maximal for every i. Sufficient for k-UMRG.
  std::vector<bool> k_umrg_by_domination;
};

struct ClassMember {
  SimpleGraph graph;
  std::string graph6;
  BivarPoly tutte;
  BivarPoly whitney;
  NTable table;
  std::vector<mpz_class> mu;
  std::vector<mpz_class> t;                 // t_1..t_n
  std::vector<std::optional<int>> lambda;   // lambda^(1)..lambda^(n)
  std::string digest;                       // FNV-1a of the N-table
  MemberFlags flags;
  // Members h with h not <= this graph; only filled in full mode.
  std::optional<std::size_t> whitney_failures;
  std::optional<std::size_t> tutte_failures;
};

struct ClassSummary {
  std::size_t members = 0;
  std::size_t strong = 0;
  std::size_t zero_element = 0;
  std::size_t mu_lex_min = 0;
  std::size_t whitney_max = 0;
  std::size_t tutte_max = 0;
  std::size_t t_optimal = 0;
  std::vector<std::size_t> k_umrg_by_domination;
};

struct ClassReport {
  ClassSpec spec;
  bool complete = true;  // false when a limit truncated the class
  std::vector<ClassMember> members;
  ClassSummary summary;
  // strong set == whitney_max set.
  bool theorem2_check = false;
};

ClassReport scan(ClassSpec spec, const ScanConfig& config = {});
// Classifies an explicit member list, which must share spec's (n, m).
ClassReport scan_members(ClassSpec spec, std::vector<SimpleGraph> members, const ScanConfig& config = {});

struct Section4Result {
  bool vacuous = false;  // no Whitney-maximum member
  bool passed = true;
  std::vector<std::string> failures;
};

// Whitney-maximum members attain the class maxima of lambda^(k) and t_k, are
// 0-elements and mu-lex minima, dominate in every N^(k); members sharing
// their N^(1) row are 0-elements; Tutte-maximum members are
// Whitney-maximum.
Section4Result verify_section4(const ClassReport& report);

std::string to_csv(const ClassReport& report);

}  // namespace graphrel
