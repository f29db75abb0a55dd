#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphrel/bivar_poly.hpp"
#include "graphrel/graph.hpp"
#include "graphrel/tutte.hpp"

namespace graphrel {

enum class Verdict { Equal, Dominates, NotDivisible, NegativeQuotient };
enum class Order { Whitney, Tutte };

const char* to_string(Verdict v);
const char* to_string(Order o);
Order parse_order(const std::string& text);

// Outcome of testing h <= g. For the Tutte order the quotient is P with
// T_G - T_H = (x + y - xy) P, and a NotDivisible witness is a diagonal start
// of the shifted difference W_G - W_H.
struct OrderResult {
  Order order = Order::Whitney;
  Verdict verdict = Verdict::Equal;
  std::optional<BivarPoly> quotient;
  std::optional<Exponent> witness;

  // Equal or Dominates.
  bool holds() const { return verdict == Verdict::Equal || verdict == Verdict::Dominates; }
};

struct DivisionResult {
  std::optional<BivarPoly> quotient;
  Exponent witness_diagonal;  // start (a0, b0), min(a0, b0) == 0, of a diagonal with nonzero sum
};

// Exact division by (1 - xy), diagonal by diagonal:
// q_{a,b} = d_{a,b} + q_{a-1,b-1}; divisible iff every diagonal sums to zero.
DivisionResult divide_one_minus_xy(const BivarPoly& d);

// (1 - xy) and (x + y - xy) as polynomials.
BivarPoly whitney_divisor();
BivarPoly tutte_divisor();

OrderResult whitney_compare_polys(const BivarPoly& wg, const BivarPoly& wh);
OrderResult tutte_compare_polys(const BivarPoly& tg, const BivarPoly& th);

// Verdict on h <= g; throws DimensionError unless g, h share (n, m).
OrderResult whitney_compare(const SimpleGraph& g, const SimpleGraph& h, TutteMemo& memo);
OrderResult whitney_compare(const SimpleGraph& g, const SimpleGraph& h);
OrderResult tutte_compare(const SimpleGraph& g, const SimpleGraph& h, TutteMemo& memo);
OrderResult tutte_compare(const SimpleGraph& g, const SimpleGraph& h);

struct Counterexample {
  SimpleGraph graph;
  OrderResult result;
};

struct MaximumResult {
  bool maximum = true;
  std::vector<Counterexample> counterexamples;  // first one only unless `full`
};

// Tests h <= g for every h in `members` in order; stops at the first failure
// unless `full`. Throws DimensionError on a member outside g's (n, m).
MaximumResult certify_maximum(const SimpleGraph& g, std::span<const SimpleGraph> members, Order order,
                              TutteMemo& memo, bool full = false);

}  // namespace graphrel
