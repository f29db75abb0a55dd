#include "graphrel/order.hpp"

#include <map>
#include <stdexcept>

namespace graphrel {

namespace {

void check_same_class(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() != h.order() || g.size() != h.size()) {
    throw DimensionError("graphs belong to different classes: (" + std::to_string(g.order()) + "," +
                         std::to_string(g.size()) + ") vs (" + std::to_string(h.order()) + "," +
                         std::to_string(h.size()) + ")");
  }
}

std::optional<Exponent> first_negative(const BivarPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    if (c < 0) return e;
  }
  return std::nullopt;
}

OrderResult classify(Order order, const BivarPoly& quotient) {
  OrderResult r;
  r.order = order;
  r.witness = first_negative(quotient);
  r.verdict = r.witness ? Verdict::NegativeQuotient : Verdict::Dominates;
  r.quotient = quotient;
  return r;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::Dominates: return "Dominates";
    case Verdict::NotDivisible: return "NotDivisible";
    case Verdict::NegativeQuotient: return "NegativeQuotient";
  }
  return "?";
}

const char* to_string(Order o) { return o == Order::Whitney ? "whitney" : "tutte"; }

Order parse_order(const std::string& text) {
  if (text == "whitney") return Order::Whitney;
  if (text == "tutte") return Order::Tutte;
  throw std::invalid_argument("order must be \"whitney\" or \"tutte\", got \"" + text + "\"");
}

DivisionResult divide_one_minus_xy(const BivarPoly& d) {
  // Group terms by diagonal start; within a diagonal, terms come in
  // increasing position because the map is ordered by (a, b).
  // Diagonals are visited x-axis starts first: (0,0), (1,0), (2,0), ...,
  // then (0,1), (0,2), ...
  auto axis_order = [](const Exponent& a, const Exponent& b) { return std::pair(a.y, a.x) < std::pair(b.y, b.x); };
  std::map<Exponent, std::vector<std::pair<int, mpz_class>>, decltype(axis_order)> diagonals(axis_order);
  for (const auto& [e, c] : d.terms()) {
    const int t = std::min(e.x, e.y);
    diagonals[{e.x - t, e.y - t}].emplace_back(t, c);
  }
  DivisionResult out;
  BivarPoly q;
  for (const auto& [start, entries] : diagonals) {
    mpz_class running = 0;
    for (std::size_t k = 0; k < entries.size(); ++k) {
      running += entries[k].second;
      const int next = k + 1 < entries.size() ? entries[k + 1].first : entries[k].first + 1;
      // q is constant (= running) between consecutive nonzero terms of d.
      if (running != 0 && k + 1 < entries.size()) {
        for (int t = entries[k].first; t < next; ++t) q.add_term(start.x + t, start.y + t, running);
      }
    }
    if (running != 0) {
      out.witness_diagonal = start;
      return out;
    }
  }
  out.quotient = std::move(q);
  return out;
}

BivarPoly whitney_divisor() { return BivarPoly::constant(1) - BivarPoly::monomial(1, 1); }

BivarPoly tutte_divisor() { return BivarPoly::x() + BivarPoly::y() - BivarPoly::monomial(1, 1); }

OrderResult whitney_compare_polys(const BivarPoly& wg, const BivarPoly& wh) {
  OrderResult r;
  r.order = Order::Whitney;
  if (wg == wh) {
    r.verdict = Verdict::Equal;
    r.quotient = BivarPoly{};
    return r;
  }
  auto div = divide_one_minus_xy(wg - wh);
  if (!div.quotient) {
    r.verdict = Verdict::NotDivisible;
    r.witness = div.witness_diagonal;
    return r;
  }
  return classify(Order::Whitney, *div.quotient);
}

OrderResult tutte_compare_polys(const BivarPoly& tg, const BivarPoly& th) {
  OrderResult r;
  r.order = Order::Tutte;
  if (tg == th) {
    r.verdict = Verdict::Equal;
    r.quotient = BivarPoly{};
    return r;
  }
  // T_G - T_H = (x + y - xy) P  <=>  W_G - W_H = (1 - xy) P(x + 1, y + 1).
  auto div = divide_one_minus_xy((tg - th).shifted(1, 1));
  if (!div.quotient) {
    r.verdict = Verdict::NotDivisible;
    r.witness = div.witness_diagonal;
    return r;
  }
  return classify(Order::Tutte, div.quotient->shifted(-1, -1));
}

OrderResult whitney_compare(const SimpleGraph& g, const SimpleGraph& h, TutteMemo& memo) {
  check_same_class(g, h);
  return whitney_compare_polys(whitney(g, memo), whitney(h, memo));
}

OrderResult whitney_compare(const SimpleGraph& g, const SimpleGraph& h) {
  TutteMemo memo;
  return whitney_compare(g, h, memo);
}

OrderResult tutte_compare(const SimpleGraph& g, const SimpleGraph& h, TutteMemo& memo) {
  check_same_class(g, h);
  return tutte_compare_polys(tutte_dc(g, memo), tutte_dc(h, memo));
}

OrderResult tutte_compare(const SimpleGraph& g, const SimpleGraph& h) {
  TutteMemo memo;
  return tutte_compare(g, h, memo);
}

MaximumResult certify_maximum(const SimpleGraph& g, std::span<const SimpleGraph> members, Order order,
                              TutteMemo& memo, bool full) {
  for (const auto& h : members) check_same_class(g, h);
  const BivarPoly tg = tutte_dc(g, memo);
  const BivarPoly pg = order == Order::Whitney ? tg.shifted(1, 1) : tg;
  MaximumResult out;
  for (const auto& h : members) {
    const BivarPoly th = tutte_dc(h, memo);
    OrderResult r = order == Order::Whitney ? whitney_compare_polys(pg, th.shifted(1, 1))
                                            : tutte_compare_polys(pg, th);
    if (r.holds()) continue;
    out.maximum = false;
    out.counterexamples.push_back({h, std::move(r)});
    if (!full) break;
  }
  return out;
}

}  // namespace graphrel
