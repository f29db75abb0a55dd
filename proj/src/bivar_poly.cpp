#include "graphrel/bivar_poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace graphrel {

namespace {

// Row a of Pascal's triangle times d^(a-s) for s = 0..a: the expansion of
// (x + d)^a.
std::vector<mpz_class> shifted_power(int a, int d) {
  std::vector<mpz_class> out(a + 1);
  mpz_class power = 1;
  for (int s = a; s >= 0; --s) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(s));
    out[s] = binom * power;
    power *= d;
  }
  return out;
}

std::string monomial_text(int a, int b) {
  std::string out;
  auto var = [&](char name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  };
  var('x', a);
  var('y', b);
  return out;
}

}  // namespace

BivarPoly BivarPoly::constant(const mpz_class& c) { return monomial(0, 0, c); }

BivarPoly BivarPoly::monomial(int a, int b, const mpz_class& c) {
  BivarPoly p;
  p.add_term(a, b, c);
  return p;
}

mpz_class BivarPoly::coeff(int a, int b) const {
  const auto it = terms_.find({a, b});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void BivarPoly::add_term(int a, int b, const mpz_class& c) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool BivarPoly::is_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

std::vector<mpz_class> BivarPoly::y_zero_slice() const {
  std::vector<mpz_class> out;
  for (const auto& [e, c] : terms_) {
    if (e.y != 0) continue;
    if (static_cast<int>(out.size()) <= e.x) out.resize(e.x + 1);
    out[e.x] = c;
  }
  return out;
}

int BivarPoly::degree_x() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.x);
  return d;
}

int BivarPoly::degree_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.y);
  return d;
}

BivarPoly BivarPoly::shifted(int dx, int dy) const {
  if (dx == 0 && dy == 0) return *this;
  BivarPoly out;
  std::map<int, std::vector<mpz_class>> xs;
  std::map<int, std::vector<mpz_class>> ys;
  for (const auto& [e, c] : terms_) {
    auto& px = xs.try_emplace(e.x, shifted_power(e.x, dx)).first->second;
    auto& py = ys.try_emplace(e.y, shifted_power(e.y, dy)).first->second;
    for (int s = 0; s <= e.x; ++s) {
      if (px[s] == 0) continue;
      const mpz_class cs = c * px[s];
      for (int t = 0; t <= e.y; ++t) {
        if (py[t] != 0) out.add_term(s, t, cs * py[t]);
      }
    }
  }
  return out;
}

mpq_class BivarPoly::evaluate(const mpq_class& x0, const mpq_class& y0) const {
  std::vector<mpq_class> xp{1};
  std::vector<mpq_class> yp{1};
  mpq_class sum = 0;
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(xp.size()) <= e.x) xp.push_back(xp.back() * x0);
    while (static_cast<int>(yp.size()) <= e.y) yp.push_back(yp.back() * y0);
    sum += mpq_class(c) * xp[e.x] * yp[e.y];
  }
  sum.canonicalize();
  return sum;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.x, e.y, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.x, e.y, -c);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.x + eb.x, ea.y + eb.y, ca * cb);
  }
  return out;
}

BivarPoly operator-(const BivarPoly& a) {
  BivarPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, mpz_class>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
    const int dl = l.first.x + l.first.y;
    const int dr = r.first.x + r.first.y;
    if (dl != dr) return dl > dr;
    return l.first.x > r.first.x;
  });
  std::string out;
  for (const auto& [e, c] : sorted) {
    const bool negative = c < 0;
    const mpz_class mag = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = monomial_text(e.x, e.y);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

BivarPoly parse_poly(std::string_view text) {
  BivarPoly out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(i) + ": " + why);
  };
  auto read_digits = [&](std::string& digits) {
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
  };

  skip();
  if (i == text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;

    std::string digits;
    read_digits(digits);
    mpz_class c = digits.empty() ? mpz_class(1) : mpz_class(digits);
    int a = 0;
    int b = 0;
    bool any = !digits.empty();
    while (true) {
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
      if (i >= text.size() || (text[i] != 'x' && text[i] != 'y')) break;
      const char var = text[i++];
      int e = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        std::string exp;
        read_digits(exp);
        if (exp.empty()) fail("missing exponent");
        e = std::stoi(exp);
      }
      (var == 'x' ? a : b) += e;
      any = true;
    }
    if (!any) fail("expected a term");
    out.add_term(a, b, sign * c);
  }
  return out;
}

}  // namespace graphrel
