#include "qp/laurent_poly.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace qp {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(Exponents{}, mpz_class(constant));
}

LaurentPoly LaurentPoly::monomial(const Exponents& exps, const mpz_class& coeff) {
  LaurentPoly p;
  p.add_term(exps, coeff);
  return p;
}

LaurentPoly LaurentPoly::variable(Var v, HalfExp power) {
  Exponents e{};
  e[static_cast<int>(v)] = power;
  return monomial(e);
}

LaurentPoly X(HalfExp power) { return LaurentPoly::variable(Var::X, power); }
LaurentPoly Y(HalfExp power) { return LaurentPoly::variable(Var::Y, power); }
LaurentPoly A(HalfExp power) { return LaurentPoly::variable(Var::A, power); }
LaurentPoly B(HalfExp power) { return LaurentPoly::variable(Var::B, power); }
LaurentPoly Z(HalfExp power) { return LaurentPoly::variable(Var::Z, power); }

mpz_class LaurentPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& exps, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly operator-(LaurentPoly a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

namespace {

// Image of a monomial `image` raised to the grid exponent `k`.
LaurentPoly monomial_power(const LaurentPoly& image, HalfExp k, char var) {
  const auto& [exps, coeff] = *image.terms().begin();
  mpz_class c;
  if (k.is_integer()) {
    const std::int64_t n = k.integer();
    if (n >= 0) {
      mpz_pow_ui(c.get_mpz_t(), coeff.get_mpz_t(), static_cast<unsigned long>(n));
    } else if (coeff == 1 || coeff == -1) {
      c = (coeff == -1 && (-n) % 2 == 1) ? -1 : 1;
    } else {
      throw SubstitutionError(std::string("negative power of non-unit coefficient in image of ") + var);
    }
  } else {
    if (coeff != 1) {
      throw SubstitutionError(std::string("fractional power of non-unit coefficient in image of ") + var);
    }
    c = 1;
  }
  Exponents out{};
  for (int i = 0; i < kNumVars; ++i) {
    const std::int64_t prod = exps[i].doubled * k.doubled;
    if (prod % 2 != 0) {
      throw SubstitutionError(std::string("substitution for ") + var + " leaves the half-integer grid");
    }
    out[i] = HalfExp{prod / 2};
  }
  return LaurentPoly::monomial(out, c);
}

}  // namespace

LaurentPoly substitute(const LaurentPoly& p, const Bindings& bindings) {
  std::array<std::map<HalfExp, LaurentPoly>, kNumVars> cache;
  auto image_power = [&](int var, HalfExp k) -> const LaurentPoly& {
    auto it = cache[var].find(k);
    if (it != cache[var].end()) return it->second;
    const LaurentPoly& image = *bindings[var];
    LaurentPoly value;
    if (image.is_monomial()) {
      value = monomial_power(image, k, kVarNames[var]);
    } else {
      if (!k.is_integer() || k.integer() < 0) {
        throw SubstitutionError(std::string("non-monomial image of ") + kVarNames[var] +
                                " raised to exponent " + to_string(k));
      }
      value = image.pow(static_cast<unsigned>(k.integer()));
    }
    return cache[var].emplace(k, std::move(value)).first->second;
  };

  LaurentPoly out;
  for (const auto& [exps, coeff] : p.terms()) {
    Exponents kept{};
    LaurentPoly term = LaurentPoly::monomial(Exponents{}, coeff);
    for (int i = 0; i < kNumVars; ++i) {
      if (!bindings[i] || exps[i].doubled == 0) {
        kept[i] = exps[i];
        continue;
      }
      term *= image_power(i, exps[i]);
    }
    out += term * LaurentPoly::monomial(kept);
  }
  return out;
}

std::string to_string(HalfExp e) {
  if (e.is_integer()) return std::to_string(e.integer());
  return "(" + std::to_string(e.doubled) + "/2)";
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, coeff] : p.terms()) {
    const bool negative = coeff < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const mpz_class magnitude = abs(coeff);

    bool constant = true;
    for (const auto& e : exps) constant = constant && e.doubled == 0;
    if (constant) {
      os << magnitude.get_str();
      continue;
    }
    bool need_star = false;
    if (magnitude != 1) {
      os << magnitude.get_str();
      need_star = true;
    }
    for (int i = 0; i < kNumVars; ++i) {
      if (exps[i].doubled == 0) continue;
      if (need_star) os << '*';
      os << kVarNames[i];
      if (exps[i] != HalfExp::whole(1)) os << '^' << to_string(exps[i]);
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    LaurentPoly result;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      LaurentPoly t = term();
      result += negative ? -t : t;
      skip_ws();
      if (at_end()) break;
      if (peek() == '+') {
        negative = false;
      } else if (peek() == '-') {
        negative = true;
      } else {
        fail("expected '+' or '-'");
      }
      ++pos_;
    }
    return result;
  }

 private:
  LaurentPoly term() {
    mpz_class coeff = 1;
    Exponents exps{};
    while (true) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff *= mpz_class(digits());
      } else {
        int var = -1;
        for (int i = 0; i < kNumVars; ++i) {
          if (kVarNames[i] == ch) var = i;
        }
        if (var < 0) fail(std::string("unknown symbol '") + ch + "'");
        ++pos_;
        HalfExp e = HalfExp::whole(1);
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          e = exponent();
        }
        exps[var] = exps[var] + e;
      }
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return LaurentPoly::monomial(exps, coeff);
  }

  HalfExp exponent() {
    skip_ws();
    if (at_end()) fail("missing exponent");
    if (peek() != '(') return HalfExp::whole(signed_integer());
    ++pos_;
    const std::int64_t num = signed_integer();
    std::int64_t den = 1;
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      den = std::stoll(digits());
    }
    skip_ws();
    if (at_end() || peek() != ')') fail("expected ')'");
    ++pos_;
    if (den == 1) return HalfExp::whole(num);
    if (den == 2) return HalfExp{num};
    if (den > 0 && num % den == 0) return HalfExp::whole(num / den);
    if (den > 0 && (2 * num) % den == 0) return HalfExp{2 * num / den};
    fail("exponent is not on the half-integer grid");
  }

  std::int64_t signed_integer() {
    skip_ws();
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    skip_ws();
    const std::int64_t v = std::stoll(digits());
    return negative ? -v : v;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw PolyParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace qp
