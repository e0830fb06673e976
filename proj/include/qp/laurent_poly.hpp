#pragma once

// Exact Laurent polynomials in the five fixed variables X, Y, A, B, Z.
//
// Exponents live on the half-integer grid and are stored doubled, so A^(1/2)
// is the exponent vector (0, 0, 1, 0, 0). Coefficients are GMP integers.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qp {

enum class Var : int { X = 0, Y = 1, A = 2, B = 3, Z = 4 };

inline constexpr int kNumVars = 5;
inline constexpr std::array<char, kNumVars> kVarNames = {'X', 'Y', 'A', 'B', 'Z'};

// An exponent on the half-integer grid, held as twice its value.
struct HalfExp {
  std::int64_t doubled = 0;

  static constexpr HalfExp whole(std::int64_t value) { return HalfExp{2 * value}; }
  constexpr bool is_integer() const { return doubled % 2 == 0; }
  constexpr std::int64_t integer() const { return doubled / 2; }

  friend constexpr HalfExp operator+(HalfExp a, HalfExp b) { return {a.doubled + b.doubled}; }
  friend constexpr HalfExp operator-(HalfExp a) { return {-a.doubled}; }
  auto operator<=>(const HalfExp&) const = default;
};

using Exponents = std::array<HalfExp, kNumVars>;

class SubstitutionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PolyParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LaurentPoly {
 public:
  // Terms ordered descending lexicographically in X, Y, A, B, Z.
  using TermMap = std::map<Exponents, mpz_class, std::greater<>>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Exponents& exps, const mpz_class& coeff = 1);
  static LaurentPoly variable(Var v, HalfExp power = HalfExp::whole(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Coefficient of the given exponent vector (zero when absent).
  mpz_class coefficient(const Exponents& exps) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly pow(unsigned n) const;

 private:
  void add_term(const Exponents& exps, const mpz_class& coeff);

  TermMap terms_;
};

// Shorthand for building polynomials in tests and formulas.
LaurentPoly X(HalfExp power = HalfExp::whole(1));
LaurentPoly Y(HalfExp power = HalfExp::whole(1));
LaurentPoly A(HalfExp power = HalfExp::whole(1));
LaurentPoly B(HalfExp power = HalfExp::whole(1));
LaurentPoly Z(HalfExp power = HalfExp::whole(1));

// One optional image per variable; unbound variables pass through unchanged.
using Bindings = std::array<std::optional<LaurentPoly>, kNumVars>;

// Ring substitution, applied simultaneously to all bound variables.
//
// A monomial image may be raised to any grid exponent provided the resulting
// exponents stay on the half-integer grid (and, for a fractional power, its
// coefficient is 1). A non-monomial image requires every exponent of its
// variable in `p` to be a nonnegative integer. Violations throw
// SubstitutionError.
LaurentPoly substitute(const LaurentPoly& p, const Bindings& bindings);

std::string to_string(const LaurentPoly& p);
std::string to_string(HalfExp e);

// Parses the canonical text form; also tolerates arbitrary term order,
// repeated monomials and repeated variables within a term.
LaurentPoly parse_poly(std::string_view text);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace qp
