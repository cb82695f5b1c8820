#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prozeta/common.hpp"

namespace prozeta {

// Sparse integer polynomial in one variable. Zero coefficients are never
// stored, so equality is structural.
class IntPoly {
public:
  IntPoly() = default;

  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return monomial(0, 1); }
  static IntPoly x() { return monomial(1, 1); }
  static IntPoly monomial(unsigned deg, Int coeff);
  // 1 + x + ... + x^{m-1}
  static IntPoly geometric(unsigned m);

  bool is_zero() const { return coef_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  Int coeff(unsigned d) const;
  const std::map<unsigned, Int>& terms() const { return coef_; }

  void add_term(unsigned d, const Int& c);

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;
  bool operator==(const IntPoly& o) const { return coef_ == o.coef_; }

  Int eval(const Int& x) const;
  // x -> x^k
  IntPoly subst_power(unsigned k) const;

  // Exact quotient, or nullopt when no polynomial quotient over Z exists.
  static std::optional<IntPoly> divide(const IntPoly& a, const IntPoly& b);
  static bool divides(const IntPoly& b, const IntPoly& a);

  // "deg:coeff,deg:coeff" ascending by degree; "0:0" for zero.
  std::string to_string() const;
  static IntPoly from_string(const std::string& s);

private:
  std::map<unsigned, Int> coef_;
};

// n-th cyclotomic polynomial, computed by the recursive division
// x^n - 1 = prod_{d | n} Phi_d.  Memoized.
const IntPoly& cyclotomic_polynomial(unsigned n);

struct CycloFactorization {
  int sign = 1;                              // leading unit
  unsigned x_power = 0;                      // stripped power of x
  std::map<unsigned, unsigned> multiplicity; // u -> multiplicity of Phi_u
};

// Factors P as sign * x^k * prod Phi_u^{e_u}; throws NOT_CYCLOTOMIC_PRODUCT
// when P is not of that shape.
CycloFactorization factor_cyclotomic(const IntPoly& p);

}  // namespace prozeta
