#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wqo {

// Ordinal below epsilon_0 in Cantor normal form:
//   w^e1 * c1 + w^e2 * c2 + ... ,  e1 > e2 > ... ,  ci >= 1.
// Values are immutable and always normalized, so == is ordinal equality.
class Ordinal {
 public:
  struct Term;

  // Exponent nesting beyond this depth is reported as ordinal overflow.
  static constexpr int kMaxDepth = 8;

  Ordinal() = default;  // zero
  static Ordinal natural(std::uint64_t n);
  static Ordinal omega();
  // w^exponent
  static Ordinal omega_pow(const Ordinal& exponent);
  // Natural-sum normalization of a term list: sorts descending, merges equal
  // exponents, drops zero coefficients.
  static Ordinal from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  bool is_successor() const;
  // Finite value; only meaningful when is_finite().
  std::uint64_t finite_value() const;
  // Nesting depth of exponents: 0 for naturals, 1 for w^n forms, ...
  int depth() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coeff = 1;
};

Ordinal ord_add(const Ordinal& a, const Ordinal& b);
Ordinal ord_mul(const Ordinal& a, const Ordinal& b);
std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b);
// True iff a = w^b for some b. Throws InvalidInput on zero.
bool is_indecomposable(const Ordinal& a);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return ord_add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return ord_mul(a, b); }

// Text form, e.g. "w^2*3 + w + 4", "w^(w+1)", "0".
std::string render(const Ordinal& a);
Ordinal parse_ordinal(std::string_view text);

}  // namespace wqo
