#include "wqo/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "wqo/error.hpp"

namespace wqo {
namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    fail(ErrorCode::Overflow, "ordinal overflow: coefficient exceeds 64 bits");
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    fail(ErrorCode::Overflow, "ordinal overflow: coefficient exceeds 64 bits");
  return a * b;
}

Ordinal guard_depth(Ordinal x) {
  if (x.depth() > Ordinal::kMaxDepth)
    fail(ErrorCode::Overflow, "ordinal overflow: exponent nesting deeper than " +
                                  std::to_string(Ordinal::kMaxDepth));
  return x;
}

}  // namespace

Ordinal Ordinal::natural(std::uint64_t n) {
  Ordinal o;
  if (n > 0) o.terms_.push_back(Term{Ordinal{}, n});
  return o;
}

Ordinal Ordinal::omega() { return omega_pow(natural(1)); }

Ordinal Ordinal::omega_pow(const Ordinal& exponent) {
  Ordinal o;
  o.terms_.push_back(Term{exponent, 1});
  return guard_depth(std::move(o));
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
  // Terms are read as a natural (commutative) sum: sorted descending by
  // exponent with equal exponents merged.
  Ordinal o;
  for (auto& t : terms) {
    if (t.coeff == 0) continue;
    if (!o.terms_.empty() && o.terms_.back().exponent == t.exponent)
      o.terms_.back().coeff = checked_add(o.terms_.back().coeff, t.coeff);
    else
      o.terms_.push_back(std::move(t));
  }
  return guard_depth(std::move(o));
}

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool Ordinal::is_successor() const {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

std::uint64_t Ordinal::finite_value() const {
  return terms_.empty() ? 0 : terms_[0].coeff;
}

int Ordinal::depth() const {
  int d = 0;
  for (const auto& t : terms_)
    if (!t.exponent.is_zero()) d = std::max(d, 1 + t.exponent.depth());
  return d;
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].exponent == b.terms_[i].exponent))
      return false;
  return true;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].exponent <=> b.terms_[i].exponent; c != 0) return c;
    if (auto c = a.terms_[i].coeff <=> b.terms_[i].coeff; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b) { return a <=> b; }

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.terms().front().exponent;
  std::vector<Ordinal::Term> out;
  for (const auto& t : a.terms()) {
    if (t.exponent < lead) break;
    out.push_back(t);
  }
  auto rest = b.terms().begin();
  if (!out.empty() && out.back().exponent == lead) {
    out.back().coeff = checked_add(out.back().coeff, rest->coeff);
    ++rest;
  }
  out.insert(out.end(), rest, b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal ord_mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal{};
  const Ordinal& a_lead = a.terms().front().exponent;
  std::vector<Ordinal::Term> out;
  for (const auto& bt : b.terms()) {
    if (!bt.exponent.is_zero()) {
      // a * w^e = w^(lead(a) + e)
      out.push_back(Ordinal::Term{ord_add(a_lead, bt.exponent), bt.coeff});
    } else {
      // a * n = w^lead(a) * (c*n) + tail(a)
      out.push_back(Ordinal::Term{a_lead, checked_mul(a.terms().front().coeff, bt.coeff)});
      out.insert(out.end(), a.terms().begin() + 1, a.terms().end());
    }
  }
  return Ordinal::from_terms(std::move(out));
}

bool is_indecomposable(const Ordinal& a) {
  require(!a.is_zero(), ErrorCode::InvalidInput, "is_indecomposable: zero is not a valid argument");
  return a.terms().size() == 1 && a.terms().front().coeff == 1;
}

namespace {

bool needs_parens(const Ordinal& e) {
  if (e.terms().size() != 1) return true;
  const auto& t = e.terms().front();
  if (t.exponent.is_zero()) return false;                     // natural
  return !(t.coeff == 1 && t.exponent == Ordinal::natural(1));  // plain w
}

}  // namespace

std::string render(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += " + ";
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coeff);
      continue;
    }
    out += "w";
    if (!(t.exponent == Ordinal::natural(1))) {
      const std::string e = render(t.exponent);
      out += needs_parens(t.exponent) ? "^(" + e + ")" : "^" + e;
    }
    if (t.coeff != 1) out += "*" + std::to_string(t.coeff);
  }
  return out;
}

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view s) : s_(s) {}

  Ordinal parse_all() {
    Ordinal v = sum();
    skip();
    if (pos_ != s_.size()) error("unexpected trailing input");
    return v;
  }

 private:
  Ordinal sum() {
    Ordinal v = term();
    while (eat('+')) v = ord_add(v, term());
    return v;
  }

  Ordinal term() {
    skip();
    if (eat('w')) {
      Ordinal exponent = Ordinal::natural(1);
      if (eat('^')) exponent = atom();
      Ordinal t = Ordinal::omega_pow(exponent);
      if (eat('*')) t = ord_mul(t, Ordinal::natural(number()));
      return t;
    }
    if (peek_digit()) {
      Ordinal t = Ordinal::natural(number());
      if (eat('*')) t = ord_mul(t, Ordinal::natural(number()));
      return t;
    }
    error("expected 'w' or a natural number");
  }

  Ordinal atom() {
    skip();
    if (eat('(')) {
      Ordinal v = sum();
      if (!eat(')')) error("expected ')'");
      return v;
    }
    if (eat('w')) return Ordinal::omega();
    return Ordinal::natural(number());
  }

  std::uint64_t number() {
    skip();
    if (!peek_digit()) error("expected a natural number");
    std::uint64_t v = 0;
    while (peek_digit()) v = checked_add(checked_mul(v, 10), static_cast<std::uint64_t>(s_[pos_++] - '0'));
    return v;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& msg) {
    fail(ErrorCode::InvalidInput,
         "ordinal parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser(text).parse_all(); }

}  // namespace wqo
