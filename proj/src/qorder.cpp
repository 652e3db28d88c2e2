#include "wqo/qorder.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wqo/error.hpp"

namespace wqo {

QuasiOrder::QuasiOrder(std::vector<std::string> labels, std::vector<std::uint8_t> matrix)
    : labels_(std::move(labels)), matrix_(std::move(matrix)) {
  require(matrix_.size() == labels_.size() * labels_.size(), ErrorCode::InvalidInput,
          "quasi-order matrix does not match the universe size");
}

QuasiOrder QuasiOrder::from_pairs(std::vector<std::string> labels,
                                  const std::vector<std::pair<int, int>>& pairs) {
  const std::size_t n = labels.size();
  std::vector<std::uint8_t> m(n * n, 0);
  for (auto [x, y] : pairs) {
    require(x >= 0 && y >= 0 && static_cast<std::size_t>(x) < n && static_cast<std::size_t>(y) < n,
            ErrorCode::InvalidInput, "order pair refers to an atom outside the universe");
    m[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] = 1;
  }
  return QuasiOrder(std::move(labels), std::move(m));
}

QuasiOrder QuasiOrder::from_predicate(std::vector<std::string> labels,
                                      const std::function<bool(int, int)>& le) {
  const int n = static_cast<int>(labels.size());
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m[static_cast<std::size_t>(x) * n + y] = le(x, y) ? 1 : 0;
  return QuasiOrder(std::move(labels), std::move(m));
}

std::vector<std::string> QuasiOrder::numbered_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

QuasiOrder QuasiOrder::chain(int n) {
  return from_predicate(numbered_labels(n), [](int x, int y) { return x <= y; });
}

QuasiOrder QuasiOrder::antichain(int n) {
  return from_predicate(numbered_labels(n), [](int x, int y) { return x == y; });
}

std::optional<int> QuasiOrder::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

AtomSet QuasiOrder::up(int x) const {
  require(size() <= AtomSet::kCapacity, ErrorCode::SizeCap, "upward closure needs at most 64 atoms");
  AtomSet s;
  for (int y = 0; y < size(); ++y)
    if (le(x, y)) s.insert(y);
  return s;
}

QuasiOrder QuasiOrder::restrict(const std::vector<int>& atoms) const {
  std::vector<std::string> labels;
  for (int a : atoms) labels.push_back(labels_[a]);
  return from_predicate(std::move(labels),
                        [&](int x, int y) { return le(atoms[x], atoms[y]); });
}

QuasiOrder QuasiOrder::reflexive_transitive_closure() const {
  QuasiOrder c = *this;
  const int n = size();
  for (int x = 0; x < n; ++x) c.matrix_[c.idx(x, x)] = 1;
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < n; ++x)
      if (c.le(x, k))
        for (int y = 0; y < n; ++y)
          if (c.le(k, y)) c.matrix_[c.idx(x, y)] = 1;
  return c;
}

QuasiOrder QuasiOrder::intersect(const QuasiOrder& other) const {
  require(labels_ == other.labels_, ErrorCode::InvalidInput,
          "intersection needs quasi-orders on the same universe");
  QuasiOrder c = *this;
  for (std::size_t i = 0; i < matrix_.size(); ++i) c.matrix_[i] = matrix_[i] & other.matrix_[i];
  return c;
}

QoCheck check_quasi_order(const QuasiOrder& q) {
  const int n = q.size();
  for (int x = 0; x < n; ++x)
    if (!q.le(x, x)) return {false, QoViolation{QoViolation::Kind::NotReflexive, x, x, x}};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!q.le(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (q.le(y, z) && !q.le(x, z))
          return {false, QoViolation{QoViolation::Kind::NotTransitive, x, y, z}};
    }
  return {};
}

std::vector<QuasiOrder> all_quasi_orders(int n) {
  require(n >= 0 && n <= 4, ErrorCode::SizeCap, "quasi-order enumeration supports at most 4 atoms");
  std::vector<std::pair<int, int>> off;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) off.emplace_back(x, y);
  std::vector<QuasiOrder> out;
  const std::uint32_t total = std::uint32_t{1} << off.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x) pairs.emplace_back(x, x);
    for (std::size_t b = 0; b < off.size(); ++b)
      if ((mask >> b) & 1U) pairs.push_back(off[b]);
    QuasiOrder q = QuasiOrder::from_pairs(QuasiOrder::numbered_labels(n), pairs);
    if (check_quasi_order(q).ok) out.push_back(std::move(q));
  }
  return out;
}

bool powerset_le(const QuasiOrder& q, AtomSet v, AtomSet v2) {
  const AtomSet universe = AtomSet::prefix(q.size());
  require(q.size() <= AtomSet::kCapacity && v.subset_of(universe) && v2.subset_of(universe),
          ErrorCode::InvalidInput, "powerset_le: set contains elements outside the universe");
  bool ok = true;
  v2.for_each([&](int y) {
    if (!ok) return;
    bool dominated = false;
    v.for_each([&](int x) { dominated = dominated || q.le(x, y); });
    ok = dominated;
  });
  return ok;
}

QuasiOrder build_QR(const Relation& r, const QuasiOrder& base) {
  const Relation mapped = r.over_source(base.labels());
  const int n = static_cast<int>(r.target().size());
  std::vector<std::vector<AtomSet>> witnesses(n);
  for (const auto& p : mapped.pairs()) witnesses[p.x].push_back(p.v);
  return QuasiOrder::from_predicate(r.target(), [&](int x, int x2) {
    for (AtomSet v : witnesses[x]) {
      bool matched = false;
      for (AtomSet v2 : witnesses[x2])
        if (powerset_le(base, v, v2)) {
          matched = true;
          break;
        }
      if (!matched) return false;
    }
    return true;
  });
}

namespace {

std::size_t pair_index(int i, int j) {
  return static_cast<std::size_t>(j) * (j - 1) / 2 + static_cast<std::size_t>(i);
}

}  // namespace

PairTable::PairTable(int window, std::vector<int> values) : window_(window), values_(std::move(values)) {
  require(window >= 0, ErrorCode::InvalidInput, "pair table window must be nonnegative");
  require(values_.size() == pair_index(0, window), ErrorCode::InvalidInput,
          "pair table is partial: expected one value per 2-subset of the window");
}

PairTable PairTable::from_function(int window, const std::function<int(int, int)>& f) {
  std::vector<int> values;
  for (int j = 1; j < window; ++j)
    for (int i = 0; i < j; ++i) values.push_back(f(i, j));
  return PairTable(window, std::move(values));
}

int PairTable::at(int i, int j) const {
  require(0 <= i && i < j && j < window_, ErrorCode::InvalidInput, "pair table lookup outside window");
  return values_[pair_index(i, j)];
}

RadoReport rado_condition_check(const PairTable& f, const QuasiOrder& q) {
  const int n = f.window();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      require(f.at(i, j) >= 0 && f.at(i, j) < q.size(), ErrorCode::InvalidInput,
              "pair table value outside the quasi-order universe");
  RadoReport rep;
  rep.window = n;
  rep.premise = true;
  for (int i = 0; i < n && rep.premise; ++i)
    for (int j = i + 1; j + 1 < n; ++j)
      if (!q.lt(f.at(i, j), f.at(i, j + 1))) {
        rep.premise = false;
        rep.premise_failure = std::array<int, 2>{i, j};
        break;
      }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (q.lt(f.at(i, j), f.at(j, k))) rep.strict_triples.push_back({i, j, k});
  return rep;
}

// --- presented orders -------------------------------------------------------

PresentedQO PresentedQO::omega(int truncation) { return PresentedQO(Kind::Omega, truncation); }
PresentedQO PresentedQO::equality_omega(int truncation) {
  return PresentedQO(Kind::EqualityOmega, truncation);
}
PresentedQO PresentedQO::rado(int truncation) { return PresentedQO(Kind::Rado, truncation); }
PresentedQO PresentedQO::fact15(int truncation) { return PresentedQO(Kind::Fact15, truncation); }

PresentedQO PresentedQO::product(PresentedQO a, PresentedQO b, int truncation) {
  PresentedQO p(Kind::Product, truncation);
  p.parts_ = {std::move(a), std::move(b)};
  return p;
}

PresentedQO PresentedQO::disjoint_sum(PresentedQO a, PresentedQO b, int truncation) {
  PresentedQO p(Kind::DisjointSum, truncation);
  p.parts_ = {std::move(a), std::move(b)};
  return p;
}

PresentedQO PresentedQO::powerset(PresentedQO inner, int max_subset, int truncation) {
  require(max_subset >= 0, ErrorCode::InvalidInput, "powerset subset bound must be nonnegative");
  PresentedQO p(Kind::Powerset, truncation);
  p.max_subset_ = max_subset;
  p.parts_ = {std::move(inner)};
  return p;
}

PresentedQO PresentedQO::finite(QuasiOrder q) {
  PresentedQO p(Kind::FiniteExplicit, q.size());
  p.finite_ = std::make_shared<const QuasiOrder>(std::move(q));
  return p;
}

PresentedQO PresentedQO::with_truncation(int n) const {
  PresentedQO p = *this;
  p.truncation_ = n;
  return p;
}

std::string PresentedQO::name() const {
  switch (kind_) {
    case Kind::Omega: return "omega";
    case Kind::EqualityOmega: return "eq-omega";
    case Kind::Rado: return "rado";
    case Kind::Fact15: return "fact15";
    case Kind::FiniteExplicit: return "finite";
    case Kind::Product: return "product(" + parts_[0].name() + "," + parts_[1].name() + ")";
    case Kind::DisjointSum: return "sum(" + parts_[0].name() + "," + parts_[1].name() + ")";
    case Kind::Powerset: return "powerset(" + parts_[0].name() + ")";
  }
  return "?";
}

std::optional<bool> PresentedQO::known_wqo() const {
  switch (kind_) {
    case Kind::Omega:
    case Kind::Rado:
    case Kind::FiniteExplicit: return true;
    case Kind::EqualityOmega:
    case Kind::Fact15: return false;
    case Kind::Product:
    case Kind::DisjointSum: {
      auto a = parts_[0].known_wqo(), b = parts_[1].known_wqo();
      if (a == false || b == false) return false;
      if (a && b) return true;
      return std::nullopt;
    }
    case Kind::Powerset:
      // (w, <=) is a bqo, so its powerset order is a wqo; Rado's is not.
      if (parts_[0].kind_ == Kind::Omega) return true;
      if (parts_[0].kind_ == Kind::Rado) return false;
      if (parts_[0].known_wqo() == false) return false;
      return std::nullopt;
  }
  return std::nullopt;
}

QuasiOrder PresentedQO::truncate_at(int n) const {
  require(n >= 0, ErrorCode::InvalidInput, "truncation must be nonnegative");
  switch (kind_) {
    case Kind::Omega: return QuasiOrder::chain(n);
    case Kind::EqualityOmega: return QuasiOrder::antichain(n);
    case Kind::Rado: {
      std::vector<std::pair<int, int>> elems;
      std::vector<std::string> labels;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
          elems.emplace_back(i, j);
          labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
      return QuasiOrder::from_predicate(std::move(labels), [&](int a, int b) {
        auto [i, j] = elems[a];
        auto [k, l] = elems[b];
        return (i == k && j <= l) || j < k;
      });
    }
    case Kind::Fact15: {
      std::vector<std::string> labels{"b"};
      for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
      return QuasiOrder::from_predicate(std::move(labels),
                                        [](int x, int y) { return x == y || x == 0; });
    }
    case Kind::FiniteExplicit: {
      std::vector<int> atoms;
      for (int i = 0; i < std::min(n, finite_->size()); ++i) atoms.push_back(i);
      return finite_->restrict(atoms);
    }
    case Kind::Product: {
      QuasiOrder a = parts_[0].truncate_at(n), b = parts_[1].truncate_at(n);
      std::vector<std::string> labels;
      for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < b.size(); ++y) labels.push_back("<" + a.label(x) + "," + b.label(y) + ">");
      const int nb = b.size();
      return QuasiOrder::from_predicate(std::move(labels), [&](int p, int r) {
        return a.le(p / nb, r / nb) && b.le(p % nb, r % nb);
      });
    }
    case Kind::DisjointSum: {
      QuasiOrder a = parts_[0].truncate_at(n), b = parts_[1].truncate_at(n);
      std::vector<std::string> labels;
      for (int x = 0; x < a.size(); ++x) labels.push_back("L:" + a.label(x));
      for (int y = 0; y < b.size(); ++y) labels.push_back("R:" + b.label(y));
      const int na = a.size();
      return QuasiOrder::from_predicate(std::move(labels), [&](int p, int r) {
        if (p < na && r < na) return a.le(p, r);
        if (p >= na && r >= na) return b.le(p - na, r - na);
        return false;
      });
    }
    case Kind::Powerset: {
      QuasiOrder inner = parts_[0].truncate_at(n);
      require(inner.size() <= AtomSet::kCapacity, ErrorCode::SizeCap,
              "powerset truncation needs an inner universe of at most 64 atoms");
      std::vector<AtomSet> subsets{AtomSet{}};
      // Grow subsets one element at a time, then sort by bitmask so that
      // smaller truncations list their subsets first.
      for (int size = 1; size <= max_subset_; ++size) {
        std::vector<AtomSet> next;
        for (AtomSet s : subsets)
          if (s.size() == size - 1)
            for (int a = s.empty() ? 0 : s.max() + 1; a < inner.size(); ++a) next.push_back(s | AtomSet::single(a));
        subsets.insert(subsets.end(), next.begin(), next.end());
      }
      std::sort(subsets.begin(), subsets.end());
      std::vector<std::string> labels;
      for (AtomSet s : subsets) {
        std::string l = "{";
        for (int a : s.atoms()) l += (l.size() > 1 ? "," : "") + inner.label(a);
        labels.push_back(l + "}");
      }
      return QuasiOrder::from_predicate(std::move(labels), [&](int x, int y) {
        return powerset_le(inner, subsets[x], subsets[y]);
      });
    }
  }
  fail(ErrorCode::Unsupported, "unknown presented order kind");
}

std::vector<int> PresentedQO::births(int n) const {
  const QuasiOrder full = truncate_at(n);
  std::vector<int> birth(full.size(), n);
  std::map<std::string, int> first_seen;
  for (int m = 1; m <= n; ++m) {
    const QuasiOrder t = truncate_at(m);
    for (const auto& l : t.labels()) first_seen.emplace(l, m);
  }
  for (int x = 0; x < full.size(); ++x) birth[x] = first_seen.at(full.label(x));
  return birth;
}

// --- bad sequences ----------------------------------------------------------

namespace {

struct BadSearch {
  const QuasiOrder& q;
  const std::vector<int>* birth;  // null: unconstrained
  int first_birth;  // births are counted from the first nonempty truncation
  int depth;
  std::vector<int> current, best;
  long long nodes = 0;

  void run(const std::vector<int>& candidates) {
    ++nodes;
    if (current.size() > best.size()) best = current;
    if (static_cast<int>(current.size()) >= depth || static_cast<int>(best.size()) >= depth) return;
    const int pos = static_cast<int>(current.size());
    // Bound: even taking every remaining candidate cannot beat best.
    if (current.size() + candidates.size() <= best.size()) return;
    for (int y : candidates) {
      if (birth != nullptr && (*birth)[y] > first_birth + pos) continue;
      std::vector<int> next;
      for (int z : candidates)
        if (!q.le(y, z)) next.push_back(z);
      current.push_back(y);
      run(next);
      current.pop_back();
      if (static_cast<int>(best.size()) >= depth) return;
    }
  }
};

BadSequenceResult finish(const QuasiOrder& q, BadSearch& s) {
  BadSequenceResult r;
  r.longest = s.best;
  r.nodes = s.nodes;
  for (int x : s.best) r.labels.push_back(q.label(x));
  return r;
}

}  // namespace

BadSequenceResult longest_bad_sequence(const QuasiOrder& q, int depth) {
  require(depth >= 1, ErrorCode::InvalidInput, "bad sequence depth must be at least 1");
  std::vector<int> all(q.size());
  for (int i = 0; i < q.size(); ++i) all[i] = i;
  BadSearch s{q, nullptr, 0, depth, {}, {}, 0};
  s.run(all);
  return finish(q, s);
}

BadSequenceResult bad_sequence_search(const PresentedQO& p, int depth) {
  require(depth >= 1, ErrorCode::InvalidInput, "bad sequence depth must be at least 1");
  const QuasiOrder q = p.truncate();
  const std::vector<int> birth = p.births(p.truncation());
  std::vector<int> all(q.size());
  for (int i = 0; i < q.size(); ++i) all[i] = i;
  const int first = birth.empty() ? 0 : *std::min_element(birth.begin(), birth.end());
  BadSearch s{q, &birth, first, depth, {}, {}, 0};
  s.run(all);
  return finish(q, s);
}

namespace {

void grow_antichain(const QuasiOrder& q, int depth, std::vector<int>& cur, BadSequenceResult& best) {
  ++best.nodes;
  if (cur.size() > best.longest.size()) best.longest = cur;
  if (static_cast<int>(best.longest.size()) >= depth) return;
  const int start = cur.empty() ? 0 : cur.back() + 1;
  for (int x = start; x < q.size(); ++x) {
    bool free = true;
    for (int y : cur) free = free && !q.le(x, y) && !q.le(y, x);
    if (!free) continue;
    cur.push_back(x);
    grow_antichain(q, depth, cur, best);
    cur.pop_back();
    if (static_cast<int>(best.longest.size()) >= depth) return;
  }
}

}  // namespace

BadSequenceResult longest_antichain(const QuasiOrder& q, int depth) {
  require(depth >= 1, ErrorCode::InvalidInput, "antichain depth must be at least 1");
  BadSequenceResult r;
  std::vector<int> cur;
  grow_antichain(q, depth, cur, r);
  for (int x : r.longest) r.labels.push_back(q.label(x));
  return r;
}

// --- classes, linearizations, otp -------------------------------------------

namespace {

std::vector<int> class_of(const QuasiOrder& q, std::vector<std::vector<int>>& classes) {
  std::vector<int> cls(q.size(), -1);
  for (int x = 0; x < q.size(); ++x) {
    if (cls[x] >= 0) continue;
    cls[x] = static_cast<int>(classes.size());
    classes.push_back({x});
    for (int y = x + 1; y < q.size(); ++y)
      if (cls[y] < 0 && q.equiv(x, y)) {
        cls[y] = cls[x];
        classes.back().push_back(y);
      }
  }
  return cls;
}

void extend(const QuasiOrder& q, const std::vector<std::vector<int>>& classes,
            std::vector<int>& prefix, std::vector<char>& placed,
            std::vector<std::vector<int>>& out) {
  const int k = static_cast<int>(classes.size());
  if (static_cast<int>(prefix.size()) == k) {
    out.push_back(prefix);
    return;
  }
  for (int c = 0; c < k; ++c) {
    if (placed[c]) continue;
    bool minimal = true;
    for (int d = 0; d < k && minimal; ++d)
      if (!placed[d] && d != c && q.le(classes[d][0], classes[c][0])) minimal = false;
    if (!minimal) continue;
    placed[c] = 1;
    prefix.push_back(c);
    extend(q, classes, prefix, placed, out);
    prefix.pop_back();
    placed[c] = 0;
  }
}

}  // namespace

int count_classes(const QuasiOrder& q) {
  std::vector<std::vector<int>> classes;
  class_of(q, classes);
  return static_cast<int>(classes.size());
}

Linearizations classes_and_linearizations(const QuasiOrder& q) {
  require(check_quasi_order(q).ok, ErrorCode::InvalidInput, "input is not a quasi-order");
  Linearizations lin;
  class_of(q, lin.classes);
  require(lin.classes.size() <= 8, ErrorCode::SizeCap,
          "linearization enumeration supports quotients of at most 8 classes");
  std::vector<int> prefix;
  std::vector<char> placed(lin.classes.size(), 0);
  extend(q, lin.classes, prefix, placed, lin.extensions);
  return lin;
}

namespace {
const char* kQuotientNote =
    "equivalence classes are collapsed before linearizing; an n-class quotient "
    "has only linearizations of order type n";
}

OtpResult otp(const QuasiOrder& q) {
  require(check_quasi_order(q).ok, ErrorCode::InvalidInput, "input is not a quasi-order");
  OtpResult r;
  r.value = Ordinal::natural(static_cast<std::uint64_t>(count_classes(q)));
  r.note = kQuotientNote;
  return r;
}

OtpResult otp(const PresentedQO& q) {
  OtpResult r;
  switch (q.kind()) {
    case PresentedQO::Kind::Omega:
      r.value = Ordinal::omega();
      r.note = "(w, <=) is already linear of type w";
      return r;
    case PresentedQO::Kind::FiniteExplicit:
      return otp(q.truncate());
    default:
      break;
  }
  for (int n = 1; n <= q.truncation(); ++n) r.lower_bounds.emplace_back(n, count_classes(q.truncate_at(n)));
  r.note = q.known_wqo() == false ? "not a wqo; maximal order type undefined"
                                  : "unknown; truncation class counts are lower bounds";
  return r;
}

}  // namespace wqo
