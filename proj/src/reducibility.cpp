#include "wqo/reducibility.hpp"

#include <algorithm>
#include <string>

#include "wqo/error.hpp"

namespace wqo {

std::uint64_t e_encode(const std::vector<int>& s) {
  std::uint64_t z = 0;
  for (int i : s) {
    require(i >= 0, ErrorCode::InvalidInput, "negative entry in a coded set");
    require(i < 62, ErrorCode::Overflow, "coded set entry " + std::to_string(i) + " exceeds 61");
    z |= std::uint64_t{1} << i;
  }
  return z;
}

std::vector<int> e_decode(std::uint64_t z) {
  std::vector<int> s;
  for (int i = 0; i < 64; ++i)
    if (z >> i & 1) s.push_back(i);
  return s;
}

namespace {

int natural_label(const std::string& label) {
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(label, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == label.size() && v >= 0, ErrorCode::InvalidInput,
          "label '" + label + "' is not a natural number");
  return v;
}

}  // namespace

std::vector<std::uint64_t> f_R_build(const Relation& r, int window) {
  require(window >= 0, ErrorCode::InvalidInput, "negative window");
  std::vector<std::uint64_t> f(window, 0);
  for (const auto& p : r.pairs()) {
    const int x = natural_label(r.target()[p.x]);
    if (x >= window) continue;
    std::vector<int> v;
    for (int a : p.v.atoms()) v.push_back(natural_label(r.source()[a]));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    const std::uint64_t code = e_encode(v);
    require(code < 64, ErrorCode::Overflow, "witness code " + std::to_string(code) + " does not fit the value width");
    f[x] |= std::uint64_t{1} << code;
  }
  return f;
}

ReductionCheck positive_reduce_check(const std::vector<int>& a, const std::vector<int>& b,
                                     const std::vector<std::uint64_t>& f, int window) {
  require(static_cast<int>(f.size()) >= window, ErrorCode::InvalidInput, "reduction is not total on the window");
  // E_y for y < 64 only has entries below 6, so B matters only below 64.
  std::uint64_t b_bits = 0;
  for (int y : b)
    if (y >= 0 && y < 64) b_bits |= std::uint64_t{1} << y;
  for (int x = 0; x < window; ++x) {
    const bool in_a = std::find(a.begin(), a.end(), x) != a.end();
    bool coded = false;
    for (int y : e_decode(f[x]))
      if ((static_cast<std::uint64_t>(y) & ~b_bits) == 0) {
        coded = true;
        break;
      }
    if (in_a != coded) return {false, x};
  }
  return {};
}

Selector::Selector(int window) : window_(window), table_(static_cast<std::size_t>(window) * window, -1) {
  require(window >= 0, ErrorCode::InvalidInput, "negative selector window");
}

std::optional<int> Selector::at(int x, int y) const {
  require(x >= 0 && y >= 0 && x < window_ && y < window_, ErrorCode::InvalidInput, "selector argument outside the window");
  const int v = table_[static_cast<std::size_t>(x) * window_ + y];
  if (v < 0) return std::nullopt;
  return v;
}

void Selector::set(int x, int y, int value) {
  require(x >= 0 && y >= 0 && x < window_ && y < window_, ErrorCode::InvalidInput, "selector argument outside the window");
  require(value == x || value == y, ErrorCode::InvalidInput, "selector must return one of its arguments");
  table_[static_cast<std::size_t>(x) * window_ + y] = value;
}

void Selector::clear(int x, int y) {
  require(x >= 0 && y >= 0 && x < window_ && y < window_, ErrorCode::InvalidInput, "selector argument outside the window");
  table_[static_cast<std::size_t>(x) * window_ + y] = -1;
}

Selector selector_from_order(const QuasiOrder& q) {
  Selector psi(q.size());
  for (int x = 0; x < q.size(); ++x)
    for (int y = 0; y < q.size(); ++y) {
      if (x == y) continue;
      if (q.le(x, y)) {
        psi.set(x, y, x);
        if (q.le(y, x)) psi.note_tie(x, y);
      } else if (q.le(y, x)) {
        psi.set(x, y, y);
      }
    }
  return psi;
}

Selector selector_complete_diagonal(const Selector& psi) {
  Selector out = psi;
  for (int x = 0; x < psi.window(); ++x) out.set(x, x, x);
  return out;
}

SelectorCheck selector_check(AtomSet m, const Selector& psi, SelectorKind kind) {
  const int w = psi.window();
  require(m.empty() || m.max() < w, ErrorCode::InvalidInput, "selected set leaves the selector window");
  for (int x = 0; x < w; ++x)
    for (int y = 0; y < w; ++y) {
      const bool mx = m.contains(x), my = m.contains(y);
      const auto v = psi.at(x, y);
      if (kind == SelectorKind::Semirec && !v) return {false, std::make_pair(x, y)};
      const bool constrained = kind == SelectorKind::SemiRe ? (mx || my) : (mx != my);
      if (!constrained) continue;
      if (!v || !m.contains(*v) || (*v != x && *v != y)) return {false, std::make_pair(x, y)};
    }
  return {};
}

Selector selector_compose(const Selector& psi, const std::vector<int>& g) {
  const int w = static_cast<int>(g.size());
  for (int gx : g)
    require(gx >= 0 && gx < psi.window(), ErrorCode::InvalidInput, "reduction leaves the selector window");
  Selector out(w);
  for (int x = 0; x < w; ++x)
    for (int y = 0; y < w; ++y) {
      const auto v = psi.at(g[x], g[y]);
      if (!v) continue;
      if (*v == g[x]) out.set(x, y, x);
      else if (*v == g[y]) out.set(x, y, y);
    }
  return out;
}

bool initial_segment_check(AtomSet m, const QuasiOrder& q) {
  require(m.empty() || m.max() < q.size(), ErrorCode::InvalidInput, "segment leaves the quasi-order");
  for (int x : m.atoms())
    for (int y = 0; y < q.size(); ++y)
      if (!m.contains(y) && !q.lt(x, y)) return false;
  return true;
}

}  // namespace wqo
