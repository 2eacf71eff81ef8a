#include "springer/orders.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace springer {

Preorder::Preorder(std::vector<std::uint32_t> up) : up_(std::move(up)) {
  const int m = size();
  if (m > 32) throw std::invalid_argument("preorder too large");
  for (int i = 0; i < m; ++i) {
    if (!leq(i, i)) throw std::invalid_argument("relation is not reflexive");
    if (up_[i] >> m) throw std::invalid_argument("relation mentions unknown elements");
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (leq(i, j) && (up_[j] & ~up_[i])) throw std::invalid_argument("relation is not transitive");
}

Preorder Preorder::from_matrix(const std::vector<std::vector<bool>>& rel) {
  std::vector<std::uint32_t> up(rel.size(), 0);
  for (size_t i = 0; i < rel.size(); ++i)
    for (size_t j = 0; j < rel[i].size(); ++j)
      if (rel[i][j]) up[i] |= 1u << j;
  return Preorder(std::move(up));
}

Preorder Preorder::discrete(int m) {
  std::vector<std::uint32_t> up(m);
  for (int i = 0; i < m; ++i) up[i] = 1u << i;
  return Preorder(std::move(up));
}

Preorder Preorder::complete(int m) { return Preorder(std::vector<std::uint32_t>(m, (1u << m) - 1)); }

Preorder Preorder::closure(int m, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::uint32_t> up(m);
  for (int i = 0; i < m; ++i) up[i] = 1u << i;
  for (const auto& [a, b] : edges) up[a] |= 1u << b;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < m; ++i) {
      std::uint32_t u = up[i];
      for (int j = 0; j < m; ++j)
        if ((u >> j) & 1u) u |= up[j];
      if (u != up[i]) {
        up[i] = u;
        changed = true;
      }
    }
  }
  return Preorder(std::move(up));
}

std::uint32_t Preorder::class_mask(int i) const {
  std::uint32_t c = 0;
  for (int j = 0; j < size(); ++j)
    if (equiv(i, j)) c |= 1u << j;
  return c;
}

std::uint32_t Preorder::strict_up_mask(int i) const { return up_[i] & ~class_mask(i); }

std::string Preorder::key() const {
  std::ostringstream os;
  for (size_t i = 0; i < up_.size(); ++i) os << (i ? "." : "") << std::hex << up_[i];
  return os.str();
}

UpSetSignature up_sets(const GroupParams& g, const Preorder& p) {
  if (p.size() != g.num_irr()) throw std::invalid_argument("preorder size does not match Irr(W)");
  UpSetSignature s;
  for (int i = 0; i < p.size(); ++i) {
    LabelSet u, st;
    for (int j = 0; j < p.size(); ++j) {
      if (p.leq(i, j)) u.insert(IrrLabel::from_index(g, j));
      if (p.less(i, j)) st.insert(IrrLabel::from_index(g, j));
    }
    s.up.push_back(std::move(u));
    s.strict_up.push_back(std::move(st));
  }
  return s;
}

namespace {

// All posets on {0..k-1} as strict-order down masks: below[v] = elements strictly below v.
void for_each_poset(int k, const std::function<void(const std::vector<std::uint32_t>&)>& f) {
  std::vector<std::uint32_t> below(k, 0), above(k, 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == k) {
      f(below);
      return;
    }
    const std::uint32_t all = (1u << v) - 1;
    for (std::uint32_t D = 0; D <= all; ++D) {
      // D must be a down-set
      bool ok = true;
      for (int x = 0; x < v && ok; ++x)
        if (((D >> x) & 1u) && (below[x] & ~D)) ok = false;
      if (!ok) continue;
      std::uint32_t rest = all & ~D;
      // U ranges over subsets of rest; enumerate via submask walk
      for (std::uint32_t U = rest;; U = (U - 1) & rest) {
        bool good = true;
        for (int x = 0; x < v && good; ++x)
          if (((U >> x) & 1u) && (above[x] & ~U)) good = false;
        for (int d = 0; d < v && good; ++d)
          if ((D >> d) & 1u)
            if ((above[d] & U) != U) good = false;
        if (good) {
          below[v] = D;
          above[v] = U;
          std::vector<std::uint32_t> saved_below = below, saved_above = above;
          for (int x = 0; x < v; ++x) {
            if ((U >> x) & 1u) below[x] |= 1u << v;
            if ((D >> x) & 1u) above[x] |= 1u << v;
          }
          rec(v + 1);
          below = std::move(saved_below);
          above = std::move(saved_above);
        }
        if (U == 0) break;
      }
    }
    below[v] = above[v] = 0;
  };
  rec(0);
}

// Restricted growth strings of length m.
void for_each_partition(int m, const std::function<void(const std::vector<int>&, int)>& f) {
  std::vector<int> a(m, 0);
  std::function<void(int, int)> rec = [&](int pos, int blocks) {
    if (pos == m) {
      f(a, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[pos] = b;
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  if (m == 0)
    f(a, 0);
  else
    rec(0, 0);
}

}  // namespace

void for_each_preorder(int m, const std::function<void(const Preorder&)>& f) {
  if (m < 1 || m > 8) throw std::invalid_argument("preorder size out of range");
  for_each_partition(m, [&](const std::vector<int>& cls, int k) {
    for_each_poset(k, [&](const std::vector<std::uint32_t>& below) {
      std::vector<std::uint32_t> up(m, 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          int a = cls[i], b = cls[j];
          if (a == b || ((below[b] >> a) & 1u)) up[i] |= 1u << j;
        }
      f(Preorder(std::move(up)));
    });
  });
}

std::vector<Preorder> enumerate_preorders(int m) {
  std::vector<Preorder> out;
  for_each_preorder(m, [&](const Preorder& p) { out.push_back(p); });
  return out;
}

Preorder precsim_K(const GroupParams& g, const std::map<IrrLabel, LabelSet>& D) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& [l, s] : D)
    for (const auto& mu : s) edges.push_back({l.index(g), mu.index(g)});
  return Preorder::closure(g.num_irr(), edges);
}

namespace {

// Chain of labels split into runs; runs ordered increasingly, top last.
Preorder chain_preorder(int m, const std::vector<std::vector<int>>& runs) {
  std::vector<int> cls(m, -1);
  for (size_t r = 0; r < runs.size(); ++r)
    for (int x : runs[r]) cls[x] = static_cast<int>(r);
  std::vector<std::uint32_t> up(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (cls[i] <= cls[j]) up[i] |= 1u << j;
  return Preorder(std::move(up));
}

std::vector<Preorder> chain_family(const GroupParams& g, int bottom, int top) {
  std::vector<Preorder> out;
  const int m = g.num_irr();
  for (std::uint32_t gaps = 0; gaps < (1u << g.C); ++gaps) {
    // bit k set: strict step between position k and k+1 of [bottom, chi1..chiC]
    std::vector<std::vector<int>> runs{{bottom}};
    for (int k = 1; k <= g.C; ++k) {
      if ((gaps >> (k - 1)) & 1u) runs.emplace_back();
      runs.back().push_back(k);
    }
    runs.push_back({top});
    out.push_back(chain_preorder(m, runs));
  }
  return out;
}

}  // namespace

std::vector<Preorder> theorem_patterns(const GroupParams& g) {
  const int m = g.num_irr();
  std::vector<Preorder> out{Preorder::complete(m)};
  for (const auto& p : chain_family(g, 0, g.C + 1)) out.push_back(p);
  for (const auto& p : chain_family(g, g.C + 1, 0)) out.push_back(p);
  return out;
}

int theorem_case(const GroupParams& g, const Preorder& p) {
  if (p == Preorder::complete(g.num_irr())) return 1;
  for (const auto& q : chain_family(g, 0, g.C + 1))
    if (q == p) return 2;
  for (const auto& q : chain_family(g, g.C + 1, 0))
    if (q == p) return 3;
  return 0;
}

Preorder swap_triv_sgn(const GroupParams& g, const Preorder& p) {
  const int m = p.size();
  auto sw = [&](int x) { return x == 0 ? g.C + 1 : (x == g.C + 1 ? 0 : x); };
  std::vector<std::uint32_t> up(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (p.leq(i, j)) up[sw(i)] |= 1u << sw(j);
  return Preorder(std::move(up));
}

std::vector<std::string> to_pairs(const GroupParams& g, const Preorder& p) {
  std::vector<std::string> out;
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if (i != j && p.leq(i, j))
        out.push_back(IrrLabel::from_index(g, i).name() + "<=" + IrrLabel::from_index(g, j).name());
  return out;
}

std::string to_string(const GroupParams& g, const Preorder& p) {
  std::string s = "{";
  auto v = to_pairs(g, p);
  for (size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k];
  return s + "}";
}

Preorder parse_preorder(const GroupParams& g, const std::vector<std::string>& pairs) {
  const int m = g.num_irr();
  std::vector<std::uint32_t> up(m);
  for (int i = 0; i < m; ++i) up[i] = 1u << i;
  for (const auto& s : pairs) {
    auto pos = s.find("<=");
    if (pos == std::string::npos) throw std::invalid_argument("expected 'a<=b', got '" + s + "'");
    int a = IrrLabel::parse(g, s.substr(0, pos)).index(g);
    int b = IrrLabel::parse(g, s.substr(pos + 2)).index(g);
    up[a] |= 1u << b;
  }
  return Preorder(std::move(up));
}

std::string describe(const GroupParams& g, const Preorder& p) {
  const int m = p.size();
  // total preorder iff every pair is comparable
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (!p.leq(i, j) && !p.leq(j, i)) return to_string(g, p);
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return p.less(a, b); });
  std::string s = IrrLabel::from_index(g, idx[0]).name();
  for (int k = 1; k < m; ++k)
    s += std::string(p.equiv(idx[k - 1], idx[k]) ? "~" : "<") + IrrLabel::from_index(g, idx[k]).name();
  return s;
}

}  // namespace springer
