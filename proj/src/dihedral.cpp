#include "springer/dihedral.hpp"

#include <sstream>
#include <stdexcept>

namespace springer {

GroupParams::GroupParams(int n_) : n(n_), C((n_ - 1) / 2) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("n must be odd and at least 3");
}

IrrLabel IrrLabel::chi(const GroupParams& g, int i) {
  if (i < 1 || i > g.C) throw std::invalid_argument("chi index out of canonical range");
  return {Kind::Chi, i};
}

int IrrLabel::index(const GroupParams& g) const {
  switch (kind) {
    case Kind::Triv: return 0;
    case Kind::Chi: return i;
    case Kind::Sgn: return g.C + 1;
  }
  return -1;
}

IrrLabel IrrLabel::from_index(const GroupParams& g, int idx) {
  if (idx == 0) return triv();
  if (idx == g.C + 1) return sgn();
  return chi(g, idx);
}

std::string IrrLabel::name() const {
  switch (kind) {
    case Kind::Triv: return "triv";
    case Kind::Sgn: return "sgn";
    case Kind::Chi: return "chi" + std::to_string(i);
  }
  return "?";
}

IrrLabel IrrLabel::parse(const GroupParams& g, const std::string& s) {
  if (s == "triv") return triv();
  if (s == "sgn") return sgn();
  if (s.rfind("chi", 0) == 0 && s.size() > 3) {
    size_t pos = 0;
    int i = std::stoi(s.substr(3), &pos);
    if (pos == s.size() - 3) return chi(g, i);
  }
  throw std::invalid_argument("unknown irreducible label: " + s);
}

bool operator<(const IrrLabel& a, const IrrLabel& b) {
  auto rank = [](const IrrLabel& l) {
    switch (l.kind) {
      case IrrLabel::Kind::Triv: return 0;
      case IrrLabel::Kind::Chi: return 1 + l.i;
      case IrrLabel::Kind::Sgn: return 1 << 20;
    }
    return 0;
  };
  return rank(a) < rank(b);
}

std::vector<IrrLabel> all_labels(const GroupParams& g) {
  std::vector<IrrLabel> v;
  for (int k = 0; k < g.num_irr(); ++k) v.push_back(IrrLabel::from_index(g, k));
  return v;
}

IrrLabel sgn_twist(const IrrLabel& l) {
  if (l.kind == IrrLabel::Kind::Triv) return IrrLabel::sgn();
  if (l.kind == IrrLabel::Kind::Sgn) return IrrLabel::triv();
  return l;
}

GroupElement group_mul(const GroupParams& g, const GroupElement& a, const GroupElement& b) {
  // r^a s^e r^b s^f = r^{a + (-1)^e b} s^{e+f}
  int rot = a.refl ? a.rot - b.rot : a.rot + b.rot;
  rot = ((rot % g.n) + g.n) % g.n;
  return {rot, a.refl != b.refl};
}

GroupElement group_inv(const GroupParams& g, const GroupElement& a) {
  if (a.refl) return a;  // reflections are involutions
  return {(g.n - a.rot) % g.n, false};
}

std::vector<GroupElement> all_elements(const GroupParams& g) {
  std::vector<GroupElement> v;
  for (int e = 0; e < 2; ++e)
    for (int k = 0; k < g.n; ++k) v.push_back({k, e == 1});
  return v;
}

long VirtualRep::mult(const IrrLabel& l) const {
  auto it = mults.find(l);
  return it == mults.end() ? 0 : it->second;
}

void VirtualRep::add(const IrrLabel& l, long m) {
  if (m == 0) return;
  long& x = mults[l];
  x += m;
  if (x == 0) mults.erase(l);
}

long VirtualRep::dim() const {
  long d = 0;
  for (const auto& [l, m] : mults) d += m * l.dim();
  return d;
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& o) {
  for (const auto& [l, m] : o.mults) add(l, m);
  return *this;
}

std::string VirtualRep::to_string() const {
  if (mults.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, m] : mults) {
    if (!first) os << " + ";
    first = false;
    if (m != 1) os << m << "*";
    os << l.name();
  }
  return os.str();
}

VirtualRep irr(const IrrLabel& l) {
  VirtualRep v;
  v.add(l, 1);
  return v;
}

CycNum char_value(const GroupParams& g, const IrrLabel& l, const GroupElement& e) {
  switch (l.kind) {
    case IrrLabel::Kind::Triv: return CycNum(g.n, 1);
    case IrrLabel::Kind::Sgn: return CycNum(g.n, e.refl ? -1 : 1);
    case IrrLabel::Kind::Chi:
      if (e.refl) return CycNum(g.n, 0);
      return CycNum::zeta(g.n, static_cast<long>(l.i) * e.rot) + CycNum::zeta(g.n, -static_cast<long>(l.i) * e.rot);
  }
  return CycNum(g.n, 0);
}

VirtualRep fold_index(const GroupParams& g, long i) {
  long k = ((i % g.n) + g.n) % g.n;
  VirtualRep v;
  if (k == 0) {
    v.add(IrrLabel::triv(), 1);
    v.add(IrrLabel::sgn(), 1);
  } else {
    v.add(IrrLabel::chi(g, static_cast<int>(k <= g.C ? k : g.n - k)), 1);
  }
  return v;
}

VirtualRep tensor_decompose(const GroupParams& g, const IrrLabel& a, const IrrLabel& b) {
  using K = IrrLabel::Kind;
  if (a.kind == K::Triv) return irr(b);
  if (b.kind == K::Triv) return irr(a);
  if (a.kind == K::Sgn) return irr(sgn_twist(b));
  if (b.kind == K::Sgn) return irr(sgn_twist(a));
  VirtualRep v = fold_index(g, a.i + b.i);
  v += fold_index(g, a.i - b.i);
  return v;
}

VirtualRep tensor(const GroupParams& g, const VirtualRep& a, const VirtualRep& b) {
  VirtualRep r;
  for (const auto& [la, ma] : a.mults)
    for (const auto& [lb, mb] : b.mults)
      for (const auto& [l, m] : tensor_decompose(g, la, lb).mults) r.add(l, ma * mb * m);
  return r;
}

ClassFunction character(const GroupParams& g, const VirtualRep& v) {
  ClassFunction f;
  for (const auto& e : all_elements(g)) {
    CycNum x(g.n, 0);
    for (const auto& [l, m] : v.mults) x += CycNum(g.n, m) * char_value(g, l, e);
    f.push_back(x);
  }
  return f;
}

ClassFunction regular_character(const GroupParams& g) {
  ClassFunction f;
  for (const auto& e : all_elements(g)) f.push_back(CycNum(g.n, (e.rot == 0 && !e.refl) ? g.order() : 0));
  return f;
}

long mult_in(const GroupParams& g, const ClassFunction& chi, const IrrLabel& mu) {
  auto els = all_elements(g);
  if (chi.size() != els.size()) throw std::invalid_argument("class function has wrong length");
  CycNum acc(g.n, 0);
  for (size_t k = 0; k < els.size(); ++k) acc += chi[k] * char_value(g, mu, group_inv(g, els[k]));
  if (!acc.is_rational()) throw std::runtime_error("inner product is not rational");
  mpq_class v = acc.rational_value() / g.order();
  if (v.get_den() != 1) throw std::runtime_error("inner product is not an integer");
  return v.get_num().get_si();
}

long mult_in(const GroupParams& g, const VirtualRep& v, const IrrLabel& mu) { return mult_in(g, character(g, v), mu); }

}  // namespace springer
