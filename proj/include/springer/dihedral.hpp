#pragma once

#include <map>
#include <string>
#include <vector>

#include "springer/qseries.hpp"

namespace springer {

// W = D_n with n odd; C = (n-1)/2 two-dimensional irreducibles.
struct GroupParams {
  int n = 3;
  int C = 1;

  explicit GroupParams(int n_);
  int order() const { return 2 * n; }
  int num_irr() const { return C + 2; }
};

// Canonical label. Index order used throughout: triv, chi1..chiC, sgn.
struct IrrLabel {
  enum class Kind { Triv, Sgn, Chi };
  Kind kind = Kind::Triv;
  int i = 0;  // 1..C for Chi

  static IrrLabel triv() { return {Kind::Triv, 0}; }
  static IrrLabel sgn() { return {Kind::Sgn, 0}; }
  static IrrLabel chi(const GroupParams& g, int i);  // i must be canonical

  bool is_chi() const { return kind == Kind::Chi; }
  int dim() const { return is_chi() ? 2 : 1; }
  int index(const GroupParams& g) const;
  static IrrLabel from_index(const GroupParams& g, int idx);

  std::string name() const;
  static IrrLabel parse(const GroupParams& g, const std::string& s);

  friend bool operator==(const IrrLabel& a, const IrrLabel& b) { return a.kind == b.kind && a.i == b.i; }
  // triv < chi1 < ... < chiC < sgn
  friend bool operator<(const IrrLabel& a, const IrrLabel& b);
};

std::vector<IrrLabel> all_labels(const GroupParams& g);
IrrLabel sgn_twist(const IrrLabel& l);  // - (x) sgn on labels

// r^rot s^refl
struct GroupElement {
  int rot = 0;
  bool refl = false;
};

GroupElement group_mul(const GroupParams& g, const GroupElement& a, const GroupElement& b);
GroupElement group_inv(const GroupParams& g, const GroupElement& a);
std::vector<GroupElement> all_elements(const GroupParams& g);

// Multiplicities of canonical irreducibles; values may be negative.
struct VirtualRep {
  std::map<IrrLabel, long> mults;

  long mult(const IrrLabel& l) const;
  void add(const IrrLabel& l, long m);
  long dim() const;
  VirtualRep& operator+=(const VirtualRep& o);
  friend bool operator==(const VirtualRep& a, const VirtualRep& b) { return a.mults == b.mults; }
  std::string to_string() const;
};

VirtualRep irr(const IrrLabel& l);

CycNum char_value(const GroupParams& g, const IrrLabel& l, const GroupElement& e);
// chi_{i mod n} in canonical labels: chi_0 = triv + sgn, chi_i = chi_{n-i}.
VirtualRep fold_index(const GroupParams& g, long i);
VirtualRep tensor_decompose(const GroupParams& g, const IrrLabel& a, const IrrLabel& b);
VirtualRep tensor(const GroupParams& g, const VirtualRep& a, const VirtualRep& b);

// Class function given by its values on all_elements(g).
using ClassFunction = std::vector<CycNum>;
ClassFunction character(const GroupParams& g, const VirtualRep& v);
ClassFunction regular_character(const GroupParams& g);

// (1/|W|) sum_g chi(g) chi_mu(g^-1); throws std::runtime_error if not an integer.
long mult_in(const GroupParams& g, const ClassFunction& chi, const IrrLabel& mu);
long mult_in(const GroupParams& g, const VirtualRep& v, const IrrLabel& mu);

}  // namespace springer
