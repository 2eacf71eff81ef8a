#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "springer/dihedral.hpp"
#include "springer/qseries.hpp"

namespace springer {

using LabelSet = std::set<IrrLabel>;

struct TruncatedCharacter;

// gch M = sum_lambda [M:L_lambda]_q [L_lambda], entries as exact rational functions.
struct GradedCharacter {
  std::map<IrrLabel, QRational> entries;

  QRational at(const IrrLabel& l) const;
  void add(const IrrLabel& l, const QRational& r);
  void add(const VirtualRep& v, const QRational& r);  // r * sum mult [L_l]

  GradedCharacter& operator+=(const GradedCharacter& o);
  GradedCharacter& operator-=(const GradedCharacter& o);
  friend GradedCharacter operator+(GradedCharacter a, const GradedCharacter& b) { return a += b; }
  friend GradedCharacter operator-(GradedCharacter a, const GradedCharacter& b) { return a -= b; }
  friend GradedCharacter operator*(const QRational& r, const GradedCharacter& c);

  GradedCharacter simplified() const;  // drops zero entries, cancels denominators
  bool is_finite() const;              // every entry a Laurent polynomial after simplification
  TruncatedCharacter expand(int N) const;
  QRational gdim() const;
  friend bool operator==(const GradedCharacter& a, const GradedCharacter& b);
};

struct TruncatedCharacter {
  int trunc = 0;
  std::map<IrrLabel, QSeries> entries;

  QSeries at(const IrrLabel& l) const;  // zero series if absent
  bool nonnegative() const;
};

// Entrywise equality on the common window over the given labels.
bool char_equal(const GroupParams& g, const TruncatedCharacter& a, const TruncatedCharacter& b, int* window = nullptr);

struct NoClosedForm : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GradedCharacter gch_simple(const IrrLabel& l);
GradedCharacter gch_simple_virtual(const VirtualRep& v);
GradedCharacter gch_projective(const GroupParams& g, const IrrLabel& l);
// gch P_{chi_i} for an arbitrary integer index, folded (chi_0 = triv + sgn).
GradedCharacter gch_projective_chi(const GroupParams& g, long i);
// Alternating sums of projectives for the resolved quotients F_lambda^D.
GradedCharacter gch_F_closed(const GroupParams& g, const IrrLabel& l, const LabelSet& D);

using OmegaMatrix = std::vector<std::vector<QRational>>;  // indexed by IrrLabel::index
OmegaMatrix omega(const GroupParams& g);

LaurentPoly gep_simple(const GroupParams& g, const IrrLabel& l, const IrrLabel& mu);
LaurentPoly gep(const GroupParams& g, const GradedCharacter& M, const IrrLabel& mu);
bool gch_diff_check(const GroupParams& g, long i, int N);

nlohmann::json to_json(const GroupParams& g, const GradedCharacter& c);
nlohmann::json to_json(const GroupParams& g, const TruncatedCharacter& c);
GradedCharacter character_from_json(const GroupParams& g, const nlohmann::json& j);
TruncatedCharacter truncated_from_json(const GroupParams& g, const nlohmann::json& j, int trunc);

}  // namespace springer
