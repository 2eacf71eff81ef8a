#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "springer/dihedral.hpp"
#include "springer/gchar.hpp"
#include "springer/linalg.hpp"

namespace springer {

// Graded module over S*W, S = C[X,Y], truncated to degrees lo..hi.
//
// Every degree piece is split into r-eigenspaces: block (d, w) is the part on
// which r acts by zeta^w. X raises the weight by one, Y lowers it, s maps
// weight w to -w. In monomial bases all action matrices are rational, so the
// blocks carry matrices over Q; the full-degree matrices over Q(zeta_n) are
// available through the act_*/mul_* accessors.
class GradedModule {
 public:
  GradedModule() = default;
  GradedModule(int n, int lo, int hi);

  int n() const { return n_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int wrap(int w) const { return ((w % n_) + n_) % n_; }

  int dim(int d, int w) const;
  int dim(int d) const;
  int top_degree() const;  // largest d with a nonzero piece, lo-1 if none

  // Block maps: X(d,w) : (d,w) -> (d+1,w+1), Y(d,w) : (d,w) -> (d+1,w-1), S(d,w) : (d,w) -> (d,-w).
  // X and Y are defined for lo <= d < hi.
  const Matrix& X(int d, int w) const;
  const Matrix& Y(int d, int w) const;
  const Matrix& S(int d, int w) const;
  Matrix& X(int d, int w);
  Matrix& Y(int d, int w);
  Matrix& S(int d, int w);
  void set_dim(int d, int w, int k);
  void allocate_maps();  // sizes all matrices from dims (zero entries)

  // Full-degree matrices; basis order concatenates blocks w = 0..n-1.
  std::vector<std::vector<CycNum>> act_r(int d) const;
  std::vector<std::vector<CycNum>> act_s(int d) const;
  std::vector<std::vector<CycNum>> mul_X(int d) const;
  std::vector<std::vector<CycNum>> mul_Y(int d) const;

 private:
  int n_ = 3, lo_ = 0, hi_ = -1;
  std::vector<std::vector<int>> dims_;
  std::vector<std::vector<Matrix>> X_, Y_, S_;
  int off(int d) const;
  std::vector<std::vector<CycNum>> full(int d_from, int d_to, const std::vector<std::vector<Matrix>>& maps, int shift) const;
};

// Per-block subspaces of a GradedModule.
struct Submodule {
  int lo = 0, hi = -1;
  std::vector<std::vector<Subspace>> blocks;  // [d-lo][w]
  const Subspace& at(int d, int w) const { return blocks[d - lo][w]; }
  Subspace& at(int d, int w) { return blocks[d - lo][w]; }
  int dim(int d) const;
};

struct Seed {
  int degree;
  int weight;
  std::vector<Vec> vectors;  // in block coordinates
};

GradedModule build_P(const GroupParams& g, const IrrLabel& l, int N);

// Projector-trace multiplicity over Q(zeta_n).
long isotypic_multiplicity(const GroupParams& g, const GradedModule& M, const IrrLabel& mu, int d);
// Same number read off the weight blocks directly.
long block_multiplicity(const GroupParams& g, const GradedModule& M, const IrrLabel& mu, int d);
std::vector<Seed> isotypic_component(const GroupParams& g, const GradedModule& M, const IrrLabel& mu, int d);

Submodule generated_submodule(const GradedModule& M, const std::vector<Seed>& seeds);
GradedModule quotient(const GradedModule& M, const Submodule& sub);
bool is_submodule(const GradedModule& M, const Submodule& sub);

TruncatedCharacter module_character(const GroupParams& g, const GradedModule& M);

// P_lambda modulo the positive-degree isotypic components of the types in D.
GradedModule trace_quotient_module(const GroupParams& g, const IrrLabel& l, const LabelSet& D, int N);
TruncatedCharacter trace_quotient(const GroupParams& g, const IrrLabel& l, const LabelSet& D, int N);

struct BettiTable {
  std::map<std::tuple<int, int, IrrLabel>, long> entries;  // (i, d, mu)
  int valid_to = 0;

  long at(int i, int d, const IrrLabel& mu) const;
  long total(int i) const;
  int max_degree() const;  // largest d with a nonzero entry, -1 if none
  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries == b.entries; }
};

struct InsufficientTruncation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A generator of a free module S (x) G: a W-stable choice of homogeneous vectors.
struct Generator {
  int degree = 0;
  int weight = 0;
  int partner = 0;  // index of s(g); equal to own index for weight 0
  int sign = 1;     // s(g) = sign * gens[partner]
  Vec image;        // coordinates in the target block (degree, weight)
};

// Free module on generators with monomial basis X^a Y^b (x) g.
struct FreeModule {
  GradedModule mod;
  std::vector<Generator> gens;
  // pos[g][k][a] = index of X^a Y^(k-a) (x) g within its block at degree gens[g].degree + k
  std::vector<std::vector<std::vector<int>>> pos;
  struct Entry {
    int gen, a, b;
  };
  std::vector<std::vector<std::vector<Entry>>> basis;  // [d-lo][w] -> entries
};

FreeModule build_free(int n, const std::vector<Generator>& gens, int N);

struct ResolutionStep {
  FreeModule F;
  std::vector<std::vector<Matrix>> phi;  // [d][w] : F block -> target block
};

struct Resolution {
  int n = 3, trunc = 0;
  std::vector<ResolutionStep> steps;  // F_0, F_1, F_2
  BettiTable betti;
};

Resolution minimal_resolution(const GroupParams& g, const GradedModule& M);
BettiTable betti_of(const GroupParams& g, const std::vector<Generator>& gens, int i, BettiTable& into);

// dim Ext^i(M, L_mu) keyed by (i, internal degree of the generators).
std::map<std::pair<int, int>, long> ext_to_simple(const BettiTable& b, const IrrLabel& mu);

// Dual of a finite-dimensional module, supported in degrees [-top, -lo].
GradedModule dual_module(const GradedModule& M);

struct ExtTable {
  std::map<std::pair<int, int>, long> dims;  // (i, d) with d the Hom degree (d <= 0)
  int window_lo = 0;                         // exact for window_lo <= d <= 0
};

// Cohomology of Hom_A(F_., Kdual); throws InsufficientTruncation when the resolution
// window cannot cover every degree where known generators contribute.
ExtTable ext_to_dual(const GroupParams& g, const Resolution& res, const GradedModule& Kdual);

// Positive-degree socle: kernel of X and Y, as W-representations per degree.
std::map<int, VirtualRep> socle(const GroupParams& g, const GradedModule& M);

nlohmann::json to_json(const GroupParams& g, const BettiTable& b);
BettiTable betti_from_json(const GroupParams& g, const nlohmann::json& j);

// Memo of trace quotients keyed by (lambda, D) for fixed n and N, optionally
// persisted as one JSON file per key.
class TraceQuotientCache {
 public:
  TraceQuotientCache(int n, int N, std::string dir = "");

  const GroupParams& params() const { return g_; }
  int trunc() const { return N_; }

  TruncatedCharacter character(const IrrLabel& l, const LabelSet& D);
  BettiTable betti(const IrrLabel& l, const LabelSet& D);
  std::shared_ptr<const GradedModule> module(const IrrLabel& l, const LabelSet& D);
  std::shared_ptr<const Resolution> resolution(const IrrLabel& l, const LabelSet& D);
  std::shared_ptr<const GradedModule> dual(const IrrLabel& l, const LabelSet& D);

  std::string cache_file(const IrrLabel& l, const LabelSet& D) const;
  size_t disk_hits() const;

 private:
  struct Entry {
    std::once_flag module_once, res_once, dual_once, char_once;
    std::shared_ptr<const GradedModule> module, dual;
    std::shared_ptr<const Resolution> res;
    std::optional<TruncatedCharacter> chr;
    std::optional<BettiTable> betti;
    std::mutex mu;
  };
  GroupParams g_;
  int N_;
  std::string dir_;
  std::mutex mu_;
  std::map<std::pair<int, unsigned>, std::shared_ptr<Entry>> entries_;
  size_t disk_hits_ = 0;

  std::shared_ptr<Entry> entry(const IrrLabel& l, const LabelSet& D);
  void ensure_char(const IrrLabel& l, const LabelSet& D, Entry& e);
  void store(const IrrLabel& l, const LabelSet& D, Entry& e);
};

unsigned label_mask(const GroupParams& g, const LabelSet& D);
LabelSet mask_labels(const GroupParams& g, unsigned mask);

}  // namespace springer
