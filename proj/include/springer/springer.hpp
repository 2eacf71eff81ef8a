#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "springer/gchar.hpp"
#include "springer/modeng.hpp"
#include "springer/orders.hpp"

namespace springer {

int default_trunc(int n);  // 3n+6

using SeriesMatrix = std::vector<std::vector<QSeries>>;

// Trace-quotient data shared by every preorder at fixed (n, N).
class Engine {
 public:
  Engine(int n, int N, std::string cache_dir = "");

  const GroupParams& params() const { return cache_.params(); }
  int trunc() const { return cache_.trunc(); }
  TraceQuotientCache& cache() { return cache_; }

  TruncatedCharacter character(int lambda, std::uint32_t mask);
  BettiTable betti(int lambda, std::uint32_t mask);
  LabelSet ext1_targets(int lambda, std::uint32_t mask);  // {mu : Ext^1(F, L_mu) != 0}
  // Ext(F_lambda^{mask}, (F_mu^{umask})^*); throws InsufficientTruncation.
  ExtTable ext_dual(int lambda, std::uint32_t mask, int mu, std::uint32_t umask);
  const TruncatedCharacter& projective(int lambda);

 private:
  TraceQuotientCache cache_;
  std::vector<TruncatedCharacter> proj_;
  std::mutex mu_;
  struct ExtSlot {
    std::once_flag once;
    ExtTable table;
    std::string error;
  };
  std::map<std::uint64_t, std::shared_ptr<ExtSlot>> ext_;
};

struct CandidateFamily {
  Preorder p;
  std::vector<std::uint32_t> up, strict;  // by label index
  std::vector<TruncatedCharacter> K, Kt;
  std::vector<LabelSet> D;
  std::vector<int> top;
};

CandidateFamily build_family(Engine& E, const Preorder& p);

struct CheckResult {
  bool ok = true;
  std::string detail;
};

CheckResult check_compatibility(Engine& E, const CandidateFamily& fam);
CheckResult check_finite(const GroupParams& g, const CandidateFamily& fam);
CheckResult check_filtration_characters(Engine& E, const CandidateFamily& fam);
// Throws InsufficientTruncation when the window is too small.
CheckResult check_orthogonality(Engine& E, const CandidateFamily& fam);

struct ReciprocityMatrices {
  SeriesMatrix PL, KL, KtL, KtK, PKt, PK;
  SeriesMatrix KtK_filtration;  // (Kt:K) read off the K-filtration of each Kt
};

ReciprocityMatrices reciprocity_matrices(Engine& E, const CandidateFamily& fam);
// Symmetry, (P:Kt) = KL^t, (P:K) = KtL^t, PL = KL^t (Kt:K) KL and agreement with the filtration multiplicities.
CheckResult check_reciprocity(const ReciprocityMatrices& R);
CheckResult check_uniqueness(const GroupParams& g, const CandidateFamily& fam);

SeriesMatrix series_inverse(const SeriesMatrix& A);  // requires constant term identity
SeriesMatrix series_mul(const SeriesMatrix& A, const SeriesMatrix& B);
SeriesMatrix series_transpose(const SeriesMatrix& A);
bool series_matrix_equal(const SeriesMatrix& A, const SeriesMatrix& B);

// Properties of passing families.
CheckResult check_socle_law(Engine& E, const CandidateFamily& fam);
CheckResult check_chain_law(const GroupParams& g, const CandidateFamily& fam);
// 1 when condition (v) with triv at the bottom holds, 2 for the sgn mirror, 3 for both, 0 for neither.
int triv_sgn_orientation(const GroupParams& g, const CandidateFamily& fam);
CheckResult check_possible_D(const GroupParams& g, const CandidateFamily& fam);
CheckResult check_ext1_edges(Engine& E, const CandidateFamily& fam);
CheckResult check_recovery(const GroupParams& g, const CandidateFamily& fam);

struct Verdict {
  enum class Status { Pass, Fail, Inconclusive };
  Preorder p;
  Status status = Status::Fail;
  std::string failed;  // first failed condition
  std::string detail;
};

struct PropertyReport {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct ClassificationReport {
  int n = 3, trunc = 0;
  long scanned = 0;
  std::vector<Verdict> verdicts;  // sorted by canonical key
  std::vector<Preorder> passed, expected, inconclusive;
  bool match = false;
  double seconds = 0;
  std::map<std::string, ReciprocityMatrices> matrices;  // by preorder key
  std::vector<PropertyReport> properties;
  std::map<std::string, long> failure_counts;
};

struct ClassifyOptions {
  int jobs = 1;
  std::string cache_dir;
  bool properties = true;  // reciprocity and property checks on passing families
  std::function<void(long done, long total)> progress;
};

Verdict evaluate(Engine& E, const Preorder& p);
ClassificationReport classify(int n, int N, const ClassifyOptions& opt = {});
ClassificationReport classify(Engine& E, const ClassifyOptions& opt = {});

nlohmann::json to_json(const GroupParams& g, const Preorder& p);
nlohmann::json to_json(const GroupParams& g, const SeriesMatrix& m);
nlohmann::json to_json(const ClassificationReport& r);
std::string to_table(const ClassificationReport& r);

// Acceptance battery, one entry per criterion.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool ok = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  std::vector<int> ns{3, 5, 7};
  int jobs = 1;
  std::string cache_dir;
  std::vector<int> only;  // empty: every criterion
};

std::vector<CriterionResult> verify_suite(const VerifyOptions& opt);
nlohmann::json to_json(const std::vector<CriterionResult>& r);

}  // namespace springer
