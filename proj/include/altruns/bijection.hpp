#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "altruns/rational.hpp"
#include "altruns/run_counts.hpp"

namespace altruns {

inline constexpr int kMaxGroundSetSize = 63;

// Subset of [n] = {1..n}, n <= kMaxGroundSetSize; bit v marks element v.
class Subset {
 public:
  constexpr Subset() = default;
  Subset(std::initializer_list<int> elements);
  static Subset range(int lo, int hi);  // {lo..hi}
  static constexpr Subset from_bits(std::uint64_t bits) {
    Subset s;
    s.bits_ = bits;
    return s;
  }

  std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int v) const { return (bits_ >> v) & 1U; }
  int min() const;  // requires nonempty
  int max() const;  // requires nonempty
  std::vector<int> elements() const;  // ascending

  void insert(int v);
  void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  Subset operator|(Subset o) const { return from_bits(bits_ | o.bits_); }
  Subset operator&(Subset o) const { return from_bits(bits_ & o.bits_); }
  friend bool operator==(Subset, Subset) = default;
  friend auto operator<=>(Subset, Subset) = default;

 private:
  std::uint64_t bits_ = 0;
};

std::string to_string(Subset s);  // "{1,3}"

// (S_1, ..., S_s) in correspondence with first-run-up permutations of [n].
struct SetTuple {
  int n = 0;
  std::vector<Subset> sets;

  int s() const { return static_cast<int>(sets.size()); }
  friend bool operator==(const SetTuple&, const SetTuple&) = default;
  friend auto operator<=>(const SetTuple&, const SetTuple&) = default;
};

// (h_1, ..., h_{s-1}) with h_i in {i, i+1}; indices are 1-based.
struct ChoiceSequence {
  std::vector<int> h;

  friend bool operator==(const ChoiceSequence&, const ChoiceSequence&) = default;
  friend auto operator<=>(const ChoiceSequence&, const ChoiceSequence&) = default;
};

// (T_1, ..., T_s), pairwise disjoint with union [n]; empty parts allowed.
struct TTuple {
  int n = 0;
  std::vector<Subset> sets;

  int s() const { return static_cast<int>(sets.size()); }
  friend bool operator==(const TTuple&, const TTuple&) = default;
  friend auto operator<=>(const TTuple&, const TTuple&) = default;
};

// Conditions a candidate S-tuple can violate.
enum class Violation : unsigned {
  kAdjacentIntersection = 1U << 0,  // |S_i & S_{i+1}| != 1
  kSkipOneOverlap = 1U << 1,        // S_i & S_{i+2} nonempty
  kDistantOverlap = 1U << 2,        // S_i & S_j nonempty, j > i+2
  kSetTooSmall = 1U << 3,           // |S_i| < 2
  kEndpointMismatch = 1U << 4,      // shared max (odd i) / min (even i) rule
  kOutsideGroundSet = 1U << 5,      // element outside [n]
  kNotCovering = 1U << 6,           // union of the S_i is not [n]
};

// Bitwise OR of Violation flags; 0 when every condition holds.
unsigned settuple_violations(const SetTuple& t);
std::string describe_violations(unsigned flags);

bool is_valid_choice_sequence(const ChoiceSequence& h, int s);
// Throws DomainError unless the parts are pairwise disjoint with union [n].
void validate_ttuple(const TTuple& t);

// Requires first run up; throws DomainError("first-run-up convention violated").
SetTuple permutation_to_settuple(const Permutation& p);
// Inverse: sort alternately increasing/decreasing, concatenate, drop the
// repeated shared endpoints. Throws DomainError on an invalid tuple.
Permutation settuple_to_permutation(const SetTuple& t);

// Deletes e_i (the element shared by S_i and S_{i+1}) from S_{h_i}.
TTuple phi(const ChoiceSequence& h, const SetTuple& t);

// Smallest |T_i | T_{i+1}| for which reconstruction proceeds past step 1. An
// image tuple can lose both neighbouring shared elements e_{i-1}, e_{i+1}
// from S_i | S_{i+1}, so only e_i itself is guaranteed to survive.
inline constexpr int kMinConsecutiveUnion = 1;

// Failures not explained by an S_i & S_{i+2} overlap or a short S_i are
// attributed to a consecutive union smaller than this when one exists.
inline constexpr int kSmallUnionThreshold = 3;

// Why a T-tuple has no preimage.
enum class FailureClass {
  kNone,              // preimage found
  kUnionTooSmall,     // empty union at step 1, or a union below kSmallUnionThreshold
  kSkipOneCollision,  // reconstructed S_i & S_{i+2} nonempty
  kSetTooSmall,       // reconstructed |S_i| < 2
  // Only the shared max/min rule fails, with every consecutive union of size
  // >= 3. Occurs when an empty T_{i+1} sits between T_i and T_{i+2} with
  // max(T_i) < min(T_{i+2}), e.g. ({1,2,3}, {}, {4,5,6}).
  kEndpointRule,
  kOther,  // anything else; never observed
};

inline constexpr std::size_t kFailureClassCount = 6;

const char* to_string(FailureClass c);

struct ReconstructionTrace {
  std::vector<Subset> unions;      // step 1
  std::vector<int> deleted;        // step 2: e_i
  ChoiceSequence choices;          // step 3
  std::vector<Subset> candidate;   // step 4
  int early_exit_at = 0;           // 1-based i of the failing union, 0 if none
  unsigned violations = 0;         // of the candidate
  FailureClass failure = FailureClass::kNone;
};

struct Preimage {
  ChoiceSequence choices;
  SetTuple sets;
};

// Four-step reconstruction followed by validation of the candidate.
ReconstructionTrace reconstruct_trace(const TTuple& t);
std::optional<Preimage> reconstruct(const TTuple& t);

inline constexpr std::uint64_t kDefaultCensusBudget = std::uint64_t{1} << 24;

struct CensusResult {
  int n = 0;
  int s = 0;
  BigInt successes;
  BigInt total;                // s^n
  BigInt bonferroni;           // s^n - s(n+s)(s-1)^{n-1}
  BigInt expected;             // 2^{s-2} P(n, s)
  // Number of failures per FailureClass (index by enum value).
  std::array<std::uint64_t, kFailureClassCount> failures{};
  // Tuples whose parts all have size >= 2 but no preimage was found.
  std::uint64_t large_part_misses = 0;

  bool identity_holds() const { return successes == expected; }
  bool bounds_hold() const { return bonferroni <= successes && successes <= total; }
};

// Runs reconstruct on every map [n] -> [s]. Throws BudgetError if s^n > budget.
CensusResult image_census(int n, int s, std::uint64_t budget = kDefaultCensusBudget);

// s^n - s(n+s)(s-1)^{n-1}
BigInt bonferroni_bound(int n, int s);

}  // namespace altruns
