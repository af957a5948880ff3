#include "altruns/bijection.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <thread>
#include <utility>

#include "altruns/errors.hpp"

namespace altruns {

namespace {

void check_element(int v) {
  if (v < 1 || v > kMaxGroundSetSize)
    throw DomainError("subset element " + std::to_string(v) + " outside 1.." +
                      std::to_string(kMaxGroundSetSize));
}

void check_ground_set(int n) {
  if (n < 1 || n > kMaxGroundSetSize)
    throw DomainError("ground set size must be in 1.." + std::to_string(kMaxGroundSetSize));
}

Subset ground_set(int n) { return Subset::range(1, n); }

}  // namespace

Subset::Subset(std::initializer_list<int> elements) {
  for (int v : elements) insert(v);
}

Subset Subset::range(int lo, int hi) {
  Subset s;
  for (int v = lo; v <= hi; ++v) s.insert(v);
  return s;
}

int Subset::min() const {
  if (empty()) throw DomainError("min of empty subset");
  return std::countr_zero(bits_);
}

int Subset::max() const {
  if (empty()) throw DomainError("max of empty subset");
  return 63 - std::countl_zero(bits_);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

void Subset::insert(int v) {
  check_element(v);
  bits_ |= std::uint64_t{1} << v;
}

std::string to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

unsigned settuple_violations(const SetTuple& t) {
  unsigned v = 0;
  const int s = t.s();
  const Subset ground = (t.n >= 1 && t.n <= kMaxGroundSetSize) ? ground_set(t.n) : Subset();
  Subset all;
  for (const Subset& x : t.sets) {
    if ((x.bits() & ~ground.bits()) != 0) v |= static_cast<unsigned>(Violation::kOutsideGroundSet);
    if (x.size() < 2) v |= static_cast<unsigned>(Violation::kSetTooSmall);
    all = all | x;
  }
  if (all != ground) v |= static_cast<unsigned>(Violation::kNotCovering);
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) {
      const Subset both = t.sets[i] & t.sets[j];
      if (j == i + 1) {
        if (both.size() != 1) v |= static_cast<unsigned>(Violation::kAdjacentIntersection);
      } else if (!both.empty()) {
        v |= static_cast<unsigned>(j == i + 2 ? Violation::kSkipOneOverlap
                                              : Violation::kDistantOverlap);
      }
    }
  }
  for (int i = 0; i + 1 < s; ++i) {
    const Subset& a = t.sets[i];
    const Subset& b = t.sets[i + 1];
    if (a.empty() || b.empty()) continue;
    // 0-based even index is an odd 1-based index: shared maximum.
    const bool odd = i % 2 == 0;
    const int ea = odd ? a.max() : a.min();
    const int eb = odd ? b.max() : b.min();
    if (ea != eb || !(a & b).contains(ea))
      v |= static_cast<unsigned>(Violation::kEndpointMismatch);
  }
  return v;
}

std::string describe_violations(unsigned flags) {
  static const std::pair<Violation, const char*> names[] = {
      {Violation::kAdjacentIntersection, "adjacent sets do not share exactly one element"},
      {Violation::kSkipOneOverlap, "S_i and S_{i+2} intersect"},
      {Violation::kDistantOverlap, "non-neighbouring sets intersect"},
      {Violation::kSetTooSmall, "a set has fewer than 2 elements"},
      {Violation::kEndpointMismatch, "shared max/min endpoint rule fails"},
      {Violation::kOutsideGroundSet, "element outside [n]"},
      {Violation::kNotCovering, "sets do not cover [n]"},
  };
  std::string out;
  for (const auto& [flag, name] : names) {
    if ((flags & static_cast<unsigned>(flag)) == 0) continue;
    if (!out.empty()) out += "; ";
    out += name;
  }
  return out.empty() ? "ok" : out;
}

bool is_valid_choice_sequence(const ChoiceSequence& h, int s) {
  if (static_cast<int>(h.h.size()) != s - 1) return false;
  for (int i = 1; i <= s - 1; ++i) {
    const int v = h.h[static_cast<std::size_t>(i - 1)];
    if (v != i && v != i + 1) return false;
  }
  return true;
}

void validate_ttuple(const TTuple& t) {
  check_ground_set(t.n);
  if (t.sets.empty()) throw DomainError("T-tuple needs at least one part");
  Subset all;
  for (const Subset& x : t.sets) {
    if (!(all & x).empty()) throw DomainError("T-tuple parts are not pairwise disjoint");
    all = all | x;
  }
  if (all != ground_set(t.n)) throw DomainError("T-tuple parts do not cover [n]");
}

SetTuple permutation_to_settuple(const Permutation& p) {
  const int n = p.size();
  check_ground_set(n);
  if (n < 2) throw DomainError("runs undefined below n=2");
  if (!first_run_up(p)) throw DomainError("first-run-up convention violated");
  SetTuple t;
  t.n = n;
  Subset current;
  current.insert(p[0]);
  bool up = true;
  for (int i = 1; i < n; ++i) {
    const bool step_up = p[i] > p[i - 1];
    if (step_up != up) {
      // p[i-1] is a turning point shared by both runs.
      t.sets.push_back(current);
      current = Subset{p[i - 1]};
      up = step_up;
    }
    current.insert(p[i]);
  }
  t.sets.push_back(current);
  return t;
}

Permutation settuple_to_permutation(const SetTuple& t) {
  check_ground_set(t.n);
  if (t.sets.empty()) throw DomainError("set tuple needs at least one set");
  if (const unsigned v = settuple_violations(t); v != 0)
    throw DomainError("invalid set tuple: " + describe_violations(v));
  std::vector<int> merged;
  for (std::size_t i = 0; i < t.sets.size(); ++i) {
    std::vector<int> e = t.sets[i].elements();
    if (i % 2 == 1) std::reverse(e.begin(), e.end());
    merged.insert(merged.end(), e.begin(), e.end());
  }
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return Permutation(std::move(merged));
}

TTuple phi(const ChoiceSequence& h, const SetTuple& t) {
  const int s = t.s();
  if (!is_valid_choice_sequence(h, s)) throw DomainError("invalid choice sequence");
  if (const unsigned v = settuple_violations(t); v != 0)
    throw DomainError("invalid set tuple: " + describe_violations(v));
  TTuple out{t.n, t.sets};
  for (int i = 0; i + 1 < s; ++i) {
    const int shared = (t.sets[i] & t.sets[i + 1]).min();
    out.sets[static_cast<std::size_t>(h.h[i] - 1)].erase(shared);
  }
  return out;
}

const char* to_string(FailureClass c) {
  switch (c) {
    case FailureClass::kNone: return "preimage";
    case FailureClass::kUnionTooSmall: return "union-too-small";
    case FailureClass::kSkipOneCollision: return "skip-one-collision";
    case FailureClass::kSetTooSmall: return "set-too-small";
    case FailureClass::kEndpointRule: return "endpoint-rule";
    case FailureClass::kOther: return "other";
  }
  return "unknown";
}

ReconstructionTrace reconstruct_trace(const TTuple& t) {
  validate_ttuple(t);
  const int s = t.s();
  ReconstructionTrace tr;

  // Step 1: consecutive unions. Each must hold e_i, so an empty union admits
  // no preimage.
  for (int i = 0; i + 1 < s; ++i) {
    tr.unions.push_back(t.sets[i] | t.sets[i + 1]);
    if (tr.unions.back().size() < kMinConsecutiveUnion && tr.early_exit_at == 0) tr.early_exit_at = i + 1;
  }
  if (tr.early_exit_at != 0) {
    tr.failure = FailureClass::kUnionTooSmall;
    return tr;
  }

  // Step 2: e_i is the maximum of the union for odd i, the minimum for even i.
  for (int i = 0; i + 1 < s; ++i)
    tr.deleted.push_back(i % 2 == 0 ? tr.unions[i].max() : tr.unions[i].min());

  // Step 3: h_i is the neighbour that does not already hold e_i.
  for (int i = 0; i + 1 < s; ++i)
    tr.choices.h.push_back(t.sets[i].contains(tr.deleted[i]) ? i + 2 : i + 1);

  // Step 4: re-insert.
  tr.candidate = t.sets;
  for (int i = 0; i + 1 < s; ++i)
    tr.candidate[static_cast<std::size_t>(tr.choices.h[i] - 1)].insert(tr.deleted[i]);

  tr.violations = settuple_violations(SetTuple{t.n, tr.candidate});
  const bool small_union =
      std::any_of(tr.unions.begin(), tr.unions.end(),
                  [](Subset u) { return u.size() < kSmallUnionThreshold; });
  const auto has = [&](Violation v) { return (tr.violations & static_cast<unsigned>(v)) != 0; };
  const unsigned endpoint_only = static_cast<unsigned>(Violation::kEndpointMismatch);
  if (tr.violations == 0)
    tr.failure = FailureClass::kNone;
  else if (has(Violation::kSkipOneOverlap))
    tr.failure = FailureClass::kSkipOneCollision;
  else if (has(Violation::kSetTooSmall))
    tr.failure = FailureClass::kSetTooSmall;
  else if (small_union)
    tr.failure = FailureClass::kUnionTooSmall;
  else if (tr.violations == endpoint_only)
    tr.failure = FailureClass::kEndpointRule;
  else
    tr.failure = FailureClass::kOther;
  return tr;
}

std::optional<Preimage> reconstruct(const TTuple& t) {
  ReconstructionTrace tr = reconstruct_trace(t);
  if (tr.failure != FailureClass::kNone) return std::nullopt;
  return Preimage{std::move(tr.choices), SetTuple{t.n, std::move(tr.candidate)}};
}

BigInt bonferroni_bound(int n, int s) {
  if (n < 1 || s < 1) throw DomainError("bonferroni bound requires n, s >= 1");
  const BigInt sb(s);
  return pow(sb, static_cast<unsigned long>(n)) -
         sb * (n + s) * pow(BigInt(s - 1), static_cast<unsigned long>(n - 1));
}

namespace {

struct CensusPartial {
  std::uint64_t successes = 0;
  std::array<std::uint64_t, kFailureClassCount> failures{};
  std::uint64_t large_part_misses = 0;
};

CensusPartial census_range(int n, int s, std::uint64_t lo, std::uint64_t hi) {
  CensusPartial out;
  // digits[v-1] = block of value v, least significant first.
  std::vector<int> digits(static_cast<std::size_t>(n));
  std::uint64_t x = lo;
  for (int v = 0; v < n; ++v) {
    digits[v] = static_cast<int>(x % static_cast<std::uint64_t>(s));
    x /= static_cast<std::uint64_t>(s);
  }
  TTuple t{n, std::vector<Subset>(static_cast<std::size_t>(s))};
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    std::fill(t.sets.begin(), t.sets.end(), Subset());
    for (int v = 0; v < n; ++v) t.sets[static_cast<std::size_t>(digits[v])].insert(v + 1);
    const ReconstructionTrace tr = reconstruct_trace(t);
    if (tr.failure == FailureClass::kNone) {
      ++out.successes;
    } else {
      ++out.failures[static_cast<std::size_t>(tr.failure)];
      const bool all_large = std::all_of(t.sets.begin(), t.sets.end(),
                                         [](Subset p) { return p.size() >= 2; });
      if (all_large) ++out.large_part_misses;
    }
    for (int v = 0; v < n; ++v) {
      if (++digits[v] < s) break;
      digits[v] = 0;
    }
  }
  return out;
}

}  // namespace

CensusResult image_census(int n, int s, std::uint64_t budget) {
  if (n < 2) throw DomainError("census requires n >= 2");
  if (s < 1) throw DomainError("census requires s >= 1");
  check_ground_set(n);
  std::uint64_t total = 1;
  for (int v = 0; v < n; ++v) {
    if (total > budget / static_cast<std::uint64_t>(s))
      throw BudgetError("census of s^n tuples exceeds the enumeration budget of " +
                        std::to_string(budget));
    total *= static_cast<std::uint64_t>(s);
  }
  if (total > budget)
    throw BudgetError("census of s^n tuples exceeds the enumeration budget of " +
                      std::to_string(budget));

  const std::uint64_t workers = std::clamp<std::uint64_t>(
      std::thread::hardware_concurrency(), 1, std::max<std::uint64_t>(1, total / 4096));
  std::vector<std::future<CensusPartial>> parts;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = total * w / workers;
    const std::uint64_t hi = total * (w + 1) / workers;
    parts.push_back(std::async(std::launch::async, census_range, n, s, lo, hi));
  }

  CensusResult r;
  r.n = n;
  r.s = s;
  std::uint64_t successes = 0;
  for (auto& f : parts) {
    const CensusPartial p = f.get();
    successes += p.successes;
    for (std::size_t i = 0; i < p.failures.size(); ++i) r.failures[i] += p.failures[i];
    r.large_part_misses += p.large_part_misses;
  }
  mpz_set_ui(r.successes.get_mpz_t(), static_cast<unsigned long>(successes));
  mpz_set_ui(r.total.get_mpz_t(), static_cast<unsigned long>(total));
  r.bonferroni = bonferroni_bound(n, s);
  const BigInt p = andre_triangle(n).at(n, s);
  r.expected = to_integer(Rational(p) * pow(Rational(2), s - 2));
  return r;
}

}  // namespace altruns
