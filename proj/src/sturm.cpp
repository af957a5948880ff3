#include "altruns/sturm.hpp"

#include "altruns/errors.hpp"

namespace altruns {

namespace {

int count_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  Polynomial d = p.derivative();
  while (!d.is_zero()) {
    seq.push_back(d);
    d = -divrem(seq[seq.size() - 2], seq.back()).remainder;
  }
  return seq;
}

int sign_changes_at(const std::vector<Polynomial>& seq, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& q : seq) signs.push_back(sgn(q(x)));
  return count_changes(signs);
}

int sign_changes_at_pos_infinity(const std::vector<Polynomial>& seq) {
  std::vector<int> signs;
  for (const auto& q : seq) signs.push_back(sgn(q.leading()));
  return count_changes(signs);
}

int sign_changes_at_neg_infinity(const std::vector<Polynomial>& seq) {
  std::vector<int> signs;
  for (const auto& q : seq) {
    const int s = sgn(q.leading());
    signs.push_back(q.degree() % 2 == 0 ? s : -s);
  }
  return count_changes(signs);
}

RealRootAudit sturm_real_root_audit(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("root audit of the zero polynomial");

  // Strip the x^v factor so the chain is never evaluated at a root.
  const int v = p.valuation();
  std::vector<Rational> tail(p.coefficients().begin() + v, p.coefficients().end());
  const Polynomial q(std::move(tail));

  const auto seq = sturm_sequence(q);
  RealRootAudit audit;
  audit.real_root_count =
      sign_changes_at_neg_infinity(seq) - sign_changes_at_pos_infinity(seq) + (v > 0 ? 1 : 0);
  audit.positive_root_count = sign_changes_at(seq, 0) - sign_changes_at_pos_infinity(seq);
  audit.squarefree_degree = q.degree() - seq.back().degree() + (v > 0 ? 1 : 0);
  audit.all_roots_nonpositive =
      audit.positive_root_count == 0 && audit.real_root_count == audit.squarefree_degree;
  return audit;
}

}  // namespace altruns
