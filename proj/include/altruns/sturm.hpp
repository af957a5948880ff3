#pragma once

#include <vector>

#include "altruns/polynomial.hpp"

namespace altruns {

// p, p', -rem(p, p'), ... up to the last nonzero remainder (a constant
// multiple of gcd(p, p')).
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

int sign_changes_at(const std::vector<Polynomial>& seq, const Rational& x);
int sign_changes_at_pos_infinity(const std::vector<Polynomial>& seq);
int sign_changes_at_neg_infinity(const std::vector<Polynomial>& seq);

struct RealRootAudit {
  int real_root_count = 0;      // distinct real roots
  int positive_root_count = 0;  // distinct roots in (0, inf)
  int squarefree_degree = 0;
  bool all_roots_nonpositive = false;  // real-rooted with every root <= 0
};

// Throws DomainError for the zero polynomial.
RealRootAudit sturm_real_root_audit(const Polynomial& p);

}  // namespace altruns
