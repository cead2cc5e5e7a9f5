#pragma once

#include <string>
#include <vector>

namespace weber {

/// One exact series identity, checked as "lhs - rhs vanishes".
struct IdentityCheck {
  std::string name;
  bool vanishes = false;
  long terms = 0;  // absolute precision of the difference, in q^(1/48) steps
};

/// The Weber-function identities: f^8 = f1^8 + f2^8, f f1 f2 = sqrt2, the
/// eta triple product, the three j-relations and f1^8(tau) = -f(tau+3)^8.
/// `prec` is in q^(1/48) steps.
std::vector<IdentityCheck> qid_report(long prec);

}  // namespace weber
