// SPDX-License-Identifier: Apache-2.0

#ifndef Z2Z4_BUDGET_HPP
#define Z2Z4_BUDGET_HPP

#include <string>

#include "z2z4/errors.hpp"

namespace z2z4 {

// Desk-scale limits, all as base-2 logarithms.
struct Budget {
  static constexpr unsigned hard_limit_log2 = 28;

  unsigned ambient_log2 = 24;  // full ambient sweeps (exhaustive radius, kernel dual, Gray engine)
  unsigned coset_log2 = 22;    // coset tables and dual enumerations
  unsigned code_log2 = 24;     // codeword enumeration
  unsigned work_slack_log2 = 12;  // exhaustive sweeps may do ambient * 2^slack distance evaluations
  unsigned columns_log2 = 20;     // generator matrix width for builders

  // Sets the ambient and enumeration limits to 2^log2 and the coset limit to
  // 2^(log2-2), keeping the default ratio. Refuses anything above the hard limit.
  static Budget with_limit(unsigned log2) {
    if (log2 > hard_limit_log2)
      throw ResourceError("budget 2^" + std::to_string(log2) + " exceeds the hard limit 2^" +
                          std::to_string(hard_limit_log2));
    Budget b;
    b.ambient_log2 = log2;
    b.coset_log2 = log2 >= 2 ? log2 - 2 : 0;
    b.code_log2 = log2;
    return b;
  }
};

}  // namespace z2z4

#endif  // Z2Z4_BUDGET_HPP
