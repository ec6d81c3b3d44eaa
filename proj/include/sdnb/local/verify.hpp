#pragma once

#include <vector>

#include "sdnb/padic/extension.hpp"

namespace sdnb::local {

struct GramEntryLocal {
  padic::LocalElem value;  // Tr(x g(x))
  long deviation = 0;      // p-content of value - delta (its precision if zero)
  long precision = 0;      // absolute precision of value
  bool ok = false;
};

struct GramReportLocal {
  bool pass = false;
  bool in_field = false;
  std::vector<GramEntryLocal> entries;
  long required = 0;  // N - guard
  long worst_deviation = 0;
  long margin = 0;    // least entry precision minus required
};

// Tr(x g(x)) = delta mod p^(N - guard) for every g. PrecisionError when the
// entries are not known to N - guard digits.
GramReportLocal verify_gram_local(const padic::LocalElem& x,
                                  const padic::LocalExtension& L);

}  // namespace sdnb::local
