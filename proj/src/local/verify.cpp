#include "sdnb/local/verify.hpp"

#include <algorithm>

#include "sdnb/error.hpp"

namespace sdnb::local {

using padic::LocalElem;

GramReportLocal verify_gram_local(const LocalElem& x, const padic::LocalExtension& L) {
  GramReportLocal rep;
  rep.required = L.base.precision - L.base.guard;
  rep.in_field = L.contains(x);
  if (!rep.in_field) return rep;
  long least_prec = -1;
  rep.worst_deviation = -1;
  for (std::size_t g = 0; g < L.autos.size(); ++g) {
    GramEntryLocal en;
    en.value = L.trace(x * L.apply(g, x));
    const LocalElem dev = g == 0 ? en.value - LocalElem::one(L.ring) : en.value;
    en.deviation = dev.content_or_precision();
    en.precision = en.value.abs_precision();
    en.ok = en.deviation >= rep.required;
    if (least_prec < 0 || en.precision < least_prec) least_prec = en.precision;
    if (rep.worst_deviation < 0 || en.deviation < rep.worst_deviation)
      rep.worst_deviation = en.deviation;
    rep.entries.push_back(std::move(en));
  }
  rep.margin = least_prec - rep.required;
  rep.pass = std::all_of(rep.entries.begin(), rep.entries.end(),
                         [](const GramEntryLocal& e) { return e.ok; });
  if (rep.margin < 0 && !std::any_of(rep.entries.begin(), rep.entries.end(),
                                     [](const GramEntryLocal& e) { return !e.ok && e.deviation < e.precision; }))
    throw PrecisionError("Gram entries known to only " + std::to_string(least_prec) +
                         " digits, need " + std::to_string(rep.required) +
                         "; rerun with a larger precision (try doubling --prec)");
  return rep;
}

}  // namespace sdnb::local
