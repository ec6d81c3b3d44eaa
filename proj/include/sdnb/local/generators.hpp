#pragma once

#include <string>
#include <vector>

#include "sdnb/local/verify.hpp"
#include "sdnb/padic/extension.hpp"

namespace sdnb::local {

struct SelfDualCertificateLocal {
  padic::LocalExtension ext;
  padic::LocalElem generator;
  long valuation = 0;           // v_L(generator)
  long expected_valuation = 0;  // v_L(A_{L/K})
  GramReportLocal gram;
  std::string route;  // tame, wild-direct, wild-traced, unram-p, unram-p', compositum, trace-down
  std::vector<std::string> conventions;

  bool pass() const { return gram.pass && valuation == expected_valuation; }
};

// L = K(t), t^d = tau = -p; x = d^-1 (1 - tau) (1 - t)^-1 t^((1-d)/2).
SelfDualCertificateLocal tame_generator(const padic::LocalBase& base, unsigned d);

// Unramified L/K of odd degree d. Prime-power parts go through the residue
// constructions and Newton square roots; composite d multiplies the parts.
SelfDualCertificateLocal unram_generator(const padic::LocalBase& base, unsigned d);

struct WildResult {
  SelfDualCertificateLocal direct;  // Tr_{M/L}(R_{M/K}(x)^(-1/2) o x)
  SelfDualCertificateLocal traced;  // R(Tr_{M/L} x)^(-1/2) o Tr_{M/L} x
  bool variants_equal = false;      // observed, not asserted
};

// M inside K_{pi,2} for K = Q_p. `trace_to` is the order of H; only 1 is
// possible when q = p.
WildResult wild_generator(const padic::LocalBase& base, unsigned trace_to = 1);

// y = x_un x_tot in the compositum, z = sum_{h in H} h(y). H lists generators
// (indices into C_{d_un} x C_{d_tot}); empty means trivial.
SelfDualCertificateLocal compose_and_trace(const SelfDualCertificateLocal& un,
                                           const SelfDualCertificateLocal& tot,
                                           const std::vector<std::size_t>& H);

// Generator of the diagonal subgroup {(k, k)} of C_d x C_d.
std::size_t diagonal_generator(const padic::LocalExtension& comp);

}  // namespace sdnb::local
