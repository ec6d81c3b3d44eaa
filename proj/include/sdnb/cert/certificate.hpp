#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sdnb/error.hpp"
#include "sdnb/local/generators.hpp"
#include "sdnb/sdnb_ff/construct.hpp"

namespace sdnb::cert {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

class MalformedError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

struct LocalParams {
  std::string kind;  // tame | unram | wild | compose
  unsigned p = 0, f = 1;
  unsigned d = 0;                    // tame, unram
  unsigned unram_d = 0, tame_d = 0;  // compose
  bool trace_diag = false;
  int precision = 48, guard = 8;

  padic::LocalBase base() const;
};

json to_json(const sdnb_ff::SelfDualCertificateFF& c);
json to_json(const local::SelfDualCertificateLocal& c, const LocalParams& params);
json to_json(const local::WildResult& w, const LocalParams& params);

json generator_json(const padic::LocalElem& x);
padic::LocalElem generator_from_json(const json& j, const padic::RingPtr& ring);

// Runs the construction named by the parameters and returns its document.
json run_ff(unsigned p, unsigned m, unsigned n);
json run_local(const LocalParams& params);

// Rebuilds the extension that a local certificate with this route lives in.
padic::LocalExtension rebuild_extension(const LocalParams& params,
                                        const std::string& route);

struct VerifyResult {
  bool pass = false;
  std::vector<std::string> messages;
};

// Re-checks a document from scratch. MalformedError for bad documents.
VerifyResult verify(const json& doc);
VerifyResult verify_text(const std::string& text);

// Exit-code contract: 0 ok, 1 verification failure, 2 parameters, 3 precision.
bool document_passes(const json& doc);

}  // namespace sdnb::cert
