#pragma once

#include <json.hpp>

#include "qpa/certify.hpp"

namespace qpa {

using Json = nlohmann::json;

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json sparse_to_json(const SparseVec& v);
SparseVec sparse_from_json(const Json& j);

Json hopf_to_json(const HopfData& h);
/// verify = false skips the axiom re-verification (the --trust path)
HopfPtr hopf_from_json(const Json& j, bool verify = true);

Json cert_to_json(const MagicCert& c);  // embeds the parent algebra
/// re-runs verify_magic against the embedded parent unless verify = false
MagicCert cert_from_json(const Json& j, bool verify = true);

Json report_to_json(const HopfReport& r);
Json verdict_to_json(const Verdict& v);

}  // namespace qpa
