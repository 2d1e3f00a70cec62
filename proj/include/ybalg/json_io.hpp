// JSON emission. Ordered objects and exact string-encoded scalars keep every
// byte of the output deterministic.
#pragma once

#include <json.hpp>

#include "ybalg/morphisms.hpp"
#include "ybalg/report.hpp"
#include "ybalg/rewriting.hpp"

namespace ybalg {

using Json = nlohmann::ordered_json;

Json presentation_json(const QuadPresentation& p);
Json report_json(const VerificationReport& r);
Json hilbert_json(const GroupSpec& spec, const std::vector<std::pair<std::string, std::string>>& dims);
Json morphism_json(const GeneratorMap& m, const MorphismCheck& chk);

}  // namespace ybalg
