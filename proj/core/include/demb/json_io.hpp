#ifndef DEMB_JSON_IO_HPP
#define DEMB_JSON_IO_HPP

#include <json.hpp>

#include "demb/delzant.hpp"
#include "demb/emb.hpp"
#include "demb/polytope.hpp"

namespace demb {

using json = nlohmann::json;

// Polytope schema:
//   {"dim": int, "vertices": [[rat, ...], ...],
//    "halfspaces": [{"normal": [int, ...], "offset": rat}, ...]}
// where rat is an integer or a "p/q" string. Input takes exactly one of
// vertices / halfspaces; output carries both.
json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const json& j);  // ParseError + geometry errors

json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

json report_to_json(const DelzantReport& r);
json step_function_to_json(const StepFunction& sf);
json descriptor_to_json(const EmbeddingSpaceDescriptor& d, const Polytope& p);

}  // namespace demb

#endif
