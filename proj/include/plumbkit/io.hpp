#pragma once

// JSON encodings shared by the library and the command line tool.
//
//   plumbing:    {"vertices":[{"id":"x","weight":-1},...],"edges":[["x","a1"],...]}
//   framed link: {"components":[{"id":"b","tag":"black"},...],"matrix":[[...],...]}
//
// Integers that do not fit in 64 bits are written as decimal strings; readers
// accept either form.

#include <json.hpp>

#include "plumbkit/families.hpp"
#include "plumbkit/kirby.hpp"
#include "plumbkit/plumbing.hpp"
#include "plumbkit/seifert.hpp"

namespace plumbkit::io {

using nlohmann::json;

json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);

json matrix_to_json(const SymmetricIntMatrix& m);
SymmetricIntMatrix matrix_from_json(const json& j);

json bits_to_json(const BitVector& bits);

json plumbing_to_json(const PlumbingGraph& g);
// Throws InvalidInput on schema violations.
PlumbingGraph plumbing_from_json(const json& j);

json framed_link_to_json(const FramedLinkMatrix& l);
FramedLinkMatrix framed_link_from_json(const json& j);

json seifert_to_json(const SeifertData& s);
json report_to_json(const InvariantReport& r);
json trace_to_json(const std::vector<TraceStep>& trace);
json search_hit_to_json(const SearchHit& hit);
json verification_to_json(const FamilyVerification& v);
json iteration_to_json(const IterationVerification& v);

}  // namespace plumbkit::io
