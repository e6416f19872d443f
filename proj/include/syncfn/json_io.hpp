#pragma once

#include <json.hpp>

#include "syncfn/synchronized.hpp"
#include "syncfn/transducer.hpp"

namespace syncfn {

/// JSON interchange. States are referenced by display name; epsilon letters
/// encode as null; digit words as strings. A "kind" field distinguishes the
/// machine families and is validated on load.
nlohmann::json to_json(const Transducer& t);
nlohmann::json to_json(const SequentialTransducer& s);
nlohmann::json to_json(const PrefixSeq& p);
nlohmann::json to_json(const SuffixSeq& s);

Transducer transducer_from_json(const nlohmann::json& j);
SequentialTransducer sequential_from_json(const nlohmann::json& j);
PrefixSeq prefix_from_json(const nlohmann::json& j);
SuffixSeq suffix_from_json(const nlohmann::json& j);

} // namespace syncfn
