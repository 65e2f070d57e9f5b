#pragma once

// JSON form of factored values: {"s": 0|1, "p": int, "e": "<decimal>", "k": int}.

#include "dlg2k/dlg.hpp"

#include "json.hpp"

namespace dlg2k {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const DlgTriple& t);
// A pair is written as a triple with p = 0.
ordered_json to_json(const DlgPair& pair);

// Validates ranges; throws usage_error on missing or malformed fields.
DlgTriple triple_from_json(const ordered_json& j);

} // namespace dlg2k
