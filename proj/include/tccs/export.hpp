#pragma once

#include <json.hpp>
#include <string>

#include "tccs/analyses.hpp"
#include "tccs/equiv.hpp"
#include "tccs/lts.hpp"

namespace tccs {

/// {states:[{id,term,stable,commit:[...]|null}], edges:[[src,label,dst]],
///  roots:[...], truncated:bool}
nlohmann::json to_json(const Lts& lts);

/// One node per state labelled "id: term"; stable states get a double
/// border.
std::string to_dot(const Lts& lts);

/// {related, mode, roots:[id,id], rounds,
///  certificate:[{pair:[id,id], clause, challenge:[src,label,dst]|null, round}],
///  tester: text|null}
nlohmann::json to_json(const EquivVerdict& v);

/// `stable=.. converge=.. ctxconv=.. diverge=.. reactive=.. barbs={..}`
std::string facts_line(const StateFacts& f);
nlohmann::json to_json(const StateFacts& f);

}  // namespace tccs
