#pragma once

#include <json.hpp>

#include "iterlab/laws.hpp"

namespace iterlab::detail {

nlohmann::ordered_json report_json(const CheckReport& report, bool timing);

}  // namespace iterlab::detail
