#pragma once

#include "json.hpp"

#include "fptvc/solver.hpp"

namespace fptvc {

void to_json(nlohmann::json& j, const SolveStats& s);
void from_json(const nlohmann::json& j, SolveStats& s);
void to_json(nlohmann::json& j, const SolveResult& r);
void from_json(const nlohmann::json& j, SolveResult& r);

}  // namespace fptvc
