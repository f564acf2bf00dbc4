#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "cubeloop/enumerate.hpp"
#include "cubeloop/verdict.hpp"

namespace cubeloop {

inline constexpr int kReportSchema = 1;

nlohmann::json report_json(const SurfaceReport& r, const std::optional<FamilySpec>& family = std::nullopt);

std::string render_text(const SurfaceReport& r, const std::optional<FamilySpec>& family = std::nullopt);

}  // namespace cubeloop
