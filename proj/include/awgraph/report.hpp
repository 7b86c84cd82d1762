#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "awgraph/pipeline.hpp"

namespace awgraph {

/// Rounds to a 1e-10 grid so that run-to-run noise does not reach the
/// serialized report. Negative zero becomes zero.
double quantize(double x);

/// Smallest power of ten >= x, floored at 1e-10 (the quantization grid); residuals are reported as
/// upper bounds.
double residual_bound(double x);

nlohmann::json complex_json(Complex z);

/// One report per attempt, or a single report when the run stopped before
/// any attempt. Field layout is identical for every stage; fields a stage
/// does not reach are null.
std::vector<nlohmann::json> build_reports(const PipelineRun& run, Stage stage);

/// Compact JSON, one document per line.
std::string render_json_lines(const std::vector<nlohmann::json>& reports);

std::string render_text(const std::vector<nlohmann::json>& reports);

} // namespace awgraph
