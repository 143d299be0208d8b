#pragma once

#include <optional>
#include <string>

#include "abtaxon/classifier.hpp"

namespace abtaxon {

/// The single top-level document a CLI invocation emits.  Field order is
/// fixed; serialization is byte-stable for equal inputs and tool version.
struct ReportDocument {
    std::string input_text;
    std::string canonical_form;
    InvariantProfile invariants;
    ClassificationReport report;
    std::optional<Decomposition> decomposition;
    std::string tool_version;
    bool strictness_flag = false;
};

ReportDocument make_report(const std::string& input_text, const GroupExpr& g,
                           const ClassifyOptions& opts, bool with_decomposition);

/// Machine format: UTF-8 JSON, stable key order, 2-space indent, trailing
/// newline.
std::string to_json(const ReportDocument& doc);

/// Aligned human-readable rendering.
std::string to_text(const ReportDocument& doc);

}  // namespace abtaxon
