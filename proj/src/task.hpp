#pragma once

#include <string_view>

#include "text_metrics.hpp"

namespace cegi {

enum class Task { image_captioning, visual_qa, summarization, text_to_sql };

Task task_from_string(std::string_view name);
const char* to_string(Task task);

// The metric a task's gain/CEGI analysis runs on. VES records are carried in
// text-to-SQL corpora but excluded here.
metrics::Metric primary_metric(Task task);

}  // namespace cegi
