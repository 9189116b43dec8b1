#include "task.hpp"

#include <string>

#include "error.hpp"

namespace cegi {

Task task_from_string(std::string_view name) {
  if (name == "image_captioning") return Task::image_captioning;
  if (name == "visual_qa") return Task::visual_qa;
  if (name == "summarization") return Task::summarization;
  if (name == "text_to_sql") return Task::text_to_sql;
  fail(errc::unknown_task, "unknown task '" + std::string(name) + "'");
}

const char* to_string(Task task) {
  switch (task) {
    case Task::image_captioning: return "image_captioning";
    case Task::visual_qa: return "visual_qa";
    case Task::summarization: return "summarization";
    case Task::text_to_sql: return "text_to_sql";
  }
  return "?";
}

metrics::Metric primary_metric(Task task) {
  switch (task) {
    case Task::image_captioning: return metrics::Metric::spice;
    case Task::visual_qa: return metrics::Metric::bleu;
    case Task::summarization: return metrics::Metric::rouge1;
    case Task::text_to_sql: return metrics::Metric::ea;
  }
  fail(errc::unknown_task, "bad task enum value");
}

}  // namespace cegi
