#ifndef DEFECTCTL_SPEC_FILE_HPP_
#define DEFECTCTL_SPEC_FILE_HPP_

// Strict reader for system specification files (JSON, schema version 1.x).

#include <stdexcept>
#include <string>
#include <string_view>

#include "crysdef/classifier.hpp"
#include "json.hpp"

namespace defectctl {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Text };

// Malformed JSON or a schema violation; maps to exit code 2. `where` is
// "line L, column C" for syntax errors and a "$.a.b" path otherwise.
struct ParseError : std::runtime_error {
  ParseError(std::string where, const std::string& msg)
      : std::runtime_error(where + ": " + msg), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

private:
  std::string where_;
};

struct Options {
  crysdef::Int window = 5;
  OutputFormat output = OutputFormat::Json;
  bool compactify = false;
};

struct ParsedSpec {
  crysdef::SystemSpec system;
  Options options;
  Json echo; // the document as read
};

inline constexpr int kSchemaMajor = 1;

ParsedSpec parse_spec(std::string_view text);
ParsedSpec load_spec(const std::string& path);

OutputFormat output_from_name(std::string_view name);

} // namespace defectctl

#endif
