#pragma once

#include "pbord/instance.hpp"

#include <filesystem>
#include <iosfwd>

namespace pbord {

// Raised on malformed instance text. `line` is 1-based; the message already
// includes it.
class ParseError : public ValidationError {
  public:
    ParseError(std::size_t line, const std::string& what)
        : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// Text format, one directive per line, `#` starts a comment:
//
//   pbinstance 1
//   budget 30
//   project a1 10
//   project a2 25
//   project a3 6
//   agent a1 > {a2,a3}
//   agent {a1,a3} > a2
//
// Directives must appear in that order. Classes are separated by `>`, braces
// group ties and are optional around a single project.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);
Instance load_instance(const std::filesystem::path& path);

// Canonical form: projects sorted by id, class members sorted by id,
// singleton classes unbraced, classes joined with " > ", no comments.
// Serializing a parsed canonical file reproduces it byte for byte.
std::string serialize_instance(const Instance& instance);
void save_instance(const Instance& instance, const std::filesystem::path& path);

} // namespace pbord
