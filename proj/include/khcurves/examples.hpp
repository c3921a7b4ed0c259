#pragma once

// Built-in example library, shipped as embedded JSON in the public formats.

#include <string>
#include <string_view>
#include <vector>

namespace khc {

enum class ExampleKind { Complex, Multicurve };

struct Example {
  std::string name;
  ExampleKind kind;
  std::string description;
  std::string_view json;
};

const std::vector<Example>& examples();

// Throws std::out_of_range for unknown names.
const Example& find_example(const std::string& name);

}  // namespace khc
