#pragma once

#include <string>
#include <string_view>
#include <vector>

// Plain-text reference data compiled in from data/.
namespace chowkit::fixtures {

std::string_view get(std::string_view name);
std::vector<std::string> names();

}  // namespace chowkit::fixtures
