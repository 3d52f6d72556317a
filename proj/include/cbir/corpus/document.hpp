#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cbir {

/// Collection-assigned document or query identifier (positive).
using DocId = std::uint32_t;

}  // namespace cbir

namespace cbir::corpus {

struct Document {
  DocId id = 0;
  std::string title;
  std::string body;
  std::vector<std::string> tokens;  ///< analyzed terms of title + body, in order
};

struct QueryDoc {
  DocId id = 0;
  std::string text;
  std::vector<std::string> tokens;
};

}  // namespace cbir::corpus
