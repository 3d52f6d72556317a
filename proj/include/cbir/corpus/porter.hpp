#pragma once

#include <string>
#include <string_view>

namespace cbir::corpus {

/// Stems a lowercase word with the original Porter (1980) algorithm,
/// steps 1a through 5b, without later extensions.
///
/// Words of length <= 2 are returned unchanged. Input containing characters
/// outside a-z is processed byte-wise; callers are expected to pass
/// lowercase alphabetic tokens.
std::string porter_stem(std::string_view word);

}  // namespace cbir::corpus
