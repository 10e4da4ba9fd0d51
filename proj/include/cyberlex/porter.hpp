#pragma once

#include <string>
#include <string_view>

namespace cyberlex {

// Porter stemming algorithm (Porter 1980, steps 1a-5b), matching the
// maintained reference implementation: words of length <= 2 are left alone
// and step 2 carries the bli->ble and logi->log amendments.
//
// Input is expected to be lowercase ASCII letters; a word containing any
// other character is returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace cyberlex
