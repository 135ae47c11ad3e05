/*
   Copyright 2026 The Spectral Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spectral/ring.hpp"

namespace spectral::cli {

/// Malformed command-line text, as opposed to a ring that fails to build.
class SyntaxError : public Error {
public:
    explicit SyntaxError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

/// ring := "Z/" INT | "GF(" INT ")[x]/(" poly ")" | ring "x" ring | "table:" PATH
///
/// A table path runs to the next " x " or the end of the text. Throws
/// SyntaxError, or Error for an unreadable or invalid table file.
RingSpec parse_ring(std::string_view text);

/// Splits at commas outside (), [] and <>. An empty or blank text gives an
/// empty list.
std::vector<std::string> split_list(std::string_view text);

/// Elements in the ring's label encoding, or bare indices. Throws SyntaxError.
std::vector<Elem> parse_elements(const Ring& ring, std::string_view text);

} // namespace spectral::cli
