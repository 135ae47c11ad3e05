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

#include <charconv>
#include <cstdlib>

#include "spectral/theorems.hpp"

namespace spectral {

Caps parse_caps(std::string_view text, Caps base) {
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string_view::npos) throw Error(ErrorKind::Parse, "cap override '" + std::string(item) + "' lacks '='");
        auto key = item.substr(0, eq);
        auto value = item.substr(eq + 1);
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
        if (ec != std::errc{} || ptr != value.data() + value.size() || n == 0)
            throw Error(ErrorKind::Parse, "cap '" + std::string(key) + "' needs a positive integer");
        if (key == "elements") base.elements = n;
        else if (key == "ideals") base.ideals = n;
        else if (key == "filters") base.filters = n;
        else if (key == "lattice") base.lattice = n;
        else if (key == "carrier") base.carrier = n;
        else throw Error(ErrorKind::Parse, "unknown cap '" + std::string(key) + "'");
    }
    return base;
}

Caps caps_from_env() {
    const char* env = std::getenv("SPECTRAL_CAPS");
    return env ? parse_caps(env) : Caps{};
}

} // namespace spectral
