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

#include <algorithm>
#include <charconv>

#include "theorems/context.hpp"

namespace spectral::suite {

namespace {

int number(const std::string& id) {
    int n = 0;
    std::from_chars(id.data() + 1, id.data() + id.size(), n);
    return n;
}

} // namespace

const std::vector<Claim>& claims() {
    static const std::vector<Claim> all = [] {
        std::vector<Claim> out;
        for (auto group : {basic_claims, class_claims, filter_claims, generated_claims, operation_claims, closure_claims})
            for (auto& c : group()) out.push_back(std::move(c));
        std::sort(out.begin(), out.end(), [](const Claim& a, const Claim& b) { return number(a.info.id) < number(b.info.id); });
        return out;
    }();
    return all;
}

const Claim& find_claim(std::string_view id) {
    const auto& all = claims();
    auto it = std::find_if(all.begin(), all.end(), [&](const Claim& c) { return c.info.id == id; });
    if (it == all.end()) throw Error(ErrorKind::UnknownTheorem, "no registry entry " + std::string(id));
    return *it;
}

} // namespace spectral::suite

namespace spectral {

const std::vector<ClaimInfo>& registry() {
    static const std::vector<ClaimInfo> infos = [] {
        std::vector<ClaimInfo> out;
        for (const auto& c : suite::claims()) out.push_back(c.info);
        return out;
    }();
    return infos;
}

const ClaimInfo& claim_info(std::string_view id) { return suite::find_claim(id).info; }

} // namespace spectral
