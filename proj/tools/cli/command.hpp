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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace spectral::cli {

enum class Exit { Ok = 0, Failure = 1, Usage = 2, Cap = 3 };

struct Command {
    std::string name;
    std::string ring;
    std::string selector = "spec";
    std::string ideal;
    std::vector<std::string> variants;
    std::string kind = "all";
    std::string corpus;
    std::vector<std::string> theorems;
    std::optional<std::string> drop;
    bool json = false;
    /// verify/hunt: JSON destination, "" for stdout.
    std::optional<std::string> json_path;
};

/// Outcome of argument parsing: a command, or text to print and an exit code.
struct Parsed {
    std::optional<Command> command;
    Exit exit = Exit::Ok;
    std::string text;
};

/// argv without the program name.
Parsed parse_args(const std::vector<std::string>& args);

Exit execute(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_args then execute; usage text goes to `err` on exit 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace spectral::cli
