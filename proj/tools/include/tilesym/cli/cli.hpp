// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.

#ifndef TILESYM_CLI_CLI_HPP_
#define TILESYM_CLI_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace tilesym::io {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// Runs one invocation. `args` excludes the program name. Results go to
// `out`; failures print {"error": kind, "message": ...} to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace tilesym::io

#endif  // TILESYM_CLI_CLI_HPP_
