// Copyright 2026 The tilesym Authors.
// Licensed under the Apache License, Version 2.0.

#include <iostream>
#include <string>
#include <vector>

#include "tilesym/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tilesym::io::RunCli(args, std::cout, std::cerr);
}
