// Copyright 2026 The ivinv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "ivinv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  ivinv::cli::Environment env;
  env.color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
  if (const char* dir = std::getenv("IVINV_DATA_DIR")) {
    env.data_dir = dir;
  } else {
#ifdef IVINV_DEFAULT_DATA_DIR
    env.data_dir = IVINV_DEFAULT_DATA_DIR;
#endif
  }
  return ivinv::cli::run(args, std::cout, std::cerr, env);
}
