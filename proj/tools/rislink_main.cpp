// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "rislink/cli.hpp"

int main(int argc, char** argv) { return rislink::run_cli(argc, argv, std::cout, std::cerr); }
