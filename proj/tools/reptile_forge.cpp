#include <iostream>

#include "reptile/cli/cli.hpp"

int main(int argc, char** argv) { return reptile::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
