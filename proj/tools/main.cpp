#include <iostream>

#include "morsecell/cli.hpp"

int main(int argc, char** argv) { return morsecell::run_cli(argc, argv, std::cout, std::cerr); }
