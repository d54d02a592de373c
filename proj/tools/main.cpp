#include <iostream>

#include "fischer_lab/cli/cli.hpp"

int main(int argc, char** argv) { return fischer_lab::cli::run_cli(argc, argv, std::cout, std::cerr); }
