#include <iostream>

#include "bcalc/cli/cli.hpp"

int main(int argc, char** argv) { return bcalc::run_cli(argc, argv, std::cout, std::cerr); }
