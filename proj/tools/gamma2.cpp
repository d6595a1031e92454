#include <iostream>

#include "gamma2/cli.hpp"

int main(int argc, char** argv) { return gamma2::run_cli(argc, argv, std::cout, std::cerr); }
