#include <iostream>

#include "eqlines/cli.hpp"

int main(int argc, char** argv) { return eqlines::run_cli(argc, argv, std::cout, std::cerr); }
