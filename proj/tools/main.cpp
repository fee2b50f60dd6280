#include <iostream>

#include "liealg/cli.hpp"

int main(int argc, char** argv) { return liealg::run_cli(argc, argv, std::cout, std::cerr); }
