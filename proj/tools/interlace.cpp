#include "interlace/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return interlace::run_cli(argc, argv, std::cout, std::cerr); }
