#include <iostream>

#include "tlt/cli.hpp"

int main(int argc, char** argv) { return tlt::cli::run(argc, argv, std::cout, std::cerr); }
