#include <iostream>

#include "lerch/cli.hpp"

int main(int argc, char** argv) { return lerch::cli::run(argc, argv, std::cout, std::cerr); }
