#include <iostream>

#include "ucycle/cli.hpp"

int main(int argc, char** argv) { return ucycle::cli::run(argc, argv, std::cout, std::cerr); }
