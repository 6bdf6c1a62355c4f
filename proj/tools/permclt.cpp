#include <iostream>

#include "permclt/cli.hpp"

int main(int argc, char** argv) { return permclt::cli::run(argc, argv, std::cout, std::cerr); }
