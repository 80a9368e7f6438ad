#include <iostream>

#include "freebound/cli.hpp"

int main(int argc, char** argv) { return freebound::cli::main(argc, argv, std::cout, std::cerr); }
