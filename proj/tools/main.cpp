#include <iostream>

#include "wrgen_cli.hpp"

int main(int argc, char** argv) { return wrgen::cli::run(argc, argv, std::cout, std::cerr); }
