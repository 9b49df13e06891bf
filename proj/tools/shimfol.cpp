#include <iostream>

#include "shimfol/cli.hpp"

int main(int argc, char** argv) { return shimfol::cli::run(argc, argv, std::cout, std::cerr); }
