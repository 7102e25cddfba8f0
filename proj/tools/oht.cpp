#include <iostream>

#include "oht/cli.hpp"

int main(int argc, char** argv) { return oht::cli::run(argc, argv, std::cout, std::cerr); }
