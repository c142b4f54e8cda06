#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return avoid321::cli::run(argc, argv, std::cout, std::cerr); }
