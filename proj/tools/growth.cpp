#include <iostream>

#include "growth/cli/commands.hpp"

int main(int argc, char** argv) { return growth::cli::run(argc, argv, std::cout, std::cerr); }
