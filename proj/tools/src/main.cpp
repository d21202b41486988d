#include <iostream>

#include "frobgrow/cli/commands.hpp"

int main(int argc, char** argv) { return frobgrow::cli::run(argc, argv, std::cout, std::cerr); }
