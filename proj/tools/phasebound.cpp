#include <iostream>

#include "phasebound/cli.hpp"

int main(int argc, char** argv) { return phasebound::cli::run(argc, argv, std::cout, std::cerr); }
