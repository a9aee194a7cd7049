#include <iostream>

#include "blcalc/cli.hpp"

int main(int argc, char** argv) { return blcalc::cli::run(argc, argv, std::cout, std::cerr); }
