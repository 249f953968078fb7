#include <iostream>

#include "hopfcalc/cli.hpp"

int main(int argc, char** argv) { return hopfcalc::run_cli(argc, argv, std::cout, std::cerr); }
