#include <iostream>

#include "sprad/cli.hpp"

int main(int argc, char** argv) { return sprad::run_cli(argc, argv, std::cout, std::cerr); }
