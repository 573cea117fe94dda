#include <iostream>

#include "conjdiam/cli.hpp"

int main(int argc, char** argv) { return conjdiam::run_cli(argc, argv, std::cout, std::cerr); }
