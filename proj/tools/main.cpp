#include <iostream>

#include "ghoststrata/cli.hpp"

int main(int argc, char** argv) { return ghoststrata::run_cli(argc, argv, std::cout, std::cerr); }
