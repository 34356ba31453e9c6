#include <iostream>

#include "t23/cli.hpp"

int main(int argc, char** argv) { return t23::run_cli(argc, argv, std::cout, std::cerr); }
