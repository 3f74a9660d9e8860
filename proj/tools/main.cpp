#include <iostream>

#include "filiform/cli.hpp"

int main(int argc, char** argv) { return filiform::run_cli(argc, argv, std::cout, std::cerr); }
