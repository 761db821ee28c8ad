#include <iostream>

#include "fusioncat/cli.hpp"

int main(int argc, char** argv) { return fusioncat::run_cli(argc, argv, std::cout, std::cerr); }
