#include <iostream>

#include "zolo/cli.hpp"

int main(int argc, char** argv) { return zolo::run_cli(argc, argv, std::cout, std::cerr); }
